"""Kemeny's constant of the simple random walk on a connected graph."""

from __future__ import annotations

import math
import random
import statistics
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import TrivialGraph
from .exact import symmetric_eigenvalues
from .forests import forest_data
from .graph import Graph, require_connected


def _require_nontrivial(g: Graph) -> None:
    if g.n < 2:
        raise TrivialGraph("Kemeny's constant needs at least two vertices")
    require_connected(g)


def normalized_adjacency(g: Graph) -> np.ndarray:
    """``D^{-1/2} A D^{-1/2}``, similar to the transition matrix ``D^{-1} A``."""
    a = np.zeros((g.n, g.n))
    for u, v in g.edges:
        a[u, v] = a[v, u] = 1.0
    inv_sqrt = 1.0 / np.sqrt(np.asarray(g.degrees, dtype=float))
    return a * np.outer(inv_sqrt, inv_sqrt)


def transition_spectrum(g: Graph) -> list[float]:
    """Eigenvalues of the transition matrix, ascending."""
    _require_nontrivial(g)
    return symmetric_eigenvalues(normalized_adjacency(g))


def kemeny_spectral(g: Graph) -> float:
    """Sum of ``1/(1 - lambda)`` over the spectrum minus its top eigenvalue.

    The eigenvalue 1 is dropped by position, not by threshold; connectivity
    makes it simple.
    """
    spectrum = transition_spectrum(g)
    return math.fsum(1.0 / (1.0 - lam) for lam in spectrum[:-1])


def degree_form(s_rows: tuple[tuple[int, ...], ...], d: tuple[int, ...]) -> int:
    """``d^T S d`` for an integer matrix given by rows."""
    return sum(di * sum(dj * x for dj, x in zip(d, row)) for di, row in zip(d, s_rows))


def kemeny_combinatorial(g: Graph) -> Fraction:
    """Exact ``d^T S d / (4 m tau)``."""
    _require_nontrivial(g)
    fd = forest_data(g)
    return Fraction(degree_form(fd.s_rows, g.degrees), 4 * g.m * fd.tau)


@dataclass(frozen=True)
class KemenyValue:
    exact: Fraction
    floating: float

    @property
    def agreement_gap(self) -> float:
        return abs(float(self.exact) - self.floating)


def kemeny(g: Graph) -> KemenyValue:
    return KemenyValue(exact=kemeny_combinatorial(g), floating=kemeny_spectral(g))


@dataclass(frozen=True)
class StationaryVector:
    w: tuple[Fraction, ...]


def stationary_distribution(g: Graph) -> StationaryVector:
    """``w_i = d_i / 2m``, checked against ``w^T T = w^T`` and ``w^T e = 1``."""
    require_connected(g)
    if g.n == 1:
        return StationaryVector((Fraction(1),))
    two_m = 2 * g.m
    w = tuple(Fraction(d, two_m) for d in g.degrees)
    # (w^T T)_j = sum over neighbours i of w_i / d_i
    wt = tuple(sum((w[i] / g.degrees[i] for i in g.neighbors[j]), Fraction(0)) for j in range(g.n))
    if wt != w or sum(w) != 1:
        raise ArithmeticError("degree vector failed the stationarity equations")
    return StationaryVector(w)


@dataclass(frozen=True)
class MonteCarloEstimate:
    mean: float
    stderr: float
    trials: int
    seed: int


def _trial_rng(seed: int, trial: int) -> random.Random:
    # string seeds are hashed deterministically (SHA-512), so each
    # (seed, trial) pair owns an independent, reproducible stream
    return random.Random(f"kemeny-mc:{seed}:{trial}")


def _transit_steps(rng: random.Random, endpoints: list[int], nbrs: tuple[tuple[int, ...], ...]) -> int:
    # a uniform endpoint of a uniform edge is distributed as d_i / 2m
    start = endpoints[rng.randrange(len(endpoints))]
    target = endpoints[rng.randrange(len(endpoints))]
    steps = 0
    cur = start
    while cur != target:
        nb = nbrs[cur]
        cur = nb[rng.randrange(len(nb))]
        steps += 1
    return steps


def estimate_kemeny_monte_carlo(g: Graph, trials: int, seed: int = 0) -> MonteCarloEstimate:
    """Mean first-arrival time between two stationary-distributed vertices."""
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    _require_nontrivial(g)
    endpoints = [x for u, v in g.edges for x in (u, v)]
    nbrs = g.neighbors
    samples = [_transit_steps(_trial_rng(seed, t), endpoints, nbrs) for t in range(trials)]
    mean = statistics.fmean(samples)
    stderr = statistics.stdev(samples) / math.sqrt(trials) if trials > 1 else math.nan
    return MonteCarloEstimate(mean=mean, stderr=stderr, trials=trials, seed=seed)

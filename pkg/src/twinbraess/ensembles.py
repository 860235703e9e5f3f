"""Random labeled trees, connected G(n, p) graphs and desk-scale experiments.

Sampling uses one reproducible stream per ``(seed, n, sample index)`` so a
report depends only on its inputs, and samples could be evaluated in any
order.
"""

from __future__ import annotations

import heapq
import itertools
import math
import random
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .braess import kemeny_delta, paradox_scan
from .errors import (
    AttemptsExhausted,
    GuardViolation,
    InvalidEntry,
    PatternNotSmaller,
    PatternTooLarge,
    VertexOutOfRange,
)
from .graph import Graph, find_pendant_twins, is_connected

EXHAUSTIVE_MAX_N = 8
PATTERN_MAX_H = 5

ENSEMBLE_NOTE = (
    "Trees are labeled and sampled uniformly via Pruefer sequences; the asymptotic "
    "'almost all trees are paradoxical' statement concerns unlabeled trees, so these "
    "fractions are a trend check on a different distribution, not a reproduction. "
    "Uniform random connected planar graphs are not sampled; connected G(n,p) rows "
    "are an exploratory stand-in, not that ensemble."
)


def _rng(*key: object) -> random.Random:
    return random.Random(":".join(str(k) for k in key))


def prufer_decode(sequence: Sequence[int], n: int | None = None) -> Graph:
    """Decode a Pruefer sequence of length ``n - 2`` into a labeled tree."""
    n = len(sequence) + 2 if n is None else n
    if n < 2:
        raise InvalidEntry(f"a tree needs at least 2 vertices, got n={n}")
    if len(sequence) != n - 2:
        raise InvalidEntry(f"sequence length {len(sequence)} does not match n - 2 = {n - 2}")
    for x in sequence:
        if not 0 <= x < n:
            raise InvalidEntry(f"entry {x} not in 0..{n - 1}")
    remaining = [0] * n
    for x in sequence:
        remaining[x] += 1
    leaves = [v for v in range(n) if remaining[v] == 0]
    heapq.heapify(leaves)
    edges = []
    for x in sequence:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        remaining[x] -= 1
        if remaining[x] == 0:
            heapq.heappush(leaves, x)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return Graph(n, tuple(edges))


def all_labeled_trees(n: int) -> Iterator[Graph]:
    """Every labeled tree on ``n`` vertices, once each (``n^(n-2)`` of them)."""
    for seq in itertools.product(range(n), repeat=n - 2):
        yield prufer_decode(seq, n)


def random_tree(n: int, seed: int | random.Random) -> Graph:
    """Uniform random labeled tree via a uniform Pruefer sequence."""
    if n < 2:
        raise InvalidEntry(f"a tree needs at least 2 vertices, got n={n}")
    rng = seed if isinstance(seed, random.Random) else _rng("tree", seed, n)
    return prufer_decode([rng.randrange(n) for _ in range(n - 2)], n)


def random_connected_graph(
    n: int, p: float, seed: int | random.Random, max_attempts: int = 10_000
) -> Graph:
    """G(n, p) conditioned on connectivity, by rejection."""
    if not 0 < p <= 1:
        raise ValueError(f"edge probability must lie in (0, 1], got {p}")
    rng = seed if isinstance(seed, random.Random) else _rng("gnp", seed, n, p)
    pairs = list(itertools.combinations(range(n), 2))
    for _ in range(max_attempts):
        g = Graph(n, tuple(e for e in pairs if rng.random() < p))
        if is_connected(g):
            return g
    raise AttemptsExhausted(f"no connected G({n}, {p}) draw in {max_attempts} attempts")


@dataclass(frozen=True)
class RootedPattern:
    h: Graph
    root: int = 0

    def __post_init__(self) -> None:
        if not 0 <= self.root < self.h.n:
            raise VertexOutOfRange(f"root {self.root} not in 0..{self.h.n - 1}")
        if not is_connected(self.h):
            raise ValueError("pattern graph must be connected")


# the path on three vertices rooted at its centre; an appearance of it is
# a pair of twin pendant vertices hanging off the least vertex
CHERRY = RootedPattern(Graph(3, ((0, 1), (0, 2))), root=0)


def appearance_count(g: Graph, pattern: RootedPattern) -> int:
    """Number of vertex sets ``W`` at which the pattern appears in ``g``.

    ``W`` qualifies when the increasing bijection onto ``W`` is an
    isomorphism onto the induced subgraph and exactly one edge leaves
    ``W``, incident with ``min(W)``. The root plays no part in this test.
    """
    h = pattern.h
    if h.n > PATTERN_MAX_H:
        raise PatternTooLarge(f"pattern has {h.n} vertices; limit is {PATTERN_MAX_H}")
    if h.n >= g.n:
        raise PatternNotSmaller(f"pattern on {h.n} vertices needs a larger graph, got n={g.n}")
    k = h.n
    want = h.edge_set
    hm = h.m
    deg = g.degrees
    nbrs = g.neighbors
    count = 0
    for w in itertools.combinations(range(g.n), k):
        # induced edges plus edges leaving W account for all incidences
        inside = [(i, j) for i, j in itertools.combinations(range(k), 2) if g.has_edge(w[i], w[j])]
        if len(inside) != hm:
            continue
        if sum(deg[x] for x in w) - 2 * hm != 1:
            continue
        if any(pair not in want for pair in inside):
            continue
        wset = set(w)
        if any(y not in wset for y in nbrs[w[0]]):
            count += 1
    return count


@dataclass(frozen=True)
class SampleRecord:
    index: int
    graph: Graph
    has_pendant_twins: bool
    paradoxical: bool
    appearance_count: int
    witness: tuple[int, int] | None

    def to_dict(self) -> dict:
        return {
            "index": self.index,
            "graph": self.graph.to_dict(),
            "has_pendant_twins": self.has_pendant_twins,
            "paradoxical": self.paradoxical,
            "appearance_count": self.appearance_count,
            "witness": list(self.witness) if self.witness else None,
        }


@dataclass(frozen=True)
class ExperimentRow:
    n: int
    samples: int
    with_pendant_twins: int
    paradoxical: int
    twin_bearing_paradoxical: int
    mean_appearance_count: float
    seed: int
    mode: str
    scan: str
    details: tuple[SampleRecord, ...] = field(default=(), repr=False, compare=False)

    @property
    def fraction_with_pendant_twins(self) -> float:
        return self.with_pendant_twins / self.samples

    @property
    def fraction_paradoxical(self) -> float:
        return self.paradoxical / self.samples

    CSV_FIELDS = (
        "n",
        "samples",
        "fraction_with_pendant_twins",
        "fraction_paradoxical",
        "twin_bearing_paradoxical",
        "with_pendant_twins",
        "mean_appearance_count",
        "seed",
        "mode",
        "scan",
    )

    def csv_row(self) -> dict:
        return {
            "n": self.n,
            "samples": self.samples,
            "fraction_with_pendant_twins": f"{self.fraction_with_pendant_twins:.6f}",
            "fraction_paradoxical": f"{self.fraction_paradoxical:.6f}",
            "twin_bearing_paradoxical": self.twin_bearing_paradoxical,
            "with_pendant_twins": self.with_pendant_twins,
            "mean_appearance_count": f"{self.mean_appearance_count:.6f}",
            "seed": self.seed,
            "mode": self.mode,
            "scan": self.scan,
        }


@dataclass(frozen=True)
class ExperimentReport:
    kind: str
    rows: tuple[ExperimentRow, ...]
    note: str = ENSEMBLE_NOTE

    def row(self, n: int) -> ExperimentRow:
        return next(r for r in self.rows if r.n == n)


def _evaluate(index: int, g: Graph, full_scan: bool) -> SampleRecord:
    twins = find_pendant_twins(g)
    if full_scan:
        scan = paradox_scan(g)
        paradoxical, witness = scan.overall, scan.witness
    elif twins:
        a, b, _ = twins[0]
        paradoxical = kemeny_delta(g, (a, b)) > 0
        witness = (a, b) if paradoxical else None
    else:
        paradoxical, witness = False, None
    return SampleRecord(
        index=index,
        graph=g,
        has_pendant_twins=bool(twins),
        paradoxical=paradoxical,
        appearance_count=appearance_count(g, CHERRY),
        witness=witness,
    )


def _row(n: int, records: list[SampleRecord], seed: int, mode: str, scan: str, detail: bool) -> ExperimentRow:
    return ExperimentRow(
        n=n,
        samples=len(records),
        with_pendant_twins=sum(r.has_pendant_twins for r in records),
        paradoxical=sum(r.paradoxical for r in records),
        twin_bearing_paradoxical=sum(r.paradoxical and r.has_pendant_twins for r in records),
        mean_appearance_count=math.fsum(r.appearance_count for r in records) / len(records),
        seed=seed,
        mode=mode,
        scan=scan,
        details=tuple(records) if detail else (),
    )


def run_tree_experiment(
    n_values: Iterable[int],
    samples_per_n: int = 200,
    seed: int = 0,
    mode: str = "sampled",
    full_scan: bool = False,
    detail: bool = False,
) -> ExperimentReport:
    """Pendant-twin and paradox fractions over labeled trees.

    With ``full_scan=False`` only the first twin pair's edge is tested, so
    ``fraction_paradoxical`` is a lower bound (flagged ``scan=twin-witness``).
    """
    if mode not in ("sampled", "exhaustive"):
        raise ValueError(f"mode must be 'sampled' or 'exhaustive', got {mode!r}")
    scan = "full" if full_scan else "twin-witness"
    rows = []
    for n in n_values:
        if n < 4:
            raise GuardViolation(f"paradox rows need n >= 4, got n={n}")
        if mode == "exhaustive":
            if n > EXHAUSTIVE_MAX_N:
                raise GuardViolation(f"exhaustive tree mode limited to n <= {EXHAUSTIVE_MAX_N}, got {n}")
            trees: Iterable[Graph] = all_labeled_trees(n)
        else:
            if samples_per_n < 1:
                raise ValueError("samples_per_n must be positive")
            trees = (random_tree(n, _rng("tree", seed, n, i)) for i in range(samples_per_n))
        records = [_evaluate(i, t, full_scan) for i, t in enumerate(trees)]
        rows.append(_row(n, records, seed, mode, scan, detail))
    return ExperimentReport(kind="trees", rows=tuple(rows))


def run_gnp_experiment(
    n_values: Iterable[int],
    p: float,
    samples_per_n: int = 100,
    seed: int = 0,
    max_attempts: int = 10_000,
    detail: bool = False,
) -> ExperimentReport:
    """Same row schema over connected G(n, p) samples, each with a full paradox scan."""
    if samples_per_n < 1:
        raise ValueError("samples_per_n must be positive")
    rows = []
    for n in n_values:
        if n < 4:
            raise GuardViolation(f"paradox rows need n >= 4, got n={n}")
        records = [
            _evaluate(i, random_connected_graph(n, p, _rng("gnp", seed, n, p, i), max_attempts), True)
            for i in range(samples_per_n)
        ]
        rows.append(_row(n, records, seed, "sampled", "full", detail))
    return ExperimentReport(kind="gnp", rows=tuple(rows))

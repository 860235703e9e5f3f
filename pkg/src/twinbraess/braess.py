"""Twin-Braess verdicts and paradoxical-edge scans.

Every decision here is a strict comparison of exact rationals.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import CriterionMismatch, EdgeAlreadyPresent, TrivialGraph, VertexOutOfRange
from .forests import ForestData, forest_data
from .graph import Edge, Graph, attach_pendant_twins, close_twins, non_edges, require_connected
from .kemeny import kemeny_combinatorial


def _require_nontrivial(g: Graph) -> None:
    if g.n < 2:
        raise TrivialGraph("twin-Braess is defined for nontrivial graphs only")
    require_connected(g)


def _lambda_from_forests(g: Graph, fd: ForestData, v: int) -> int:
    d = g.degrees
    m, tau = g.m, fd.tau
    sd = [sum(x * dj for x, dj in zip(row, d)) for row in fd.s_rows]
    dsd = sum(di * x for di, x in zip(d, sd))
    dse_v = sd[v]  # S symmetric, so (d^T S)_v = (S d)_v
    return -3 * dsd + 12 * m * dse_v + 8 * m * m * tau + 4 * m * tau - 12 * tau


def lambda_v(g: Graph, v: int) -> Fraction:
    """``-3 d'Sd + 12 m d'S e_v + 8 m^2 tau + 4 m tau - 12 tau``; positive iff v-twin-Braess."""
    _require_nontrivial(g)
    if not 0 <= v < g.n:
        raise VertexOutOfRange(f"vertex {v} not in 0..{g.n - 1}")
    return Fraction(_lambda_from_forests(g, forest_data(g), v))


def inequality7_gap(g: Graph, v: int) -> int:
    """``4 m d'S e_v - d'S d``, which is never negative on a connected graph."""
    _require_nontrivial(g)
    rows, d = forest_data(g).s_rows, g.degrees
    sd = [sum(x * dj for x, dj in zip(row, d)) for row in rows]
    return 4 * g.m * sd[v] - sum(di * x for di, x in zip(d, sd))


@dataclass(frozen=True)
class VertexEvidence:
    v: int
    lambda_v: Fraction
    kappa_tilde: Fraction
    kappa_hat: Fraction

    @property
    def verdict(self) -> bool:
        return self.lambda_v > 0


def _vertex_evidence(g: Graph, fd: ForestData, v: int) -> VertexEvidence:
    lam = Fraction(_lambda_from_forests(g, fd, v))
    gt, a, b = attach_pendant_twins(g, v)
    gh = close_twins(gt, a, b)
    k_tilde = kemeny_combinatorial(gt)
    k_hat = kemeny_combinatorial(gh)
    if (lam > 0) != (k_hat > k_tilde):
        raise CriterionMismatch(
            f"vertex {v}: lambda_v={lam} but kappa_hat - kappa_tilde = {k_hat - k_tilde}"
        )
    return VertexEvidence(v=v, lambda_v=lam, kappa_tilde=k_tilde, kappa_hat=k_hat)


def is_v_twin_braess(g: Graph, v: int) -> tuple[bool, VertexEvidence]:
    """Decide v-twin-Braess both by the sign of lambda_v and by direct construction.

    Raises :class:`CriterionMismatch` if the two routes disagree.
    """
    _require_nontrivial(g)
    if not 0 <= v < g.n:
        raise VertexOutOfRange(f"vertex {v} not in 0..{g.n - 1}")
    ev = _vertex_evidence(g, forest_data(g), v)
    return ev.verdict, ev


@dataclass(frozen=True)
class BraessReport:
    graph: Graph
    vertices: tuple[VertexEvidence, ...]

    @property
    def overall(self) -> bool:
        return all(ev.verdict for ev in self.vertices)


def is_twin_braess(g: Graph, vertices: list[int] | None = None) -> BraessReport:
    """Per-vertex twin-Braess evidence. ``vertices`` restricts the check."""
    _require_nontrivial(g)
    vs = list(range(g.n)) if vertices is None else vertices
    for v in vs:
        if not 0 <= v < g.n:
            raise VertexOutOfRange(f"vertex {v} not in 0..{g.n - 1}")
    fd = forest_data(g)
    return BraessReport(graph=g, vertices=tuple(_vertex_evidence(g, fd, v) for v in vs))


def kemeny_delta(g: Graph, e: Edge) -> Fraction:
    """Exact ``kappa(G + e) - kappa(G)`` for a non-edge ``e``."""
    u, v = e
    if g.has_edge(u, v):
        raise EdgeAlreadyPresent(f"{(min(u, v), max(u, v))} is already an edge")
    _require_nontrivial(g)
    return kemeny_combinatorial(g.add_edge(u, v)) - kemeny_combinatorial(g)


@dataclass(frozen=True)
class EdgeDelta:
    edge: Edge
    delta: Fraction

    @property
    def verdict(self) -> bool:
        return self.delta > 0


@dataclass(frozen=True)
class ParadoxScan:
    graph: Graph
    kappa: Fraction
    deltas: tuple[EdgeDelta, ...] = field(default_factory=tuple)

    @property
    def overall(self) -> bool:
        return any(d.verdict for d in self.deltas)

    @property
    def witness(self) -> Edge | None:
        return next((d.edge for d in self.deltas if d.verdict), None)


def paradox_scan(g: Graph) -> ParadoxScan:
    """Evaluate ``kappa(G + e) - kappa(G)`` for every non-edge, lexicographically."""
    _require_nontrivial(g)
    base = kemeny_combinatorial(g)
    deltas = tuple(
        EdgeDelta(e, kemeny_combinatorial(g.add_edge(*e)) - base) for e in non_edges(g)
    )
    return ParadoxScan(graph=g, kappa=base, deltas=deltas)

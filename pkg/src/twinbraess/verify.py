"""Exhaustive checks over every labeled connected graph up to a size guard.

For each graph this runs the twin-Braess criterion both ways, the
inequality behind lambda_v > 0, the exact-vs-floating Kemeny agreement,
and for small graphs the 2-forest oracle and the pendant-twin identities.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .braess import _vertex_evidence, inequality7_gap
from .errors import CriterionMismatch, GuardViolation
from .forests import forest_data, spanning_tree_count, two_forest_matrix_bruteforce
from .graph import Graph, attach_pendant_twins, close_twins, connected_graphs
from .kemeny import kemeny_combinatorial, kemeny_spectral

VERIFY_MAX_N = 6
ORACLE_MAX_N = 5
AGREEMENT_TOL = 1e-9

CHECKS = (
    "lambda_positive",
    "twin_braess",
    "criterion_agreement",
    "inequality7",
    "kemeny_agreement",
    "forest_oracle",
    "tau_identities",
    "s_hat_identities",
)


@dataclass
class VerifySummary:
    max_n: int
    graphs_by_n: dict[int, int] = field(default_factory=dict)
    checked: dict[str, int] = field(default_factory=lambda: {c: 0 for c in CHECKS})
    failures: list[str] = field(default_factory=list)
    max_kemeny_gap: float = 0.0
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {
            "max_n": self.max_n,
            "graphs_by_n": {str(k): v for k, v in self.graphs_by_n.items()},
            "graphs_total": sum(self.graphs_by_n.values()),
            "checked": dict(self.checked),
            "failures": list(self.failures),
            "max_kemeny_gap": self.max_kemeny_gap,
            "seconds": round(self.seconds, 3),
            "ok": self.ok,
        }


def expected_s_hat(g: Graph, v: int) -> list[list[int]]:
    """2-forest matrix of the closed twin construction, predicted from ``g`` alone."""
    fd = forest_data(g)
    s, tau, n = fd.s_rows, fd.tau, g.n
    a, b = n, n + 1
    out = [[0] * (n + 2) for _ in range(n + 2)]
    for i in range(n + 2):
        for j in range(n + 2):
            if i == j:
                continue
            if i < n and j < n:
                out[i][j] = 3 * s[i][j]
            elif i >= n and j >= n:
                out[i][j] = 2 * tau
            elif i >= n:
                out[i][j] = 3 * s[v][j] + 2 * tau
            else:
                out[i][j] = 3 * s[i][v] + 2 * tau
    assert out[a][b] == out[b][a] == 2 * tau
    return out


def expected_s_tilde(g: Graph, v: int) -> list[list[int]]:
    """2-forest matrix of the open twin construction, predicted from ``g`` alone."""
    fd = forest_data(g)
    s, tau, n = fd.s_rows, fd.tau, g.n
    out = [[0] * (n + 2) for _ in range(n + 2)]
    for i in range(n + 2):
        for j in range(n + 2):
            if i == j:
                continue
            if i < n and j < n:
                out[i][j] = s[i][j]
            elif i >= n and j >= n:
                out[i][j] = 2 * tau
            elif i >= n:
                out[i][j] = tau + s[v][j]
            else:
                out[i][j] = tau + s[i][v]
    return out


def check_graph(g: Graph, summary: VerifySummary, oracle: bool) -> None:
    fd = forest_data(g)
    tag = f"n={g.n} edges={list(g.edges)}"

    if g.n >= 2:
        gap = abs(float(kemeny_combinatorial(g)) - kemeny_spectral(g))
        summary.max_kemeny_gap = max(summary.max_kemeny_gap, gap)
        summary.checked["kemeny_agreement"] += 1
        if gap > AGREEMENT_TOL:
            summary.failures.append(f"kemeny_agreement {tag}: gap {gap:.3e}")

    if oracle:
        summary.checked["forest_oracle"] += 1
        if two_forest_matrix_bruteforce(g).tolist() != [list(r) for r in fd.s_rows]:
            summary.failures.append(f"forest_oracle {tag}")

    for v in range(g.n):
        if g.n >= 2:
            try:
                ev = _vertex_evidence(g, fd, v)
            except CriterionMismatch as exc:
                summary.failures.append(f"criterion_agreement {tag} v={v}: {exc}")
                continue
            summary.checked["criterion_agreement"] += 1
            summary.checked["lambda_positive"] += 1
            if not ev.lambda_v > 0:
                summary.failures.append(f"lambda_positive {tag} v={v}: {ev.lambda_v}")
            summary.checked["twin_braess"] += 1
            if not ev.kappa_hat > ev.kappa_tilde:
                summary.failures.append(f"twin_braess {tag} v={v}")
            summary.checked["inequality7"] += 1
            if inequality7_gap(g, v) < 0:
                summary.failures.append(f"inequality7 {tag} v={v}")

        if oracle:
            gt, a, b = attach_pendant_twins(g, v)
            gh = close_twins(gt, a, b)
            summary.checked["tau_identities"] += 1
            if spanning_tree_count(gt) != fd.tau or spanning_tree_count(gh) != 3 * fd.tau:
                summary.failures.append(f"tau_identities {tag} v={v}")
            summary.checked["s_hat_identities"] += 1
            if [list(r) for r in forest_data(gh).s_rows] != expected_s_hat(g, v) or [
                list(r) for r in forest_data(gt).s_rows
            ] != expected_s_tilde(g, v):
                summary.failures.append(f"s_hat_identities {tag} v={v}")


def run_verification(
    max_n: int = VERIFY_MAX_N, min_n: int = 2, oracle_max_n: int = ORACLE_MAX_N
) -> VerifySummary:
    if not 2 <= max_n <= VERIFY_MAX_N:
        raise GuardViolation(f"max_n must lie in 2..{VERIFY_MAX_N}, got {max_n}")
    start = time.perf_counter()
    summary = VerifySummary(max_n=max_n)
    for n in range(min_n, max_n + 1):
        count = 0
        for g in connected_graphs(n):
            check_graph(g, summary, oracle=n <= oracle_max_n)
            count += 1
        summary.graphs_by_n[n] = count
        forest_data.cache_clear()
    summary.seconds = time.perf_counter() - start
    return summary

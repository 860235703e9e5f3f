"""Spanning trees, resistance distance and 2-forest counts.

The fast path goes through the Laplacian pseudoinverse: the resistance
matrix is ``diag(L+) J + J diag(L+) - 2 L+`` and the 2-forest matrix is
the spanning-tree count times that. The brute-force enumerator is kept as
an independent oracle.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache

from .errors import Disconnected, TooLarge
from .exact import ExactMatrix, PseudoInverse, det_integer, pseudoinverse_laplacian, solve_integer
from .graph import Graph, laplacian_matrix, require_connected

BRUTEFORCE_MAX_N = 10


@dataclass(frozen=True)
class ForestData:
    """Spanning-tree count with the 2-forest matrix as plain integers.

    ``omega`` and ``s`` are exact matrix views built on first access.
    """

    tau: int
    s_rows: tuple[tuple[int, ...], ...]

    @cached_property
    def s(self) -> ExactMatrix:
        return ExactMatrix(self.s_rows)

    @cached_property
    def omega(self) -> ExactMatrix:
        return ExactMatrix([[Fraction(x, self.tau) for x in r] for r in self.s_rows])


def _laplacian_rows(g: Graph) -> list[list[int]]:
    lap = [[0] * g.n for _ in range(g.n)]
    for u, v in g.edges:
        lap[u][v] = lap[v][u] = -1
    for i, d in enumerate(g.degrees):
        lap[i][i] = d
    return lap


def spanning_tree_count(g: Graph) -> int:
    """Number of spanning trees, as the (0, 0) cofactor of the Laplacian."""
    require_connected(g)
    return _tree_count_unchecked(_laplacian_rows(g))


def _tree_count_unchecked(lap: list[list[int]]) -> int:
    tau = det_integer([r[1:] for r in lap[1:]])
    if tau <= 0:
        raise Disconnected("Laplacian cofactor is zero")
    return tau


def laplacian_pseudoinverse(g: Graph) -> PseudoInverse:
    require_connected(g)
    return pseudoinverse_laplacian(laplacian_matrix(g), g.n)


def _resistance_from_pinv(ld: ExactMatrix) -> ExactMatrix:
    diag = ld.diagonal()
    n = ld.rows
    return ExactMatrix._wrap(
        tuple(
            tuple(diag[i] + diag[j] - 2 * ld[i, j] if i != j else Fraction(0) for j in range(n))
            for i in range(n)
        )
    )


def resistance_matrix(g: Graph) -> ExactMatrix:
    """Exact effective-resistance matrix with unit resistors on the edges."""
    return _resistance_from_pinv(laplacian_pseudoinverse(g).matrix)


@lru_cache(maxsize=4096)
def forest_data(g: Graph) -> ForestData:
    """``tau`` and the 2-forest matrix, computed in integers.

    With ``(L + J/n)^{-1} = Y / D`` the ``J/n`` terms cancel inside the
    resistance formula, leaving ``omega_ij = (Y_ii + Y_jj - 2 Y_ij) / D``;
    multiplying by ``tau`` gives ``s_ij``, which must come out integral.
    """
    require_connected(g)
    n = g.n
    if n == 1:
        return ForestData(tau=1, s_rows=((0,),))
    lap = _laplacian_rows(g)
    tau = _tree_count_unchecked(lap)
    # rows of [L + J/n | I] scaled by n
    shifted = [[n * x + 1 for x in r] for r in lap]
    rhs = [[n if i == j else 0 for j in range(n)] for i in range(n)]
    y, den = solve_integer(shifted, rhs)
    # det(L + J/n) = n tau, hence det(nL + J) = n^(n+1) tau
    if abs(den) != n ** (n + 1) * tau:
        raise ArithmeticError(f"det(nL + J) = {den}, expected n^(n+1) tau = {n ** (n + 1) * tau}")
    s_rows = []
    for i in range(n):
        row = []
        for j in range(n):
            num = tau * (y[i][i] + y[j][j] - 2 * y[i][j])
            q, r = divmod(num, den)
            if r:
                raise ArithmeticError("tau * Omega is not integral")
            row.append(q)
        s_rows.append(tuple(row))
    return ForestData(tau=tau, s_rows=tuple(s_rows))


def two_forest_matrix(g: Graph) -> ExactMatrix:
    return forest_data(g).s


def _component_labels(n: int, edges: tuple[tuple[int, int], ...]) -> list[int] | None:
    """Union-find root per vertex, or None if ``edges`` contain a cycle."""
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru == rv:
            return None
        parent[ru] = rv
    return [find(x) for x in range(n)]


def two_forest_matrix_bruteforce(g: Graph, max_n: int = BRUTEFORCE_MAX_N) -> ExactMatrix:
    """Count {i,j}-2-forests by enumerating all (n-2)-edge subsets.

    An acyclic subgraph with ``n - 2`` edges on ``n`` vertices has exactly
    two components, so acyclicity is the only test needed.
    """
    require_connected(g)
    if g.n > max_n:
        raise TooLarge(f"brute-force 2-forest enumeration limited to n <= {max_n}, got {g.n}")
    n = g.n
    counts = [[0] * n for _ in range(n)]
    if n >= 2:
        for subset in itertools.combinations(g.edges, n - 2):
            labels = _component_labels(n, subset)
            if labels is None:
                continue
            for i in range(n):
                for j in range(i + 1, n):
                    if labels[i] != labels[j]:
                        counts[i][j] += 1
                        counts[j][i] += 1
    return ExactMatrix(counts)


def spanning_tree_count_bruteforce(g: Graph, max_n: int = BRUTEFORCE_MAX_N) -> int:
    """Count acyclic (n-1)-edge subsets. Oracle for the cofactor route."""
    require_connected(g)
    if g.n > max_n:
        raise TooLarge(f"brute-force tree enumeration limited to n <= {max_n}, got {g.n}")
    if g.n == 1:
        return 1
    return sum(
        1 for sub in itertools.combinations(g.edges, g.n - 1) if _component_labels(g.n, sub) is not None
    )

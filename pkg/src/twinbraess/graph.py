"""Immutable simple graphs and the pendant-twin constructions."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .errors import (
    DuplicateEdge,
    EdgeAlreadyPresent,
    IsolatedVertex,
    ParseError,
    SelfLoop,
    VertexOutOfRange,
    Disconnected,
)
from .exact import ExactMatrix

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    Edges are canonicalized on construction: each pair is stored as
    ``(small, large)`` and the tuple is sorted.
    """

    n: int
    edges: tuple[Edge, ...] = ()

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"vertex count must be a positive integer, got {self.n!r}")
        seen: set[Edge] = set()
        for pair in self.edges:
            u, v = (int(x) for x in pair)
            if u == v:
                raise SelfLoop(f"self-loop at vertex {u}")
            for x in (u, v):
                if not 0 <= x < self.n:
                    raise VertexOutOfRange(f"vertex {x} not in 0..{self.n - 1}")
            e = (u, v) if u < v else (v, u)
            if e in seen:
                raise DuplicateEdge(f"duplicate edge {e}")
            seen.add(e)
        object.__setattr__(self, "edges", tuple(sorted(seen)))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    @cached_property
    def neighbors(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.neighbors)

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self.edge_set

    def vertices(self) -> range:
        return range(self.n)

    def add_edge(self, u: int, v: int) -> "Graph":
        if self.has_edge(u, v):
            raise EdgeAlreadyPresent(f"edge {(min(u, v), max(u, v))} already present")
        return Graph(self.n, self.edges + ((u, v),))

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Return the graph with vertex ``i`` renamed ``perm[i]``."""
        if sorted(perm) != list(range(self.n)):
            raise ValueError("perm must be a permutation of 0..n-1")
        return Graph(self.n, tuple((perm[u], perm[v]) for u, v in self.edges))

    def to_dict(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.edges]}

    @classmethod
    def from_dict(cls, data: dict) -> "Graph":
        return cls(int(data["n"]), tuple(tuple(e) for e in data["edges"]))


def new_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    return Graph(n, tuple(tuple(e) for e in edges))


def _check_vertex(g: Graph, v: int) -> None:
    if not 0 <= v < g.n:
        raise VertexOutOfRange(f"vertex {v} not in 0..{g.n - 1}")


def is_connected(g: Graph) -> bool:
    seen = [False] * g.n
    seen[0] = True
    stack = [0]
    count = 1
    nbrs = g.neighbors
    while stack:
        u = stack.pop()
        for w in nbrs[u]:
            if not seen[w]:
                seen[w] = True
                count += 1
                stack.append(w)
    return count == g.n


def require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise Disconnected(f"graph on {g.n} vertices with {g.m} edges is not connected")


@dataclass(frozen=True)
class DerivedMatrices:
    adjacency: ExactMatrix
    degree: ExactMatrix
    laplacian: ExactMatrix
    transition: ExactMatrix


def adjacency_matrix(g: Graph) -> ExactMatrix:
    rows = [[0] * g.n for _ in range(g.n)]
    for u, v in g.edges:
        rows[u][v] = rows[v][u] = 1
    return ExactMatrix(rows)


def laplacian_matrix(g: Graph) -> ExactMatrix:
    rows = [[0] * g.n for _ in range(g.n)]
    for u, v in g.edges:
        rows[u][v] = rows[v][u] = -1
    for i, d in enumerate(g.degrees):
        rows[i][i] = d
    return ExactMatrix(rows)


def derived_matrices(g: Graph) -> DerivedMatrices:
    """Adjacency, degree, Laplacian and transition matrices of ``g``."""
    isolated = [i for i, d in enumerate(g.degrees) if d == 0]
    if isolated:
        raise IsolatedVertex(f"vertex {isolated[0]} has degree 0; transition matrix undefined")
    a = adjacency_matrix(g)
    deg = ExactMatrix([[g.degrees[i] if i == j else 0 for j in range(g.n)] for i in range(g.n)])
    t = ExactMatrix(
        [[Fraction(1, g.degrees[i]) if g.has_edge(i, j) else 0 for j in range(g.n)] for i in range(g.n)]
    )
    return DerivedMatrices(adjacency=a, degree=deg, laplacian=laplacian_matrix(g), transition=t)


def attach_pendant_twins(g: Graph, v: int) -> tuple[Graph, int, int]:
    """Attach two new pendant vertices ``a = n`` and ``b = n + 1`` at ``v``."""
    _check_vertex(g, v)
    require_connected(g)
    a, b = g.n, g.n + 1
    return Graph(g.n + 2, g.edges + ((v, a), (v, b))), a, b


def close_twins(gt: Graph, a: int, b: int) -> Graph:
    """Join ``a`` and ``b`` by an edge."""
    _check_vertex(gt, a)
    _check_vertex(gt, b)
    return gt.add_edge(a, b)


def non_edges(g: Graph) -> list[Edge]:
    present = g.edge_set
    return [e for e in itertools.combinations(range(g.n), 2) if e not in present]


def find_pendant_twins(g: Graph) -> list[tuple[int, int, int]]:
    """All ``(a, b, v)`` with ``a < b`` pendant and both adjacent only to ``v``."""
    by_anchor: dict[int, list[int]] = {}
    for x, d in enumerate(g.degrees):
        if d == 1:
            by_anchor.setdefault(g.neighbors[x][0], []).append(x)
    out = []
    for v, leaves in by_anchor.items():
        for a, b in itertools.combinations(sorted(leaves), 2):
            out.append((a, b, v))
    out.sort()
    return out


def all_labeled_graphs(n: int) -> Iterator[Graph]:
    """Every labeled simple graph on ``n`` vertices (``2^C(n,2)`` of them)."""
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph(n, tuple(p for k, p in enumerate(pairs) if mask >> k & 1))


def connected_graphs(n: int) -> Iterator[Graph]:
    return (g for g in all_labeled_graphs(n) if is_connected(g))


# -- named graphs used across tests and docs ------------------------------


def complete_graph(n: int) -> Graph:
    return Graph(n, tuple(itertools.combinations(range(n), 2)))


def path_graph(n: int) -> Graph:
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def star_graph(leaves: int) -> Graph:
    """``K_{1,leaves}`` centred at vertex 0."""
    return Graph(leaves + 1, tuple((0, i) for i in range(1, leaves + 1)))


def diamond_graph() -> Graph:
    """``K4`` minus the edge ``{1, 3}``; vertices 0 and 2 have degree 3."""
    return Graph(4, ((0, 1), (1, 2), (2, 3), (3, 0), (0, 2)))


# -- edge-list text format ------------------------------------------------


@dataclass(frozen=True)
class ParsedGraph:
    graph: Graph
    labels: tuple[int | None, ...]
    """``labels[i]`` is the file label of internal vertex ``i`` (None if unnamed)."""

    @property
    def remapped(self) -> bool:
        return any(lab != i for i, lab in enumerate(self.labels))


def _ints(line: str, lineno: int, count: int) -> list[int]:
    parts = line.split()
    if len(parts) != count:
        raise ParseError(f"expected {count} integers, got {line.strip()!r}", lineno)
    try:
        vals = [int(p) for p in parts]
    except ValueError:
        raise ParseError(f"non-integer token in {line.strip()!r}", lineno) from None
    if any(x < 0 for x in vals):
        raise ParseError(f"negative value in {line.strip()!r}", lineno)
    return vals


def parse_edge_list(text: str) -> ParsedGraph:
    """Parse ``n m`` followed by ``m`` lines of ``u v``; ``#`` starts a comment line.

    Labels already in ``0..n-1`` are kept. Otherwise the distinct labels
    are mapped in increasing order onto ``0..k-1`` and any remaining
    vertices (there are ``n - k``) are unnamed and isolated.
    """
    header: tuple[int, int] | None = None
    raw: list[tuple[int, int, int]] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        s = line.strip()
        if not s or s.startswith("#"):
            continue
        if header is None:
            n, m = _ints(s, lineno, 2)
            if n < 1:
                raise ParseError("vertex count must be positive", lineno)
            header = (n, m)
            continue
        u, v = _ints(s, lineno, 2)
        raw.append((u, v, lineno))
    if header is None:
        raise ParseError("missing 'n m' header line")
    n, m = header
    if len(raw) != m:
        raise ParseError(f"header declares {m} edges but {len(raw)} edge lines found")

    distinct = sorted({x for u, v, _ in raw for x in (u, v)})
    if all(x < n for x in distinct):
        mapping = {x: x for x in range(n)}
        labels: tuple[int | None, ...] = tuple(range(n))
    else:
        if len(distinct) > n:
            raise ParseError(f"{len(distinct)} distinct vertex labels exceed declared n={n}")
        mapping = {lab: i for i, lab in enumerate(distinct)}
        labels = tuple(distinct) + (None,) * (n - len(distinct))

    edges = []
    seen: set[Edge] = set()
    for u, v, lineno in raw:
        if u == v:
            raise SelfLoop(f"line {lineno}: self-loop at vertex {u}")
        e = (min(mapping[u], mapping[v]), max(mapping[u], mapping[v]))
        if e in seen:
            raise DuplicateEdge(f"line {lineno}: duplicate edge {u} {v}")
        seen.add(e)
        edges.append(e)
    return ParsedGraph(Graph(n, tuple(edges)), labels)


def read_edge_list(path: str) -> ParsedGraph:
    with open(path, encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"

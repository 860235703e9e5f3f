import functools
import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from twinbraess.braess import (
    inequality7_gap,
    is_twin_braess,
    is_v_twin_braess,
    kemeny_delta,
    lambda_v,
    paradox_scan,
)
from twinbraess.ensembles import all_labeled_trees
from twinbraess.errors import Disconnected, EdgeAlreadyPresent, TrivialGraph, VertexOutOfRange
from twinbraess.graph import (
    Graph,
    attach_pendant_twins,
    close_twins,
    complete_graph,
    connected_graphs as enumerate_connected,
    find_pendant_twins,
    is_connected,
    path_graph,
    star_graph,
)
from twinbraess.kemeny import kemeny_combinatorial

from conftest import connected_graphs


def tree_canonical_form(g):
    """AHU encoding rooted at the centre(s); equal strings iff isomorphic trees."""
    nbrs = g.neighbors
    degree = list(g.degrees)
    layer = [v for v in range(g.n) if degree[v] <= 1]
    remaining = g.n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for leaf in layer:
            for w in nbrs[leaf]:
                degree[w] -= 1
                if degree[w] == 1:
                    nxt.append(w)
        layer = nxt

    def encode(v, parent):
        return "(" + "".join(sorted(encode(w, v) for w in nbrs[v] if w != parent)) + ")"

    return min(encode(c, -1) for c in layer)


def test_lambda_k2(k2):
    assert lambda_v(k2, 0) == 6
    assert lambda_v(k2, 1) == 6


def kappa_gap_from_lambda(g, v):
    """kappa_hat - kappa_tilde rebuilt from lambda_v alone.

    With Z = 4 (m + 2) tau, the difference is 4 tau lambda_v / (Z (3Z + 12 tau)).
    """
    from twinbraess.forests import spanning_tree_count

    tau = spanning_tree_count(g)
    z = 4 * (g.m + 2) * tau
    return 4 * tau * lambda_v(g, v) / (z * (3 * z + 12 * tau))


def test_lambda_p3_center_matches_kappa_difference(p3):
    lam = lambda_v(p3, 1)
    assert lam.denominator == 1 and lam > 0
    gt, a, b = attach_pendant_twins(p3, 1)
    gh = close_twins(gt, a, b)
    diff = kemeny_combinatorial(gh) - kemeny_combinatorial(gt)
    assert diff > 0
    assert diff == kappa_gap_from_lambda(p3, 1)


@settings(max_examples=30, deadline=None)
@given(connected_graphs(min_n=2, max_n=8))
def test_lambda_determines_kappa_gap_exactly(g):
    for v in range(g.n):
        gt, a, b = attach_pendant_twins(g, v)
        gh = close_twins(gt, a, b)
        assert kemeny_combinatorial(gh) - kemeny_combinatorial(gt) == kappa_gap_from_lambda(g, v)


def test_lambda_errors(diamond):
    with pytest.raises(TrivialGraph):
        lambda_v(Graph(1), 0)
    with pytest.raises(Disconnected):
        lambda_v(Graph(3, ((0, 1),)), 0)
    with pytest.raises(VertexOutOfRange):
        lambda_v(diamond, 9)


def test_is_v_twin_braess_diamond(diamond):
    verdict, ev = is_v_twin_braess(diamond, 0)
    assert verdict
    assert abs(float(ev.kappa_tilde) - 4.6786) <= 5e-5
    assert abs(float(ev.kappa_hat) - 5.1354) <= 5e-5
    assert ev.lambda_v > 0


def test_is_v_twin_braess_small_cases(k2):
    assert is_v_twin_braess(k2, 0)[0]
    p4 = path_graph(4)
    assert all(is_v_twin_braess(p4, v)[0] for v in range(4))


def test_is_twin_braess_report(diamond):
    report = is_twin_braess(diamond)
    assert report.overall
    assert [ev.v for ev in report.vertices] == [0, 1, 2, 3]
    assert all(ev.verdict for ev in report.vertices)
    # the two routes are computed independently and must agree
    assert all((ev.lambda_v > 0) == (ev.kappa_hat > ev.kappa_tilde) for ev in report.vertices)


def test_is_twin_braess_single_vertex():
    with pytest.raises(TrivialGraph):
        is_twin_braess(Graph(1))


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_every_small_connected_graph_is_twin_braess(n):
    for g in enumerate_connected(n):
        report = is_twin_braess(g)
        assert report.overall, g
        for ev in report.vertices:
            assert inequality7_gap(g, ev.v) >= 0


@settings(max_examples=25, deadline=None)
@given(connected_graphs(min_n=2, max_n=9))
def test_random_graphs_twin_braess(g):
    assert is_twin_braess(g).overall


@functools.lru_cache(maxsize=None)
def tree_classes(n):
    classes = {}
    for t in all_labeled_trees(n):
        classes.setdefault(tree_canonical_form(t), t)
    return classes


def test_tree_class_counts():
    # unlabeled trees on n vertices: 1, 1, 2, 3, 6, 11, 23
    assert [len(tree_classes(n)) for n in range(2, 9)] == [1, 1, 2, 3, 6, 11, 23]


@pytest.mark.parametrize("n", range(2, 9))
def test_every_tree_is_twin_braess(n):
    # all n^(n-2) Pruefer sequences are decoded; one labeled representative per
    # isomorphism class is checked by both routes
    for t in tree_classes(n).values():
        assert is_twin_braess(t).overall


@pytest.mark.parametrize("n", range(2, 7))
def test_every_labeled_tree_lambda_positive(n):
    for t in all_labeled_trees(n):
        assert all(lambda_v(t, v) > 0 for v in range(n))


def test_kemeny_delta_examples(claw, p3):
    assert kemeny_delta(claw, (1, 2)) > 0
    assert kemeny_delta(p3, (0, 2)) == Fraction(4, 3) - Fraction(3, 2)
    with pytest.raises(EdgeAlreadyPresent):
        kemeny_delta(p3, (0, 1))
    with pytest.raises(EdgeAlreadyPresent):
        kemeny_delta(Graph(2, ((0, 1),)), (1, 0))


def test_paradox_scan_examples(claw, p3):
    scan = paradox_scan(claw)
    assert scan.overall
    assert scan.witness == (1, 2)
    assert [d.edge for d in scan.deltas] == [(1, 2), (1, 3), (2, 3)]

    scan = paradox_scan(p3)
    assert not scan.overall and scan.witness is None
    assert scan.deltas[0].delta < 0

    scan = paradox_scan(complete_graph(4))
    assert scan.deltas == () and not scan.overall


def test_paradox_scan_errors():
    with pytest.raises(TrivialGraph):
        paradox_scan(Graph(1))
    with pytest.raises(Disconnected):
        paradox_scan(Graph(3, ((0, 1),)))


@settings(max_examples=25, deadline=None)
@given(connected_graphs(min_n=2, max_n=8), st.randoms(use_true_random=False))
def test_paradox_scan_relabel_invariant(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    a = paradox_scan(g)
    b = paradox_scan(g.relabel(perm))
    assert a.overall == b.overall
    deltas_a = {frozenset((perm[u], perm[v])): d.delta for d in a.deltas for u, v in [d.edge]}
    deltas_b = {frozenset(d.edge): d.delta for d in b.deltas}
    assert deltas_a == deltas_b


def _graphs_with_twin_pendants(n):
    """Connected labeled graphs on n vertices with a twin pendant pair, by mask."""
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        deg = [0] * n
        for k, (u, v) in enumerate(pairs):
            if mask >> k & 1:
                deg[u] += 1
                deg[v] += 1
        if deg.count(1) < 2 or 0 in deg:
            continue
        g = Graph(n, tuple(p for k, p in enumerate(pairs) if mask >> k & 1))
        if find_pendant_twins(g) and is_connected(g):
            yield g


@pytest.mark.parametrize("n", [4, 5, 6])
def test_twin_pendants_are_paradoxical(n):
    count = 0
    for g in _graphs_with_twin_pendants(n):
        deltas = [kemeny_delta(g, (a, b)) for a, b, _ in find_pendant_twins(g)]
        count += 1
        assert all(d > 0 for d in deltas), g
    assert count > 0


@pytest.mark.slow
def test_twin_pendants_are_paradoxical_n7():
    count = 0
    for g in _graphs_with_twin_pendants(7):
        deltas = [kemeny_delta(g, (a, b)) for a, b, _ in find_pendant_twins(g)]
        count += 1
        assert all(d > 0 for d in deltas), g
    assert count > 0


def test_twin_braess_iff_twin_edge_paradoxical(diamond):
    for v in range(diamond.n):
        gt, a, b = attach_pendant_twins(diamond, v)
        assert (kemeny_delta(gt, (a, b)) > 0) == is_v_twin_braess(diamond, v)[0]


def test_random_trees_with_twins_paradoxical():
    rng = random.Random(1)
    for _ in range(50):
        n = rng.randint(4, 12)
        t = Graph(n, tuple((rng.randrange(v), v) for v in range(1, n)))
        for a, b, _ in find_pendant_twins(t):
            assert kemeny_delta(t, (a, b)) > 0

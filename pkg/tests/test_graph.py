import itertools
from fractions import Fraction

import networkx as nx
import pytest
from hypothesis import given

from twinbraess.errors import (
    Disconnected,
    DuplicateEdge,
    EdgeAlreadyPresent,
    IsolatedVertex,
    ParseError,
    SelfLoop,
    VertexOutOfRange,
)
from twinbraess.graph import (
    Graph,
    all_labeled_graphs,
    attach_pendant_twins,
    close_twins,
    connected_graphs as enumerate_connected,
    derived_matrices,
    find_pendant_twins,
    format_edge_list,
    is_connected,
    new_graph,
    non_edges,
    parse_edge_list,
    path_graph,
    star_graph,
)

from conftest import connected_graphs


def test_new_graph_canonicalizes():
    g = new_graph(4, [(2, 1), (0, 3), (1, 0)])
    assert g.edges == ((0, 1), (0, 3), (1, 2))
    assert g.m == 3


def test_k2_and_diamond(k2, diamond):
    assert k2.edges == ((0, 1),)
    assert diamond.edges == ((0, 1), (0, 2), (0, 3), (1, 2), (2, 3))


@pytest.mark.parametrize(
    "n, edges, exc",
    [
        (3, [(0, 0)], SelfLoop),
        (3, [(0, 1), (1, 0)], DuplicateEdge),
        (3, [(0, 3)], VertexOutOfRange),
        (3, [(-1, 2)], VertexOutOfRange),
    ],
)
def test_new_graph_rejects(n, edges, exc):
    with pytest.raises(exc):
        new_graph(n, edges)


def test_nonpositive_n_rejected():
    with pytest.raises(ValueError):
        Graph(0)


@pytest.mark.parametrize(
    "g, expected",
    [
        (Graph(2, ((0, 1),)), True),
        (Graph(4, ((0, 1), (2, 3))), False),
        (Graph(4, ((0, 1), (1, 2), (2, 3), (0, 3), (0, 2))), True),
        (Graph(1), True),
        (Graph(2), False),
    ],
)
def test_is_connected(g, expected):
    assert is_connected(g) is expected


@given(connected_graphs(min_n=1, max_n=8))
def test_is_connected_matches_networkx(g):
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges)
    assert is_connected(g) == nx.is_connected(G)
    # dropping a bridge-free subset may disconnect; compare on a sparser graph too
    sub = Graph(g.n, g.edges[::2])
    H = nx.Graph()
    H.add_nodes_from(range(g.n))
    H.add_edges_from(sub.edges)
    assert is_connected(sub) == nx.is_connected(H)


def test_derived_matrices_k2(k2):
    dm = derived_matrices(k2)
    assert dm.transition.tolist() == [[0, 1], [1, 0]]


def test_derived_matrices_p3(p3):
    dm = derived_matrices(p3)
    assert dm.degree.diagonal() == (1, 2, 1)
    assert dm.transition.row(1) == (Fraction(1, 2), 0, Fraction(1, 2))


def test_derived_matrices_diamond(diamond):
    assert derived_matrices(diamond).laplacian.diagonal() == (3, 2, 3, 2)


def test_derived_matrices_isolated_vertex():
    with pytest.raises(IsolatedVertex):
        derived_matrices(Graph(1))
    with pytest.raises(IsolatedVertex):
        derived_matrices(Graph(3, ((0, 1),)))


@given(connected_graphs(max_n=8))
def test_derived_matrix_invariants(g):
    dm = derived_matrices(g)
    a = dm.adjacency
    assert a.is_symmetric()
    assert all(a[i, i] == 0 for i in range(g.n))
    assert all(sum(r) == 0 for r in dm.laplacian)
    assert all(sum(r) == 1 for r in dm.transition)
    assert dm.laplacian == dm.degree - a


def test_attach_pendant_twins_k2(k2):
    gt, a, b = attach_pendant_twins(k2, 0)
    assert (a, b) == (2, 3)
    assert gt == star_graph(3)


def test_attach_pendant_twins_diamond(diamond):
    gt, a, b = attach_pendant_twins(diamond, 0)
    assert gt.n == 6 and gt.m == diamond.m + 2
    assert set(diamond.edges) < set(gt.edges)
    assert gt.degrees[0] == 5


def test_attach_pendant_twins_errors(diamond):
    with pytest.raises(VertexOutOfRange):
        attach_pendant_twins(diamond, 4)
    with pytest.raises(Disconnected):
        attach_pendant_twins(Graph(4, ((0, 1), (2, 3))), 0)


def test_close_twins(k2, diamond):
    gt, a, b = attach_pendant_twins(k2, 0)
    paw = close_twins(gt, a, b)
    assert paw.edges == ((0, 1), (0, 2), (0, 3), (2, 3))
    assert sorted(paw.degrees) == [1, 2, 2, 3]

    gt, a, b = attach_pendant_twins(diamond, 0)
    gh = close_twins(gt, a, b)
    assert gh.m == diamond.m + 3
    with pytest.raises(EdgeAlreadyPresent):
        close_twins(gh, a, b)


@given(connected_graphs(max_n=8))
def test_twin_constructions_degree_table(g):
    for v in range(g.n):
        gt, a, b = attach_pendant_twins(g, v)
        gh = close_twins(gt, a, b)
        for i in range(g.n):
            assert gh.degrees[i] == g.degrees[i] + (2 if i == v else 0)
            assert gt.degrees[i] == gh.degrees[i]
        assert gt.degrees[a] == gt.degrees[b] == 1
        assert gh.degrees[a] == gh.degrees[b] == 2


def test_non_edges_examples(k2, p3, diamond):
    assert non_edges(k2) == []
    assert non_edges(p3) == [(0, 2)]
    assert non_edges(diamond) == [(1, 3)]


@given(connected_graphs(max_n=9))
def test_non_edges_partition_pairs(g):
    ne = non_edges(g)
    assert ne == sorted(ne)
    assert set(ne).isdisjoint(g.edges)
    assert len(ne) + g.m == g.n * (g.n - 1) // 2


def test_find_pendant_twins_examples(diamond):
    assert find_pendant_twins(star_graph(3)) == [(1, 2, 0), (1, 3, 0), (2, 3, 0)]
    assert find_pendant_twins(path_graph(4)) == []
    gt, a, b = attach_pendant_twins(diamond, 2)
    assert find_pendant_twins(gt) == [(a, b, 2)]


@given(connected_graphs(max_n=9))
def test_find_pendant_twins_properties(g):
    for a, b, v in find_pendant_twins(g):
        assert a < b
        assert g.neighbors[a] == (v,) and g.neighbors[b] == (v,)


def test_connected_graph_counts():
    # labeled connected graphs on n vertices: 1, 1, 4, 38, 728
    assert [sum(1 for _ in enumerate_connected(n)) for n in range(1, 6)] == [1, 1, 4, 38, 728]
    assert sum(1 for _ in all_labeled_graphs(4)) == 64


def test_relabel():
    g = path_graph(3).relabel([2, 0, 1])
    assert g.edges == ((0, 1), (0, 2))


# -- edge-list format ------------------------------------------------------


def test_parse_edge_list_with_comments():
    text = "# diamond\n4 5\n0 1\n1 2\n# inner comment\n2 3\n3 0\n0 2\n"
    parsed = parse_edge_list(text)
    assert parsed.graph.edges == ((0, 1), (0, 2), (0, 3), (1, 2), (2, 3))
    assert not parsed.remapped


def test_parse_edge_list_remaps_labels():
    parsed = parse_edge_list("3 2\n10 20\n20 30\n")
    assert parsed.graph == path_graph(3)
    assert parsed.labels == (10, 20, 30)
    assert parsed.remapped


def test_parse_edge_list_one_based_labels():
    parsed = parse_edge_list("3 2\n1 2\n2 3\n")
    # labels 1..3 are not all < n, so they are remapped in order
    assert parsed.graph == path_graph(3)
    assert parsed.labels == (1, 2, 3)


@pytest.mark.parametrize(
    "text, line",
    [
        ("2 1\n1 x\n", 2),
        ("2\n", 1),
        ("2 1\n0 1 2\n", 2),
        ("3 1\n0 -1\n", 2),
    ],
)
def test_parse_errors_name_line(text, line):
    with pytest.raises(ParseError) as info:
        parse_edge_list(text)
    assert info.value.line == line
    assert f"line {line}" in str(info.value)


def test_parse_errors_edge_count_and_header():
    with pytest.raises(ParseError):
        parse_edge_list("3 2\n0 1\n")
    with pytest.raises(ParseError):
        parse_edge_list("# nothing\n")
    with pytest.raises(ParseError):
        parse_edge_list("2 3\n10 11\n12 13\n14 15\n")
    with pytest.raises(SelfLoop):
        parse_edge_list("2 1\n1 1\n")
    with pytest.raises(DuplicateEdge):
        parse_edge_list("2 2\n0 1\n1 0\n")


@given(connected_graphs(min_n=1, max_n=9))
def test_edge_list_round_trip(g):
    text = format_edge_list(g)
    again = parse_edge_list(text).graph
    assert again == g
    assert format_edge_list(again) == text


@given(connected_graphs(min_n=1, max_n=9))
def test_dict_round_trip(g):
    assert Graph.from_dict(g.to_dict()) == g


def test_graph_is_hashable_and_equal_after_reordering():
    a = new_graph(3, [(0, 1), (1, 2)])
    b = new_graph(3, [(2, 1), (1, 0)])
    assert a == b and hash(a) == hash(b)
    assert len({a, b}) == 1


def test_all_pairs_covered():
    g = path_graph(4)
    pairs = set(itertools.combinations(range(4), 2))
    assert set(non_edges(g)) | set(g.edges) == pairs

import itertools
import math
import pickle
import random

import networkx as nx
import pytest
from mutualvis.errors import ArgumentError, ConstructionError, GraphSizeError
from mutualvis.graph import (Graph, PETERSEN_LABELS, VertexSet,
                             build_complement, build_complete, build_cycle,
                             build_disjoint_union, build_hoffman_singleton,
                             build_line_graph, build_moore_graph,
                             build_petersen, common_neighbors,
                             random_connected_graph, _hoffman_singleton_edges)


def to_networkx(g):
    graph = nx.Graph()
    graph.add_nodes_from(range(g.n))
    graph.add_edges_from(g.edges())
    return graph


def test_petersen_profile():
    profile = build_petersen().profile()
    assert profile.n == 10
    assert profile.edges == 15
    assert profile.degree == 3
    assert profile.diameter == 2
    assert profile.girth == 5
    assert not profile.acyclic
    assert list(profile.srg) == [10, 3, 0, 1]
    assert profile.dissociation_class
    assert profile.is_moore_diam2


def test_petersen_labels():
    g = build_petersen()
    assert PETERSEN_LABELS[0] == (1, 2)
    assert PETERSEN_LABELS[9] == (4, 5)
    for (i, a), (j, b) in itertools.combinations(enumerate(PETERSEN_LABELS),
                                                 2):
        assert g.has_edge(i, j) == (not set(a) & set(b))


def test_petersen_is_complement_of_line_graph_of_k5():
    assert build_complement(build_line_graph(build_complete(5))) == \
        build_petersen()


def test_hoffman_singleton_profile():
    profile = build_hoffman_singleton().profile()
    assert list(profile.srg) == [50, 7, 0, 1]
    assert profile.girth == 5
    assert profile.diameter == 2
    assert profile.is_moore_diam2


@pytest.mark.parametrize('g, reference', [
    (build_petersen(), nx.petersen_graph()),
    (build_hoffman_singleton(), nx.hoffman_singleton_graph()),
    (build_cycle(5), nx.cycle_graph(5)),
])
def test_isomorphic_to_reference(g, reference):
    assert nx.is_isomorphic(to_networkx(g), reference)


@pytest.mark.parametrize('h, i', itertools.product(range(5), range(5)))
def test_pentagon_and_pentagram_induce_petersen(h, i):
    g = build_hoffman_singleton()
    members = [5 * h + j for j in range(5)] + [25 + 5 * i + j
                                               for j in range(5)]
    induced = to_networkx(g).subgraph(members)
    assert nx.is_isomorphic(induced, nx.petersen_graph())


def test_hoffman_singleton_vertex_order():
    g = build_hoffman_singleton()
    assert g.has_edge(0, 1) and g.has_edge(4, 0)
    assert g.has_edge(25, 27) and not g.has_edge(25, 26)
    # vertex j of P_h meets vertex h*i + j of Q_i
    assert g.has_edge(5 * 2 + 1, 25 + 5 * 3 + (2 * 3 + 1) % 5)


def test_hoffman_singleton_rejects_corrupted_construction(mocker):
    edges = _hoffman_singleton_edges()[1:]
    mocker.patch('mutualvis.graph._hoffman_singleton_edges',
                 return_value=edges)
    with pytest.raises(ConstructionError):
        build_hoffman_singleton()


@pytest.mark.parametrize('g', [build_petersen(), build_hoffman_singleton()])
def test_moore_graphs_have_girth_five(g):
    profile = g.profile()
    assert profile.is_moore_diam2
    assert profile.girth == 5


def test_cycle_profiles():
    c5 = build_cycle(5).profile()
    assert list(c5.srg) == [5, 2, 0, 1]
    assert c5.is_moore_diam2
    c4 = build_cycle(4).profile()
    assert list(c4.srg) == [4, 2, 0, 2]
    assert not c4.unique_common_neighbour
    assert not c4.dissociation_class


def test_single_vertex_profile():
    profile = Graph(1, [0]).profile()
    assert profile.edges == 0
    assert profile.diameter == 0
    assert profile.girth is None
    assert profile.srg is None
    assert profile.dissociation_class
    assert 'girth' not in profile.serialize()


def test_path_profile():
    profile = Graph.from_edges(3, [(0, 1), (1, 2)]).profile()
    assert not profile.is_regular
    assert profile.degree is None
    assert (profile.min_degree, profile.max_degree) == (1, 2)
    assert profile.girth is None
    assert profile.acyclic
    assert profile.diameter == 2


def test_disconnected_profile():
    g = build_disjoint_union(build_complete(2), build_complete(2))
    profile = g.profile()
    assert not profile.connected
    assert 'diameter' not in profile.serialize()
    assert not profile.is_moore_diam2


def test_edges_are_lexicographic():
    g = Graph.from_edges(4, [(3, 2), (1, 0), (2, 0)])
    assert g.edges() == [(0, 1), (0, 2), (2, 3)]
    assert g.edge_count == 3


@pytest.mark.parametrize('n', [0, 65, True])
def test_invalid_order(n):
    with pytest.raises(GraphSizeError):
        Graph.from_edges(n, [])


@pytest.mark.parametrize('rows', [
    [0b10, 0b00],
    [0b01, 0b00],
    [0b100, 0b000],
])
def test_invalid_rows(rows):
    with pytest.raises(ArgumentError):
        Graph(2, rows)


@pytest.mark.parametrize('edges', [[(0, 0)], [(0, 2)], [(-1, 0)]])
def test_invalid_edges(edges):
    with pytest.raises(ArgumentError):
        Graph.from_edges(2, edges)


def test_graph_pickles():
    g = build_petersen()
    g.profile()
    assert pickle.loads(pickle.dumps(g)) == g


def test_common_neighbors():
    g = build_petersen()
    assert len(common_neighbors(g, 0, 1)) == 1
    assert len(common_neighbors(g, 0, 7)) == 0


@pytest.mark.parametrize('u, v', [(0, 0), (0, 10)])
def test_common_neighbors_invalid(u, v):
    with pytest.raises(ArgumentError):
        common_neighbors(build_petersen(), u, v)


@pytest.mark.parametrize('n', [2, 65])
def test_cycle_invalid_size(n):
    with pytest.raises(GraphSizeError):
        build_cycle(n)


def test_moore_graph_selector():
    assert build_moore_graph(2) == build_cycle(5)
    assert build_moore_graph(3) == build_petersen()
    with pytest.raises(ArgumentError):
        build_moore_graph(57)


def test_line_graph_limits():
    with pytest.raises(GraphSizeError):
        build_line_graph(Graph(2, [0, 0]))
    with pytest.raises(GraphSizeError):
        build_line_graph(build_complete(12))


def test_disjoint_union_limit():
    with pytest.raises(GraphSizeError):
        build_disjoint_union(build_hoffman_singleton(), build_complete(15))


def test_random_connected_graph():
    g = random_connected_graph(20, 0.1, seed=7)
    assert g.profile().connected
    assert g == random_connected_graph(20, 0.1, seed=7)
    with pytest.raises(ArgumentError):
        random_connected_graph(5, 1.5)


def random_graphs(count, seed, largest=20):
    rng = random.Random(seed)
    for _ in range(count):
        yield random_connected_graph(rng.randint(2, largest),
                                     rng.uniform(0.05, 0.5),
                                     seed=rng.getrandbits(32))


def test_diameter_and_girth_match_networkx():
    for g in random_graphs(200, 31):
        profile = g.profile()
        reference = to_networkx(g)
        assert profile.diameter == nx.diameter(reference)
        girth = nx.girth(reference)
        if profile.acyclic:
            assert girth == math.inf
        else:
            assert profile.girth == girth


def test_line_graph_matches_networkx():
    for g in random_graphs(100, 37, largest=10):
        line = build_line_graph(g)
        edges = g.edges()
        ours = {
            frozenset((frozenset(edges[i]), frozenset(edges[j])))
            for i, j in line.edges()
        }
        reference = {
            frozenset((frozenset(e), frozenset(f)))
            for e, f in nx.line_graph(to_networkx(g)).edges()
        }
        assert ours == reference
        assert line.n == len(edges)


def test_cached_profile_cannot_be_changed(petersen):
    with pytest.raises(TypeError):
        petersen.profile().srg[0] = 99
    with pytest.raises(AttributeError):
        petersen.profile().girth = 3
    assert list(petersen.profile().srg) == [10, 3, 0, 1]


def test_vertex_set_parse():
    vertices = VertexSet.parse('12, 0,2')
    assert list(vertices) == [0, 2, 12]
    assert str(vertices) == '0,2,12'
    assert repr(vertices) == 'VertexSet([0, 2, 12])'
    assert len(vertices) == 3
    assert 2 in vertices and 3 not in vertices
    assert VertexSet.parse('') == VertexSet()


@pytest.mark.parametrize('text', ['0,0', 'a,1', '-1', '1,,2'])
def test_vertex_set_parse_invalid(text):
    with pytest.raises(ArgumentError):
        VertexSet.parse(text)


def test_vertex_set_range():
    assert VertexSet.parse('0,9').require_within(10)
    with pytest.raises(ArgumentError):
        VertexSet.parse('0,10').require_within(10)

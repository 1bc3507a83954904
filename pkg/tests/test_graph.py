from __future__ import annotations

import pytest

from psigreedoid.catalog import get
from psigreedoid.errors import CapExceeded, ParseError
from psigreedoid.graph import (
    ACYCLIC,
    Graph,
    add_isolated_vertex,
    bits,
    chordless_cycle_lengths_through_edge,
    closed_neighborhood,
    complete_graph,
    corona_k1,
    cycle_graph,
    empty_graph,
    enumerate_all_graphs,
    girth,
    girth_at_least,
    graph_index,
    induced_subgraph,
    is_bipartite,
    is_connected,
    is_triangle_free,
    open_neighborhood,
    parse_edge_list,
    path_graph,
    random_graph,
    to_edge_list,
    to_mask,
)
from psigreedoid.matching import enumerate_perfect_matchings

C4 = cycle_graph(4)


def labelled(name, *labs):
    entry = get(name)
    return entry, entry.vertex_set(",".join(labs))


# --- construction and validation ------------------------------------------

def test_graph_rejects_asymmetric_adjacency():
    with pytest.raises(ValueError):
        Graph(2, (0b10, 0))


def test_graph_rejects_self_loop():
    with pytest.raises(ValueError):
        Graph(1, (0b1,))
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(1, 1)])


def test_graph_cap():
    with pytest.raises(ValueError):
        empty_graph(33)


def test_edges_sorted_and_counted():
    g = Graph.from_edges(4, [(3, 0), (1, 0), (0, 1)])
    assert g.edges() == [(0, 1), (0, 3)]
    assert g.num_edges() == 2
    assert g.degree(0) == 2 and g.has_edge(3, 0) and not g.has_edge(1, 3)


def test_equality_and_hash():
    assert cycle_graph(4) == parse_edge_list("n 4\n3 0\n0 1\n1 2\n2 3\n")
    assert hash(cycle_graph(4)) == hash(parse_edge_list(to_edge_list(C4)))
    assert cycle_graph(4) != path_graph(4)


# --- parsing ----------------------------------------------------------------

def test_parse_k2():
    g = parse_edge_list("n 2\n0 1")
    assert g.n == 2 and g.edges() == [(0, 1)]


def test_parse_c4():
    assert parse_edge_list("n 4\n0 1\n1 2\n2 3\n3 0") == C4


def test_parse_self_loop_names_line():
    with pytest.raises(ParseError) as err:
        parse_edge_list("n 3\n0 0")
    assert err.value.line == 2
    assert "line 2" in str(err.value)


@pytest.mark.parametrize("text, line", [
    ("n 3\n0 5", 2),
    ("n 3\n0 1 2", 2),
    ("n 3\n# c\n\nx y", 4),
    ("3\n0 1", 1),
    ("n -1", 1),
])
def test_parse_errors(text, line):
    with pytest.raises(ParseError) as err:
        parse_edge_list(text)
    assert err.value.line == line


def test_parse_missing_header():
    with pytest.raises(ParseError):
        parse_edge_list("# nothing\n")


def test_parse_duplicates_and_comments():
    g = parse_edge_list("# header next\nn 3\n0 1\n1 0\n\n# x\n1 2\n")
    assert g.edges() == [(0, 1), (1, 2)]


# --- neighbourhoods ---------------------------------------------------------

def test_open_neighborhood_c4():
    assert bits(open_neighborhood(C4, 0b1)) == [1, 3]
    assert open_neighborhood(C4, 0) == 0


def test_closed_neighborhood_c4():
    assert bits(closed_neighborhood(C4, 0b1)) == [0, 1, 3]
    assert closed_neighborhood(C4, 0) == 0


def test_fig3_neighbourhoods():
    entry, bc = labelled("fig3_G", "b", "c")
    g = entry.graph
    assert open_neighborhood(g, bc) == entry.vertex_set("a,d,e")
    assert closed_neighborhood(g, bc) == entry.vertex_set("a,b,c,d,e")


# --- induced subgraphs ------------------------------------------------------

def test_induced_whole_graph_is_identity():
    sub, index = induced_subgraph(C4, C4.full)
    assert sub == C4 and index == {0: 0, 1: 1, 2: 2, 3: 3}


def test_induced_c4_minus_vertex_is_path():
    sub, index = induced_subgraph(C4, 0b0111)
    assert sub == path_graph(3)
    assert index == {0: 0, 1: 1, 2: 2}


def test_fig3_closed_neighbourhood_is_c5():
    entry, bc = labelled("fig3_G", "b", "c")
    sub, index = induced_subgraph(entry.graph, closed_neighborhood(entry.graph, bc))
    assert sub.n == 5 and sub.num_edges() == 5
    assert all(sub.degree(v) == 2 for v in range(5)) and is_connected(sub)
    # the cycle a-b-d-e-c-a
    lab = {entry.labels[old]: new for old, new in index.items()}
    for x, y in ["ab", "bd", "de", "ec", "ca"]:
        assert sub.has_edge(lab[x], lab[y])


# --- girth and friends ------------------------------------------------------

def test_girth_examples():
    assert girth(C4) == 4
    assert girth(complete_graph(3)) == 3
    assert girth(path_graph(5)) is ACYCLIC
    assert girth(empty_graph(0)) is ACYCLIC
    assert girth(cycle_graph(7)) == 7


def test_girth_at_least_counts_forests():
    assert girth_at_least(path_graph(4), 5)
    assert girth_at_least(C4, 4) and not girth_at_least(C4, 5)


def test_triangle_free_examples():
    assert not is_triangle_free(complete_graph(3))
    assert is_triangle_free(C4)
    assert is_triangle_free(get("fig2_G2").graph)


def test_bipartite_and_connected():
    assert is_bipartite(C4) and not is_bipartite(cycle_graph(5))
    assert is_connected(C4) and not is_connected(empty_graph(2))
    assert is_connected(empty_graph(1))


def test_chordless_cycles_through_edge():
    assert chordless_cycle_lengths_through_edge(cycle_graph(5), 0, 1) == {5}
    k33 = Graph.from_edges(6, [(a, b) for a in range(3) for b in range(3, 6)])
    assert chordless_cycle_lengths_through_edge(k33, 0, 3) == {4}
    assert chordless_cycle_lengths_through_edge(complete_graph(4), 0, 1) == {3}
    assert chordless_cycle_lengths_through_edge(path_graph(3), 0, 1) == set()


# --- corona -----------------------------------------------------------------

def test_corona_of_k1_is_k2():
    assert corona_k1(empty_graph(1)) == complete_graph(2)


def test_corona_of_c5():
    g = corona_k1(cycle_graph(5))
    assert g.n == 10 and g.num_edges() == 10 and girth(g) == 5
    pms = enumerate_perfect_matchings(g)
    assert pms == [tuple((v, v + 5) for v in range(5))]


def test_corona_of_p2_is_p4():
    g = corona_k1(path_graph(2))
    # a'-a-b-b' with a=0, b=1, a'=2, b'=3
    assert g.edges() == [(0, 1), (0, 2), (1, 3)]
    assert sorted(g.degree(v) for v in range(4)) == [1, 1, 2, 2]


def test_corona_of_empty_graph():
    assert corona_k1(empty_graph(0)) == empty_graph(0)


# --- enumeration ------------------------------------------------------------

@pytest.mark.parametrize("n, count", [(0, 1), (1, 1), (2, 2), (3, 8), (4, 64), (5, 1024)])
def test_enumeration_counts(n, count):
    assert sum(1 for _ in enumerate_all_graphs(n)) == count


def test_enumeration_is_edge_bitmask_order():
    gs = list(enumerate_all_graphs(4))
    assert [graph_index(g) for g in gs] == list(range(64))
    assert gs[0] == empty_graph(4) and gs[-1] == complete_graph(4)
    assert len(set(gs)) == 64


def test_enumeration_cap():
    with pytest.raises(CapExceeded):
        next(enumerate_all_graphs(9))
    with pytest.raises(CapExceeded):
        next(enumerate_all_graphs(5, cap=4))


# --- random graphs ----------------------------------------------------------

def test_random_extremes():
    assert random_graph(6, 0.0, 1) == empty_graph(6)
    assert random_graph(6, 1.0, 1) == complete_graph(6)


def test_random_deterministic():
    assert random_graph(10, 0.3, 42) == random_graph(10, 0.3, 42)
    assert random_graph(10, 0.3, 42).edges() != random_graph(10, 0.3, 43).edges()


def test_add_isolated_vertex():
    g = add_isolated_vertex(C4)
    assert g.n == 5 and g.edges() == C4.edges() and g.isolated_vertices() == [4]


def test_to_mask_roundtrip():
    assert bits(to_mask([5, 0, 3])) == [0, 3, 5]

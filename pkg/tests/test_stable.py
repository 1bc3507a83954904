from __future__ import annotations

import pytest

import oracle
from psigreedoid.catalog import get
from psigreedoid.errors import CapExceeded, ContractViolation
from psigreedoid.family import SetFamily
from psigreedoid.graph import complete_graph, cycle_graph, empty_graph, enumerate_all_graphs, path_graph
from psigreedoid.stable import (
    alpha,
    alpha_of_subset,
    enumerate_maximal_stable_sets,
    enumerate_maximum_stable_sets,
    enumerate_psi,
    extends_to_maximum,
    is_local_max_stable,
    is_stable,
    is_very_well_covered_definition,
    is_well_covered,
    maximal_sizes,
    maximum_stable_subset,
    stable_report,
)

C4 = cycle_graph(4)
K2 = complete_graph(2)


def fam(n, *sets):
    return SetFamily.from_lists(n, sets)


def test_is_stable_examples():
    assert is_stable(C4, 0)
    assert is_stable(C4, 0b0101) and not is_stable(C4, 0b0011)
    g = get("fig1_G")
    assert is_stable(g.graph, g.vertex_set("a,c"))


def test_alpha_examples():
    assert alpha(C4) == 2
    assert alpha(complete_graph(4)) == 1
    assert alpha(get("fig2_G1").graph) == 3
    assert alpha(empty_graph(0)) == 0
    assert alpha(empty_graph(5)) == 5


def test_maximum_stable_subset_is_stable_and_maximum():
    g = get("fig3_H").graph
    for mask in range(0, 1 << g.n, 7):
        s = maximum_stable_subset(g, mask)
        assert s & ~mask == 0 and is_stable(g, s)
        assert s.bit_count() == alpha_of_subset(g, mask)


def test_omega_examples():
    assert enumerate_maximum_stable_sets(C4) == fam(4, [0, 2], [1, 3])
    assert enumerate_maximum_stable_sets(K2) == fam(2, [0], [1])


def test_omega_fig3_contains_superset_of_bc():
    entry = get("fig3_G")
    bc = entry.vertex_set("b,c")
    omega = enumerate_maximum_stable_sets(entry.graph)
    assert any(w & bc == bc for w in omega)
    # frozen from the brute-force oracle
    n, edges = entry.graph.n, entry.graph.edges()
    a = oracle.alpha(n, edges)
    expected = {s for s in oracle.all_stable_sets(n, edges) if len(s) == a}
    assert {frozenset(v for v in range(n) if w >> v & 1) for w in omega} == expected


def test_maximal_examples():
    assert enumerate_maximal_stable_sets(complete_graph(3)) == fam(3, [0], [1], [2])
    assert enumerate_maximal_stable_sets(C4) == fam(4, [0, 2], [1, 3])
    assert set(maximal_sizes(get("fig2_G2").graph)) == {2, 3}


def test_well_covered_examples():
    assert is_well_covered(complete_graph(4))
    assert is_well_covered(C4)
    v = is_well_covered(get("fig2_G2").graph)
    assert not v
    a, b = v.witness["sets"]
    assert {a.bit_count(), b.bit_count()} == {2, 3}


def test_well_covered_edge_cases():
    assert is_well_covered(empty_graph(0))
    assert is_well_covered(empty_graph(4))
    assert not is_very_well_covered_definition(empty_graph(0))


def test_very_well_covered_definition_examples():
    assert is_very_well_covered_definition(C4)
    assert is_very_well_covered_definition(get("fig2_G1").graph)
    assert not is_very_well_covered_definition(complete_graph(4))
    v = is_very_well_covered_definition(empty_graph(1))
    assert not v and v.witness["vertices"] == [0]


def test_local_max_examples():
    e1 = get("fig1_G")
    assert is_local_max_stable(e1.graph, e1.vertex_set("a"))
    assert is_local_max_stable(e1.graph, e1.vertex_set("a,e"))
    assert not is_local_max_stable(e1.graph, e1.vertex_set("c"))
    assert not is_local_max_stable(e1.graph, e1.vertex_set("b,f"))
    e4 = get("fig4_G")
    assert is_local_max_stable(e4.graph, e4.vertex_set("y,z"))
    assert not is_local_max_stable(e4.graph, e4.vertex_set("x,y"))


def test_local_max_rejects_non_stable():
    with pytest.raises(ContractViolation):
        is_local_max_stable(C4, 0b0011)


def test_psi_examples():
    assert enumerate_psi(K2) == fam(2, [], [0], [1])
    assert enumerate_psi(C4) == fam(4, [], [0, 2], [1, 3])
    e = get("fig3_G")
    psi = enumerate_psi(e.graph)
    assert e.vertex_set("b,c") in psi
    assert e.vertex_set("b") not in psi and e.vertex_set("c") not in psi


def test_psi_cap():
    with pytest.raises(CapExceeded):
        enumerate_psi(empty_graph(21))


def test_psi_matches_oracle_small_exhaustive():
    for n in range(1, 6):
        for g in enumerate_all_graphs(n):
            expected = oracle.psi(n, g.edges())
            got = {frozenset(v for v in range(n) if s >> v & 1) for s in enumerate_psi(g)}
            assert got == expected, g


def test_extends_examples():
    e = get("fig1_G")
    g = e.graph
    assert extends_to_maximum(g, 0)
    v = extends_to_maximum(g, e.vertex_set("b,f"))
    assert v and v.witness["W"] in enumerate_maximum_stable_sets(g)
    assert v.witness["W"] & e.vertex_set("b,f") == e.vertex_set("b,f")
    v = extends_to_maximum(g, e.vertex_set("c,e"))
    assert not v and v.witness["largest_extension"] < v.witness["alpha"]


def test_stable_report_invariants():
    r = stable_report(get("fig3_G").graph)
    assert all(w.bit_count() == r["alpha"] for w in r["omega"])
    assert max(r["maximal_sizes"]) == r["alpha"]


def test_alpha_matches_oracle_on_paths_and_cycles():
    for n in range(1, 10):
        assert alpha(path_graph(n)) == (n + 1) // 2
    for q in range(3, 12):
        assert alpha(cycle_graph(q)) == q // 2

from itertools import combinations

import pytest
from hypothesis import given, settings

from linsyz.betti import betti_table
from linsyz.complexes import (
    alexander_dual,
    all_pair_subcomplexes_connected,
    cm_shape_report,
    dual_ideal,
    facet_graph,
    is_cohen_macaulay,
    is_cohen_macaulay_oracle,
    is_shellable,
    is_strongly_connected,
    is_vertex_decomposable_pure,
    pair_subcomplex_connected,
    simplicial_complex,
    stanley_reisner_complex,
    stanley_reisner_ideal,
)
from linsyz.errors import InputError, PreconditionError
from linsyz.generators import cycle_family
from linsyz.graph import raw_syzygy_graph
from linsyz.ideal import ideal

from conftest import C4, EX2, pure_complexes

PATH = simplicial_complex(4, [{1, 2}, {2, 3}, {3, 4}])


def complex_with_dual(I):
    """The complex whose dual ideal is I (facets = complements of generators)."""
    full = frozenset(range(1, I.n + 1))
    return simplicial_complex(I.n, [full - g for g in I.gens])


def test_dual_ideal_is_complements():
    assert dual_ideal(PATH).gens == (frozenset({3, 4}), frozenset({1, 4}), frozenset({1, 2}))
    with pytest.raises(PreconditionError):
        dual_ideal(simplicial_complex(3, [{1, 2, 3}]))
    mixed = dual_ideal(simplicial_complex(4, [{1, 2}, {2, 3, 4}]))
    assert mixed.degree is None


def test_stanley_reisner_complex():
    assert stanley_reisner_complex(ideal(2, {1, 2})).facets == (frozenset({1}), frozenset({2}))
    assert set(stanley_reisner_complex(C4).facets) == {frozenset({1, 3}), frozenset({2, 4})}


def test_stanley_reisner_ideal_is_minimal_nonfaces():
    D = simplicial_complex(4, [{1, 3}, {2, 4}])
    assert set(stanley_reisner_ideal(D).gens) == set(C4.gens)


def test_simplicial_complex_keeps_maximal_faces():
    D = simplicial_complex(4, [{1, 2}, {1}, {1, 2}, {3}])
    assert D.facets == (frozenset({1, 2}), frozenset({3}))
    assert not D.is_pure and D.dimension == 1
    with pytest.raises(InputError):
        simplicial_complex(2, [{3}])


def test_facet_graph_and_strong_connectivity():
    assert facet_graph(PATH).sorted_edges() == [(1, 2), (2, 3)]
    two = simplicial_complex(4, [{1, 2}, {3, 4}])
    assert facet_graph(two).edges == frozenset()
    assert is_strongly_connected(PATH) and not is_strongly_connected(two)
    assert is_strongly_connected(simplicial_complex(3, [{1, 2}]))


def test_pair_subcomplexes():
    assert pair_subcomplex_connected(PATH, {1, 2}, {3, 4})
    assert pair_subcomplex_connected(PATH, {2, 3}, {2, 3})
    D = complex_with_dual(EX2)
    c = all_pair_subcomplexes_connected(D)
    assert not c.holds and c.witness == (1, 5)


def test_cm_codimension_two_examples():
    assert is_cohen_macaulay(complex_with_dual(ideal(4, {1, 2}, {2, 3}, {3, 4})))
    assert not is_cohen_macaulay(complex_with_dual(ideal(4, {1, 2}, {3, 4})))


def test_cm_boundary_of_simplex():
    D = simplicial_complex(4, [set(c) for c in combinations(range(1, 5), 3)])
    assert is_cohen_macaulay(D) and is_cohen_macaulay_oracle(D)


def test_cm_non_pure_and_simplex():
    v = is_cohen_macaulay(simplicial_complex(4, [{1, 2}, {2, 3, 4}]))
    assert not v and v.reason == "not pure"
    assert is_cohen_macaulay(simplicial_complex(3, [{1, 2}])).reason == "simplex"


def test_shellable():
    c = is_shellable(PATH)
    assert c.holds and c.witness == (1, 2, 3)
    assert not is_shellable(simplicial_complex(4, [{1, 2}, {3, 4}]))
    assert is_shellable(simplicial_complex(3, [{1, 2, 3}]))


def test_vertex_decomposable():
    for n in range(4, 8):
        assert is_vertex_decomposable_pure(complex_with_dual(cycle_family(n)))
    assert not is_vertex_decomposable_pure(complex_with_dual(EX2))
    assert is_vertex_decomposable_pure(simplicial_complex(3, [{1, 2}]))


def test_shape_report_line():
    r = cm_shape_report(PATH, independent=True)
    assert r["shape"] == "line" and r["rule"] == "d-line"
    assert r["condition"] and r["cm"] and r["shellable"] and r["vertexDecomposable"]
    assert r["agree"]


def test_shape_report_cycle():
    D = simplicial_complex(4, [{1, 4}, {1, 2}, {2, 3}, {3, 4}])
    r = cm_shape_report(D, independent=True)
    assert r["rule"] == "d-cycle" and r["condition"] and r["agree"]


def test_shape_report_failing_tree():
    r = cm_shape_report(complex_with_dual(EX2), independent=True)
    assert r["rule"] == "d-line" and r["condition"] is False
    assert r["independent"] == {"cm": False, "shellable": False, "vertexDecomposable": False}


def test_shape_report_cycle_size_mismatch():
    # dual of I_2(C_5): a cycle of five facets of size 3 on five vertices, not CM
    D = complex_with_dual(ideal(5, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}))
    r = cm_shape_report(D, independent=True)
    assert r["rule"] == "d-cycle" and not r["cm"] and r["agree"]


def test_shape_report_pruned_cycle_decided_independently():
    D = simplicial_complex(4, [{2, 3}, {1, 2}, {2, 4}, {1, 4}])
    r = cm_shape_report(D, independent=True)
    assert r["rule"] == "d-cycle-pruned" and r["conditionApplies"] is False
    assert r["cm"] and r["shellable"] and r["vertexDecomposable"]


def test_shape_report_requires_purity():
    with pytest.raises(PreconditionError):
        cm_shape_report(simplicial_complex(4, [{1, 2}, {2, 3, 4}]))


# -- duality identities --------------------------------------------------------------------


@given(pure_complexes())
@settings(max_examples=80, deadline=None)
def test_alexander_duality_identities(D):
    full = frozenset(range(1, D.n + 1))
    if full in D.facets:
        return
    dual = alexander_dual(D)
    # the Stanley-Reisner complex of the dual ideal is the Alexander dual
    assert set(stanley_reisner_complex(dual_ideal(D)).facets) == set(dual.facets)
    # involution
    assert set(alexander_dual(dual).facets) == set(D.facets)
    # the dual ideal of the dual complex is the Stanley-Reisner ideal
    if full not in dual.facets and dual.facets:
        assert set(dual_ideal(dual).gens) == set(stanley_reisner_ideal(D).gens)
    # the Stanley-Reisner complex of I_D is D
    assert set(stanley_reisner_complex(stanley_reisner_ideal(D)).facets) == set(D.facets)


@given(pure_complexes())
@settings(max_examples=80, deadline=None)
def test_facet_graph_is_raw_dual_graph(D):
    full = frozenset(range(1, D.n + 1))
    if full in D.facets or D.m < 2:
        return
    assert facet_graph(D).edges == raw_syzygy_graph(dual_ideal(D)).edges


@given(pure_complexes(n_max=6, m_max=5))
@settings(max_examples=60, deadline=None)
def test_constructibility_hierarchy(D):
    full = frozenset(range(1, D.n + 1))
    if full in D.facets:
        return
    vd = is_vertex_decomposable_pure(D)
    sh = is_shellable(D).holds
    cm = is_cohen_macaulay_oracle(D)
    assert (not vd or sh) and (not sh or cm)
    assert is_cohen_macaulay(D).cohen_macaulay == cm


@given(pure_complexes(n_max=6, m_max=5))
@settings(max_examples=60, deadline=None)
def test_cm_implies_strongly_connected(D):
    full = frozenset(range(1, D.n + 1))
    if full in D.facets or D.dimension < 1:
        return
    if is_cohen_macaulay_oracle(D):
        assert is_strongly_connected(D)


def test_dual_betti_field_agreement_small():
    D = complex_with_dual(C4)
    assert betti_table(dual_ideal(D)).as_dict() == {(0, 2): 4, (1, 3): 4, (2, 4): 1}

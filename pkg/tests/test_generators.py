import pytest

from linsyz.betti import betti_table, has_linear_resolution
from linsyz.errors import GenerationError, InputError
from linsyz.generators import (
    LCG_INCREMENT,
    LCG_MULTIPLIER,
    Lcg64,
    cycle_family,
    cycle_perturbations,
    path_ideal_cycle,
    path_ideal_line,
    random_ideal,
    random_pure_complex,
    random_tree_ideal,
)
from linsyz.graph import GraphShape, build_syzygy_graph, classify_shape
from linsyz.structure import cycle_criterion, is_variable_decomposable, tree_criterion

from conftest import C4, I3C6


def test_lcg_stream_is_frozen():
    # seed 0: one warm-up step, then outputs are the high words of the state
    assert [Lcg64(0).next32() for _ in range(1)] == [436792849]
    r = Lcg64(0)
    assert [r.next32() for _ in range(3)] == [436792849, 2599843874, 1723210473]
    r = Lcg64(42)
    assert [r.next32() for _ in range(3)] == [968358053, 1773127077, 2707539007]


def test_lcg_matches_recurrence():
    state = 7
    state = (LCG_MULTIPLIER * state + LCG_INCREMENT) % 2**64
    r = Lcg64(7)
    for _ in range(5):
        state = (LCG_MULTIPLIER * state + LCG_INCREMENT) % 2**64
        assert r.next32() == state >> 32


def test_lcg_helpers():
    r = Lcg64(1)
    assert all(0 <= r.below(5) < 5 for _ in range(100))
    assert sorted(Lcg64(3).sample(range(10), 10)) == list(range(10))
    with pytest.raises(ValueError):
        r.below(0)


def test_path_ideal_cycle():
    assert path_ideal_cycle(6, 3) == I3C6
    assert path_ideal_cycle(4, 2) == C4
    assert path_ideal_cycle(3, 3).m == 1
    with pytest.raises(InputError):
        path_ideal_cycle(4, 5)


def test_path_ideal_line():
    assert path_ideal_line(4, 2).gens == (frozenset({1, 2}), frozenset({2, 3}), frozenset({3, 4}))
    assert path_ideal_line(5, 2).m == 4 and not has_linear_resolution(path_ideal_line(5, 2))
    assert path_ideal_line(4, 4).m == 1


def test_path_ideal_cycle_shapes():
    for n in range(4, 9):
        for t in range(2, n - 1):
            shape = classify_shape(build_syzygy_graph(path_ideal_cycle(n, t)))
            assert shape.tag == GraphShape.CYCLE and shape.length == n


def test_cycle_family():
    assert cycle_family(4).gens == (frozenset({3, 4}), frozenset({1, 4}), frozenset({1, 2}), frozenset({2, 3}))
    I5 = cycle_family(5)
    assert I5.m == 5 and I5.degree == 3 and has_linear_resolution(I5)
    with pytest.raises(InputError):
        cycle_family(3)


def test_cycle_family_matches_path_ideal_up_to_relabeling():
    # x_j -> x_{j+2} carries the complement of {j, j+1} to the window starting at j+2
    n = 6
    I = cycle_family(n)
    shifted = {frozenset((x - 1 + 2) % n + 1 for x in g) for g in I.gens}
    assert shifted == set(path_ideal_cycle(n, n - 2).gens)
    assert betti_table(I).as_dict() == betti_table(path_ideal_cycle(n, n - 2)).as_dict()


def test_cycle_family_passes_criteria():
    for n in range(4, 9):
        I = cycle_family(n)
        assert cycle_criterion(I)
        assert is_variable_decomposable(I)[0]


def test_random_tree_ideal():
    I = random_tree_ideal(6, 4, seed=1)
    assert classify_shape(build_syzygy_graph(I)).tag in (GraphShape.TREE, GraphShape.LINE)
    assert build_syzygy_graph(I).is_tree()
    assert I == random_tree_ideal(6, 4, seed=1)
    nested = random_tree_ideal(5, 4, seed=7, nested=True)
    assert tree_criterion(nested)
    assert random_tree_ideal(5, 1, seed=2).m == 1


def test_random_tree_ideal_impossible():
    with pytest.raises(GenerationError):
        random_tree_ideal(4, 7, seed=0, d=1, retries=3)
    with pytest.raises(InputError):
        random_tree_ideal(4, 3, seed=0, d=4)


def test_random_ideal_and_complex_are_deterministic():
    assert random_ideal(6, 4, 3, 9) == random_ideal(6, 4, 3, 9)
    assert random_ideal(6, 4, 3, 9).degree == 3
    with pytest.raises(InputError):
        random_ideal(3, 5, 2, 0)
    D = random_pure_complex(6, 4, 3, 5)
    assert D == random_pure_complex(6, 4, 3, 5) and D.is_pure


def test_cycle_perturbations_are_pruned_cycles():
    for n in range(4, 8):
        found = cycle_perturbations(n)
        assert found
        for I in found:
            G = build_syzygy_graph(I)
            assert str(classify_shape(G)) == f"cycle({n})"
            assert G.pruned

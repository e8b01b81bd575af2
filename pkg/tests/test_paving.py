from itertools import permutations
from math import comb, factorial

import pytest
from hypothesis import given, settings, strategies as st

from delta_springer.errors import GuardError
from delta_springer.partitions import num_syt
from delta_springer.paving import (
    ComponentClass,
    ShapeFilling,
    admissible_maps,
    cell_dimension,
    component_filling,
    component_of_cell,
    decreasing_fillings,
    enumerate_cells,
    enumerate_components,
    enumerate_iprd,
    expected_component_count,
    flatten,
    iprd_of,
    is_admissible,
    is_schubert_compatible,
    ordered_set_partitions,
    osp_of_cell,
    paving_hilbert,
    reading_order_filling,
    row_fill_criterion,
    stirling2,
    top_dimension,
)
from delta_springer.presentations import RingSpec, hilbert_recursive, iter_specs
from delta_springer.qpoly import QPolynomial

specs = st.sampled_from(list(iter_specs(5, 3)))


def compatible_fillings(spec):
    """Every Schubert-compatible filling, by brute force over label permutations."""
    L = spec.big_lambda
    shape = [L.part(a) for a in range(1, spec.s + 1)]
    out = []
    for p in permutations(range(1, sum(shape) + 1)):
        rows, i = [], 0
        for m in shape:
            rows.append(tuple(p[i : i + m]))
            i += m
        T = ShapeFilling(spec.n, spec.lam, spec.s, tuple(rows))
        if is_schubert_compatible(T):
            out.append(T)
    return out


def test_reading_order():
    T = reading_order_filling(7, (2, 2), 4)
    assert T.rows == ((13, 9, 5, 3, 1), (14, 10, 6, 4, 2), (15, 11, 7), (16, 12, 8))
    assert is_schubert_compatible(T)


def test_flatten_relabels_and_swaps():
    T = reading_order_filling(7, (2, 2), 4)
    T3, fl = flatten(T, 3)
    moved = {k: v for k, v in fl.items() if k != v}
    assert moved == {8: 7, 9: 8, 10: 9, 11: 10, 12: 11, 15: 12}
    assert set(range(1, 17)) - set(fl) == {7, 13, 14, 16}
    # the shortened third row moves below the fourth
    assert T3.rows == ((8, 5, 3, 1), (9, 6, 4, 2), (11, 7), (12, 10))
    assert is_schubert_compatible(T3)
    assert is_schubert_compatible(flatten(T, 1)[0])


def test_compatibility_failures():
    T = reading_order_filling(3, (1,), 2)
    # rows must decrease left to right
    bad = ShapeFilling(3, T.lam, 2, ((2, 4, 1), (5, 3)))
    result = is_schubert_compatible(bad)
    assert not result and result.condition == "S3"
    # [lambda] must carry the smallest labels
    assert is_schubert_compatible(ShapeFilling(3, T.lam, 2, ((4, 2, 5), (3, 1)))).condition == "S2"
    wrong = ShapeFilling(3, T.lam, 2, ((1, 2), (3, 4, 5)))
    assert is_schubert_compatible(wrong).condition == "shape"


def test_six_parameter_cell():
    T = reading_order_filling(6, (2, 2), 4)
    w = (2, 7, 4, 8, 1, 3)
    assert is_admissible(w, T)
    assert cell_dimension(w, T) == 6


def test_inadmissible_map():
    T = reading_order_filling(3, (1,), 2)
    assert not is_admissible((5, 4, 3), T)
    with pytest.raises(ValueError):
        cell_dimension((5, 4, 3), T)


def test_worked_components():
    comps = {str(c.S): sorted("".join(map(str, x.w)) for x in c.cells) for c in enumerate_components((4, (2, 1), 3))}
    # representatives with columns sorted; 31/2 and 41/2 correspond to 21/3 and 21/4
    assert comps == {
        "31/2": ["1234", "1235", "1236", "1324", "1325", "1326"],
        "41/2": ["1243", "1263", "1352", "1362"],
        "41/3": ["1623", "1632"],
        "32/1": ["3124", "3125", "3126"],
        "42/1": ["3152", "3162"],
        "43/1": ["3512", "3612"],
        "42/3": ["6123", "6132"],
        "43/2": ["6312"],
    }


def test_component_of_small_cell():
    T = reading_order_filling(5, (2, 1), 3)
    w = (1, 6, 2, 4, 3)
    assert is_admissible(w, T)
    S = component_filling(w, T)
    assert S.rows == ((3, 1), (5,))
    # with columns sorted the class representative is 51/3
    assert str(component_of_cell(w, T)) == "51/3"


def test_ordered_set_partition_example():
    T = reading_order_filling(6, (1, 1, 1), 3)
    blocks = osp_of_cell((2, 5, 3, 6, 1, 8), T)
    assert len(blocks) == 3 and all(blocks)
    assert frozenset().union(*blocks) == frozenset(range(1, 7))


@pytest.mark.parametrize("n,k", [(1, 1), (3, 2), (4, 2), (4, 3), (5, 3), (6, 2)])
def test_stirling_oracle(n, k):
    osps = list(ordered_set_partitions(n, k))
    assert len(osps) == len(set(osps)) == factorial(k) * stirling2(n, k)
    T = reading_order_filling(n, (1,) * k, k)
    cells = enumerate_cells(RingSpec(n, (1,) * k, k))
    assert {osp_of_cell(c.w, T) for c in cells} == set(osps)


@given(specs)
@settings(max_examples=40, deadline=None)
def test_paving_matches_recursion(spec):
    assert paving_hilbert(spec) == hilbert_recursive(spec)


@given(specs)
@settings(max_examples=40, deadline=None)
def test_cells_are_bounded_and_bijective(spec):
    T = reading_order_filling(spec.n, spec.lam, spec.s)
    cells = enumerate_cells(spec)
    assert all(0 <= c.dim <= top_dimension(spec) for c in cells)
    assert sorted(iprd_of(c.w, T) for c in cells) == sorted(enumerate_iprd(spec))
    assert len({c.w for c in cells}) == len(cells)


@pytest.mark.parametrize(
    "spec",
    [RingSpec(3, (1,), 2), RingSpec(3, (2,), 2), RingSpec(3, (1,), 3), RingSpec(4, (2, 1), 2), RingSpec(2, (), 3)],
    ids=str,
)
def test_any_compatible_filling_gives_the_same_series(spec):
    fillings = compatible_fillings(spec)
    assert fillings
    for T in fillings:
        counts = {}
        for w in admissible_maps(T):
            d = 2 * cell_dimension(w, T)
            counts[d] = counts.get(d, 0) + 1
        assert QPolynomial(counts) == hilbert_recursive(spec)


@given(specs)
@settings(max_examples=40, deadline=None)
def test_components(spec):
    comps = enumerate_components(spec)
    assert all(c.top_dimension == top_dimension(spec) for c in comps)
    found = {c.S for c in comps}
    if spec.s > spec.lam.length:
        assert len(comps) == comb(spec.n, spec.k) * num_syt(spec.lam) == expected_component_count(spec)
        assert found == set(decreasing_fillings(spec.n, spec.lam))
    else:
        assert found == {S for S in decreasing_fillings(spec.n, spec.lam) if row_fill_criterion(S)}


def test_parallel_matches_serial():
    spec = RingSpec(5, (2, 1), 3)
    assert enumerate_cells(spec, workers=1) == enumerate_cells(spec, workers=4)


def test_component_class_helpers():
    S = ComponentClass(((4, 1), (3,)))
    assert S.columns() == [[4, 3], [1]]
    assert S.is_decreasing()
    assert str(S) == "41/3"


def test_enumeration_guard():
    with pytest.raises(GuardError):
        enumerate_cells(RingSpec(8, (), 1))

from math import comb, factorial, prod

import pytest
from hypothesis import given, settings, strategies as st

from delta_springer.partitions import Partition, dominance_leq, num_syt, partitions_of
from delta_springer.qpoly import QPolynomial
from delta_springer.symmetric import (
    GradedSymmetricFunction,
    SymmetricFunction,
    charge,
    induced_specht,
    kostka,
    kostka_foulkes,
    modified_hall_littlewood,
    monomial_to_schur,
    omega_and_reverse,
    reading_word,
    schur_to_monomial,
    skew_schur,
    skew_schur_by_kostka,
    ssyt,
    times_complete,
    times_s1_power,
)

s = SymmetricFunction.schur
partitions = st.integers(1, 6).flatmap(lambda n: st.sampled_from(partitions_of(n)))


@st.composite
def skew_shapes(draw):
    outer = draw(st.integers(1, 7).flatmap(lambda n: st.sampled_from(partitions_of(n))))
    # any partition contained in outer
    inner = []
    for i, part in enumerate(outer):
        cap = part if i == 0 else min(part, inner[-1])
        x = draw(st.integers(0, cap))
        if x == 0:
            break
        inner.append(x)
    return outer, Partition(inner)


@st.composite
def symmetric_functions(draw):
    n = draw(st.integers(1, 5))
    lams = draw(st.lists(st.sampled_from(partitions_of(n)), min_size=1, max_size=4))
    f = SymmetricFunction()
    for lam in lams:
        f = f + s(lam).scale(draw(st.integers(-3, 3)))
    return f


def test_kostka_small():
    assert kostka(Partition((2, 1)), (1, 1, 1)) == 2
    assert kostka(Partition((3,)), (1, 1, 1)) == 1
    assert kostka(Partition((2, 1)), (2, 1)) == 1
    assert kostka(Partition((1, 1, 1)), (2, 1)) == 0


@given(partitions)
def test_kostka_triangularity(lam):
    assert kostka(lam, tuple(lam)) == 1
    assert kostka(lam, (1,) * lam.size) == num_syt(lam)
    for mu in partitions_of(lam.size):
        if kostka(lam, tuple(mu)):
            assert dominance_leq(mu, lam)


@given(symmetric_functions())
def test_monomial_roundtrip(f):
    if f.is_zero():
        return
    n = f.degree
    m = {tuple(mu) + (0,) * (n - len(mu)): c for mu, c in schur_to_monomial(f).items()}
    assert monomial_to_schur(m, n) == f


def test_nonsymmetric_input_rejected():
    with pytest.raises(ValueError):
        monomial_to_schur({(2, 0): 1, (0, 2): 2, (1, 1): 1}, 2)


@given(symmetric_functions())
def test_omega_is_an_involution(f):
    assert f.omega().omega() == f


@given(skew_shapes())
@settings(max_examples=60, deadline=None)
def test_skew_two_routes(shape):
    outer, inner = shape
    assert skew_schur(outer, inner) == skew_schur_by_kostka(outer, inner)


@given(partitions)
def test_skew_with_empty_inner(lam):
    assert skew_schur(lam) == s(lam)


def test_skew_example():
    # s_{32/1} = s_{31} + s_{22}
    assert skew_schur((3, 2), (1,)) == s((3, 1)) + s((2, 2))


@given(partitions, st.integers(0, 3))
def test_induced_dimensions(lam, extra):
    n, k = lam.size + extra, lam.size
    assert induced_specht(n, lam).dimension() == comb(n, k) * num_syt(lam)
    assert times_s1_power(s(lam), extra).dimension() == factorial(n) // factorial(k) * num_syt(lam)


def test_pieri():
    assert times_complete(s((1,)), 1) == s((2,)) + s((1, 1))
    assert induced_specht(3, (1,)) == s((3,)) + s((2, 1))


def test_reading_word_and_charge():
    # rows listed top to bottom, read from the bottom row up
    assert reading_word(((1, 1, 2), (2,))) == [2, 1, 1, 2]
    assert charge([1, 2, 3]) == 3
    assert charge([3, 2, 1]) == 0
    assert charge([2, 1, 1, 2]) == 1


@pytest.mark.parametrize("n", range(1, 7))
def test_kostka_foulkes_extremes(n):
    assert kostka_foulkes((n,), (1,) * n) == QPolynomial.from_algebraic({comb(n, 2): 1})
    assert kostka_foulkes((1,) * n, (1,) * n) == QPolynomial.one()


@given(partitions)
@settings(max_examples=40, deadline=None)
def test_kostka_foulkes_at_one(mu):
    for lam in partitions_of(mu.size):
        kf = kostka_foulkes(lam, mu)
        assert kf.total() == kostka(lam, tuple(mu))
        if lam == mu:
            assert kf == QPolynomial.one()


def test_small_hall_littlewood():
    assert modified_hall_littlewood((1, 1)) == GradedSymmetricFunction({0: s((2,)), 2: s((1, 1))})
    assert modified_hall_littlewood((2,)) == GradedSymmetricFunction({0: s((2,))})


@given(partitions)
@settings(max_examples=30, deadline=None)
def test_hall_littlewood_dimension(lam):
    H = modified_hall_littlewood(lam)
    # the total representation is induced from a Young subgroup
    assert H.hilbert().total() == factorial(lam.size) // prod(factorial(p) for p in lam)
    assert H.is_schur_positive()


def test_omega_and_reverse():
    F = GradedSymmetricFunction({0: s((3,)), 2: s((2, 1))})
    assert omega_and_reverse(F, 2) == GradedSymmetricFunction({0: s((2, 1)), 2: s((1, 1, 1))})


def test_formatting():
    f = s((2, 1)) + s((3,)).scale(2)
    assert f.to_json() == {"3": 2, "2,1": 1}
    assert "s_{2,1}" in f.to_latex()
    F = GradedSymmetricFunction({0: s((2,)), 2: s((1, 1))})
    assert F.to_json() == {"0": {"2": 1}, "2": {"1,1": 1}}
    assert F.to_json(algebraic=True) == {"0": {"2": 1}, "1": {"1,1": 1}}


def test_ssyt_count():
    assert len(list(ssyt(Partition((2, 1)), (1, 1, 1)))) == 2

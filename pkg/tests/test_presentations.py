from itertools import combinations_with_replacement

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from delta_springer.errors import GuardError
from delta_springer.polynomials import Polynomial, buchberger, normal_form
from delta_springer.presentations import (
    RingSpec,
    artin_basis,
    groebner_basis,
    hilbert_groebner,
    hilbert_recursive,
    hrs_generators,
    ideal_brundan_ostrik,
    ideal_I_n_lambda,
    ideal_I_n_lambda_s,
    iter_specs,
    spaltenstein_basis,
    spaltenstein_composition,
    verify_artin_basis,
    verify_containment,
)
from delta_springer.qpoly import QPolynomial

small_specs = st.sampled_from(list(iter_specs(4, 3)))


def _monomials(n, d):
    for combo in combinations_with_replacement(range(n), d):
        exp = [0] * n
        for i in combo:
            exp[i] += 1
        yield tuple(exp)


def graded_quotient_dims(gens, n, max_deg):
    """Dimension of each graded piece by brute-force linear algebra.

    The degree-d piece of the ideal is spanned by monomial multiples of the
    generators; its rank is computed with sympy over the rationals.
    """
    dims = {}
    for d in range(max_deg + 1):
        cols = {m: i for i, m in enumerate(_monomials(n, d))}
        rows = []
        for g in gens:
            e = g.degree()
            if e > d:
                continue
            for m in _monomials(n, d - e):
                row = [0] * len(cols)
                for exp, c in g.terms.items():
                    row[cols[tuple(a + b for a, b in zip(exp, m))]] += c
                rows.append(row)
        rank = sympy.Matrix(rows).rank() if rows else 0
        if len(cols) - rank:
            dims[2 * d] = len(cols) - rank
    return QPolynomial(dims)


def test_ring_spec_validation():
    assert RingSpec(4, (2, 1), 3).K == 6
    assert RingSpec(4, (2, 1), 3).top_degree == 3
    with pytest.raises(ValueError):
        RingSpec(2, (2, 1), 2)
    with pytest.raises(ValueError):
        RingSpec(3, (1, 1), 1)
    with pytest.raises(ValueError):
        RingSpec(1, (), 0)


def test_generating_set_small():
    # e_d(S) generators never include constants
    for spec in iter_specs(4, 3):
        assert all(g.degree() >= 1 for g in ideal_I_n_lambda(spec))


def test_hilbert_examples():
    assert hilbert_recursive(RingSpec(0, (), 1)) == QPolynomial.one()
    assert hilbert_groebner(RingSpec(0, (), 3)) == QPolynomial.one()
    for s in range(1, 5):
        assert hilbert_groebner(RingSpec(1, (), s)) == QPolynomial.geometric(s)
    h = hilbert_recursive(RingSpec(4, (2, 1), 3))
    assert h.total() == 22
    assert h.top_degree() == 6


def test_two_one_in_three_variables():
    spec = RingSpec(3, (2, 1), 2)
    oracle = graded_quotient_dims(ideal_I_n_lambda_s(spec), 3, 4)
    assert oracle == QPolynomial({0: 1, 2: 2})
    assert hilbert_groebner(spec) == oracle


@pytest.mark.parametrize("spec", list(iter_specs(3, 3)), ids=str)
def test_groebner_against_linear_algebra(spec):
    top = spec.n * (spec.s - 1) + 1
    assert hilbert_groebner(spec) == graded_quotient_dims(ideal_I_n_lambda_s(spec), spec.n, top)


@given(st.integers(0, 4), st.integers(1, 4))
def test_empty_partition_is_a_power(n, s):
    assert hilbert_recursive(RingSpec(n, (), s)) == QPolynomial.geometric(s) ** n
    assert len(artin_basis(RingSpec(n, (), s))) == s**n


@given(small_specs)
@settings(max_examples=40, deadline=None)
def test_recursion_matches_groebner(spec):
    h = hilbert_recursive(spec)
    assert hilbert_groebner(spec) == h
    counts = {}
    for m in artin_basis(spec):
        counts[2 * sum(m)] = counts.get(2 * sum(m), 0) + 1
    assert QPolynomial(counts) == h


def test_artin_examples():
    assert artin_basis(RingSpec(0, (), 2)) == [()]
    assert artin_basis(RingSpec(1, (1,), 2)) == [(0,)]
    spec = RingSpec(2, (1,), 2)
    assert len(artin_basis(spec)) == hilbert_groebner(spec).total()


@pytest.mark.parametrize("spec", [RingSpec(4, (2, 1), 2), RingSpec(3, (), 3), RingSpec(4, (2, 2), 2)], ids=str)
def test_verify_artin_basis(spec):
    report = verify_artin_basis(spec)
    assert report["status"] == "pass"
    assert report["size"] == hilbert_recursive(spec).total()


@given(small_specs, st.data())
@settings(max_examples=25, deadline=None)
def test_generators_are_permutation_stable(spec, data):
    if spec.n == 0:
        return
    perm = data.draw(st.permutations(range(spec.n)))
    G = groebner_basis(spec)
    for g in ideal_I_n_lambda_s(spec):
        assert normal_form(g.permute_variables(perm), G).is_zero()


@pytest.mark.parametrize("lam", [(1,), (2,), (1, 1), (2, 1), (1, 1, 1), (3, 1), (2, 2)])
def test_springer_case_is_tanisaki(lam):
    n = sum(lam)
    spec = RingSpec(n, lam, len(lam))
    assert groebner_basis(spec) == buchberger(ideal_I_n_lambda(spec), n)
    # and the block ideal with all blocks of size one has the same generators
    assert set(ideal_brundan_ostrik((1,) * n, lam)) == set(ideal_I_n_lambda(spec))


@pytest.mark.parametrize("n,k", [(2, 1), (3, 2), (4, 2), (4, 3), (5, 2)])
def test_ordered_set_partition_presentation(n, k):
    spec = RingSpec(n, (1,) * k, k)
    G = groebner_basis(spec)
    H = buchberger(hrs_generators(n, k), n)
    for d in range(0, n * k):
        for m in list(_monomials(n, d))[:25]:
            p = Polynomial.monomial(m, n)
            assert normal_form(p, G) == normal_form(p, H)
    assert G == H


def test_composition():
    assert spaltenstein_composition(RingSpec(4, (2, 1), 3)) == [1, 1, 1, 1, 2]
    assert spaltenstein_composition(RingSpec(3, (), 1)) == [1, 1, 1]


@pytest.mark.parametrize("spec", [RingSpec(3, (1,), 2), RingSpec(3, (2,), 2), RingSpec(3, (1,), 3), RingSpec(2, (), 3)], ids=str)
def test_containment_small(spec):
    report = verify_containment(spec)
    assert report["status"] == "pass", report["witnesses"]
    # same verdict from the untruncated basis with no shortcuts
    K = spec.K
    full = spaltenstein_basis(spec)
    for g in ideal_I_n_lambda_s(spec):
        lifted = Polynomial({e + (0,) * (K - spec.n): c for e, c in g.terms.items()}, K)
        assert normal_form(lifted, full).is_zero()


def test_containment_includes_powers():
    report = verify_containment(RingSpec(3, (2,), 2))
    assert report["parts"] == {"elementary": "pass", "powers": "pass"}


def test_guards():
    with pytest.raises(GuardError) as info:
        groebner_basis(RingSpec(8, (), 1))
    assert "--unsafe-size" in str(info.value)
    with pytest.raises(GuardError):
        verify_containment(RingSpec(6, (), 2))


def test_generators_for_two_one_in_four_variables():
    from itertools import combinations

    from delta_springer.polynomials import elementary_symmetric

    expected = {elementary_symmetric(range(1, 5), d, 4) for d in (2, 3, 4)}
    expected |= {elementary_symmetric(S, 3, 4) for S in combinations(range(1, 5), 3)}
    assert set(ideal_I_n_lambda(RingSpec(4, (2, 1), 2))) == expected
    x = [Polynomial.variable(i, 4) for i in range(1, 5)]
    assert set(ideal_I_n_lambda_s(RingSpec(4, (2, 1), 2))) == expected | {v**2 for v in x}

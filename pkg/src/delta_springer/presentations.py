"""The rings R_{n,lambda,s}: generating sets, Hilbert series, monomial basis.

Variables ``x1..xn`` carry cohomological degree 2; every Hilbert series here
is a :class:`~delta_springer.qpoly.QPolynomial` in that grading.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Sequence

from .errors import GuardError
from .partitions import Partition, as_partition, big_lambda, conjugate, format_partition, remove_row
from .polynomials import (
    GroebnerBasis,
    Polynomial,
    buchberger,
    elementary_symmetric,
    format_polynomial,
    normal_form,
    standard_monomials,
)
from .qpoly import QPolynomial

DEFAULT_GROEBNER_GUARD = 7
DEFAULT_CONTAINMENT_GUARD = 10


@dataclass(frozen=True)
class RingSpec:
    """Parameters ``(n, lambda, s)`` with ``|lambda| = k <= n`` and ``s >= len(lambda)``."""

    n: int
    lam: Partition = field(default_factory=Partition)
    s: int = 1

    def __post_init__(self):
        object.__setattr__(self, "lam", as_partition(self.lam))
        if self.n < 0:
            raise ValueError("n must be nonnegative")
        if self.lam.size > self.n:
            raise ValueError(f"|lambda| = {self.lam.size} exceeds n = {self.n}")
        if self.s < max(self.lam.length, 1):
            raise ValueError(f"s = {self.s} must be positive and at least len(lambda) = {self.lam.length}")

    @property
    def k(self) -> int:
        return self.lam.size

    @property
    def K(self) -> int:
        return self.s * (self.n - self.k) + self.k

    @property
    def big_lambda(self) -> Partition:
        return big_lambda(self.n, self.lam, self.s)

    @property
    def top_degree(self) -> int:
        """Algebraic top degree ``n(lambda) + (s-1)(n-k)``."""
        from .partitions import n_stat

        return n_stat(self.lam) + (self.s - 1) * (self.n - self.k)

    def to_json(self) -> dict:
        return {"n": self.n, "lambda": list(self.lam), "s": self.s}

    def __str__(self):
        return f"(n={self.n}, lambda={format_partition(self.lam)}, s={self.s})"


def _as_spec(spec) -> RingSpec:
    if isinstance(spec, RingSpec):
        return spec
    n, lam, s = spec
    return RingSpec(n, lam, s)


def iter_specs(max_n: int, max_s: int, min_n: int = 0):
    """Every valid spec with ``n <= max_n`` and ``len(lambda) <= s <= max_s``."""
    from .partitions import partitions_of

    for n in range(min_n, max_n + 1):
        for k in range(n + 1):
            for lam in partitions_of(k):
                for s in range(max(lam.length, 1), max_s + 1):
                    yield RingSpec(n, lam, s)


# ---------------------------------------------------------------------------
# generating sets


def ideal_I_n_lambda(spec) -> list[Polynomial]:
    """Generators ``e_d(S)`` with ``d > |S| - lam'_n - ... - lam'_{n-|S|+1}``.

    Generators with ``d > |S|`` vanish identically and are left out.
    """
    spec = _as_spec(spec)
    n = spec.n
    conj = conjugate(spec.lam)

    def c(j):
        return conj[j - 1] if 1 <= j <= len(conj) else 0

    gens = []
    for m in range(1, n + 1):
        bound = m - sum(c(j) for j in range(n - m + 1, n + 1))
        if bound >= m:
            continue
        for S in combinations(range(1, n + 1), m):
            for d in range(bound + 1, m + 1):
                gens.append(elementary_symmetric(S, d, n))
    return gens


def power_generators(n: int, s: int, nvars: int | None = None) -> list[Polynomial]:
    nvars = n if nvars is None else nvars
    out = []
    for i in range(n):
        exp = [0] * nvars
        exp[i] = s
        out.append(Polynomial.monomial(exp))
    return out


def ideal_I_n_lambda_s(spec) -> list[Polynomial]:
    spec = _as_spec(spec)
    return ideal_I_n_lambda(spec) + power_generators(spec.n, spec.s)


def hrs_generators(n: int, k: int) -> list[Polynomial]:
    """``x_i^k`` together with ``e_n, e_{n-1}, ..., e_{n-k+1}`` in all variables."""
    allvars = range(1, n + 1)
    return power_generators(n, k) + [elementary_symmetric(allvars, d, n) for d in range(n - k + 1, n + 1)]


def ideal_brundan_ostrik(mu: Sequence[int], nu) -> list[Polynomial]:
    """Generators of the ideal attached to a composition ``mu`` and partition ``nu``.

    Variables are split into consecutive blocks of sizes ``mu``; for every
    set of block indices ``i_1 < ... < i_p`` the generators are ``e_d`` of the
    union of those blocks with ``d > mu_{i_1} + ... + mu_{i_p} - nu'_{l-p+1} - ... - nu'_m``.
    """
    mu = [int(x) for x in mu]
    nu = as_partition(nu)
    if any(x <= 0 for x in mu):
        raise ValueError(f"composition parts must be positive: {mu}")
    m = sum(mu)
    if m != nu.size:
        raise ValueError(f"|mu| = {m} differs from |nu| = {nu.size}")
    ell = len(mu)
    conj = conjugate(nu)

    def c(j):
        return conj[j - 1] if 1 <= j <= len(conj) else 0

    blocks = []
    start = 1
    for part in mu:
        blocks.append(list(range(start, start + part)))
        start += part
    gens = []
    for p in range(1, ell + 1):
        tail = sum(c(t) for t in range(ell - p + 1, m + 1))
        for idx in combinations(range(ell), p):
            size = sum(mu[i] for i in idx)
            bound = size - tail
            if bound >= size:
                continue
            S = [v for i in idx for v in blocks[i]]
            for d in range(max(bound + 1, 0), size + 1):
                gens.append(elementary_symmetric(S, d, m))
    return gens


def spaltenstein_composition(spec) -> list[int]:
    """``(1^n, (s-1)^(n-k))`` with zero parts dropped."""
    spec = _as_spec(spec)
    return [1] * spec.n + ([spec.s - 1] * (spec.n - spec.k) if spec.s > 1 else [])


# ---------------------------------------------------------------------------
# Groebner bases and Hilbert series


def _check_guard(n, guard, name):
    if guard is not None and n > guard:
        raise GuardError(f"{name} = {n} exceeds the guard {guard}; pass --unsafe-size to override", guard=name)


@lru_cache(maxsize=256)
def _groebner_cached(n: int, lam: Partition, s: int) -> GroebnerBasis:
    spec = RingSpec(n, lam, s)
    return buchberger(ideal_I_n_lambda_s(spec), n)


def groebner_basis(spec, guard: int | None = DEFAULT_GROEBNER_GUARD) -> GroebnerBasis:
    spec = _as_spec(spec)
    _check_guard(spec.n, guard, "n")
    return _groebner_cached(spec.n, spec.lam, spec.s)


def hilbert_groebner(spec, guard: int | None = DEFAULT_GROEBNER_GUARD) -> QPolynomial:
    """Hilbert series from the standard monomials of a Groebner basis."""
    return standard_monomials(groebner_basis(spec, guard))


@lru_cache(maxsize=None)
def _hilbert_rec(n: int, lam: Partition, s: int) -> QPolynomial:
    k = lam.size
    if k > n:
        return QPolynomial()
    if n == 0:
        return QPolynomial.one()
    total = QPolynomial()
    for i in range(1, lam.length + 1):
        total = total + _hilbert_rec(n - 1, remove_row(lam, i), s).shift(2 * (i - 1))
    same = _hilbert_rec(n - 1, lam, s)
    for i in range(lam.length + 1, s + 1):
        total = total + same.shift(2 * (i - 1))
    return total


def hilbert_recursive(spec) -> QPolynomial:
    """Hilbert series by the row-removal recursion with base case ``n = 0``."""
    spec = _as_spec(spec)
    return _hilbert_rec(spec.n, spec.lam, spec.s)


@lru_cache(maxsize=None)
def _artin(n: int, lam: Partition, s: int) -> tuple:
    if lam.size > n:
        return ()
    if n == 0:
        return ((),)
    out = []
    for i in range(1, lam.length + 1):
        out.extend(m + (i - 1,) for m in _artin(n - 1, remove_row(lam, i), s))
    rest = _artin(n - 1, lam, s)
    for i in range(lam.length + 1, s + 1):
        out.extend(m + (i - 1,) for m in rest)
    return tuple(out)


def artin_basis(spec) -> list[tuple[int, ...]]:
    """The recursively defined monomial basis, as exponent tuples."""
    spec = _as_spec(spec)
    return list(_artin(spec.n, spec.lam, spec.s))


# ---------------------------------------------------------------------------
# verification reports


class _Echelon:
    """Incremental row echelon form over Q that remembers row combinations."""

    def __init__(self):
        self.pivots: dict = {}  # pivot column -> (row, combination)

    def insert(self, row: dict, tag) -> dict | None:
        """Add a row; return a dependency (tag -> coefficient) if it is dependent."""
        row = {c: Fraction(v) for c, v in row.items() if v}
        combo = {tag: Fraction(1)}
        while row:
            col = min(row)
            if col not in self.pivots:
                lead = row[col]
                row = {c: v / lead for c, v in row.items()}
                combo = {t: v / lead for t, v in combo.items()}
                self.pivots[col] = (row, combo)
                return None
            prow, pcombo = self.pivots[col]
            f = row[col]
            for c, v in prow.items():
                nv = row.get(c, 0) - f * v
                if nv:
                    row[c] = nv
                else:
                    row.pop(c, None)
            for t, v in pcombo.items():
                nv = combo.get(t, 0) - f * v
                if nv:
                    combo[t] = nv
                else:
                    combo.pop(t, None)
        return combo

    @property
    def rank(self) -> int:
        return len(self.pivots)


def _mono_str(exp) -> str:
    return format_polynomial(Polynomial.monomial(exp)) if exp else "1"


def verify_artin_basis(spec, guard: int | None = DEFAULT_GROEBNER_GUARD) -> dict:
    """Check that the monomial basis is independent and spans modulo the ideal.

    In each degree the normal forms of basis monomials are written in the
    standard-monomial coordinates; full rank equal to the standard-monomial
    count is a pass. A failure carries the degree and a dependency vector.
    """
    spec = _as_spec(spec)
    G = groebner_basis(spec, guard)
    series, std = standard_monomials(G, with_list=True)
    col_index = {m: i for i, m in enumerate(std)}
    by_degree: dict[int, list] = {}
    for m in artin_basis(spec):
        by_degree.setdefault(sum(m), []).append(m)
    witnesses = []
    integral = True
    for d in sorted(set(by_degree) | {x // 2 for x, _ in series.items()}):
        mons = by_degree.get(d, [])
        ech = _Echelon()
        for m in mons:
            nf = normal_form(Polynomial.monomial(m, spec.n), G) if spec.n else Polynomial.monomial(m, 0)
            integral = integral and nf.has_integer_coefficients()
            dep = ech.insert({col_index[e]: c for e, c in nf.terms.items()}, m)
            if dep is not None:
                witnesses.append(
                    {
                        "kind": "dependency",
                        "degree": 2 * d,
                        "dependency": {_mono_str(t): str(v) for t, v in sorted(dep.items())},
                    }
                )
        expected = series.coeff(2 * d)
        if ech.rank != expected or len(mons) != expected:
            witnesses.append(
                {"kind": "count", "degree": 2 * d, "basis_size": len(mons), "rank": ech.rank, "standard_monomials": expected}
            )
    return {
        "spec": spec.to_json(),
        "check": "artin_basis",
        "status": "fail" if witnesses else "pass",
        "integral_normal_forms": integral,
        "size": len(artin_basis(spec)),
        "witnesses": witnesses,
    }


@lru_cache(maxsize=128)
def _bo_basis(mu: tuple, nu: Partition, max_degree: int | None) -> GroebnerBasis:
    return buchberger(ideal_brundan_ostrik(mu, nu), sum(mu), max_degree=max_degree)


def spaltenstein_basis(spec, guard: int | None = DEFAULT_CONTAINMENT_GUARD, max_degree: int | None = None) -> GroebnerBasis:
    """Groebner basis of the block ideal for ``spec`` in ``K`` variables.

    With ``max_degree`` the basis is truncated and only decides membership
    of homogeneous polynomials up to that degree.
    """
    spec = _as_spec(spec)
    _check_guard(spec.K, guard, "K")
    return _bo_basis(tuple(spaltenstein_composition(spec)), spec.big_lambda, max_degree)


def verify_containment(spec, guard: int | None = DEFAULT_CONTAINMENT_GUARD) -> dict:
    """Test each generator of ``I_{n,lambda,s}`` for membership in the block ideal in ``K`` variables.

    ``elementary`` covers the ``e_d(S)`` generators, ``powers`` the ``x_i^s``.
    A generator that appears verbatim among the block ideal's generators is
    a member outright. Every other one is reduced modulo a Groebner basis
    truncated at the largest degree still to be tested, which is exact for
    homogeneous polynomials of that degree or less.
    """
    spec = _as_spec(spec)
    _check_guard(spec.K, guard, "K")
    K = spec.K
    mu = tuple(spaltenstein_composition(spec))
    known = set(ideal_brundan_ostrik(mu, spec.big_lambda))

    def embed(p: Polynomial) -> Polynomial:
        return Polynomial({e + (0,) * (K - spec.n): c for e, c in p.terms.items()}, K)

    parts = {
        "elementary": [embed(g) for g in ideal_I_n_lambda(spec)],
        "powers": [embed(g) for g in power_generators(spec.n, spec.s)],
    }
    pending = {name: [g for g in gens if g not in known] for name, gens in parts.items()}
    degrees = [g.degree() for gens in pending.values() for g in gens]
    G = spaltenstein_basis(spec, guard=None, max_degree=max(degrees)) if degrees else None
    witnesses = []
    status = {}
    for name, gens in pending.items():
        ok = True
        for g in gens:
            r = normal_form(g, G)
            if not r.is_zero():
                ok = False
                witnesses.append({"part": name, "generator": format_polynomial(g), "normal_form": format_polynomial(r)})
        status[name] = "pass" if ok else "fail"
    return {
        "spec": spec.to_json(),
        "check": "containment",
        "composition": list(mu),
        "status": "pass" if not witnesses else "fail",
        "parts": status,
        "verbatim_generators": sum(len(parts[x]) - len(pending[x]) for x in parts),
        "reduced_generators": len(degrees),
        "witnesses": witnesses,
    }

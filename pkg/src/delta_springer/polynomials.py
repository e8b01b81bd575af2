"""Exact multivariate polynomials over Q and reduced Groebner bases.

Monomials are exponent tuples. The term order is graded reverse
lexicographic with ``x1 > x2 > ... > xn``. Coefficients are Python ints
while they stay integral and :class:`fractions.Fraction` otherwise.
"""
from __future__ import annotations

import heapq
import json
import re
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .qpoly import QPolynomial

Monomial = tuple


def degrevlex_key(exp: Sequence[int]) -> tuple:
    """Sort key: a larger key is a larger monomial."""
    return (sum(exp),) + tuple(-e for e in reversed(exp))


def _heap_item(exp):
    # min-heap item whose smallest element is the degrevlex-largest monomial
    return (-sum(exp),) + tuple(reversed(exp))


def _exp_of(item):
    return item[:0:-1]


def _norm(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def _div(a, b):
    if isinstance(a, int) and isinstance(b, int) and a % b == 0:
        return a // b
    return _norm(Fraction(a) / b)


def _divides(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def _coprime(a, b) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


class Polynomial:
    """An immutable polynomial in ``nvars`` variables."""

    __slots__ = ("nvars", "terms", "_sorted")

    def __init__(self, terms: Mapping[tuple, object] | None, nvars: int):
        self.nvars = nvars
        clean = {}
        for exp, c in (terms or {}).items():
            exp = tuple(exp)
            if len(exp) != nvars:
                raise ValueError(f"monomial {exp} has the wrong number of variables")
            c = _norm(c)
            if c:
                clean[exp] = c
        self.terms = clean
        self._sorted = None

    # construction helpers
    @classmethod
    def zero(cls, nvars: int) -> "Polynomial":
        return cls({}, nvars)

    @classmethod
    def constant(cls, c, nvars: int) -> "Polynomial":
        return cls({(0,) * nvars: c}, nvars)

    @classmethod
    def monomial(cls, exp, nvars: int | None = None, coeff=1) -> "Polynomial":
        exp = tuple(exp)
        return cls({exp: coeff}, len(exp) if nvars is None else nvars)

    @classmethod
    def variable(cls, i: int, nvars: int) -> "Polynomial":
        """The variable ``x_i`` (1-based)."""
        exp = [0] * nvars
        exp[i - 1] = 1
        return cls({tuple(exp): 1}, nvars)

    # queries
    def is_zero(self) -> bool:
        return not self.terms

    def sorted_terms(self) -> list[tuple[tuple, object]]:
        """Terms in decreasing degrevlex order."""
        if self._sorted is None:
            self._sorted = sorted(self.terms.items(), key=lambda t: degrevlex_key(t[0]), reverse=True)
        return self._sorted

    def leading_monomial(self) -> tuple:
        if not self.terms:
            raise ValueError("the zero polynomial has no leading monomial")
        return self.sorted_terms()[0][0]

    def leading_coefficient(self):
        return self.sorted_terms()[0][1]

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def coefficient(self, exp):
        return self.terms.get(tuple(exp), 0)

    def monic(self) -> "Polynomial":
        lc = self.leading_coefficient()
        return Polynomial({e: _div(c, lc) for e, c in self.terms.items()}, self.nvars)

    def has_integer_coefficients(self) -> bool:
        return all(isinstance(c, int) for c in self.terms.values())

    def permute_variables(self, perm: Sequence[int]) -> "Polynomial":
        """Send ``x_i`` to ``x_perm[i-1]`` (both 1-based)."""
        out = {}
        for exp, c in self.terms.items():
            new = [0] * self.nvars
            for i, e in enumerate(exp):
                new[perm[i] - 1] = e
            out[tuple(new)] = c
        return Polynomial(out, self.nvars)

    # arithmetic
    def _check(self, other):
        if not isinstance(other, Polynomial):
            return Polynomial.constant(other, self.nvars)
        if other.nvars != self.nvars:
            raise ValueError("polynomials live in different rings")
        return other

    def __add__(self, other):
        other = self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return Polynomial(out, self.nvars)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial({e: -c for e, c in self.terms.items()}, self.nvars)

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return Polynomial({e: c * other for e, c in self.terms.items()}, self.nvars)
        other = self._check(other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return Polynomial(out, self.nvars)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = Polynomial.constant(1, self.nvars)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.nvars == other.nvars and self.terms == other.terms
        if not self.terms:
            return other == 0
        return NotImplemented

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __repr__(self):
        return f"Polynomial({format_polynomial(self)!r}, nvars={self.nvars})"

    def __str__(self):
        return format_polynomial(self)


def elementary_symmetric(S: Iterable[int], d: int, nvars: int) -> Polynomial:
    """Sum of all squarefree degree-``d`` monomials in the variables ``S`` (1-based)."""
    S = sorted(set(S))
    if any(not 1 <= i <= nvars for i in S):
        raise ValueError(f"variable indices {S} outside 1..{nvars}")
    if d < 0:
        raise ValueError("degree must be nonnegative")
    terms = {}
    for sub in combinations(S, d):
        exp = [0] * nvars
        for i in sub:
            exp[i - 1] = 1
        terms[tuple(exp)] = 1
    return Polynomial(terms, nvars)


# ---------------------------------------------------------------------------
# text and JSON formats

_TERM_RE = re.compile(r"([+-]?)([^+-]+)")


def format_polynomial(p: Polynomial) -> str:
    """Render as ``c*x1^a1*...`` terms joined by ``+``/``-`` in degrevlex order."""
    if p.is_zero():
        return "0"
    parts = []
    for exp, c in p.sorted_terms():
        factors = []
        for i, e in enumerate(exp, 1):
            if e == 1:
                factors.append(f"x{i}")
            elif e > 1:
                factors.append(f"x{i}^{e}")
        sign = "-" if c < 0 else "+"
        mag = -c if c < 0 else c
        if not factors:
            body = str(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = "*".join([str(mag)] + factors)
        parts.append((sign, body))
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def parse_polynomial(text: str, nvars: int) -> Polynomial:
    """Inverse of :func:`format_polynomial`; accepts rational coefficients ``a/b``."""
    text = text.replace(" ", "")
    if text in ("", "0"):
        return Polynomial.zero(nvars)
    if text[0] not in "+-":
        text = "+" + text
    terms: dict = {}
    pos = 0
    for m in _TERM_RE.finditer(text):
        if m.start() != pos:
            raise ValueError(f"cannot parse polynomial near {text[pos:]!r}")
        pos = m.end()
        sign = -1 if m.group(1) == "-" else 1
        coeff = Fraction(1)
        exp = [0] * nvars
        for factor in m.group(2).split("*"):
            vm = re.fullmatch(r"x(\d+)(?:\^(\d+))?", factor)
            if vm:
                i = int(vm.group(1))
                if not 1 <= i <= nvars:
                    raise ValueError(f"variable x{i} outside 1..{nvars}")
                exp[i - 1] += int(vm.group(2) or 1)
            else:
                coeff *= Fraction(factor)
        key = tuple(exp)
        terms[key] = terms.get(key, 0) + sign * coeff
    if pos != len(text):
        raise ValueError(f"cannot parse polynomial near {text[pos:]!r}")
    return Polynomial(terms, nvars)


def _coeff_json(c):
    return c if isinstance(c, int) else str(c)


def polynomial_to_json(p: Polynomial) -> list:
    return [[list(exp), _coeff_json(c)] for exp, c in p.sorted_terms()]


def polynomial_from_json(data: list, nvars: int) -> Polynomial:
    return Polynomial({tuple(e): Fraction(c) for e, c in data}, nvars)


# ---------------------------------------------------------------------------
# reduction machinery


class _Divisors:
    """Lookup of a basis element whose leading monomial divides a monomial."""

    def __init__(self):
        self.entries: list[tuple[tuple, int, list]] = []  # (lm, deg(lm), tail terms)
        self._cache: dict = {}

    def add(self, lm, tail):
        self.entries.append((lm, sum(lm), tail))
        self._cache.clear()

    def reset(self, entries):
        self.entries = list(entries)
        self._cache.clear()

    def find(self, exp):
        hit = self._cache.get(exp)
        if hit is not None:
            return hit if hit is not False else None
        d = sum(exp)
        for entry in self.entries:
            lm = entry[0]
            if entry[1] <= d and all(a <= b for a, b in zip(lm, exp)):
                self._cache[exp] = entry
                return entry
        self._cache[exp] = False
        return None


def _reduce_terms(f: dict, divisors: _Divisors) -> dict:
    """Full reduction of ``f`` (dict, consumed) by monic basis entries."""
    heap = [_heap_item(e) for e in f]
    heapq.heapify(heap)
    rem = {}
    while heap:
        exp = _exp_of(heapq.heappop(heap))
        c = f.pop(exp, 0)
        if not c:
            continue
        entry = divisors.find(exp)
        if entry is None:
            rem[exp] = c
            continue
        lm, _, tail = entry
        shift = tuple(a - b for a, b in zip(exp, lm))
        for e, gc in tail:
            ne = tuple(a + b for a, b in zip(e, shift))
            old = f.get(ne)
            if old is None:
                f[ne] = -c * gc
                heapq.heappush(heap, _heap_item(ne))
            else:
                f[ne] = old - c * gc
    return rem


class GroebnerBasis:
    """A reduced, monic Groebner basis under degrevlex."""

    def __init__(self, generators: Sequence[Polynomial], nvars: int):
        self.nvars = nvars
        self.generators = tuple(sorted(generators, key=lambda g: degrevlex_key(g.leading_monomial()), reverse=True))
        self._divisors = _Divisors()
        for g in self.generators:
            self._divisors.add(g.leading_monomial(), g.sorted_terms()[1:])

    def leading_monomials(self) -> list[tuple]:
        return [g.leading_monomial() for g in self.generators]

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def __eq__(self, other):
        return isinstance(other, GroebnerBasis) and self.nvars == other.nvars and self.generators == other.generators

    def normal_form(self, p: Polynomial) -> Polynomial:
        return normal_form(p, self)

    def contains(self, p: Polynomial) -> bool:
        return normal_form(p, self).is_zero()

    def to_json(self) -> dict:
        return {
            "nvars": self.nvars,
            "order": "degrevlex",
            "generators": [polynomial_to_json(g) for g in self.generators],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)

    @classmethod
    def from_json(cls, data: dict) -> "GroebnerBasis":
        nvars = data["nvars"]
        return cls([polynomial_from_json(g, nvars) for g in data["generators"]], nvars)


def normal_form(p: Polynomial, G: GroebnerBasis) -> Polynomial:
    """Remainder of ``p`` with no term divisible by a leading monomial of ``G``."""
    if p.nvars != G.nvars:
        raise ValueError("polynomial and basis live in different rings")
    if p.is_zero() or not G.generators:
        return p
    return Polynomial(_reduce_terms(dict(p.terms), G._divisors), p.nvars)


def _make_monic(terms: dict) -> tuple[tuple, list]:
    """Return (leading monomial, tail terms sorted descending) of the monic multiple."""
    items = sorted(terms.items(), key=lambda t: degrevlex_key(t[0]), reverse=True)
    lc = items[0][1]
    if lc != 1:
        items = [(e, _div(c, lc)) for e, c in items]
    return items[0][0], items[1:]


def buchberger(gens: Sequence[Polynomial], nvars: int | None = None, max_degree: int | None = None) -> GroebnerBasis:
    """Reduced Groebner basis of a homogeneous ideal.

    Input generators and pairs share one queue ordered by degree (normal
    strategy), so an input already in the ideal generated so far is dropped
    before it creates pairs. Pairs are pruned with the Gebauer-Moeller form of
    Buchberger's two criteria. The result is independent of the order of
    ``gens``.

    With ``max_degree`` the computation stops after that degree. The result is
    then a truncated basis: it decides membership exactly for homogeneous
    polynomials of degree at most ``max_degree`` and nothing beyond.
    """
    gens = [g for g in gens]
    if nvars is None:
        if not gens:
            raise ValueError("nvars is required for an empty generator list")
        nvars = gens[0].nvars
    for g in gens:
        if g.nvars != nvars:
            raise ValueError("generators live in different rings")
        if not g.is_homogeneous():
            raise ValueError(f"non-homogeneous generator {format_polynomial(g)}")
    gens = [g for g in gens if not g.is_zero()]
    # canonical input order so the pair queue does not depend on the caller
    gens = sorted(set(gens), key=lambda g: (degrevlex_key(g.leading_monomial()), format_polynomial(g)))

    polys: list[tuple[tuple, list]] = []  # index -> (lm, tail)
    active: list[int] = []
    pairs: list[tuple] = []  # heap of (deg, key, i, j)
    divisors = _Divisors()

    def refresh():
        divisors.reset([(polys[i][0], sum(polys[i][0]), polys[i][1]) for i in active])

    def update(h):
        nonlocal active, pairs
        lm_h = polys[h][0]
        C = list(active)
        D = []
        while C:
            g1 = C.pop()
            l1 = _lcm(lm_h, polys[g1][0])
            if _coprime(lm_h, polys[g1][0]) or (
                not any(_divides(_lcm(lm_h, polys[g2][0]), l1) for g2 in C)
                and not any(_divides(_lcm(lm_h, polys[g2][0]), l1) for g2 in D)
            ):
                D.append(g1)
        E = [g for g in D if not _coprime(lm_h, polys[g][0])]
        kept = []
        for item in pairs:
            _, _, i, j, lij = item
            if _divides(lm_h, lij) and _lcm(polys[i][0], lm_h) != lij and _lcm(polys[j][0], lm_h) != lij:
                continue
            kept.append(item)
        for g in E:
            l = _lcm(polys[g][0], lm_h)
            kept.append((sum(l), _heap_item(l), g, h, l))
        heapq.heapify(kept)
        pairs = kept
        active = [g for g in active if not _divides(lm_h, polys[g][0])] + [h]

    def add(terms):
        polys.append(_make_monic(terms))
        h = len(polys) - 1
        update(h)
        refresh()

    gens.sort(key=lambda g: g.degree())
    pos = 0
    while pairs or pos < len(gens):
        if pos < len(gens) and (not pairs or gens[pos].degree() <= pairs[0][0]):
            g = gens[pos]
            pos += 1
            if max_degree is not None and g.degree() > max_degree:
                continue
            rem = _reduce_terms(dict(g.terms), divisors)
            if rem:
                add(rem)
            continue
        if max_degree is not None and pairs[0][0] > max_degree:
            break
        _, _, i, j, l = heapq.heappop(pairs)
        lm_i, tail_i = polys[i]
        lm_j, tail_j = polys[j]
        si = tuple(a - b for a, b in zip(l, lm_i))
        sj = tuple(a - b for a, b in zip(l, lm_j))
        spoly: dict = {}
        for e, c in tail_i:
            ne = tuple(a + b for a, b in zip(e, si))
            spoly[ne] = spoly.get(ne, 0) + c
        for e, c in tail_j:
            ne = tuple(a + b for a, b in zip(e, sj))
            spoly[ne] = spoly.get(ne, 0) - c
        spoly = {e: c for e, c in spoly.items() if c}
        if not spoly:
            continue
        rem = _reduce_terms(spoly, divisors)
        if rem:
            add(rem)

    # interreduce the minimal basis
    basis = [(polys[i][0], polys[i][1]) for i in active]
    final = []
    for idx, (lm, tail) in enumerate(basis):
        others = _Divisors()
        others.reset([(b[0], sum(b[0]), b[1]) for k, b in enumerate(basis) if k != idx])
        tail_rem = _reduce_terms(dict(tail), others)
        terms = {lm: 1}
        terms.update(tail_rem)
        final.append(Polynomial(terms, nvars))
    return GroebnerBasis(final, nvars)


def is_groebner_basis(G: GroebnerBasis) -> bool:
    """Check that every S-polynomial reduces to zero."""
    gs = list(G.generators)
    for a, b in combinations(gs, 2):
        la, lb = a.leading_monomial(), b.leading_monomial()
        l = _lcm(la, lb)
        ma = Polynomial.monomial(tuple(x - y for x, y in zip(l, la)), G.nvars)
        mb = Polynomial.monomial(tuple(x - y for x, y in zip(l, lb)), G.nvars)
        s = ma * a.monic() - mb * b.monic()
        if not normal_form(s, G).is_zero():
            return False
    return True


# ---------------------------------------------------------------------------
# standard monomials


class InfiniteQuotientError(ValueError):
    pass


def pure_power_bounds(G: GroebnerBasis) -> list[int]:
    """For each variable, the smallest exponent ``e`` with ``x_i^e`` a leading monomial."""
    bounds = []
    for i in range(G.nvars):
        best = None
        for lm in G.leading_monomials():
            if all(e == 0 for j, e in enumerate(lm) if j != i) and lm[i] > 0:
                best = lm[i] if best is None else min(best, lm[i])
        if best is None:
            raise InfiniteQuotientError(
                f"quotient is infinite-dimensional: no leading monomial is a pure power of x{i + 1}"
            )
        bounds.append(best)
    return bounds


def iter_standard_monomials(G: GroebnerBasis):
    """Yield every monomial not divisible by a leading monomial of ``G``."""
    n = G.nvars
    if any(not any(lm) for lm in G.leading_monomials()):
        return  # unit ideal
    if n == 0:
        yield ()
        return
    bounds = pure_power_bounds(G)
    lms = G.leading_monomials()
    exp = [0] * n

    def divisible():
        return any(all(a <= b for a, b in zip(lm, exp)) for lm in lms)

    def go(i):
        if i == n:
            yield tuple(exp)
            return
        for e in range(bounds[i]):
            exp[i] = e
            if divisible():
                break
            yield from go(i + 1)
        exp[i] = 0

    yield from go(0)


def standard_monomials(G: GroebnerBasis, with_list: bool = False):
    """Hilbert series of the quotient (cohomological grading) and optionally the monomials."""
    counts: dict[int, int] = {}
    mons = []
    for m in iter_standard_monomials(G):
        d = sum(m)
        counts[d] = counts.get(d, 0) + 1
        if with_list:
            mons.append(m)
    series = QPolynomial.from_algebraic(counts)
    if with_list:
        mons.sort(key=degrevlex_key)
        return series, mons
    return series

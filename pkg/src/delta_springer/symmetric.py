"""Symmetric functions in the Schur basis, computed by tableau enumeration.

Kostka numbers, skew expansions and charge all come from explicit
semistandard tableaux, so every coefficient has a combinatorial witness.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Iterator, Mapping, Sequence

from .errors import GuardError
from .partitions import (
    Partition,
    as_partition,
    conjugate,
    format_partition,
    hook_length_count,
    horizontal_strip_shapes,
    n_stat,
    partitions_of,
)
from .qpoly import QPolynomial

DEFAULT_HL_GUARD = 8


class SymmetricFunction:
    """A homogeneous symmetric function stored by its Schur coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping | None = None):
        out = {}
        for lam, c in (coeffs or {}).items():
            lam = as_partition(lam)
            if c:
                out[lam] = out.get(lam, 0) + c
        self.coeffs = {lam: c for lam, c in out.items() if c}
        sizes = {lam.size for lam in self.coeffs}
        if len(sizes) > 1:
            raise ValueError(f"inhomogeneous symmetric function with degrees {sorted(sizes)}")

    @classmethod
    def schur(cls, lam) -> "SymmetricFunction":
        return cls({as_partition(lam): 1})

    @property
    def degree(self) -> int | None:
        return next(iter(self.coeffs)).size if self.coeffs else None

    def coeff(self, lam) -> int:
        return self.coeffs.get(as_partition(lam), 0)

    def items(self):
        return sorted(self.coeffs.items(), reverse=True)

    def is_zero(self) -> bool:
        return not self.coeffs

    def dimension(self) -> int:
        """Dimension of the module: each ``s_mu`` counts ``#SYT(mu)``."""
        return sum(c * hook_length_count(lam) for lam, c in self.coeffs.items())

    def is_schur_positive(self) -> bool:
        return all(c > 0 for c in self.coeffs.values())

    def omega(self) -> "SymmetricFunction":
        return SymmetricFunction({conjugate(lam): c for lam, c in self.coeffs.items()})

    def __add__(self, other):
        out = dict(self.coeffs)
        for lam, c in other.coeffs.items():
            out[lam] = out.get(lam, 0) + c
        return SymmetricFunction(out)

    def __sub__(self, other):
        return self + SymmetricFunction({lam: -c for lam, c in other.coeffs.items()})

    def scale(self, c) -> "SymmetricFunction":
        return SymmetricFunction({lam: c * v for lam, v in self.coeffs.items()})

    def __eq__(self, other):
        return isinstance(other, SymmetricFunction) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __repr__(self):
        return f"SymmetricFunction({ {format_partition(l): c for l, c in self.items()} })"

    def __str__(self):
        return self.to_string()

    def to_string(self, latex: bool = False) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for lam, c in self.items():
            name = f"s_{{{format_partition(lam)}}}" if latex else f"s[{format_partition(lam)}]"
            terms.append(name if c == 1 else f"{c}{'' if latex else '*'}{name}")
        return " + ".join(terms).replace("+ -", "- ")

    def to_latex(self) -> str:
        return self.to_string(latex=True)

    def to_json(self) -> dict:
        return {format_partition(lam): c for lam, c in self.items()}


class GradedSymmetricFunction:
    """Symmetric functions indexed by cohomological degree."""

    __slots__ = ("pieces",)

    def __init__(self, pieces: Mapping[int, SymmetricFunction] | None = None):
        self.pieces = {int(d): f for d, f in (pieces or {}).items() if not f.is_zero()}

    def piece(self, degree: int) -> SymmetricFunction:
        return self.pieces.get(degree, SymmetricFunction())

    def degrees(self) -> list[int]:
        return sorted(self.pieces)

    def top_degree(self) -> int:
        return max(self.pieces) if self.pieces else -1

    def hilbert(self) -> QPolynomial:
        return QPolynomial({d: f.dimension() for d, f in self.pieces.items()})

    def is_schur_positive(self) -> bool:
        return all(f.is_schur_positive() for f in self.pieces.values())

    def negative_terms(self) -> list[tuple[int, Partition, int]]:
        return [(d, lam, c) for d, f in sorted(self.pieces.items()) for lam, c in f.items() if c < 0]

    def truncate(self, max_degree: int) -> "GradedSymmetricFunction":
        return GradedSymmetricFunction({d: f for d, f in self.pieces.items() if d <= max_degree})

    def __add__(self, other):
        out = dict(self.pieces)
        for d, f in other.pieces.items():
            out[d] = out[d] + f if d in out else f
        return GradedSymmetricFunction(out)

    def __eq__(self, other):
        return isinstance(other, GradedSymmetricFunction) and self.pieces == other.pieces

    def __repr__(self):
        return f"GradedSymmetricFunction({self.to_json()})"

    def __str__(self):
        return self.to_string()

    def to_string(self, algebraic: bool = False, latex: bool = False) -> str:
        if not self.pieces:
            return "0"
        parts = []
        for d, f in sorted(self.pieces.items()):
            e = d // 2 if algebraic else d
            body = f.to_string(latex)
            if e == 0:
                parts.append(body if len(f.coeffs) == 1 else f"({body})")
            else:
                q = "q" if e == 1 else (f"q^{{{e}}}" if latex else f"q^{e}")
                single = len(f.coeffs) == 1 and next(iter(f.coeffs.values())) == 1
                if not single:
                    parts.append(f"{q}({body})")
                else:
                    parts.append(f"{q}{body}" if latex else f"{q}*{body}")
        return " + ".join(parts)

    def to_latex(self, algebraic: bool = False) -> str:
        return self.to_string(algebraic, latex=True)

    def to_json(self, algebraic: bool = False) -> dict:
        return {str(d // 2 if algebraic else d): f.to_json() for d, f in sorted(self.pieces.items())}


# ---------------------------------------------------------------------------
# tableaux


def _strips_within(inner: tuple, size: int, outer: tuple) -> Iterator[tuple]:
    """Shapes ``nu`` with ``inner <= nu <= outer`` and ``nu/inner`` a horizontal strip of ``size``."""
    rows = len(outer)
    inner = tuple(inner) + (0,) * (rows - len(inner))

    def go(r, remaining, acc):
        if r == rows:
            if remaining == 0:
                yield tuple(acc)
            return
        cap = outer[r] - inner[r]
        if r > 0:
            cap = min(cap, inner[r - 1] - inner[r])
        for a in range(min(cap, remaining), -1, -1):
            yield from go(r + 1, remaining - a, acc + [inner[r] + a])

    yield from go(0, size, [])


def skew_ssyt(outer, inner, content: Sequence[int]) -> Iterator[tuple]:
    """Semistandard tableaux of shape ``outer/inner`` with the given content.

    Each tableau is yielded as a tuple of rows; cells of ``inner`` hold 0.
    """
    outer = tuple(as_partition(outer))
    inner = tuple(as_partition(inner)) + (0,) * (len(outer) - len(as_partition(inner)))
    if any(i > o for i, o in zip(inner, outer)) or len(as_partition(inner)) > len(outer):
        raise ValueError(f"{inner} is not contained in {outer}")
    if sum(content) != sum(outer) - sum(inner):
        return

    def go(i, shape, rows):
        if i == len(content):
            if shape == outer:
                yield tuple(tuple(r) for r in rows)
            return
        for nxt in _strips_within(shape, content[i], outer):
            new_rows = [list(r) + [i + 1] * (b - a) for r, a, b in zip(rows, shape, nxt)]
            yield from go(i + 1, nxt, new_rows)

    yield from go(0, inner, [[0] * p for p in inner])


def ssyt(shape, content: Sequence[int]) -> Iterator[tuple]:
    return skew_ssyt(shape, (), content)


@lru_cache(maxsize=None)
def kostka(shape: Partition, content: tuple) -> int:
    """Number of semistandard tableaux of ``shape`` with ``content``."""
    return sum(1 for _ in ssyt(shape, content))


def monomial_to_schur(mcoeffs: Mapping, n: int) -> SymmetricFunction:
    """Convert monomial-basis coefficients to Schur coefficients.

    ``mcoeffs`` maps contents to coefficients. Partition keys are read as
    ``m_mu`` coefficients; composition keys are accepted too, provided the
    coefficient depends only on the sorted content (otherwise ValueError).
    Uses ``m``-coefficient of ``s_mu`` at ``lam`` = ``K_{mu lam}`` and
    back-substitution from the dominance-largest partition down.
    """
    by_part: dict[Partition, int] = {}
    for key, c in mcoeffs.items():
        key = tuple(key)
        lam = Partition(sorted((x for x in key if x), reverse=True))
        if lam.size != n:
            raise ValueError(f"content {key} does not have size {n}")
        if lam in by_part and by_part[lam] != c:
            raise ValueError(f"coefficients of {key} and its rearrangements differ: not symmetric")
        by_part[lam] = c
    out: dict[Partition, int] = {}
    for lam in partitions_of(n):  # reverse lexicographic, so dominance-larger shapes come first
        c = by_part.get(lam, 0) - sum(a * kostka(mu, tuple(lam)) for mu, a in out.items())
        if c:
            out[lam] = c
    return SymmetricFunction(out)


def schur_to_monomial(f: SymmetricFunction) -> dict[Partition, int]:
    n = f.degree or 0
    return {
        lam: sum(c * kostka(mu, tuple(lam)) for mu, c in f.coeffs.items())
        for lam in partitions_of(n)
        if any(kostka(mu, tuple(lam)) for mu in f.coeffs)
    }


def times_complete(f: SymmetricFunction, m: int) -> SymmetricFunction:
    """``f * h_m`` by the Pieri rule."""
    out: dict[Partition, int] = {}
    for lam, c in f.coeffs.items():
        for nu in horizontal_strip_shapes(lam, m):
            out[nu] = out.get(nu, 0) + c
    return SymmetricFunction(out)


def times_s1_power(f: SymmetricFunction, m: int) -> SymmetricFunction:
    """``f * s_1^m`` by ``m`` single-box Pieri steps."""
    for _ in range(m):
        f = times_complete(f, 1)
    return f


def induced_specht(n: int, lam) -> SymmetricFunction:
    """Frobenius image of ``S^lam`` (x) trivial induced from ``S_k x S_{n-k}`` to ``S_n``: ``s_lam * h_{n-k}``."""
    lam = as_partition(lam)
    if lam.size > n:
        raise ValueError(f"|lambda| = {lam.size} exceeds n = {n}")
    return times_complete(SymmetricFunction.schur(lam), n - lam.size)


def _is_lattice(word: Sequence[int]) -> bool:
    counts: dict[int, int] = {}
    for x in word:
        counts[x] = counts.get(x, 0) + 1
        if x > 1 and counts[x] > counts.get(x - 1, 0):
            return False
    return True


def skew_schur(outer, inner=()) -> SymmetricFunction:
    """Schur expansion of ``s_{outer/inner}`` by counting Littlewood-Richardson tableaux."""
    outer, inner = as_partition(outer), as_partition(inner)
    if inner.length > outer.length or any(inner.part(i) > outer.part(i) for i in range(1, inner.length + 1)):
        raise ValueError(f"{tuple(inner)} is not contained in {tuple(outer)}")
    size = outer.size - inner.size
    out = {}
    for nu in partitions_of(size):
        count = 0
        for t in skew_ssyt(outer, inner, tuple(nu)):
            word = [v for row in t for v in reversed(row) if v]
            if _is_lattice(word):
                count += 1
        if count:
            out[nu] = count
    return SymmetricFunction(out)


def skew_schur_by_kostka(outer, inner=()) -> SymmetricFunction:
    """The same expansion through skew Kostka numbers and monomial-to-Schur conversion."""
    outer, inner = as_partition(outer), as_partition(inner)
    size = outer.size - inner.size
    m = {lam: sum(1 for _ in skew_ssyt(outer, inner, tuple(lam))) for lam in partitions_of(size)}
    return monomial_to_schur(m, size)


# ---------------------------------------------------------------------------
# charge and modified Hall-Littlewood functions


def reading_word(tableau: Sequence[Sequence[int]]) -> list[int]:
    """Rows read left to right, from the bottom row up."""
    return [v for row in reversed(tableau) for v in row]


def charge(word: Sequence[int]) -> int:
    """Charge of a word with partition content.

    Standard subwords are peeled off repeatedly: starting at the right end,
    scan leftward (cyclically) for 1, then 2, and so on. The letter 1 has
    index 0; the index of ``r+1`` equals that of ``r`` if ``r+1`` was found
    to the left of ``r`` and is one larger if the scan wrapped around.
    The charge is the sum of all indices.
    """
    letters = list(word)
    content: dict[int, int] = {}
    for x in letters:
        content[x] = content.get(x, 0) + 1
    if letters and sorted(content) != list(range(1, max(content) + 1)):
        raise ValueError(f"word content {content} is not a partition")
    if any(content[i] < content[i + 1] for i in range(1, len(content))):
        raise ValueError(f"word content {content} is not a partition")
    alive = list(range(len(letters)))
    total = 0
    while alive:
        top = max(letters[p] for p in alive)
        picked = []
        pos = len(letters)  # start to the right of everything
        index = 0
        for r in range(1, top + 1):
            left = [p for p in alive if letters[p] == r and p < pos]
            if left:
                pos = max(left)
            else:
                pos = max(p for p in alive if letters[p] == r)
                if r > 1:
                    index += 1
            total += index
            picked.append(pos)
        alive = [p for p in alive if p not in set(picked)]
    return total


def cocharge(tableau, shape_content: Partition) -> int:
    return n_stat(shape_content) - charge(reading_word(tableau))


def kostka_foulkes(mu, lam) -> QPolynomial:
    """``K_{mu,lam}(t) = sum over SSYT(mu, lam) of t^charge``, in algebraic degrees."""
    mu, lam = as_partition(mu), as_partition(lam)
    counts: dict[int, int] = {}
    for t in ssyt(mu, tuple(lam)):
        c = charge(reading_word(t))
        counts[c] = counts.get(c, 0) + 1
    return QPolynomial.from_algebraic(counts)


def modified_hall_littlewood(lam, guard: int | None = DEFAULT_HL_GUARD) -> GradedSymmetricFunction:
    """``sum_mu sum_{T in SSYT(mu, lam)} q^(2 cocharge T) s_mu`` (cohomological grading)."""
    lam = as_partition(lam)
    if guard is not None and lam.size > guard:
        raise GuardError(f"|lambda| = {lam.size} exceeds the guard {guard}", guard="hall-littlewood")
    pieces: dict[int, dict] = {}
    nl = n_stat(lam)
    for mu in partitions_of(lam.size):
        for t in ssyt(mu, tuple(lam)):
            d = 2 * (nl - charge(reading_word(t)))
            pieces.setdefault(d, {})
            pieces[d][mu] = pieces[d].get(mu, 0) + 1
    return GradedSymmetricFunction({d: SymmetricFunction(c) for d, c in pieces.items()})


def omega_and_reverse(F: GradedSymmetricFunction, top_degree: int) -> GradedSymmetricFunction:
    """Apply ``omega`` to every piece and send degree ``d`` to ``top_degree - d``."""
    if F.pieces and top_degree < F.top_degree():
        raise ValueError(f"top degree {top_degree} is below the support {F.top_degree()}")
    return GradedSymmetricFunction({top_degree - d: f.omega() for d, f in F.pieces.items()})

"""Integer polynomials in ``q`` used for Hilbert series.

Degrees are cohomological: an algebraic degree ``d`` is stored as ``2d``.
"""
from __future__ import annotations

from typing import Iterable, Mapping


class QPolynomial:
    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        self._coeffs = {int(d): int(c) for d, c in (coeffs or {}).items() if c}

    @classmethod
    def from_algebraic(cls, counts: Mapping[int, int] | Iterable[int]) -> "QPolynomial":
        """Build from algebraic-degree counts (dict or dense list)."""
        if not isinstance(counts, Mapping):
            counts = dict(enumerate(counts))
        return cls({2 * d: c for d, c in counts.items()})

    @classmethod
    def one(cls) -> "QPolynomial":
        return cls({0: 1})

    @classmethod
    def geometric(cls, s: int) -> "QPolynomial":
        """``1 + q^2 + ... + q^(2(s-1))``."""
        return cls({2 * i: 1 for i in range(s)})

    def coeff(self, degree: int) -> int:
        return self._coeffs.get(degree, 0)

    def items(self):
        return sorted(self._coeffs.items())

    def as_dict(self) -> dict[int, int]:
        return dict(self.items())

    def algebraic(self) -> list[int]:
        """Dense list of coefficients indexed by algebraic degree."""
        if not self._coeffs:
            return []
        top = max(self._coeffs) // 2
        return [self._coeffs.get(2 * d, 0) for d in range(top + 1)]

    def total(self) -> int:
        return sum(self._coeffs.values())

    def top_degree(self) -> int:
        """Largest cohomological degree with a nonzero coefficient (-1 for zero)."""
        return max(self._coeffs) if self._coeffs else -1

    def is_zero(self) -> bool:
        return not self._coeffs

    def is_palindromic(self) -> bool:
        dense = self.algebraic()
        return dense == dense[::-1]

    def shift(self, degree: int) -> "QPolynomial":
        return QPolynomial({d + degree: c for d, c in self._coeffs.items()})

    def __add__(self, other: "QPolynomial") -> "QPolynomial":
        out = dict(self._coeffs)
        for d, c in other._coeffs.items():
            out[d] = out.get(d, 0) + c
        return QPolynomial(out)

    def __mul__(self, other: "QPolynomial") -> "QPolynomial":
        out: dict[int, int] = {}
        for d1, c1 in self._coeffs.items():
            for d2, c2 in other._coeffs.items():
                out[d1 + d2] = out.get(d1 + d2, 0) + c1 * c2
        return QPolynomial(out)

    def __pow__(self, e: int) -> "QPolynomial":
        out = QPolynomial.one()
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, QPolynomial):
            return self._coeffs == other._coeffs
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._coeffs.items()))

    def __repr__(self):
        return f"QPolynomial({self.as_dict()!r})"

    def __str__(self):
        return self.to_string()

    def to_string(self, algebraic: bool = False, latex: bool = False) -> str:
        if not self._coeffs:
            return "0"
        terms = []
        for d, c in self.items():
            e = d // 2 if algebraic else d
            if e == 0:
                mono = ""
            elif e == 1:
                mono = "q"
            else:
                mono = f"q^{{{e}}}" if latex else f"q^{e}"
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            else:
                terms.append(f"{c}{mono}")
        return " + ".join(terms)

    def to_latex(self, algebraic: bool = False) -> str:
        return self.to_string(algebraic, latex=True)

    def to_json(self, algebraic: bool = False) -> dict[str, int]:
        return {str(d // 2 if algebraic else d): c for d, c in self.items()}

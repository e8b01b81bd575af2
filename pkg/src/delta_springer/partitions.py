"""Integer partitions, Young diagrams and standard tableaux.

Cells are 1-based ``(row, col)`` pairs in English convention: row 1 is the
top row and column 1 the leftmost column.
"""
from __future__ import annotations

from functools import lru_cache
from math import comb, factorial
from typing import Iterable, Iterator

from .errors import GuardError

DEFAULT_SYT_GUARD = 12


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    Trailing zeros are stripped on construction, so ``Partition((2, 1, 0))``
    equals ``Partition((2, 1))``.
    """

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if any(p <= 0 for p in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"partition parts must weakly decrease: {parts}")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def part(self, i: int) -> int:
        """The ``i``-th part (1-based), zero beyond the length."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def cells(self) -> list[tuple[int, int]]:
        return [(r, c) for r, p in enumerate(self, 1) for c in range(1, p + 1)]

    def __repr__(self):
        return f"Partition({tuple(self)!r})"

    def __str__(self):
        return format_partition(self)


def as_partition(obj) -> Partition:
    if isinstance(obj, Partition):
        return obj
    if isinstance(obj, str):
        return parse_partition(obj)
    return Partition(obj)


def parse_partition(text: str) -> Partition:
    """Parse ``"2,1"``; ``""`` and ``"0"`` both mean the empty partition."""
    text = text.strip().strip("()[]")
    if text in ("", "0", "-"):
        return Partition()
    return Partition(int(tok) for tok in text.replace(" ", "").split(",") if tok)


def format_partition(lam) -> str:
    return ",".join(str(p) for p in lam) if lam else "0"


def conjugate(lam) -> Partition:
    lam = tuple(lam)
    if not lam:
        return Partition()
    return Partition(sum(1 for p in lam if p >= j) for j in range(1, lam[0] + 1))


def n_stat(lam) -> int:
    """``sum_i binom(lam'_i, 2)``, the dimension of the Springer fiber."""
    return sum(comb(c, 2) for c in conjugate(lam))


def big_lambda(n: int, lam, s: int) -> Partition:
    """The padded shape ``(n-k+lam_1, ..., n-k+lam_s)`` of size ``s(n-k)+k``.

    When ``n == k`` the zero parts are dropped and the result is ``lam``.
    """
    lam = as_partition(lam)
    k = lam.size
    if k > n:
        raise ValueError(f"|lambda| = {k} exceeds n = {n}")
    if s < lam.length:
        raise ValueError(f"s = {s} is smaller than the length of {tuple(lam)}")
    return Partition(n - k + lam.part(i) for i in range(1, s + 1))


def remove_row(lam, i: int) -> Partition:
    """Remove one box from row ``i`` and re-sort (the shape ``lam^(i)``)."""
    lam = as_partition(lam)
    if not 1 <= i <= lam.length:
        raise ValueError(f"row index {i} out of range for {tuple(lam)}")
    parts = list(lam)
    parts[i - 1] -= 1
    return Partition(sorted((p for p in parts if p), reverse=True))


def dominance_leq(mu, nu) -> bool:
    """True iff ``mu`` is dominated by ``nu``."""
    mu, nu = tuple(mu), tuple(nu)
    if sum(mu) != sum(nu):
        raise ValueError("dominance order compares partitions of equal size")
    a = b = 0
    for i in range(max(len(mu), len(nu))):
        a += mu[i] if i < len(mu) else 0
        b += nu[i] if i < len(nu) else 0
        if a > b:
            return False
    return True


@lru_cache(maxsize=None)
def partitions_of(n: int, max_part: int | None = None) -> tuple[Partition, ...]:
    """All partitions of ``n`` in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        return (Partition(),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            out.append(Partition((first,) + tuple(rest)))
    return tuple(out)


def compositions_of(n: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Weak compositions of ``n`` with exactly ``parts`` entries."""
    if parts == 0:
        if n == 0:
            yield ()
        return
    for first in range(n, -1, -1):
        for rest in compositions_of(n - first, parts - 1):
            yield (first,) + rest


def hook_length_count(lam) -> int:
    """Number of standard tableaux of shape ``lam`` by the hook length formula."""
    lam = tuple(lam)
    conj = conjugate(lam)
    prod = 1
    for r, p in enumerate(lam, 1):
        for c in range(1, p + 1):
            prod *= (p - c) + (conj[c - 1] - r) + 1
    return factorial(sum(lam)) // prod


def enumerate_syt(lam, guard: int | None = DEFAULT_SYT_GUARD) -> list[tuple[tuple[int, ...], ...]]:
    """All standard Young tableaux of shape ``lam`` as tuples of rows.

    Entries are placed one at a time into an outer corner; every tableau is
    produced exactly once.
    """
    lam = as_partition(lam)
    if guard is not None and lam.size > guard:
        raise GuardError(f"|lambda| = {lam.size} exceeds the tableau guard {guard}", guard="syt")
    total = lam.size
    rows: list[list[int]] = [[] for _ in lam]
    out = []

    def place(m):
        if m > total:
            out.append(tuple(tuple(r) for r in rows))
            return
        for r in range(len(lam)):
            if len(rows[r]) < lam[r] and (r == 0 or len(rows[r - 1]) > len(rows[r])):
                rows[r].append(m)
                place(m + 1)
                rows[r].pop()

    place(1)
    return out


def num_syt(lam) -> int:
    return hook_length_count(lam)


def add_box_shapes(lam) -> list[Partition]:
    """Shapes obtained from ``lam`` by adding one box."""
    lam = tuple(lam)
    out = []
    for r in range(len(lam) + 1):
        cur = lam[r] if r < len(lam) else 0
        if r == 0 or lam[r - 1] > cur:
            parts = list(lam) + ([0] if r == len(lam) else [])
            parts[r] += 1
            out.append(Partition(parts))
    return out


def horizontal_strip_shapes(lam, m: int) -> list[Partition]:
    """Shapes ``nu`` with ``nu / lam`` a horizontal strip of size ``m`` (Pieri)."""
    lam = tuple(lam)
    padded = list(lam) + [0]
    out = []

    def go(r, remaining, acc):
        if r == len(padded):
            if remaining == 0:
                out.append(Partition(acc))
            return
        upper = remaining if r == 0 else min(remaining, padded[r - 1] - padded[r])
        for a in range(upper, -1, -1):
            go(r + 1, remaining - a, acc + [padded[r] + a])

    go(0, m, [])
    return out

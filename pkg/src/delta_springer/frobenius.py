"""Graded Frobenius characteristics from partial row-decreasing fillings.

A filling is a tuple of ``s`` rows, row ``a`` having ``Lambda_a`` slots;
0 marks an empty slot and filled slots are right justified.
"""
from __future__ import annotations

from collections import Counter
from itertools import product
from typing import Iterator, NamedTuple, Sequence

from .errors import GuardError, VerificationError
from .partitions import Partition, as_partition, compositions_of, conjugate, n_stat, partitions_of
from .presentations import RingSpec, _as_spec
from .qpoly import QPolynomial
from .symmetric import (
    GradedSymmetricFunction,
    SymmetricFunction,
    induced_specht,
    modified_hall_littlewood,
    monomial_to_schur,
    omega_and_reverse,
    skew_schur,
)

DEFAULT_PRD_GUARD = 7
ALL_CONTENTS_GUARD = 5


def _shape(spec: RingSpec) -> list[int]:
    return [spec.big_lambda.part(a) for a in range(1, spec.s + 1)]


def _distribute(mult: int, caps: list[int]) -> Iterator[tuple]:
    """Ways to put ``mult`` copies of one letter into rows with remaining capacities ``caps``."""
    if not caps:
        if mult == 0:
            yield ()
        return
    for a in range(min(mult, caps[0]), -1, -1):
        for rest in _distribute(mult - a, caps[1:]):
            yield (a,) + rest


def enumerate_prd(spec, content: Sequence[int] | None = None, guard: int | None = DEFAULT_PRD_GUARD) -> list[tuple]:
    """Partial row-decreasing fillings of ``Lambda`` with ``n`` filled cells.

    With ``content`` (multiplicities of the letters ``1, 2, ...``) only
    fillings of that content are produced; without it every content using
    letters ``1..n`` is enumerated.
    """
    spec = _as_spec(spec)
    if guard is not None and spec.n > guard:
        raise GuardError(f"n = {spec.n} exceeds the guard {guard}", guard="n")
    if content is None:
        out = []
        for alpha in compositions_of(spec.n, spec.n):
            out.extend(enumerate_prd(spec, alpha, guard=None))
        return out
    content = tuple(content)
    if sum(content) != spec.n:
        raise ValueError(f"content {content} does not have size {spec.n}")
    shape = _shape(spec)
    lam = spec.lam
    s = spec.s
    minimum = [lam.part(a + 1) for a in range(s)]
    letters = [(v, m) for v, m in enumerate(content, 1) if m]
    out = []

    def go(idx, caps, rows):
        if idx == len(letters):
            filled = [shape[a] - caps[a] for a in range(s)]
            if all(filled[a] >= minimum[a] for a in range(s)):
                out.append(
                    tuple(
                        tuple([0] * (shape[a] - filled[a]) + sorted(rows[a], reverse=True))
                        for a in range(s)
                    )
                )
            return
        v, m = letters[idx]
        for split in _distribute(m, caps):
            go(
                idx + 1,
                [c - x for c, x in zip(caps, split)],
                [r + [v] * x for r, x in zip(rows, split)],
            )

    go(0, list(shape), [[] for _ in range(s)])
    return sorted(out)


class Inversions(NamedTuple):
    I1: int
    I2: int
    I3: int
    I4: int

    @property
    def total(self) -> int:
        return self.I1 + self.I2 + self.I3 + self.I4


def inversions(phi: Sequence[Sequence[int]], n: int, lam) -> Inversions:
    """Count the four inversion types of a filling; ``[lam]`` starts at column ``n-k+1``."""
    lam = as_partition(lam)
    k = lam.size
    c0 = n - k + 1  # first column of [lam]

    def val(i, j):
        row = phi[i - 1]
        return row[j - 1] if 1 <= j <= len(row) else 0

    lam_cells = [(i, c0 + j) for i in range(1, lam.length + 1) for j in range(lam.part(i))]
    in_lam = set(lam_cells)
    outside = [
        (i, j)
        for i, row in enumerate(phi, 1)
        for j in range(1, len(row) + 1)
        if row[j - 1] and (i, j) not in in_lam
    ]
    i1 = sum(
        1
        for (i, j) in lam_cells
        for (i2, j2) in lam_cells
        if j2 == j and i < i2 and val(i, j) > val(i2, j2)
    )
    i2 = sum(
        1
        for (i, j) in lam_cells
        for (ip, jp) in lam_cells
        if jp == j - 1 and ip < i and val(i, j) > val(ip, jp)
    )
    i3 = sum(
        1
        for (i, j) in lam_cells
        if j == c0
        for (ip, jp) in outside
        if ip < i and val(i, j) > val(ip, jp)
    )
    i4 = sum(i - 1 for (i, _) in outside)
    return Inversions(i1, i2, i3, i4)


def inv(phi, n: int, lam) -> int:
    return inversions(phi, n, lam).total


def content_of(phi) -> Counter:
    return Counter(v for row in phi for v in row if v)


def _partition_content(mu: Partition, n: int) -> tuple:
    return tuple(mu) + (0,) * (n - len(mu))


def monomial_coefficients(spec, mode: str = "partition") -> dict[int, dict[tuple, int]]:
    """Degree -> content -> number of fillings of that content and ``2*inv`` equal to the degree."""
    spec = _as_spec(spec)
    n = spec.n
    if mode == "partition":
        contents = [_partition_content(mu, n) for mu in partitions_of(n)]
    elif mode == "all":
        if n > ALL_CONTENTS_GUARD:
            raise GuardError(f"n = {n} exceeds the all-contents guard {ALL_CONTENTS_GUARD}", guard="all-contents")
        contents = list(compositions_of(n, n))
    else:
        raise ValueError(f"unknown mode {mode!r}")
    out: dict[int, dict[tuple, int]] = {}
    for alpha in contents:
        for phi in enumerate_prd(spec, alpha, guard=None):
            d = 2 * inv(phi, n, spec.lam)
            bucket = out.setdefault(d, {})
            bucket[alpha] = bucket.get(alpha, 0) + 1
    return out


def graded_frobenius(spec, guard: int | None = DEFAULT_PRD_GUARD, mode: str = "partition") -> GradedSymmetricFunction:
    """``sum over fillings of q^(2 inv) x^content``, expanded in Schur functions.

    ``mode="all"`` enumerates every content and lets the conversion check
    that the monomial coefficients are symmetric.
    """
    spec = _as_spec(spec)
    if guard is not None and spec.n > guard:
        raise GuardError(f"n = {spec.n} exceeds the guard {guard}", guard="n")
    pieces = {}
    for d, coeffs in monomial_coefficients(spec, mode).items():
        pieces[d] = monomial_to_schur(coeffs, spec.n)
    F = GradedSymmetricFunction(pieces)
    negative = F.negative_terms()
    if negative:
        raise VerificationError(
            f"negative Schur coefficient for {spec}",
            witness=[{"degree": d, "partition": list(lam), "coefficient": c} for d, lam, c in negative],
        )
    return F


def expected_top_piece(spec) -> SymmetricFunction:
    """``s_lam * h_{n-k}`` when ``s > len(lam)``, else ``s_{Lambda / (n-k)^(s-1)}``."""
    spec = _as_spec(spec)
    if spec.s > spec.lam.length:
        return induced_specht(spec.n, spec.lam)
    inner = Partition([spec.n - spec.k] * (spec.s - 1))
    return skew_schur(spec.big_lambda, inner)


def top_degree_check(spec, F: GradedSymmetricFunction | None = None) -> dict:
    """Compare the top piece of the graded Frobenius characteristic with the expected module."""
    spec = _as_spec(spec)
    F = graded_frobenius(spec) if F is None else F
    d = 2 * spec.top_degree
    actual = F.piece(d)
    expected = expected_top_piece(spec)
    diff = actual - expected
    return {
        "spec": spec.to_json(),
        "check": "top_degree",
        "degree": d,
        "branch": "induced" if spec.s > spec.lam.length else "skew",
        "status": "pass" if diff.is_zero() and F.top_degree() == d else "fail",
        "expected": expected.to_json(),
        "actual": actual.to_json(),
        "witnesses": [{"partition": p, "difference": c} for p, c in diff.to_json().items()],
    }


class StableResult(NamedTuple):
    frobenius: GradedSymmetricFunction
    s_agree: int  # first s whose truncation equals that of s + 1
    s_bound: int  # every s at least this gives the same truncation


def stable_frobenius(n: int, lam, max_degree: int, guard: int | None = DEFAULT_PRD_GUARD) -> StableResult:
    """Truncation to cohomological degree ``<= max_degree`` of the limit as ``s`` grows.

    ``s`` is raised until two consecutive truncations agree. A filling that
    uses row ``s+1`` has at least ``s`` inversions from that row alone, so
    from ``s > max_degree / 2`` on the truncation cannot change; the result
    is recomputed there and must match.
    """
    lam = as_partition(lam)
    start = max(lam.length, 1)
    bound = max(start, max_degree // 2 + 1)

    def trunc(s):
        return graded_frobenius(RingSpec(n, lam, s), guard).truncate(max_degree)

    s = start
    cur = trunc(s)
    while True:
        nxt = trunc(s + 1)
        if nxt == cur:
            break
        s, cur = s + 1, nxt
    final = trunc(bound)
    if final != cur:
        raise VerificationError(
            f"truncation agreed at s = {s} but differs at s = {bound}",
            witness={"s_agree": s, "s_bound": bound},
        )
    return StableResult(final, s, bound)


def springer_check(lam) -> dict:
    """``n = k``: the filling formula against the cocharge formula at ``q^2``."""
    lam = as_partition(lam)
    spec = RingSpec(lam.size, lam, max(lam.length, 1))
    F = graded_frobenius(spec)
    H = modified_hall_littlewood(lam)
    return {
        "spec": spec.to_json(),
        "check": "hall_littlewood",
        "status": "pass" if F == H else "fail",
        "witnesses": [] if F == H else [{"fillings": F.to_json(), "cocharge": H.to_json()}],
    }


def delta_t0_normalization(n: int, k: int) -> GradedSymmetricFunction:
    """``omega`` and degree reversal applied to the ``lambda = (1^k), s = k`` characteristic.

    This is the normalization under which the ring is compared with the
    Delta conjecture at ``t = 0``; it is reported, not verified.
    """
    spec = RingSpec(n, (1,) * k, max(k, 1))
    F = graded_frobenius(spec)
    return omega_and_reverse(F, F.top_degree())


def hilbert_from_frobenius(spec) -> QPolynomial:
    return graded_frobenius(spec).hilbert()

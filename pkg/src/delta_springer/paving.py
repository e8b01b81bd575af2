"""Schubert-compatible fillings, admissible maps and the cell decomposition.

A filling ``T`` of the padded shape ``Lambda(n, lambda, s)`` labels its cells
bijectively by ``1..K``. An injective ``w: [n] -> [K]`` is stored as a tuple
``(w(1), ..., w(n))``. The block ``[lambda]`` sits in the columns
``n-k+1, n-k+2, ...`` of ``Lambda``.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product
from math import comb, factorial
from typing import Iterable, NamedTuple, Sequence

from .errors import GuardError, VerificationError
from .partitions import Partition, as_partition, big_lambda, enumerate_syt, n_stat, remove_row
from .presentations import RingSpec, _as_spec
from .qpoly import QPolynomial

DEFAULT_ENUMERATION_GUARD = 7


@dataclass(frozen=True)
class ShapeFilling:
    """A labeling of ``Lambda(n, lam, s)``; ``rows[a-1][b-1]`` is ``T(a, b)``.

    Rows of length zero (possible only when ``n == k``) are kept so that the
    filling always has ``s`` rows.
    """

    n: int
    lam: Partition
    s: int
    rows: tuple

    @property
    def k(self) -> int:
        return self.lam.size

    @property
    def K(self) -> int:
        return sum(len(r) for r in self.rows)

    @property
    def shape(self) -> tuple:
        return tuple(len(r) for r in self.rows)

    def label(self, a: int, b: int) -> int:
        return self.rows[a - 1][b - 1]

    def positions(self) -> dict:
        """Map label -> (row, column)."""
        return {v: (a, b) for a, row in enumerate(self.rows, 1) for b, v in enumerate(row, 1)}

    def right_edge(self, a: int) -> int | None:
        row = self.rows[a - 1]
        return row[-1] if row else None

    def in_lambda(self, a: int, b: int) -> bool:
        return b >= self.n - self.k + 1

    def to_json(self) -> dict:
        return {"n": self.n, "lambda": list(self.lam), "s": self.s, "rows": [list(r) for r in self.rows]}

    def to_latex(self) -> str:
        return ytableau([list(r) for r in self.rows])


def reading_order_filling(n: int, lam=(), s: int = 1) -> ShapeFilling:
    """Label the cells by scanning columns right to left, each from top to bottom."""
    spec = RingSpec(n, lam, s)
    shape = [spec.big_lambda.part(a) for a in range(1, s + 1)]
    rows = [[0] * p for p in shape]
    label = 0
    for b in range(max(shape, default=0), 0, -1):
        for a in range(s):
            if shape[a] >= b:
                label += 1
                rows[a][b - 1] = label
    return ShapeFilling(n, spec.lam, s, tuple(tuple(r) for r in rows))


class Compatibility(NamedTuple):
    ok: bool
    condition: str | None = None
    witness: tuple | None = None

    def __bool__(self):
        return self.ok


def is_schubert_compatible(T: ShapeFilling) -> Compatibility:
    """Check the shape and conditions (S1)-(S6); report the first failure."""
    n, lam, s = T.n, T.lam, T.s
    try:
        target = big_lambda(n, lam, s)
    except ValueError as exc:
        return Compatibility(False, "shape", (str(exc),))
    if len(T.rows) != s or any(len(T.rows[a]) != target.part(a + 1) for a in range(s)):
        return Compatibility(False, "shape", (T.shape, tuple(target)))
    K = T.K
    labels = [v for row in T.rows for v in row]
    if sorted(labels) != list(range(1, K + 1)):
        return Compatibility(False, "S1", tuple(sorted(labels)))
    cells = [(a, b) for a, row in enumerate(T.rows, 1) for b in range(1, len(row) + 1)]
    lam_cells = [c for c in cells if T.in_lambda(*c)]
    lam_labels = sorted(T.label(*c) for c in lam_cells)
    if lam_labels != list(range(1, T.k + 1)):
        return Compatibility(False, "S2", tuple(lam_cells))
    for a, row in enumerate(T.rows, 1):
        for b in range(1, len(row)):
            if row[b - 1] <= row[b]:
                return Compatibility(False, "S3", ((a, b), (a, b + 1)))
    for a, b in lam_cells:
        for c, d in cells:
            if d == b + 1 and T.label(a, b) <= T.label(c, d):
                return Compatibility(False, "S4", ((a, b), (c, d)))
    edges = [(a, T.right_edge(a)) for a in range(1, s + 1) if T.rows[a - 1]]
    for (a1, e1), (a2, e2) in zip(edges, edges[1:]):
        if e1 >= e2:
            return Compatibility(False, "S5", ((a1, len(T.rows[a1 - 1])), (a2, len(T.rows[a2 - 1]))))
    inner = [c for c in cells if c[1] > 1]
    for a, b in inner:
        for c, d in inner:
            if T.label(a, b) > T.label(c, d) and not T.label(a, b - 1) > T.label(c, d - 1):
                return Compatibility(False, "S6", ((a, b), (c, d)))
    return Compatibility(True)


@lru_cache(maxsize=4096)
def flatten(T: ShapeFilling, i: int) -> tuple[ShapeFilling, dict]:
    """The filling ``T^(i)`` and the order-preserving relabeling ``fl_T^(i)``.

    Row ``i`` loses its last cell. When ``i`` exceeds the length of
    ``lambda`` every other row also loses its first cell and shifts left.
    Remaining labels are compressed to ``1..K'`` and rows are re-sorted by
    their right-edge labels.
    """
    ell = T.lam.length
    if not 1 <= i <= T.s:
        raise ValueError(f"row index {i} out of range 1..{T.s}")
    if not T.rows[i - 1]:
        raise ValueError(f"row {i} is empty")
    removed = {T.rows[i - 1][-1]}
    new_rows = []
    for a, row in enumerate(T.rows, 1):
        row = list(row)
        if a == i:
            row = row[:-1]
        elif i > ell:
            if row:
                removed.add(row[0])
            row = row[1:]
        new_rows.append(row)
    kept = sorted(v for v in range(1, T.K + 1) if v not in removed)
    fl = {v: j for j, v in enumerate(kept, 1)}
    new_rows = [[fl[v] for v in row] for row in new_rows]
    filled = sorted((r for r in new_rows if r), key=lambda r: r[-1])
    new_rows = filled + [[] for _ in range(len(new_rows) - len(filled))]
    if i <= ell:
        lam = remove_row(T.lam, i)
    else:
        lam = T.lam
    out = ShapeFilling(T.n - 1, lam, T.s, tuple(tuple(r) for r in new_rows))
    target = big_lambda(T.n - 1, lam, T.s)
    if out.shape != tuple(target.part(a) for a in range(1, T.s + 1)):
        raise VerificationError(f"flattened filling has shape {out.shape}, expected {tuple(target)}", witness=out.to_json())
    return out, fl


def is_admissible(w: Sequence[int], T: ShapeFilling) -> bool:
    """Conditions (A1) and (A2) for an injective ``w: [n] -> [K]``."""
    w = tuple(w)
    if len(w) != T.n or len(set(w)) != len(w) or any(not 1 <= v <= T.K for v in w):
        return False
    if not set(range(1, T.k + 1)) <= set(w):
        return False
    pos = T.positions()
    seen = set()
    for v in w:
        a, b = pos[v]
        if b < len(T.rows[a - 1]) and T.label(a, b + 1) not in seen:
            return False
        seen.add(v)
    return True


def _row_of_right_edge(T: ShapeFilling, v: int) -> int | None:
    for a in range(1, T.s + 1):
        if T.right_edge(a) == v:
            return a
    return None


def cell_dimension(w: Sequence[int], T: ShapeFilling, check: bool = True) -> int:
    """Dimension of the cell of ``w``: ``(i-1) + dim(fl(w), T^(i))`` where ``w(1) = T(i, Lambda_i)``.

    With ``check`` every intermediate filling is tested for Schubert
    compatibility (S1)-(S6).
    """
    w = tuple(w)
    if not is_admissible(w, T):
        raise ValueError(f"w = {w} is not admissible")
    dim = 0
    while w:
        i = _row_of_right_edge(T, w[0])
        if i is None:
            raise VerificationError(f"w(1) = {w[0]} is not a right-edge label", witness=w)
        T, fl = flatten(T, i)
        if check and not _compatible_cached(T):
            raise VerificationError("flattening broke Schubert compatibility", witness=T.to_json())
        try:
            w = tuple(fl[v] for v in w[1:])
        except KeyError as exc:
            raise VerificationError(f"w uses a deleted label {exc.args[0]}", witness=w) from None
        dim += i - 1
    return dim


@lru_cache(maxsize=4096)
def _compatible_cached(T: ShapeFilling) -> bool:
    return is_schubert_compatible(T).ok


# ---------------------------------------------------------------------------
# cells


@dataclass(frozen=True)
class Cell:
    w: tuple
    iprd: tuple  # rows of the partial filling; 0 marks an empty cell
    dim: int

    def to_json(self, T: ShapeFilling | None = None) -> dict:
        out = {
            "w": list(self.w),
            "iprd": [[a, b, v] for a, row in enumerate(self.iprd, 1) for b, v in enumerate(row, 1) if v],
            "dim": self.dim,
        }
        if T is not None:
            out["component"] = [list(r) for r in component_of_cell(self.w, T).rows]
        return out


def iprd_of(w: Sequence[int], T: ShapeFilling) -> tuple:
    """Place label ``i`` in the cell of ``T`` carrying ``w(i)``."""
    pos = T.positions()
    rows = [[0] * len(r) for r in T.rows]
    for i, v in enumerate(w, 1):
        a, b = pos[v]
        rows[a - 1][b - 1] = i
    return tuple(tuple(r) for r in rows)


def _admissible_from(T: ShapeFilling, prefix: tuple) -> list[tuple]:
    n, k = T.n, T.k
    pos = T.positions()
    nexts = {}
    for v, (a, b) in pos.items():
        nexts[v] = T.label(a, b + 1) if b < len(T.rows[a - 1]) else None
    out = []
    used = set()
    for v in prefix:
        if nexts[v] is not None and nexts[v] not in used:
            return out
        used.add(v)
    w = list(prefix)

    def go():
        missing = sum(1 for v in range(1, k + 1) if v not in used)
        if missing > n - len(w):
            return
        if len(w) == n:
            out.append(tuple(w))
            return
        for v in range(1, T.K + 1):
            if v in used:
                continue
            nx = nexts[v]
            if nx is not None and nx not in used:
                continue
            used.add(v)
            w.append(v)
            go()
            w.pop()
            used.discard(v)

    go()
    return out


def _check_guard(n, guard):
    if guard is not None and n > guard:
        raise GuardError(f"n = {n} exceeds the enumeration guard {guard}; pass --unsafe-size to override", guard="n")


def _cells_job(args):
    T, first = args
    return [Cell(w, iprd_of(w, T), cell_dimension(w, T, check=True)) for w in _admissible_from(T, first)]


def admissible_maps(T: ShapeFilling) -> list[tuple]:
    return sorted(_admissible_from(T, ()))


def enumerate_cells(spec, guard: int | None = DEFAULT_ENUMERATION_GUARD, workers: int | None = None) -> list[Cell]:
    """Every admissible ``w`` for the reading-order filling, sorted by ``w``.

    With ``workers > 1`` the search is split over the value of ``w(1)`` and
    run in a process pool; the sorted output is identical either way.
    """
    spec = _as_spec(spec)
    _check_guard(spec.n, guard)
    T = reading_order_filling(spec.n, spec.lam, spec.s)
    if spec.n == 0:
        return [Cell((), iprd_of((), T), 0)]
    jobs = [(T, (v,)) for v in range(1, T.K + 1)]
    if workers and workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(_cells_job, jobs))
    else:
        chunks = [_cells_job(j) for j in jobs]
    return sorted((c for chunk in chunks for c in chunk), key=lambda c: c.w)


def paving_hilbert(spec, guard: int | None = DEFAULT_ENUMERATION_GUARD, workers: int | None = None) -> QPolynomial:
    counts: dict[int, int] = {}
    for c in enumerate_cells(spec, guard, workers):
        counts[2 * c.dim] = counts.get(2 * c.dim, 0) + 1
    return QPolynomial(counts)


def enumerate_iprd(spec) -> list[tuple]:
    """Injective partial row-decreasing fillings of ``Lambda``, listed directly.

    Each row is filled in a right-justified block of at least ``lambda_a``
    cells; the ``n`` labels are distributed over the rows and placed in
    decreasing order within each row.
    """
    spec = _as_spec(spec)
    n, lam, s = spec.n, spec.lam, spec.s
    shape = [spec.big_lambda.part(a) for a in range(1, s + 1)]
    out = []
    ranges = [range(lam.part(a + 1), shape[a] + 1) for a in range(s)]
    for counts in product(*ranges):
        if sum(counts) != n:
            continue

        def assign(a, remaining, acc):
            if a == s:
                rows = []
                for r, chosen in enumerate(acc):
                    row = [0] * (shape[r] - len(chosen)) + sorted(chosen, reverse=True)
                    rows.append(tuple(row))
                out.append(tuple(rows))
                return
            for chosen in combinations(sorted(remaining), counts[a]):
                assign(a + 1, remaining - set(chosen), acc + [chosen])

        assign(0, set(range(1, n + 1)), [])
    return out


# ---------------------------------------------------------------------------
# irreducible components


@dataclass(frozen=True, order=True)
class ComponentClass:
    """A filling of ``[lambda]`` with distinct entries, stored as rows."""

    rows: tuple

    def columns(self) -> list[list[int]]:
        width = len(self.rows[0]) if self.rows else 0
        return [[r[j] for r in self.rows if len(r) > j] for j in range(width)]

    def entries(self) -> set:
        return {v for r in self.rows for v in r}

    def is_decreasing(self) -> bool:
        rows_ok = all(r[j] > r[j + 1] for r in self.rows for j in range(len(r) - 1))
        cols_ok = all(c[j] > c[j + 1] for c in self.columns() for j in range(len(c) - 1))
        return rows_ok and cols_ok

    def column_equivalent(self, other: "ComponentClass") -> bool:
        return [set(c) for c in self.columns()] == [set(c) for c in other.columns()]

    def __str__(self):
        return "/".join("".join(str(v) for v in r) if max(r, default=0) < 10 else ",".join(map(str, r)) for r in self.rows)

    def to_latex(self) -> str:
        return ytableau([list(r) for r in self.rows])


def component_filling(w: Sequence[int], T: ShapeFilling) -> ComponentClass:
    """Restriction of the IPRD filling of ``w`` to ``[lambda]``, unsorted."""
    iprd = iprd_of(w, T)
    offset = T.n - T.k
    rows = []
    for a, p in enumerate(T.lam, 1):
        rows.append(tuple(iprd[a - 1][offset + j] for j in range(p)))
    return ComponentClass(tuple(rows))


def sort_columns(S: ComponentClass) -> ComponentClass:
    cols = [sorted(c, reverse=True) for c in S.columns()]
    rows = tuple(tuple(cols[j][a] for j in range(p)) for a, p in enumerate(len(r) for r in S.rows))
    return ComponentClass(rows)


def component_of_cell(w: Sequence[int], T: ShapeFilling) -> ComponentClass:
    """The class of ``w``: its ``[lambda]`` restriction with columns sorted decreasingly."""
    S = sort_columns(component_filling(w, T))
    if not S.is_decreasing():
        raise VerificationError(f"sorted component filling {S} is not row and column decreasing", witness=list(w))
    return S


def decreasing_fillings(n: int, lam) -> list[ComponentClass]:
    """All fillings of ``[lambda]`` by distinct entries of ``[n]`` decreasing along rows and columns."""
    lam = as_partition(lam)
    k = lam.size
    out = []
    syts = enumerate_syt(lam, guard=None)
    for subset in combinations(range(1, n + 1), k):
        desc = sorted(subset, reverse=True)
        for t in syts:
            out.append(ComponentClass(tuple(tuple(desc[v - 1] for v in row) for row in t)))
    return sorted(out)


def row_fill_criterion(S: ComponentClass) -> bool:
    """True iff ``{1, ..., i_S - 1}`` covers a whole row, ``i_S`` being the least missing entry."""
    entries = S.entries()
    i_s = 1
    while i_s in entries:
        i_s += 1
    return any(all(v < i_s for v in r) for r in S.rows)


class Component(NamedTuple):
    S: ComponentClass
    cells: list
    top_dimension: int


def enumerate_components(spec, guard: int | None = DEFAULT_ENUMERATION_GUARD, workers: int | None = None) -> list[Component]:
    """Group cells by component class; one entry per class that has a cell."""
    spec = _as_spec(spec)
    T = reading_order_filling(spec.n, spec.lam, spec.s)
    groups: dict[ComponentClass, list] = {}
    for c in enumerate_cells(spec, guard, workers):
        groups.setdefault(component_of_cell(c.w, T), []).append(c)
    return [Component(S, cells, max(c.dim for c in cells)) for S, cells in sorted(groups.items())]


def expected_component_count(spec) -> int:
    """``binom(n, k) * #SYT(lambda)``, the class count when ``s > len(lambda)``."""
    from .partitions import hook_length_count

    spec = _as_spec(spec)
    return comb(spec.n, spec.k) * hook_length_count(spec.lam)


# ---------------------------------------------------------------------------
# ordered set partitions


def osp_of_cell(w: Sequence[int], T: ShapeFilling) -> tuple[frozenset, ...]:
    """Blocks ``B_a`` = labels in row ``a`` of the IPRD filling; needs ``lambda = (1^k)``, ``s = k``."""
    k = T.k
    if tuple(T.lam) != (1,) * k or T.s != k:
        raise ValueError("ordered set partitions need lambda = (1^k) and s = k")
    iprd = iprd_of(w, T)
    blocks = tuple(frozenset(v for v in row if v) for row in iprd)
    if any(not b for b in blocks):
        raise VerificationError("empty block in ordered set partition", witness=list(w))
    return blocks


def ordered_set_partitions(n: int, k: int) -> Iterable[tuple[frozenset, ...]]:
    """Ordered set partitions of ``[n]`` into ``k`` nonempty blocks, by brute force."""
    for assignment in product(range(k), repeat=n):
        if len(set(assignment)) == k:
            yield tuple(frozenset(i + 1 for i, a in enumerate(assignment) if a == b) for b in range(k))


def stirling2(n: int, k: int) -> int:
    """Stirling number of the second kind by the standard recurrence."""
    table = [[0] * (k + 1) for _ in range(n + 1)]
    table[0][0] = 1
    for i in range(1, n + 1):
        for j in range(1, min(i, k) + 1):
            table[i][j] = j * table[i - 1][j] + table[i - 1][j - 1]
    return table[n][k]


def top_dimension(spec) -> int:
    spec = _as_spec(spec)
    return n_stat(spec.lam) + (spec.s - 1) * (spec.n - spec.k)


# ---------------------------------------------------------------------------
# LaTeX


def ytableau(rows: Sequence[Sequence[int]]) -> str:
    """A ``ytableau`` environment; zero entries are drawn as empty boxes."""
    body = " \\\\ ".join(" & ".join(str(v) if v else "{}" for v in row) if row else "\\none" for row in rows)
    return "\\begin{ytableau} " + body + " \\end{ytableau}"

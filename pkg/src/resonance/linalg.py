"""Exact linear algebra over Q.

Integer vectors are reduced fraction-free; general rational work goes
through :class:`fractions.Fraction`.  Sparse vectors are plain dicts
mapping a column key to a nonzero value.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Dict, Hashable, Iterable, List, Optional, Sequence, Tuple

SparseVector = Dict[Hashable, Fraction]


def primitive(vec: Sequence[int]) -> Tuple[Tuple[int, ...], int]:
    """Return ``(w, sign)`` with ``w`` primitive, first nonzero entry positive,
    and ``vec = sign * c * w`` for some positive rational ``c``."""
    g = 0
    for x in vec:
        g = gcd(g, x)
    if g == 0:
        raise ValueError("zero vector has no primitive form")
    lead = next(x for x in vec if x)
    sign = 1 if lead > 0 else -1
    g *= sign
    return tuple(x // g for x in vec), sign


def integer_rank(vectors: Iterable[Sequence[int]]) -> int:
    """Rank over Q of a family of integer vectors."""
    rows: List[List[int]] = []
    pivots: List[int] = []
    for v in vectors:
        r = reduce_against(list(v), rows, pivots)
        p = next((k for k, x in enumerate(r) if x), None)
        if p is not None:
            rows.append(r)
            pivots.append(p)
    return len(rows)


def reduce_against(v: List[int], rows: Sequence[Sequence[int]], pivots: Sequence[int]) -> List[int]:
    """Fraction-free reduction of ``v`` by echelon ``rows``.

    The result is a nonzero integer multiple of the unique coset
    representative of ``v`` with zeros in every pivot column, made primitive.
    """
    for row, p in zip(rows, pivots):
        c = v[p]
        if c:
            a = row[p]
            v = [a * x - c * y for x, y in zip(v, row)]
    g = 0
    for x in v:
        g = gcd(g, x)
    if g > 1:
        v = [x // g for x in v]
    return v


class IntegerSpan:
    """Incrementally grown span of integer vectors (echelon rows)."""

    __slots__ = ("rows", "pivots")

    def __init__(self, rows=(), pivots=()):
        self.rows = list(rows)
        self.pivots = list(pivots)

    def copy(self) -> "IntegerSpan":
        return IntegerSpan(self.rows, self.pivots)

    @property
    def rank(self) -> int:
        return len(self.rows)

    def residue(self, v: Sequence[int]) -> List[int]:
        return reduce_against(list(v), self.rows, self.pivots)

    def add(self, v: Sequence[int]) -> bool:
        r = self.residue(v)
        p = next((k for k, x in enumerate(r) if x), None)
        if p is None:
            return False
        self.rows.append(r)
        self.pivots.append(p)
        return True

    def contains(self, v: Sequence[int]) -> bool:
        return not any(self.residue(v))


class RowSpace:
    """Incremental row space of sparse rational vectors (reduced echelon form).

    Column keys must be mutually comparable; the pivot of a new row is its
    smallest key.
    """

    def __init__(self):
        self.rows: Dict[Hashable, SparseVector] = {}

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, vec: SparseVector) -> SparseVector:
        v = {k: Fraction(x) for k, x in vec.items() if x}
        for p in [k for k in v if k in self.rows]:
            c = v.get(p)
            if not c:
                continue
            for k, x in self.rows[p].items():
                y = v.get(k, 0) - c * x
                if y:
                    v[k] = y
                else:
                    v.pop(k, None)
        return v

    def add(self, vec: SparseVector) -> bool:
        v = self.reduce(vec)
        if not v:
            return False
        p = min(v)
        c = v[p]
        v = {k: x / c for k, x in v.items()}
        for q, row in self.rows.items():
            a = row.get(p)
            if a:
                for k, x in v.items():
                    y = row.get(k, 0) - a * x
                    if y:
                        row[k] = y
                    else:
                        row.pop(k, None)
        self.rows[p] = v
        return True

    def coordinates(self, vec: SparseVector) -> Optional[SparseVector]:
        """Coefficients of ``vec`` on the echelon rows (keyed by pivot), or
        ``None`` if ``vec`` is not in the span."""
        coords = {p: Fraction(vec[p]) for p in self.rows if vec.get(p)}
        rest = dict(vec)
        for p, c in coords.items():
            for k, x in self.rows[p].items():
                y = rest.get(k, 0) - c * x
                if y:
                    rest[k] = y
                else:
                    rest.pop(k, None)
        if any(rest.values()):
            return None
        return coords


def rank(matrix: Sequence[Sequence]) -> int:
    """Exact rank of a dense rational matrix."""
    space = RowSpace()
    for row in matrix:
        space.add({j: x for j, x in enumerate(row) if x})
    return space.rank


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> List[List]:
    if not a:
        return []
    inner = len(b)
    cols = len(b[0]) if b else 0
    out = []
    for row in a:
        out.append([sum((row[k] * b[k][j] for k in range(inner) if row[k]), 0) for j in range(cols)])
    return out


def identity(n: int) -> List[List[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def solve(matrix: Sequence[Sequence], rhs: Sequence) -> Optional[List[Fraction]]:
    """Unique exact solution of ``matrix @ x = rhs``.

    Returns ``None`` when the system is inconsistent.  Raises
    ``ValueError`` when the solution is not unique.
    """
    ncols = len(matrix[0]) if matrix else 0
    aug = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(matrix, rhs)]
    pivot_cols = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(aug)) if aug[i][c]), None)
        if p is None:
            continue
        aug[r], aug[p] = aug[p], aug[r]
        pr = aug[r]
        inv = 1 / pr[c]
        pr[:] = [x * inv for x in pr]
        for i in range(len(aug)):
            if i != r and aug[i][c]:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], pr)]
        pivot_cols.append(c)
        r += 1
    if any(row[-1] for row in aug[r:]):
        return None
    if r < ncols:
        raise ValueError("solution is not unique")
    x = [Fraction(0)] * ncols
    for i, c in enumerate(pivot_cols):
        x[c] = aug[i][-1]
    return x


def kernel(matrix: Sequence[Sequence]) -> List[List[Fraction]]:
    """Basis of the right null space of a rational matrix."""
    ncols = len(matrix[0]) if matrix else 0
    a = [[Fraction(x) for x in row] for row in matrix]
    pivot_cols = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(a)) if a[i][c]), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivot_cols.append(c)
        r += 1
    free = [c for c in range(ncols) if c not in pivot_cols]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for i, pc in enumerate(pivot_cols):
            v[pc] = -a[i][fc]
        basis.append(v)
    return basis

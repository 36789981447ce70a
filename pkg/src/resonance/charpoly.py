"""Characteristic polynomials, Betti numbers and chamber counts.

Two independent routes to the characteristic polynomial:

* :func:`char_poly_nbc` counts no-broken-circuit sets.  A sorted independent
  set ``b1 < ... < bk`` is nbc iff ``min cl(b_j, ..., b_k) == b_j`` for every
  ``j``, so the count of nbc sets spanning a flat ``Y`` satisfies
  ``N(Y) = sum N(X)`` over flats ``X`` covered by ``Y`` with ``min Y`` not in
  ``X``.  The recursion runs over the lattice of flats and never lists the
  nbc sets themselves.
* :func:`char_poly_finite_field` counts points of ``F_q^n`` off every
  hyperplane for several primes and interpolates.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb, isqrt, prod
from typing import Dict, List, Optional, Sequence

import numpy as np

from .arrangement import GroundSet, format_rational
from .errors import BadPrime, InterpolationMismatch, NonAlternating
from .linalg import integer_rank


@dataclass(frozen=True)
class CharPoly:
    """Coefficients from ``t^n`` down to ``t^0``."""

    coefficients: tuple

    def __init__(self, coefficients: Sequence):
        object.__setattr__(self, "coefficients", tuple(Fraction(c) for c in coefficients))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, t):
        acc = Fraction(0)
        for c in self.coefficients:
            acc = acc * t + c
        return acc

    def to_json(self) -> dict:
        return {"coeffs": [format_rational(c) for c in self.coefficients]}

    def __str__(self) -> str:
        n = self.degree
        terms = []
        for k, c in enumerate(self.coefficients):
            if c:
                terms.append(f"{format_rational(c)}*t^{n - k}")
        return " + ".join(terms) or "0"


# ---------------------------------------------------------------- nbc route

def char_poly_nbc(ground: GroundSet, order: Optional[Sequence[int]] = None) -> CharPoly:
    """Characteristic polynomial from nbc counts.

    ``order`` lists ground indices from smallest to largest; the default is
    the canonical order.  The result does not depend on it.
    """
    counts = nbc_counts(ground, order)
    n = ground.n
    coeffs = [0] * (n + 1)
    for i, c in enumerate(counts):
        coeffs[i] = (-1) ** i * c
    return CharPoly(coeffs)


def nbc_counts(ground: GroundSet, order: Optional[Sequence[int]] = None,
               max_size: Optional[int] = None) -> List[int]:
    """Number of nbc sets of each size ``0..n`` (or ``0..max_size``)."""
    normals = ground.normals
    m = len(normals)
    n = ground.n
    if order is None:
        order = list(range(m))
    if sorted(order) != list(range(m)):
        raise ValueError("order must be a permutation of the ground indices")
    # elements re-indexed by position so that "min" is numeric min
    vecs = np.array([normals[e] for e in order], dtype=object if _wide(normals) else np.int64)
    full_rank = integer_rank(normals)

    # flats of the current rank: mask -> [pivot rows, pivots, min element, count]
    level: Dict[int, list] = {0: [[], [], m, 1]}
    totals = [1]
    top = full_rank if max_size is None else min(full_rank, max_size)
    for r in range(1, top + 1):
        if r == full_rank:
            # the only flat of top rank is the whole ground set, with minimum 0
            totals.append(sum(c for mask, (_, _, _, c) in level.items() if not mask & 1))
            break
        nxt: Dict[int, list] = {}
        for mask, (rows, pivots, low, count) in level.items():
            residues = _residues(vecs, rows, pivots)
            classes: Dict[tuple, list] = {}
            for e in range(m):
                if mask >> e & 1:
                    continue
                key = residues[e]
                entry = classes.get(key)
                if entry is None:
                    classes[key] = [e, 1 << e]
                else:
                    entry[1] |= 1 << e
            for key, (e0, cls) in classes.items():
                ymask = mask | cls
                entry = nxt.get(ymask)
                if entry is None:
                    entry = [rows + [list(key)], pivots + [_first_nonzero(key)], min(low, e0), 0]
                    nxt[ymask] = entry
                if e0 < low:
                    entry[3] += count
        level = nxt
        totals.append(sum(v[3] for v in level.values()))
    length = n + 1 if max_size is None else max_size + 1
    return (totals + [0] * length)[:length]


def _wide(normals) -> bool:
    return max((abs(x) for v in normals for x in v), default=0) > 2 ** 8 or len(normals[0]) > 8


def _first_nonzero(v) -> int:
    return next(k for k, x in enumerate(v) if x)


def _residues(vecs: np.ndarray, rows, pivots) -> List[tuple]:
    """Primitive, sign-normalized residues of every row of ``vecs`` modulo the
    span of the echelon ``rows``, as hashable tuples."""
    res = vecs
    for row, p in zip(rows, pivots):
        col = res[:, p:p + 1]
        res = row[p] * res - col * np.array(row, dtype=vecs.dtype)
        g = np.gcd.reduce(res, axis=1)
        g[g == 0] = 1
        res = res // g[:, None]
    if res.dtype != object and res.size and np.abs(res).max() > 2 ** 40:
        raise OverflowError("residue entries too large for int64")
    nz = res != 0
    lead = res[np.arange(len(res)), nz.argmax(axis=1)]
    res = res * np.where(lead < 0, -1, 1)[:, None]
    return [tuple(int(x) for x in r) for r in res]


# ------------------------------------------------------- finite field route

def _primes_from(start: int):
    k = max(2, start)
    while True:
        if all(k % p for p in range(2, isqrt(k) + 1)):
            yield k
        k += 1


def determinant_bound(ground: GroundSet) -> int:
    """Integer ``B`` with every ``k x k`` minor of the normal matrix below ``B``
    in absolute value (Hadamard's inequality on the largest row norms)."""
    norms = sorted((sum(x * x for x in v) for v in ground.normals), reverse=True)
    k = min(ground.n, len(norms))
    sq = prod(norms[:k]) if k else 1
    return isqrt(sq) + 1


def good_primes(ground: GroundSet, count: Optional[int] = None) -> List[int]:
    """``count`` (default ``n + 2``) primes exceeding :func:`determinant_bound`.

    No minor can vanish mod such a prime, so reduction mod ``q`` preserves
    the matroid.
    """
    if count is None:
        count = ground.n + 2
    return list(itertools.islice(_primes_from(determinant_bound(ground) + 1), count))


def check_prime(ground: GroundSet, q: int, subset_limit: int = 200_000) -> None:
    """Raise :class:`BadPrime` unless reduction mod ``q`` keeps the matroid."""
    if q < 2 or any(q % p == 0 for p in range(2, isqrt(q) + 1)):
        raise BadPrime(f"{q} is not prime")
    if q > determinant_bound(ground):
        return
    seen = set()
    for v in ground.normals:
        r = [x % q for x in v]
        if not any(r):
            raise BadPrime(f"normal {v} vanishes mod {q}")
        lead = next(x for x in r if x)
        inv = pow(lead, -1, q)
        key = tuple(x * inv % q for x in r)
        if key in seen:
            raise BadPrime(f"two normals become proportional mod {q}")
        seen.add(key)
    n = ground.n
    m = len(ground)
    if comb(m, n) > subset_limit:
        raise BadPrime(f"prime {q} is below the determinant bound and too many bases to certify")
    for sub in itertools.combinations(ground.normals, n):
        if integer_rank(sub) == n and _rank_mod(sub, q) < n:
            raise BadPrime(f"a basis becomes dependent mod {q}")


def _rank_mod(vectors, q: int) -> int:
    rows = [[x % q for x in v] for v in vectors]
    r = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        p = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = pow(rows[r][c], -1, q)
        rows[r] = [x * inv % q for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [(x - f * y) % q for x, y in zip(rows[i], rows[r])]
        r += 1
    return r


def count_complement_points(ground: GroundSet, q: int) -> int:
    """Number of points of ``F_q^n`` lying on no hyperplane (mod ``q``).

    Points are grouped by their first nonzero coordinate, scaled to 1; the
    last coordinate is counted by excluding its forbidden residues.
    """
    n = ground.n
    normals = np.array(ground.normals, dtype=np.int64) % q
    if n == 1:
        # normal is (1,): only x = 0 lies on it
        return q - 1
    total = 0
    last = normals[:, n - 1]
    inv_last = np.array([pow(int(a), -1, q) if a else 0 for a in last], dtype=np.int64)
    with_last = last != 0
    for k in range(n):
        # x_0..x_{k-1} = 0, x_k = 1, free coordinates k+1..n-1
        if k == n - 1:
            # point e_{n-1}: good iff every normal has nonzero last entry
            total += int(np.all(with_last))
            continue
        base = normals[:, k]  # contribution of x_k = 1
        free = list(range(k + 1, n - 1))  # free coordinates before the last one
        looped, vectorized = free[:-2], free[-2:]
        if vectorized:
            grid = np.stack(np.meshgrid(*([np.arange(q)] * len(vectorized)), indexing="ij"), -1)
            vec_part = grid.reshape(-1, len(vectorized)) @ normals[:, vectorized].T
        else:
            vec_part = np.zeros((1, len(normals)), dtype=np.int64)
        for outer in itertools.product(range(q), repeat=len(looped)):
            shift = base + (np.array(outer, dtype=np.int64) @ normals[:, looped].T if looped else 0)
            partial = (vec_part + shift) % q
            total += _count_last(partial, with_last, inv_last, q)
    return total * (q - 1)


def _count_last(partial: np.ndarray, with_last: np.ndarray, inv_last: np.ndarray, q: int) -> int:
    # hyperplanes without the last coordinate kill the whole fibre if partial == 0
    dead = np.any((partial == 0) & ~with_last[None, :], axis=1)
    forbidden = (-partial[:, with_last] * inv_last[with_last]) % q
    mask = np.zeros((partial.shape[0], q), dtype=bool)
    rows = np.repeat(np.arange(partial.shape[0]), forbidden.shape[1])
    mask[rows, forbidden.ravel()] = True
    good = q - mask.sum(axis=1)
    good[dead] = 0
    return int(good.sum())


def char_poly_finite_field(ground: GroundSet, primes: Optional[Sequence[int]] = None) -> CharPoly:
    """Characteristic polynomial by point counting over prime fields.

    Interpolates through the first ``n + 1`` counts and requires every further
    count to lie on the same polynomial.
    """
    n = ground.n
    if primes is None:
        primes = good_primes(ground)
    primes = list(primes)
    if len(primes) < n + 2:
        raise ValueError(f"need at least {n + 2} primes, got {len(primes)}")
    for q in primes:
        check_prime(ground, q)
    values = [(q, count_complement_points(ground, q)) for q in primes]
    coeffs = _interpolate(values[: n + 1])
    poly = CharPoly(coeffs)
    for q, v in values[n + 1:]:
        if poly(q) != v:
            raise InterpolationMismatch(f"count {v} at q={q} is off the interpolant {poly}")
    return poly


def _interpolate(points) -> List[Fraction]:
    """Coefficients (highest first) of the Lagrange interpolant."""
    deg = len(points) - 1
    result = [Fraction(0)] * (deg + 1)  # lowest first
    for j, (xj, yj) in enumerate(points):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for k, (xk, _) in enumerate(points):
            if k == j:
                continue
            basis = [Fraction(0)] + basis
            for i in range(len(basis) - 1):
                basis[i] -= xk * basis[i + 1]
            denom *= xj - xk
        for i, c in enumerate(basis):
            result[i] += yj * c / denom
    return result[::-1]


# --------------------------------------------------------------- consumers

def betti_numbers(chi: CharPoly) -> List[int]:
    out = []
    for i, c in enumerate(chi.coefficients):
        b = (-1) ** i * c
        if b < 0 or b.denominator != 1:
            raise NonAlternating(f"coefficient of t^{chi.degree - i} is {c}")
        out.append(int(b))
    return out


def chamber_count(chi: CharPoly) -> int:
    return int(sum(abs(c) for c in chi.coefficients))


def all_hyperplanes_char_poly(q: int, n: int) -> CharPoly:
    """``(t - 1)(t - q)...(t - q^(n-1))`` expanded."""
    coeffs = [Fraction(1)]  # highest first
    for j in range(n):
        root = q ** j
        coeffs = coeffs + [Fraction(0)]
        for k in range(len(coeffs) - 1, 0, -1):
            coeffs[k] -= root * coeffs[k - 1]
    return CharPoly(coeffs)


def count_all_hyperplanes_complement(q: int, n: int) -> int:
    """Brute-force count of points of ``F_q^n`` on no ``F_q``-hyperplane."""
    normals = [v for v in itertools.product(range(q), repeat=n) if any(v)]
    good = 0
    for x in itertools.product(range(q), repeat=n):
        if all(sum(a * b for a, b in zip(v, x)) % q for v in normals):
            good += 1
    return good

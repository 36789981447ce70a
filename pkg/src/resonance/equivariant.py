"""Symmetric group characters of the graded algebra pieces and of chambers."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .algebra import GradedAlgebra
from .arrangement import GroundSet, arrangement
from .chambers import enumerate_chambers, fixed_chambers, signed_permutation
from .linalg import RowSpace
from .symmetric import (CharacterVector, Partition, decompose, padded, partition_str,
                        partitions, representative)


def character(ground: GroundSet, convention, degree: int,
              algebra: Optional[GradedAlgebra] = None) -> CharacterVector:
    """Character of the degree-``degree`` piece, one representative per class."""
    if algebra is None:
        algebra = GradedAlgebra(ground, convention, max_degree=degree)
    n = ground.n
    return CharacterVector(n, {mu: algebra.trace(representative(mu), degree)
                               for mu in partitions(n)})


def total_character(ground: GroundSet, convention) -> CharacterVector:
    algebra = GradedAlgebra(ground, convention, max_degree=ground.n)
    chars = [character(ground, convention, i, algebra) for i in range(ground.n + 1)]
    out = chars[0]
    for c in chars[1:]:
        out = out + c
    return out


def chamber_character(ground: GroundSet, chambers=None) -> CharacterVector:
    """Permutation character of the symmetric group on chambers."""
    if chambers is None:
        chambers = enumerate_chambers(ground)
    return CharacterVector(ground.n, {mu: fixed_chambers(ground, representative(mu), chambers)
                                      for mu in partitions(ground.n)})


@dataclass
class RowBoundReport:
    holds: bool
    bound: int
    violators: List[Partition]
    multiplicities: Dict[Partition, int]

    def to_json(self) -> dict:
        return {
            "holds": self.holds,
            "bound": self.bound,
            "violators": [partition_str(p) for p in self.violators],
            "decomposition": {partition_str(k): v for k, v in self.multiplicities.items()},
        }


def row_bound_report(ground: GroundSet, convention, degree: int,
                     algebra: Optional[GradedAlgebra] = None) -> RowBoundReport:
    bound = len(ground.spec.coefficients) ** degree
    mult = decompose(character(ground, convention, degree, algebra))
    bad = [lam for lam in mult if len(lam) > bound]
    return RowBoundReport(not bad, bound, bad, mult)


@dataclass
class PaddedTable:
    core: Partition
    degree: int
    rows: List[Tuple[int, int]]  # (n, multiplicity)
    fit_degree: int
    fit: List[Fraction]  # polynomial coefficients, constant term first
    residuals: List[Fraction]

    def to_json(self) -> dict:
        from .arrangement import format_rational

        return {
            "lambda": partition_str(self.core),
            "i": self.degree,
            "table": [{"n": n, "multiplicity": m} for n, m in self.rows],
            "fitDegree": self.fit_degree,
            "fit": [format_rational(c) for c in self.fit],
            "residuals": [format_rational(r) for r in self.residuals],
        }


def padded_multiplicity_table(S, convention, degree: int, core: Sequence[int],
                              n_range: Iterable[int], fit_degree: int = 1) -> PaddedTable:
    """Multiplicity of the padded irreducible ``core(n)`` for each ``n``, with an
    exact least-squares polynomial fit and its residuals."""
    core = tuple(core)
    rows = []
    for n in n_range:
        lam = padded(core, n)
        ground = arrangement(S, n)
        mult = decompose(character(ground, convention, degree))
        rows.append((n, mult.get(lam, 0)))
    fit, residuals = _polyfit([n for n, _ in rows], [m for _, m in rows], fit_degree)
    return PaddedTable(core, degree, rows, fit_degree, fit, residuals)


def _polyfit(xs, ys, deg):
    """Exact least-squares polynomial fit via the normal equations."""
    from .linalg import solve

    k = min(deg, len(xs) - 1) if xs else 0
    vand = [[Fraction(x) ** j for j in range(k + 1)] for x in xs]
    ata = [[sum(r[a] * r[b] for r in vand) for b in range(k + 1)] for a in range(k + 1)]
    aty = [sum(r[a] * y for r, y in zip(vand, ys)) for a in range(k + 1)]
    coeffs = solve(ata, aty) if xs else []
    residuals = [y - sum(c * Fraction(x) ** j for j, c in enumerate(coeffs)) for x, y in zip(xs, ys)]
    return coeffs, residuals


# ------------------------------------------------------ quotient oracle

class DirectQuotient:
    """Degree-``i`` piece computed as (all squarefree monomials) / (ideal).

    The ideal in degree ``i`` is spanned by every circuit relation times every
    squarefree monomial of complementary degree, expanded in the monomial
    basis.  Independent of straightening and of broken circuits.
    """

    def __init__(self, algebra: GradedAlgebra, degree: int):
        self.algebra = algebra
        self.degree = degree
        ground = algebra.ground
        m = len(ground)
        self.monomials = list(itertools.combinations(range(m), degree))
        ideal = RowSpace()
        for c in algebra.circuits:
            k = len(c.elements) - 1
            if k > degree:
                continue
            rel = algebra.relation(c)
            for rest in itertools.combinations(range(m), degree - k):
                vec: Dict[tuple, Fraction] = {}
                for mono, coeff in rel.items():
                    s, prod = algebra.monomial_from_list(list(mono) + list(rest))
                    if s:
                        vec[prod] = vec.get(prod, 0) + s * coeff
                ideal.add(vec)
        self.ideal = ideal

    @property
    def dimension(self) -> int:
        return len(self.monomials) - self.ideal.rank

    def _act(self, sigma, mono) -> Tuple[int, tuple]:
        perm = signed_permutation(self.algebra.ground, sigma)
        images = [perm[e][0] for e in mono]
        sign = 1
        if not self.algebra.is_os:
            for e in mono:
                sign *= perm[e][1]
        s, srt = self.algebra.monomial_from_list(images)
        return s * sign, srt

    def trace(self, sigma) -> Fraction:
        """trace on the quotient = trace on monomials - trace on the ideal."""
        full = sum(s for mono in self.monomials for s, img in [self._act(sigma, mono)] if img == mono)
        on_ideal = Fraction(0)
        for p, row in self.ideal.rows.items():
            image: Dict[tuple, Fraction] = {}
            for mono, coeff in row.items():
                s, img = self._act(sigma, mono)
                image[img] = image.get(img, 0) + s * coeff
            coords = self.ideal.coordinates(image)
            if coords is None:
                raise ArithmeticError("relation ideal is not invariant under the action")
            on_ideal += coords.get(p, 0)
        return Fraction(full) - on_ideal

"""Modules over the opposite of the category of finite sets and surjections.

Finite sets are ``[k] = {0, ..., k-1}``; a surjection ``E ->> F`` is a tuple of
length ``|E|`` with values covering ``range(|F|)``.  Every module here is
concrete: ``basis(e)`` lists a basis of the value at ``[e]`` and
``pullback(phi)`` is the matrix of the induced map from the value at the
target to the value at the source (rows indexed by the source basis).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Dict, List, Optional, Sequence, Tuple

from .algebra import Convention, GradedAlgebra
from .arrangement import ArrangementSpec, CoefficientSet, build_arrangement, parse_coefficients
from .errors import ConventionMismatch
from .linalg import RowSpace, matmul

Surjection = Tuple[int, ...]
Matrix = List[List[Fraction]]


def surjection_count(e: int, f: int) -> int:
    return sum((-1) ** k * comb(f, k) * (f - k) ** e for k in range(f + 1))


def is_surjection(phi: Sequence[int], f: int) -> bool:
    return set(phi) == set(range(f))


def enumerate_surjections(e: int, f: int) -> List[Surjection]:
    """All surjections ``[e] ->> [f]`` in lexicographic order."""
    if f < 1 or e < f:
        return []
    return [phi for phi in itertools.product(range(f), repeat=e) if is_surjection(phi, f)]


def fibre_representatives(e: int, f: int) -> List[Surjection]:
    """One surjection ``[e] ->> [f]`` per set partition of ``[e]`` into ``f``
    blocks (blocks labelled by first occurrence)."""
    out = []

    def grow(prefix, used):
        if len(prefix) == e:
            if used == f:
                out.append(tuple(prefix))
            return
        if used + (e - len(prefix)) < f:
            return
        for b in range(min(used + 1, f)):
            grow(prefix + [b], used + (b == used))

    grow([], 0)
    return out


def compose(psi: Sequence[int], phi: Sequence[int]) -> Surjection:
    """``psi`` after ``phi``."""
    return tuple(psi[x] for x in phi)


class FSOpModule:
    def basis(self, e: int) -> list:
        raise NotImplementedError

    def dimension(self, e: int) -> int:
        return len(self.basis(e))

    def pullback(self, phi: Surjection) -> Matrix:
        raise NotImplementedError


class PrincipalProjective(FSOpModule):
    """``P_[m]``: basis of the value at ``E`` is the set of surjections ``E ->> [m]``;
    pullback along ``phi`` sends ``e_psi`` to ``e_{psi o phi}``."""

    def __init__(self, m: int):
        self.m = m

    def basis(self, e: int) -> List[Surjection]:
        return enumerate_surjections(e, self.m)

    def pullback(self, phi: Surjection) -> Matrix:
        src = self.basis(len(phi))
        tgt = self.basis(max(phi) + 1)
        pos = {b: k for k, b in enumerate(src)}
        mat = [[Fraction(0)] * len(tgt) for _ in src]
        for j, psi in enumerate(tgt):
            mat[pos[compose(psi, phi)]][j] = Fraction(1)
        return mat


class TensorModule(FSOpModule):
    """Pointwise tensor product; basis elements are pairs."""

    def __init__(self, first: FSOpModule, second: FSOpModule):
        self.first = first
        self.second = second

    def basis(self, e: int) -> list:
        return list(itertools.product(self.first.basis(e), self.second.basis(e)))

    def pullback(self, phi: Surjection) -> Matrix:
        a = self.first.pullback(phi)
        b = self.second.pullback(phi)
        rows = []
        for ra in a:
            for rb in b:
                rows.append([x * y for x in ra for y in rb])
        return rows


class BettiModule(FSOpModule):
    """The degree-``i`` piece of the OS or Cordovil algebra of ``A_S(E)``.

    Pullback along ``phi: E ->> F`` sends ``x_v`` (``v`` in ``S^F``) to
    ``x_{v o phi}``, extended multiplicatively and straightened at ``E``.
    """

    def __init__(self, S, convention, degree: int):
        self.coefficients = parse_coefficients(S) if isinstance(S, str) else CoefficientSet(S)
        self.convention = Convention.parse(convention)
        self.degree = degree
        self._algebras: Dict[int, GradedAlgebra] = {}

    def algebra(self, e: int) -> GradedAlgebra:
        if e not in self._algebras:
            ground = build_arrangement(ArrangementSpec(self.coefficients, e))
            self._algebras[e] = GradedAlgebra(ground, self.convention, max_degree=self.degree)
        return self._algebras[e]

    def basis(self, e: int) -> list:
        return self.algebra(e).nbc_basis(self.degree)

    def generator_images(self, phi: Surjection) -> List[Tuple[int, int]]:
        """Image of each hyperplane of ``A_S(F)`` in ``A_S(E)`` with its sign."""
        f = max(phi) + 1
        src = self.algebra(len(phi))
        tgt = self.algebra(f)
        out = []
        for h in tgt.ground.hyperplanes:
            pulled = tuple(h.normal[x] for x in phi)
            out.append(src.ground.locate(pulled))
        return out

    def pullback_columns(self, phi: Surjection) -> List[Dict[tuple, Fraction]]:
        f = max(phi) + 1
        src = self.algebra(len(phi))
        images = self.generator_images(phi)
        cols = []
        for mono in self.algebra(f).nbc_basis(self.degree):
            seq = [images[e][0] for e in mono]
            sign = 1
            if src.convention is Convention.CORDOVIL:
                for e in mono:
                    sign *= images[e][1]
            s, srt = src.monomial_from_list(seq)
            if not s:
                cols.append({})
                continue
            cols.append({k: s * sign * v for k, v in src.normal_form(srt).items()})
        return cols

    def pullback(self, phi: Surjection) -> Matrix:
        src_basis = self.basis(len(phi))
        pos = {b: k for k, b in enumerate(src_basis)}
        cols = self.pullback_columns(phi)
        mat = [[Fraction(0)] * len(cols) for _ in src_basis]
        for j, col in enumerate(cols):
            for k, v in col.items():
                mat[pos[k]][j] = v
        return mat


def pullback_on_betti(S, phi: Surjection, convention, degree: int,
                      module: Optional[BettiModule] = None) -> Matrix:
    if module is None:
        module = BettiModule(S, convention, degree)
    elif module.convention != Convention.parse(convention):
        raise ConventionMismatch("module was built for the other convention")
    return module.pullback(tuple(phi))


@dataclass
class GenerationReport:
    E: int
    degree: int
    m: int
    bound: int
    generated: bool
    rank: int
    dimension: int

    @property
    def deficit(self) -> int:
        return self.dimension - self.rank


def certify_generation(S, convention, degree: int, e: int, m: int,
                       module: Optional[BettiModule] = None) -> GenerationReport:
    """Do pullbacks from sets of size at most ``m`` span the value at ``[e]``?"""
    if not 1 <= m <= max(e, m):
        raise ValueError("need m >= 1")
    if e < 1:
        raise ValueError("need |E| >= 1")
    if module is None:
        module = BettiModule(S, convention, degree)
    dim = module.dimension(e)
    space = RowSpace()
    for f in range(1, min(m, e) + 1):
        for phi in fibre_representatives(e, f):
            for col in module.pullback_columns(phi):
                space.add(col)
                if space.rank == dim:
                    break
            if space.rank == dim:
                break
        if space.rank == dim:
            break
    bound = len(module.coefficients) ** degree
    return GenerationReport(e, degree, m, bound, space.rank == dim, space.rank, dim)


def minimal_generation_degree(S, convention, degree: int, e: int,
                              module: Optional[BettiModule] = None) -> int:
    if module is None:
        module = BettiModule(S, convention, degree)
    for m in range(1, e + 1):
        if certify_generation(S, convention, degree, e, m, module).generated:
            return m
    return e


@dataclass(frozen=True)
class TensorCertificate:
    phi1: Surjection
    phi2: Surjection
    image: Tuple[Tuple[int, int], ...]
    phi: Surjection
    psi1: Surjection
    psi2: Surjection
    verified: bool


def tensor_generators(m1: int, m2: int, e: int) -> List[TensorCertificate]:
    """Factor every basis element ``e_phi1 (x) e_phi2`` of
    ``(P_[m1] (x) P_[m2])([e])`` as a pullback from ``F = image(phi1 x phi2)``.

    Verification expands ``phi^*(e_psi1 (x) e_psi2)`` with the tensor module's
    pullback matrix and compares it to the basis vector.
    """
    module = TensorModule(PrincipalProjective(m1), PrincipalProjective(m2))
    src_basis = module.basis(e)
    src_pos = {b: k for k, b in enumerate(src_basis)}
    out = []
    for phi1, phi2 in src_basis:
        image = tuple(sorted(set(zip(phi1, phi2))))
        idx = {p: k for k, p in enumerate(image)}
        phi = tuple(idx[p] for p in zip(phi1, phi2))
        psi1 = tuple(p[0] for p in image)
        psi2 = tuple(p[1] for p in image)
        tgt_basis = module.basis(len(image))
        col = tgt_basis.index((psi1, psi2))
        mat = module.pullback(phi)
        expansion = [row[col] for row in mat]
        expected = [Fraction(int(k == src_pos[(phi1, phi2)])) for k in range(len(src_basis))]
        ok = expansion == expected and len(image) <= m1 * m2
        out.append(TensorCertificate(phi1, phi2, image, phi, psi1, psi2, ok))
    return out


def check_functoriality(module: FSOpModule, phi: Surjection, psi: Surjection) -> bool:
    """``(psi o phi)^* == phi^* psi^*`` for ``phi: E ->> F``, ``psi: F ->> G``."""
    lhs = module.pullback(compose(psi, phi))
    rhs = matmul(module.pullback(phi), module.pullback(psi))
    return [[Fraction(x) for x in r] for r in lhs] == [[Fraction(x) for x in r] for r in rhs]

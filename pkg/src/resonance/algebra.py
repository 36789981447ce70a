"""Orlik-Solomon (d even) and Cordovil (d odd) algebras on the nbc basis.

Both are quotients of the squarefree monomials in one generator per
hyperplane.  Generators are oriented by the canonical normal: for a vector
``v = c * sign * normal`` with ``c > 0`` the class ``x_v`` equals ``x_H`` in
the OS algebra and ``sign * x_H`` in the Cordovil algebra.

Circuit relations, for a circuit ``c_0 < ... < c_k`` with integer dependency
``sum lambda_j * normal(c_j) = 0``:

* OS:       ``sum_j (-1)^j x_{C - c_j} = 0`` (exterior monomials, sorted);
* Cordovil: ``sum_j sign(lambda_j) x_{C - c_j} = 0`` (commuting, ``x_e^2 = 0``).

Straightening solves the relation for the broken circuit ``C - c_0``.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .arrangement import Circuit, GroundSet, circuits
from .chambers import signed_permutation
from .errors import ConventionMismatch, MissingCircuit

Monomial = Tuple[int, ...]
Terms = Dict[Monomial, Fraction]


class Convention(str, enum.Enum):
    OS = "os"
    CORDOVIL = "cordovil"

    @classmethod
    def parse(cls, value) -> "Convention":
        if isinstance(value, Convention):
            return value
        return cls(str(value).lower())


@dataclass
class AlgebraElement:
    convention: Convention
    terms: Terms = field(default_factory=dict)

    def __post_init__(self):
        self.terms = {tuple(k): Fraction(v) for k, v in self.terms.items() if v}

    @property
    def degree(self) -> Optional[int]:
        sizes = {len(k) for k in self.terms}
        if len(sizes) > 1:
            raise ValueError("element is not homogeneous")
        return sizes.pop() if sizes else None

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        _check(self, other)
        return AlgebraElement(self.convention, _add(self.terms, other.terms))

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        _check(self, other)
        return AlgebraElement(self.convention, _add(self.terms, other.terms, -1))

    def scale(self, c) -> "AlgebraElement":
        return AlgebraElement(self.convention, {k: c * v for k, v in self.terms.items()})

    def __eq__(self, other) -> bool:
        return isinstance(other, AlgebraElement) and self.convention == other.convention \
            and self.terms == other.terms

    def __bool__(self) -> bool:
        return bool(self.terms)


def _check(a: AlgebraElement, b: AlgebraElement) -> None:
    if a.convention != b.convention:
        raise ConventionMismatch(f"{a.convention.value} vs {b.convention.value}")


def _add(a: Terms, b: Terms, scale=1) -> Terms:
    out = dict(a)
    for k, v in b.items():
        w = out.get(k, 0) + scale * v
        if w:
            out[k] = w
        else:
            out.pop(k, None)
    return out


def sort_sign(seq: Sequence[int]) -> int:
    """Sign of the permutation sorting ``seq``; 0 if it has repeats."""
    if len(set(seq)) != len(seq):
        return 0
    sign = 1
    s = list(seq)
    for i in range(len(s)):
        for j in range(i + 1, len(s)):
            if s[i] > s[j]:
                sign = -sign
    return sign


class GradedAlgebra:
    """The OS or Cordovil algebra of ``ground``, straightened up to ``max_degree``.

    Circuits of size up to ``max_degree + 1`` are computed once; the
    relation tables and the normal-form cache are filled lazily.
    """

    def __init__(self, ground: GroundSet, convention, max_degree: Optional[int] = None,
                 circuit_list: Optional[List[Circuit]] = None):
        self.ground = ground
        self.convention = Convention.parse(convention)
        if max_degree is None:
            max_degree = ground.n
        self.max_degree = max_degree
        if circuit_list is None:
            circuit_list = circuits(ground, max_degree + 1)
        self.circuits = circuit_list
        self._broken: Dict[Monomial, Circuit] = {}
        for c in circuit_list:
            self._broken.setdefault(c.elements[1:], c)
        self._normal: Dict[Monomial, Terms] = {}
        self._bases: Dict[int, List[Monomial]] = {}
        self._perm_cache: Dict[tuple, list] = {}

    @property
    def is_os(self) -> bool:
        return self.convention is Convention.OS

    def element(self, terms) -> AlgebraElement:
        return AlgebraElement(self.convention, terms)

    def generator(self, e: int) -> AlgebraElement:
        return self.element({(e,): 1})

    # -------------------------------------------------------------- basis
    def _require(self, degree: int) -> None:
        if degree > self.max_degree:
            raise MissingCircuit(f"degree {degree} needs circuits of size {degree + 1}; "
                                 f"only up to {self.max_degree + 1} were computed")

    def broken_circuit_in(self, mono: Monomial) -> Optional[Monomial]:
        """The lexicographically largest broken circuit contained in ``mono``."""
        best = None
        for size in range(2, len(mono) + 1):
            for sub in itertools.combinations(mono, size):
                if sub in self._broken and (best is None or sub > best):
                    best = sub
        return best

    def is_nbc(self, mono: Monomial) -> bool:
        return self.broken_circuit_in(mono) is None

    def nbc_basis(self, degree: int) -> List[Monomial]:
        if degree in self._bases:
            return self._bases[degree]
        self._require(degree)
        m = len(self.ground)
        out: List[Monomial] = []

        def grow(prefix: Monomial):
            if len(prefix) == degree:
                out.append(prefix)
                return
            start = prefix[-1] + 1 if prefix else 0
            for e in range(start, m - (degree - len(prefix) - 1)):
                cand = prefix + (e,)
                # only subsets containing the new element can be new broken circuits
                if any(sub + (e,) in self._broken
                       for size in range(1, len(prefix) + 1)
                       for sub in itertools.combinations(prefix, size)):
                    continue
                grow(cand)

        grow(())
        self._bases[degree] = out
        return out

    # --------------------------------------------------------- products
    def multiply_monomials(self, a: Monomial, b: Monomial) -> Tuple[int, Monomial]:
        """``x_a * x_b`` as ``(sign, sorted monomial)``; sign 0 means zero."""
        return self.monomial_from_list(list(a) + list(b))

    def monomial_from_list(self, seq: Sequence[int]) -> Tuple[int, Monomial]:
        if len(set(seq)) != len(seq):
            return 0, ()
        sign = sort_sign(seq) if self.is_os else 1
        return sign, tuple(sorted(seq))

    def multiply(self, x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
        _check(x, y)
        out: Terms = {}
        for a, ca in x.terms.items():
            for b, cb in y.terms.items():
                s, mono = self.multiply_monomials(a, b)
                if s:
                    out[mono] = out.get(mono, 0) + s * ca * cb
        return self.element(out)

    # ----------------------------------------------------- straightening
    def relation(self, c: Circuit) -> Terms:
        """The circuit relation as a degree ``|C| - 1`` element."""
        els = c.elements
        out: Terms = {}
        for j in range(len(els)):
            coeff = (-1) ** j if self.is_os else (1 if c.coefficients[j] > 0 else -1)
            out[els[:j] + els[j + 1:]] = Fraction(coeff)
        return out

    def _rewrite(self, mono: Monomial) -> Optional[List[Tuple[Fraction, Monomial]]]:
        bc = self.broken_circuit_in(mono)
        if bc is None:
            return None
        c = self._broken[bc]
        rest = tuple(e for e in mono if e not in bc)
        # x_mono = s0 * x_bc * x_rest
        s0, _ = self.monomial_from_list(list(bc) + list(rest))
        rel = self.relation(c)
        lead = rel[bc]
        out = []
        for term, coeff in rel.items():
            if term == bc:
                continue
            s, new = self.monomial_from_list(list(term) + list(rest))
            if s:
                out.append((-s0 * s * coeff / lead, new))
        return out

    def normal_form(self, mono: Monomial) -> Terms:
        mono = tuple(mono)
        if mono in self._normal:
            return self._normal[mono]
        self._require(len(mono))
        stack = [mono]
        pending: Dict[Monomial, list] = {}
        while stack:
            top = stack[-1]
            if top in self._normal:
                stack.pop()
                continue
            if top not in pending:
                rw = self._rewrite(top)
                if rw is None:
                    self._normal[top] = {top: Fraction(1)}
                    stack.pop()
                    continue
                pending[top] = rw
            rw = pending[top]
            missing = [t for _, t in rw if t not in self._normal]
            if missing:
                stack.extend(missing)
                continue
            acc: Terms = {}
            for coeff, t in rw:
                acc = _add(acc, self._normal[t], coeff)
            self._normal[top] = acc
            del pending[top]
            stack.pop()
        return self._normal[mono]

    def straighten(self, elem) -> AlgebraElement:
        if isinstance(elem, AlgebraElement):
            if elem.convention != self.convention:
                raise ConventionMismatch("element and algebra use different conventions")
            terms = elem.terms
        else:
            terms = {tuple(k): Fraction(v) for k, v in dict(elem).items()}
        acc: Terms = {}
        for mono, coeff in terms.items():
            if len(set(mono)) != len(mono):
                continue
            s, srt = self.monomial_from_list(mono)
            acc = _add(acc, self.normal_form(srt), s * coeff)
        return self.element(acc)

    # -------------------------------------------------------------- action
    def _signed_perm(self, sigma: Sequence[int]):
        key = tuple(sigma)
        if key not in self._perm_cache:
            self._perm_cache[key] = signed_permutation(self.ground, key)
        return self._perm_cache[key]

    def act_monomial(self, sigma: Sequence[int], mono: Monomial) -> Terms:
        perm = self._signed_perm(sigma)
        images = [perm[e][0] for e in mono]
        sign = 1
        if not self.is_os:
            for e in mono:
                sign *= perm[e][1]
        s, srt = self.monomial_from_list(images)
        return {k: s * sign * v for k, v in self.normal_form(srt).items()}

    def act(self, sigma: Sequence[int], elem: AlgebraElement) -> AlgebraElement:
        acc: Terms = {}
        for mono, coeff in elem.terms.items():
            acc = _add(acc, self.act_monomial(sigma, mono), coeff)
        return self.element(acc)

    def trace(self, sigma: Sequence[int], degree: int) -> Fraction:
        total = Fraction(0)
        for mono in self.nbc_basis(degree):
            total += self.act_monomial(sigma, mono).get(mono, 0)
        return total

    def action_matrix(self, sigma: Sequence[int], degree: int) -> List[List[Fraction]]:
        basis = self.nbc_basis(degree)
        pos = {b: k for k, b in enumerate(basis)}
        mat = [[Fraction(0)] * len(basis) for _ in basis]
        for j, mono in enumerate(basis):
            for k, v in self.act_monomial(sigma, mono).items():
                mat[pos[k]][j] = v
        return mat

    def coordinates(self, elem: AlgebraElement, degree: int) -> List[Fraction]:
        basis = self.nbc_basis(degree)
        nf = self.straighten(elem).terms
        return [nf.get(b, Fraction(0)) for b in basis]


def nbc_basis(ground: GroundSet, degree: int) -> List[Monomial]:
    return GradedAlgebra(ground, Convention.OS, max_degree=degree).nbc_basis(degree)


def straighten(ground: GroundSet, elem: AlgebraElement) -> AlgebraElement:
    deg = elem.degree or 0
    return GradedAlgebra(ground, elem.convention, max_degree=deg).straighten(elem)


def permutation_action(ground: GroundSet, sigma: Sequence[int], elem: AlgebraElement) -> AlgebraElement:
    deg = elem.degree or 0
    return GradedAlgebra(ground, elem.convention, max_degree=deg).act(sigma, elem)

"""S-arrangements: construction, canonical hyperplanes and the matroid layer.

A hyperplane is stored by its canonical normal: a primitive integer vector
whose first nonzero entry is positive.  The ground set is ordered
lexicographically on canonical normals.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .errors import InvalidArrangement
from .linalg import IntegerSpan, integer_rank, kernel, primitive


def parse_rational(text) -> Fraction:
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int):
        return Fraction(text)
    return Fraction(str(text).strip())


def format_rational(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_coefficients(text: str) -> "CoefficientSet":
    """Parse ``"0,1"`` or ``"-1,1"`` or ``"±1"`` style input."""
    values = []
    for tok in text.split(","):
        tok = tok.strip()
        if not tok:
            continue
        if tok.startswith("±") or tok.startswith("+-"):
            x = parse_rational(tok.lstrip("±+-"))
            values.extend([x, -x])
        else:
            values.append(parse_rational(tok))
    return CoefficientSet(values)


@dataclass(frozen=True)
class CoefficientSet:
    values: Tuple[Fraction, ...]

    def __init__(self, values: Iterable):
        vals = [parse_rational(v) for v in values]
        if not vals:
            raise InvalidArrangement("coefficient set is empty")
        if len(set(vals)) != len(vals):
            raise InvalidArrangement(f"coefficient set has repeated values: {vals}")
        object.__setattr__(self, "values", tuple(sorted(vals)))

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __str__(self) -> str:
        return ",".join(format_rational(v) for v in self.values)


@dataclass(frozen=True)
class ArrangementSpec:
    coefficients: CoefficientSet
    n: int

    def __post_init__(self):
        if not isinstance(self.coefficients, CoefficientSet):
            object.__setattr__(self, "coefficients", CoefficientSet(self.coefficients))
        if self.n < 1:
            raise InvalidArrangement("rank n must be at least 1")
        if all(v == 0 for v in self.coefficients):
            raise InvalidArrangement("S = {0} defines no hyperplanes")


@dataclass(frozen=True)
class Hyperplane:
    normal: Tuple[int, ...]
    representative: Tuple[Fraction, ...]
    orientation: int  # representative = positive multiple of (orientation * normal)


def canonicalize(vec: Sequence) -> Tuple[Tuple[int, ...], int]:
    """Canonical normal of a nonzero rational vector and the sign relating them.

    ``vec`` is a positive multiple of ``sign * normal``.
    """
    fr = [Fraction(x) for x in vec]
    den = lcm(*(x.denominator for x in fr)) if fr else 1
    ints = [int(x * den) for x in fr]
    return primitive(ints)


@dataclass(frozen=True)
class GroundSet:
    """Deduplicated hyperplanes of an arrangement in canonical order."""

    spec: ArrangementSpec
    hyperplanes: Tuple[Hyperplane, ...]
    index: Dict[Tuple[int, ...], int] = field(compare=False, repr=False)

    @property
    def n(self) -> int:
        return self.spec.n

    @property
    def normals(self) -> List[Tuple[int, ...]]:
        return [h.normal for h in self.hyperplanes]

    def __len__(self) -> int:
        return len(self.hyperplanes)

    def locate(self, vec: Sequence) -> Tuple[int, int]:
        """Index of the hyperplane normal to ``vec`` and the orientation sign."""
        normal, sign = canonicalize(vec)
        return self.index[normal], sign

    def to_json(self) -> dict:
        return {
            "S": [format_rational(v) for v in self.spec.coefficients],
            "n": self.n,
            "hyperplanes": [list(h.normal) for h in self.hyperplanes],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json())


def ground_from_normals(spec: ArrangementSpec, normals: Iterable[Sequence[int]]) -> GroundSet:
    hs = {}
    for v in normals:
        normal, sign = canonicalize(v)
        if normal not in hs:
            hs[normal] = Hyperplane(normal, tuple(Fraction(x) for x in v), sign)
    ordered = tuple(hs[k] for k in sorted(hs))
    return GroundSet(spec, ordered, {h.normal: i for i, h in enumerate(ordered)})


def load_arrangement(data) -> GroundSet:
    if isinstance(data, str):
        data = json.loads(data)
    spec = ArrangementSpec(CoefficientSet(data["S"]), int(data["n"]))
    return ground_from_normals(spec, data["hyperplanes"])


def build_arrangement(spec: ArrangementSpec) -> GroundSet:
    """All hyperplanes normal to a nonzero vector in S^n."""
    if not isinstance(spec, ArrangementSpec):
        raise TypeError("expected ArrangementSpec")
    found: Dict[Tuple[int, ...], Hyperplane] = {}
    for v in itertools.product(spec.coefficients.values, repeat=spec.n):
        if not any(v):
            continue
        normal, sign = canonicalize(v)
        if normal not in found:
            found[normal] = Hyperplane(normal, tuple(v), sign)
    ordered = tuple(found[k] for k in sorted(found))
    return GroundSet(spec, ordered, {h.normal: i for i, h in enumerate(ordered)})


def arrangement(S, n: int) -> GroundSet:
    """Shorthand: ``arrangement("0,1", 3)`` or ``arrangement([0, 1], 3)``."""
    cs = parse_coefficients(S) if isinstance(S, str) else CoefficientSet(S)
    return build_arrangement(ArrangementSpec(cs, n))


def rank(ground: GroundSet, subset: Iterable[int]) -> int:
    return integer_rank(ground.hyperplanes[i].normal for i in subset)


@dataclass(frozen=True)
class Circuit:
    elements: Tuple[int, ...]
    # integer dependency: sum(coeffs[k] * normal[elements[k]]) == 0, all nonzero
    coefficients: Tuple[int, ...]


def circuits(ground: GroundSet, max_size: Optional[int] = None) -> List[Circuit]:
    """All circuits of size at most ``max_size`` (default ``n + 1``).

    Each circuit ``C`` is found once, as the dependency created when
    ``max(C)`` is added to the independent set ``C - max(C)``.
    """
    n = ground.n
    if max_size is None:
        max_size = n + 1
    normals = ground.normals
    m = len(normals)
    out: List[Circuit] = []

    def extend(indep: Tuple[int, ...], span: IntegerSpan):
        size = len(indep)
        if size + 1 > max_size:
            return
        start = indep[-1] + 1 if indep else 0
        for e in range(start, m):
            if span.contains(normals[e]):
                if size + 1 >= 2:
                    coeffs = _dependency(normals, indep, e)
                    if all(coeffs):
                        out.append(Circuit(indep + (e,), tuple(coeffs)))
            elif size + 1 < max_size:
                child = span.copy()
                child.add(normals[e])
                extend(indep + (e,), child)

    extend((), IntegerSpan())
    out.sort(key=lambda c: (len(c.elements), c.elements))
    return out


def _dependency(normals, indep, e) -> List[int]:
    cols = list(indep) + [e]
    mat = [[normals[c][r] for c in cols] for r in range(len(normals[e]))]
    ker = kernel(mat)
    assert len(ker) == 1
    v = ker[0]
    den = lcm(*(x.denominator for x in v))
    ints = [int(x * den) for x in v]
    w, _ = primitive(ints)
    # sign normalization: coefficient of the smallest element positive
    return list(w)


def broken_circuits(ground: GroundSet, max_size: Optional[int] = None,
                    circuit_list: Optional[List[Circuit]] = None) -> List[Tuple[int, ...]]:
    """Circuits of size at most ``max_size + 1`` with their minimum removed."""
    if circuit_list is None:
        limit = None if max_size is None else max_size + 1
        circuit_list = circuits(ground, limit)
    seen = set()
    out = []
    for c in circuit_list:
        bc = c.elements[1:]
        if max_size is not None and len(bc) > max_size:
            continue
        if bc not in seen:
            seen.add(bc)
            out.append(bc)
    return out

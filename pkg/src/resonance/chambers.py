"""Chamber enumeration by wall-crossing search and the symmetric group action
on chambers."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .arrangement import GroundSet
from .errors import LimitExceeded
from .lp import strictly_feasible_point

DEFAULT_LIMIT = 63


@dataclass(frozen=True)
class SignVector:
    """A chamber: bit ``k`` of ``mask`` is set iff hyperplane ``k`` is positive."""

    mask: int
    size: int
    point: Tuple[Fraction, ...]

    def sign(self, k: int) -> int:
        return 1 if self.mask >> k & 1 else -1

    def __str__(self) -> str:
        return "".join("+" if self.mask >> k & 1 else "-" for k in range(self.size))


def _signs_of(normals, x) -> int:
    mask = 0
    for k, v in enumerate(normals):
        s = sum(a * b for a, b in zip(v, x))
        if s == 0:
            raise ValueError("point lies on a hyperplane")
        if s > 0:
            mask |= 1 << k
    return mask


def generic_point(ground: GroundSet) -> Tuple[Fraction, ...]:
    """A point ``(1, t, t^2, ...)`` off every hyperplane."""
    t = Fraction(2)
    while True:
        x = tuple(t ** k for k in range(ground.n))
        if all(sum(a * b for a, b in zip(v, x)) for v in ground.normals):
            return x
        t += 1


def enumerate_chambers(ground: GroundSet, limit: int = DEFAULT_LIMIT) -> List[SignVector]:
    """Every chamber exactly once, sorted by sign mask.

    Breadth-first search from the chamber of a generic point; a neighbour
    across hyperplane ``k`` is accepted when the flipped sign system has an
    exact strictly feasible point.
    """
    m = len(ground)
    if m > limit:
        raise LimitExceeded(f"{m} hyperplanes exceeds the chamber limit {limit}")
    normals = ground.normals
    x0 = generic_point(ground)
    start = _signs_of(normals, x0)
    found: Dict[int, Tuple[Fraction, ...]] = {start: x0}
    queue = deque([start])
    while queue:
        mask = queue.popleft()
        for k in range(m):
            target = mask ^ (1 << k)
            if target in found:
                continue
            rows = [v if target >> j & 1 else tuple(-a for a in v) for j, v in enumerate(normals)]
            x = strictly_feasible_point(rows)
            if x is not None:
                found[target] = tuple(x)
                queue.append(target)
    return [SignVector(mask, m, found[mask]) for mask in sorted(found)]


def is_chamber(ground: GroundSet, signs: Sequence[int]) -> bool:
    rows = [v if s > 0 else tuple(-a for a in v) for v, s in zip(ground.normals, signs)]
    return strictly_feasible_point(rows) is not None


def act_on_vector(sigma: Sequence[int], v: Sequence) -> tuple:
    """Permute coordinates: the entry at ``k`` moves to ``sigma[k]``."""
    out = [None] * len(v)
    for k, x in enumerate(v):
        out[sigma[k]] = x
    return tuple(out)


def signed_permutation(ground: GroundSet, sigma: Sequence[int]) -> List[Tuple[int, int]]:
    """For each hyperplane, the index of its image under ``sigma`` and the sign
    relating the permuted normal to the canonical one."""
    return [ground.locate(act_on_vector(sigma, h.normal)) for h in ground.hyperplanes]


def fixed_chambers(ground: GroundSet, sigma: Sequence[int],
                   chambers: Optional[List[SignVector]] = None) -> int:
    if chambers is None:
        chambers = enumerate_chambers(ground)
    perm = signed_permutation(ground, sigma)
    count = 0
    for c in chambers:
        image = 0
        for k, (j, eps) in enumerate(perm):
            if c.sign(k) * eps > 0:
                image |= 1 << j
        if image == c.mask:
            count += 1
    return count

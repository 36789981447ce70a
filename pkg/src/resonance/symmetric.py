"""Partitions, conjugacy classes and irreducible characters of symmetric groups."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod
from typing import Dict, Iterator, Sequence, Tuple

from .arrangement import format_rational
from .errors import NonCharacter, PadTooSmall

Partition = Tuple[int, ...]


def partitions(n: int, largest: int = None) -> Iterator[Partition]:
    """Partitions of ``n`` in reverse lexicographic order, ``(n,)`` first."""
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def partition_str(lam: Sequence[int]) -> str:
    return "+".join(str(p) for p in lam) if lam else "0"


def parse_partition(text: str) -> Partition:
    text = text.strip()
    if text in ("", "0", "()", "empty"):
        return ()
    lam = tuple(sorted((int(p) for p in text.replace(",", "+").split("+")), reverse=True))
    if any(p <= 0 for p in lam):
        raise ValueError(f"bad partition {text!r}")
    return lam


def cycle_type(sigma: Sequence[int]) -> Partition:
    seen = [False] * len(sigma)
    lengths = []
    for start in range(len(sigma)):
        if seen[start]:
            continue
        k, length = start, 0
        while not seen[k]:
            seen[k] = True
            k = sigma[k]
            length += 1
        lengths.append(length)
    return tuple(sorted(lengths, reverse=True))


def representative(mu: Sequence[int]) -> Tuple[int, ...]:
    """A permutation of cycle type ``mu`` made of consecutive cycles."""
    sigma = []
    start = 0
    for length in mu:
        sigma.extend(start + (k + 1) % length for k in range(length))
        start += length
    return tuple(sigma)


def centralizer_order(mu: Sequence[int]) -> int:
    counts: Dict[int, int] = {}
    for p in mu:
        counts[p] = counts.get(p, 0) + 1
    return prod(p ** c * factorial(c) for p, c in counts.items())


def class_size(mu: Sequence[int]) -> int:
    return factorial(sum(mu)) // centralizer_order(mu)


def compose(sigma: Sequence[int], tau: Sequence[int]) -> Tuple[int, ...]:
    """``sigma`` after ``tau``."""
    return tuple(sigma[tau[k]] for k in range(len(tau)))


def inverse(sigma: Sequence[int]) -> Tuple[int, ...]:
    out = [0] * len(sigma)
    for k, s in enumerate(sigma):
        out[s] = k
    return tuple(out)


@lru_cache(maxsize=None)
def irreducible_character(lam: Partition, mu: Partition) -> int:
    """Murnaghan-Nakayama: value of the irreducible character ``lam`` on the
    class ``mu``, removing border strips of length ``mu[0]`` on an abacus."""
    if sum(lam) != sum(mu):
        raise ValueError("partitions of different sizes")
    if not mu:
        return 1
    r, rest = mu[0], mu[1:]
    length = len(lam)
    beads = [lam[i] + (length - 1 - i) for i in range(length)]
    occupied = set(beads)
    total = 0
    for b in beads:
        c = b - r
        if c < 0 or c in occupied:
            continue
        height = sum(1 for x in beads if c < x < b)
        new = sorted((x for x in beads if x != b), reverse=True)
        new.append(c)
        new.sort(reverse=True)
        k = len(new)
        shape = tuple(p for p in (new[i] - (k - 1 - i) for i in range(k)) if p > 0)
        total += (-1) ** height * irreducible_character(shape, rest)
    return total


def dimension(lam: Sequence[int]) -> int:
    """Hook length formula."""
    n = sum(lam)
    conj = [sum(1 for p in lam if p > j) for j in range(lam[0])] if lam else []
    hooks = 1
    for i, row in enumerate(lam):
        for j in range(row):
            hooks *= (row - j - 1) + (conj[j] - i - 1) + 1
    return factorial(n) // hooks


@dataclass
class CharacterVector:
    """A class function on the symmetric group of degree ``n``."""

    n: int
    values: Dict[Partition, Fraction]

    def __post_init__(self):
        self.values = {tuple(k): Fraction(v) for k, v in self.values.items()}
        missing = set(partitions(self.n)) - set(self.values)
        if missing:
            raise ValueError(f"missing cycle types {sorted(missing)}")

    def __getitem__(self, mu) -> Fraction:
        return self.values[tuple(mu)]

    def __add__(self, other: "CharacterVector") -> "CharacterVector":
        return CharacterVector(self.n, {k: v + other.values[k] for k, v in self.values.items()})

    @property
    def degree(self) -> Fraction:
        return self.values[(1,) * self.n] if self.n else self.values[()]

    def to_json(self) -> Dict[str, str]:
        return {partition_str(k): format_rational(v) for k, v in self.values.items()}

    @classmethod
    def from_function(cls, n: int, f) -> "CharacterVector":
        return cls(n, {mu: f(mu) for mu in partitions(n)})


def inner_product(chi: CharacterVector, psi: CharacterVector) -> Fraction:
    total = sum(Fraction(class_size(mu)) * chi[mu] * psi[mu] for mu in partitions(chi.n))
    return total / factorial(chi.n)


def decompose(chi: CharacterVector) -> Dict[Partition, int]:
    """Multiplicity of every irreducible with nonzero multiplicity."""
    n = chi.n
    out = {}
    for lam in partitions(n):
        mult = sum(Fraction(class_size(mu)) * chi[mu] * irreducible_character(lam, mu)
                   for mu in partitions(n)) / factorial(n)
        if mult.denominator != 1 or mult < 0:
            raise NonCharacter(f"multiplicity of {partition_str(lam)} is {mult}")
        if mult:
            out[lam] = int(mult)
    if sum(m * dimension(lam) for lam, m in out.items()) != chi.degree:
        raise NonCharacter("multiplicities do not account for the degree")
    return out


def padded(lam: Sequence[int], n: int) -> Partition:
    lam = tuple(lam)
    first = lam[0] if lam else 0
    if n < sum(lam) + first:
        raise PadTooSmall(f"n={n} is below |lambda| + lambda_1 = {sum(lam) + first}")
    return (n - sum(lam),) + lam

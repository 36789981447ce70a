"""Exponential-polynomial closed forms and the F_q Betti formulas.

A form ``b(n) = sum_j c_j(n) * j^n`` with polynomial ``c_j`` is fitted exactly
to a computed sequence; the last two entries are held out and must be
predicted exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Dict, List, Optional, Sequence, Tuple

from .arrangement import format_rational
from .errors import InsufficientData, LeadingNotConstant
from .linalg import solve

HELD_OUT = 2


def _trim(poly: Sequence[Fraction]) -> List[Fraction]:
    p = list(poly)
    while p and p[-1] == 0:
        p.pop()
    return p


@dataclass
class ExpPolyForm:
    J: int
    # j -> coefficients of c_j, constant term first; zero polynomials omitted
    coefficients: Dict[int, List[Fraction]]
    valid_from: int
    held_out_verified: bool = False

    def __call__(self, n: int) -> Fraction:
        total = Fraction(0)
        for j, poly in self.coefficients.items():
            total += sum(c * Fraction(n) ** d for d, c in enumerate(poly)) * Fraction(j) ** n
        return total

    def degree(self, j: int) -> int:
        """Degree of ``c_j``; -1 for the zero polynomial."""
        return len(_trim(self.coefficients.get(j, []))) - 1

    @property
    def leading_constant(self) -> bool:
        return self.degree(self.J) <= 0

    def to_json(self) -> dict:
        return {
            "J": self.J,
            "c": {str(j): [format_rational(x) for x in p] for j, p in sorted(self.coefficients.items())},
            "n0": self.valid_from,
            "heldOutVerified": self.held_out_verified,
        }


def fit_exp_poly(sequence: Sequence[Tuple[int, int]], J: int, max_poly_degree: int = 0,
                 require_leading_constant: bool = True) -> ExpPolyForm:
    """Fit ``b(n) = sum_{j=1}^J c_j(n) j^n`` exactly.

    The polynomial degree is raised uniformly over all ``j``.  For each degree
    the fit window starts as early as possible and is pushed later until the
    solve is consistent and predicts the held-out entries.
    """
    seq = sorted((int(n), Fraction(v)) for n, v in sequence)
    ns = [n for n, _ in seq]
    if any(b - a != 1 for a, b in zip(ns, ns[1:])):
        raise ValueError("sequence must be consecutive in n")
    needed = J * (max_poly_degree + 1) + HELD_OUT
    if len(seq) < needed:
        raise InsufficientData(f"need {needed} consecutive entries, have {len(seq)}",
                               additional_needed=needed - len(seq))
    fit_part, held = seq[:-HELD_OUT], seq[-HELD_OUT:]
    for deg in range(max_poly_degree + 1):
        unknowns = [(j, d) for j in range(1, J + 1) for d in range(deg + 1)]
        for start in range(len(fit_part) - len(unknowns) + 1):
            window = fit_part[start:]
            mat = [[Fraction(n) ** d * Fraction(j) ** n for j, d in unknowns] for n, _ in window]
            try:
                sol = solve(mat, [v for _, v in window])
            except ValueError:
                continue
            if sol is None:
                continue
            coeffs: Dict[int, List[Fraction]] = {}
            for (j, d), c in zip(unknowns, sol):
                coeffs.setdefault(j, [Fraction(0)] * (deg + 1))[d] = c
            coeffs = {j: _trim(p) for j, p in coeffs.items() if any(p)}
            form = ExpPolyForm(J, coeffs, window[0][0])
            if all(form(n) == v for n, v in held):
                form.held_out_verified = True
                # extend validity backwards as far as the data allows
                k = start
                while k > 0 and form(seq[k - 1][0]) == seq[k - 1][1]:
                    k -= 1
                form.valid_from = seq[k][0]
                if require_leading_constant and not form.leading_constant:
                    raise LeadingNotConstant(f"c_{J} has degree {form.degree(J)}", form)
                return form
    raise InsufficientData(f"no consistent fit with polynomial degree <= {max_poly_degree} "
                           f"and J = {J}", additional_needed=J)


def _poly_mul(a: Sequence[Fraction], b: Sequence[Fraction]) -> List[Fraction]:
    out = [Fraction(0)] * (len(a) + len(b) - 1) if a and b else []
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


@dataclass
class RationalFunction:
    numerator: List[Fraction]  # constant term first
    denominator: List[Fraction]

    def series(self, terms: int) -> List[Fraction]:
        """Power series coefficients of numerator / denominator."""
        den = self.denominator
        out = []
        for k in range(terms):
            acc = self.numerator[k] if k < len(self.numerator) else Fraction(0)
            for i in range(1, min(k, len(den) - 1) + 1):
                acc -= den[i] * out[k - i]
            out.append(acc / den[0])
        return out

    @property
    def proper(self) -> bool:
        return len(_trim(self.numerator)) < len(_trim(self.denominator))

    def to_json(self) -> dict:
        return {"numerator": [format_rational(x) for x in self.numerator],
                "denominator": [format_rational(x) for x in self.denominator]}


def to_rational_function(form: ExpPolyForm,
                         sequence: Optional[Sequence[Tuple[int, int]]] = None) -> RationalFunction:
    """``G(t) = sum_{n >= 1} b(n) t^n`` as an exact rational function.

    Values below ``form.valid_from`` come from ``sequence``; the numerator is
    the product of the denominator with the series, truncated, and is checked
    against every computed term.
    """
    den = [Fraction(1)]
    for j, poly in sorted(form.coefficients.items()):
        for _ in range(form.degree(j) + 1):
            den = _poly_mul(den, [Fraction(1), Fraction(-j)])
    if not form.coefficients:
        return RationalFunction([], [Fraction(1)])
    known = {int(n): Fraction(v) for n, v in (sequence or [])}
    if not all(n in known for n in range(1, form.valid_from)):
        raise ValueError("sequence must supply the terms before the form's validity")
    last = max([form.valid_from + len(den) + 1] + list(known))
    series = [Fraction(0)] + [known[n] if n < form.valid_from else form(n) for n in range(1, last + 1)]
    for n, v in known.items():
        if n >= form.valid_from and form(n) != v:
            raise ValueError(f"form disagrees with the sequence at n={n}")
    num_len = len(den) - 1 + max(form.valid_from, 1)
    prod = _poly_mul(den, series)
    numerator = _trim(prod[:num_len])
    if any(prod[num_len:len(series)]):
        raise ArithmeticError("series does not satisfy the recurrence of the denominator")
    return RationalFunction(numerator, den)


# ------------------------------------------------------------ F_q formulas

def elementary_symmetric(values: Sequence[int], i: int) -> int:
    e = [1] + [0] * i
    for v in values:
        for k in range(i, 0, -1):
            e[k] += e[k - 1] * v
    return e[i]


def gaussian_binomial(n: int, k: int, q: int) -> int:
    if k < 0 or k > n:
        return 0
    num = 1
    den = 1
    for j in range(k):
        num *= q ** (n - j) - 1
        den *= q ** (j + 1) - 1
    return num // den


def fq_betti(q: int, n: int, i: int) -> int:
    """``e_i(1, q, ..., q^(n-1))``; equals ``q^C(i,2) [n choose i]_q``."""
    if not 0 <= i <= n:
        raise ValueError("need 0 <= i <= n")
    value = elementary_symmetric([q ** j for j in range(n)], i)
    assert value == q ** comb(i, 2) * gaussian_binomial(n, i, q)
    return value


def fq_hilbert_rational(q: int, i: int) -> RationalFunction:
    """``q^C(i,2) t^i / prod_{j=0}^{i} (1 - q^j t)``."""
    num = [Fraction(0)] * i + [Fraction(q ** comb(i, 2))]
    den = [Fraction(1)]
    for j in range(i + 1):
        den = _poly_mul(den, [Fraction(1), Fraction(-(q ** j))])
    return RationalFunction(num, den)


def fq_hilbert_series(q: int, i: int, truncation: int) -> List[int]:
    """Coefficients of ``t^0 .. t^truncation``."""
    if truncation < i:
        raise ValueError("truncation must be at least i")
    coeffs = fq_hilbert_rational(q, i).series(truncation + 1)
    out = [int(c) for c in coeffs]
    for n in range(i, truncation + 1):
        assert out[n] == fq_betti(q, n, i), (q, n, i)
    return out

"""Exact strict-feasibility test for homogeneous sign systems.

Decides whether ``{x : a_k . x > 0 for all k}`` is nonempty for integer rows
``a_k``.  The system is a cone, so it is strictly feasible iff the LP

    maximize eps  subject to  a_k . x >= eps,  eps <= 1

has a positive optimum.  The origin is feasible, so no phase one is needed.
The simplex runs on an integer-preserving tableau (every entry is an integer
numerator over the common denominator ``d``) with Bland's rule.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Optional, Sequence


def strictly_feasible_point(rows: Sequence[Sequence[int]]) -> Optional[List[Fraction]]:
    """An exact point ``x`` with ``a . x > 0`` for every row, or ``None``."""
    rows = [list(r) for r in rows]
    if not rows:
        return []
    n = len(rows[0])
    m = len(rows)
    # structural columns: x+ (n), x- (n), eps (1); then one slack per row
    nvar = 2 * n + 1
    ncol = nvar + m + 1
    rhs = ncol
    tab = []
    for k, a in enumerate(rows):
        line = [-x for x in a] + list(a) + [1] + [0] * (m + 1) + [0]
        line[nvar + k] = 1
        tab.append(line)
    cap = [0] * (2 * n) + [1] + [0] * (m + 1) + [1]
    cap[nvar + m] = 1
    tab.append(cap)
    objective = [0] * (2 * n) + [-1] + [0] * (m + 1) + [0]
    basis = [nvar + k for k in range(m + 1)]
    d = 1

    while True:
        if objective[rhs] > 0:
            break
        enter = next((j for j in range(ncol) if objective[j] < 0), None)
        if enter is None:
            return None
        leave = None
        for i, line in enumerate(tab):
            a = line[enter]
            if a <= 0:
                continue
            if leave is None:
                leave = i
                continue
            b = tab[leave]
            lhs, rhs_ = line[rhs] * b[enter], b[rhs] * a
            if lhs < rhs_ or (lhs == rhs_ and basis[i] < basis[leave]):
                leave = i
        if leave is None:
            # objective is capped by eps <= 1, so this cannot happen
            raise ArithmeticError("unbounded strict-feasibility LP")
        prow = tab[leave]
        p = prow[enter]
        for i, line in enumerate(tab):
            if i == leave:
                continue
            f = line[enter]
            if f:
                tab[i] = [(x * p - f * y) // d for x, y in zip(line, prow)]
            else:
                tab[i] = [x * p // d for x in line]
        f = objective[enter]
        objective = [(x * p - f * y) // d for x, y in zip(objective, prow)]
        basis[leave] = enter
        d = p

    values = [Fraction(0)] * nvar
    for i, var in enumerate(basis):
        if var < nvar:
            values[var] = Fraction(tab[i][rhs], d)
    x = [values[k] - values[n + k] for k in range(n)]
    if not all(sum(a_k * x_k for a_k, x_k in zip(a, x)) > 0 for a in rows):
        raise ArithmeticError("simplex returned a point that fails the strict system")
    return x

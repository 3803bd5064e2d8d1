"""Exact two-phase simplex method over the rationals.

Solves ``maximize c.x  subject to  A x <= b, x >= 0`` with Fractions.
Pivoting follows Bland's rule (lowest-index entering and leaving
variables), which guarantees termination on degenerate problems.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class LPResult:
    status: str
    x: Optional[tuple] = None
    value: Optional[Fraction] = None
    pivots: int = 0


def _pivot(T, r, basis, i, j):
    row = T[i]
    p = row[j]
    if p != 1:
        row = [v / p for v in row]
        T[i] = row
    for k, other in enumerate(T):
        if k != i and other[j] != 0:
            f = other[j]
            T[k] = [u - f * v for u, v in zip(other, row)]
    if r[j] != 0:
        f = r[j]
        r[:] = [u - f * v for u, v in zip(r, row)]
    basis[i] = j


def _run(T, r, basis, allowed):
    """Maximize the objective stored in r; returns (status, pivots)."""
    pivots = 0
    while True:
        j = next((k for k in allowed if r[k] > 0), None)
        if j is None:
            return OPTIMAL, pivots
        best = None
        for i, row in enumerate(T):
            if row[j] > 0:
                ratio = row[-1] / row[j]
                key = (ratio, basis[i])
                if best is None or key < best[0]:
                    best = (key, i)
        if best is None:
            return UNBOUNDED, pivots
        _pivot(T, r, basis, best[1], j)
        pivots += 1


def maximize(c, A, b) -> LPResult:
    """Maximize c.x subject to A x <= b and x >= 0, exactly."""
    m, n = len(A), len(c)
    c = [Fraction(v) for v in c]
    art = [i for i in range(m) if Fraction(b[i]) < 0]
    width = n + m + len(art)
    T = []
    basis = []
    for i in range(m):
        sign = -1 if i in art else 1
        row = [Fraction(sign * v) for v in A[i]]
        row += [Fraction(sign * int(k == i)) for k in range(m)]
        row += [Fraction(int(i == a)) for a in art]
        row.append(Fraction(sign) * Fraction(b[i]))
        T.append(row)
        basis.append(n + m + art.index(i) if i in art else n + i)

    pivots = 0
    if art:
        r = [Fraction(0)] * (width + 1)
        for i in art:
            for k in range(n + m):
                r[k] += T[i][k]
            r[-1] += T[i][-1]
        # r[-1] holds minus the phase-one objective value
        status, p = _run(T, r, basis, range(n + m))
        pivots += p
        if -r[-1] != 0:
            return LPResult(INFEASIBLE, pivots=pivots)
        # drive remaining artificials out of the basis
        for i in range(len(T) - 1, -1, -1):
            if basis[i] >= n + m:
                j = next((k for k in range(n + m) if T[i][k] != 0), None)
                if j is None:
                    del T[i]
                    del basis[i]
                else:
                    _pivot(T, [Fraction(0)] * (width + 1), basis, i, j)
                    pivots += 1
        T = [row[:n + m] + [row[-1]] for row in T]

    r = [Fraction(0)] * (n + m + 1)
    for k in range(n):
        r[k] = c[k]
    for i, j in enumerate(basis):
        cj = c[j] if j < n else Fraction(0)
        if cj:
            r = [u - cj * v for u, v in zip(r, T[i])]
    status, p = _run(T, r, basis, range(n + m))
    pivots += p
    if status == UNBOUNDED:
        return LPResult(UNBOUNDED, pivots=pivots)
    x = [Fraction(0)] * n
    for i, j in enumerate(basis):
        if j < n:
            x[j] = T[i][-1]
    return LPResult(OPTIMAL, tuple(x), -r[-1], pivots)

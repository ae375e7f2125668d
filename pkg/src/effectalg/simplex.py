"""Exact rational simplex for small dense problems.

Solves  max/min c.x  subject to  A x = b,  x >= 0  entirely in Fraction
arithmetic.  Pivoting follows Bland's rule (smallest eligible entering
index, smallest basic index on ratio ties), which guarantees termination
without any tolerance.  Intended for the state-polytope queries of this
package: tens of variables, hundreds of rows.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

try:
    # exact rationals either way; gmpy2 just pivots several times faster
    from gmpy2 import mpq as _Q
except ImportError:  # pragma: no cover
    _Q = Fraction

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"

_ZERO = _Q(0)
_ONE = _Q(1)


def _fraction(value) -> Fraction:
    return Fraction(int(value.numerator), int(value.denominator))


@dataclass(frozen=True)
class LPResult:
    status: str
    value: Optional[Fraction] = None
    x: Optional[tuple[Fraction, ...]] = None


def solve(
    num_vars: int,
    equalities: Sequence[tuple[Sequence[Fraction], Fraction]],
    objective: Optional[Sequence[Fraction]] = None,
    sense: str = "max",
) -> LPResult:
    """Two-phase simplex.  With objective None only feasibility is decided
    and any feasible basic point is returned with value None."""
    if sense not in ("max", "min"):
        raise ValueError(f"sense must be 'max' or 'min', got {sense!r}")

    m = len(equalities)
    ncols = num_vars + m  # original variables then one artificial per row
    rows: list[list] = []
    basis: list[int] = []
    for i, (coeffs, rhs) in enumerate(equalities):
        if len(coeffs) != num_vars:
            raise ValueError("coefficient row length mismatch")
        row = [_Q(v) for v in coeffs] + [_ZERO] * m + [_Q(rhs)]
        if row[-1] < 0:
            row = [-v for v in row]
        row[num_vars + i] = _ONE
        rows.append(row)
        basis.append(num_vars + i)

    # Phase I: maximize -(sum of artificials); feasible iff optimum is 0.
    # Invariant kept by _pivot: obj[j] is the reduced cost of column j and
    # obj[-1] is minus the objective value at the current basic solution.
    obj = [_ZERO] * (ncols + 1)
    for j in range(num_vars):
        obj[j] = sum(row[j] for row in rows)
    obj[ncols] = sum(row[-1] for row in rows)
    _optimize(rows, basis, obj, allowed=ncols)
    if obj[ncols] != 0:
        return LPResult(status=INFEASIBLE)

    _drive_out_artificials(rows, basis, num_vars)

    if objective is None:
        return LPResult(status=OPTIMAL, value=None, x=_extract(rows, basis, num_vars))

    cost = [_Q(v) for v in objective]
    if len(cost) != num_vars:
        raise ValueError("objective length mismatch")
    if sense == "min":
        cost = [-v for v in cost]

    # Phase II: rebuild the reduced-cost row for the real objective.
    obj = [_ZERO] * (ncols + 1)
    for j in range(num_vars):
        obj[j] = cost[j]
    for i, bi in enumerate(basis):
        cb = cost[bi] if bi < num_vars else _ZERO
        if cb == 0:
            continue
        for j in range(ncols + 1):
            obj[j] -= cb * rows[i][j]
    # obj[ncols] now holds -(objective value); keep that convention.
    status = _optimize(rows, basis, obj, allowed=num_vars)
    if status == UNBOUNDED:
        return LPResult(status=UNBOUNDED)
    value = -obj[ncols]
    if sense == "min":
        value = -value
    return LPResult(status=OPTIMAL, value=_fraction(value), x=_extract(rows, basis, num_vars))


def _optimize(rows, basis, obj, allowed: int) -> str:
    """Bland pivoting until no reduced cost among columns < allowed is
    positive.  Mutates rows/basis/obj in place."""
    while True:
        enter = -1
        for j in range(allowed):
            if obj[j] > 0:
                enter = j
                break
        if enter < 0:
            return OPTIMAL
        leave_row = -1
        best = None
        for i, row in enumerate(rows):
            a = row[enter]
            if a > 0:
                ratio = row[-1] / a
                if best is None or ratio < best or (
                    ratio == best and basis[i] < basis[leave_row]
                ):
                    best = ratio
                    leave_row = i
        if leave_row < 0:
            return UNBOUNDED
        _pivot(rows, obj, leave_row, enter)
        basis[leave_row] = enter


def _pivot(rows, obj, r: int, c: int) -> None:
    piv = rows[r][c]
    if piv != 1:
        rows[r] = [v / piv for v in rows[r]]
    prow = rows[r]
    width = len(prow)
    nonzero = [j for j in range(width) if prow[j]]
    for i, row in enumerate(rows):
        if i != r and row[c]:
            f = row[c]
            for j in nonzero:
                row[j] -= f * prow[j]
    if obj[c]:
        f = obj[c]
        for j in nonzero:
            obj[j] -= f * prow[j]


def _drive_out_artificials(rows, basis, num_vars: int) -> None:
    """Pivot basic artificials (necessarily at value 0) onto original
    columns; rows with no original coefficient are redundant and dropped."""
    i = 0
    while i < len(rows):
        if basis[i] < num_vars:
            i += 1
            continue
        col = next((j for j in range(num_vars) if rows[i][j] != 0), -1)
        if col < 0:
            del rows[i]
            del basis[i]
            continue
        dummy = [_ZERO] * len(rows[i])
        _pivot(rows, dummy, i, col)
        basis[i] = col
        i += 1


def _extract(rows, basis, num_vars: int) -> tuple[Fraction, ...]:
    x = [Fraction(0)] * num_vars
    for i, bi in enumerate(basis):
        if bi < num_vars:
            x[bi] = _fraction(rows[i][-1])
    return tuple(x)

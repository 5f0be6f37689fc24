"""Exact rank and linear solves by fraction-free (Bareiss) elimination."""

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

Matrix = Sequence[Sequence]


class SolveStatus(enum.Enum):
    unique = "unique"
    underdetermined = "underdetermined"
    inconsistent = "inconsistent"


@dataclass(frozen=True)
class LinearSolution:
    status: SolveStatus
    values: Optional[Tuple[Fraction, ...]]
    rank: int
    # first equation that cannot be satisfied, when inconsistent
    witness_row: Optional[int] = None


def integral_row(row: Sequence) -> List[int]:
    """Scale a row of rationals by the lcm of its denominators."""
    values = [Fraction(v) for v in row]
    scale = 1
    for v in values:
        scale = scale * v.denominator // math.gcd(scale, v.denominator)
    return [int(v * scale) for v in values]


def echelon(rows: Matrix) -> Tuple[List[List[int]], List[int], List[int]]:
    """Fraction-free row echelon form.

    Returns (matrix, pivot columns, original index of each echelon row).
    Pivots are chosen by scanning columns left to right and rows top to bottom.
    """
    a = [integral_row(r) for r in rows]
    order = list(range(len(a)))
    if not a:
        return a, [], order
    m, ncols = len(a), len(a[0])
    pivots: List[int] = []
    previous = 1
    r = 0
    for c in range(ncols):
        if r == m:
            break
        p = next((i for i in range(r, m) if a[i][c]), None)
        if p is None:
            continue
        if p != r:
            a[r], a[p] = a[p], a[r]
            order[r], order[p] = order[p], order[r]
        pivot = a[r][c]
        for i in range(r + 1, m):
            factor = a[i][c]
            row = a[i]
            for k in range(c + 1, ncols):
                row[k] = (pivot * row[k] - factor * a[r][k]) // previous
            row[c] = 0
        previous = pivot
        pivots.append(c)
        r += 1
    return a, pivots, order


def rank(rows: Matrix) -> int:
    return len(echelon(rows)[1])


def solve(rows: Matrix, rhs: Sequence) -> LinearSolution:
    """Solve rows . x = rhs exactly; free unknowns of an underdetermined system are set to 0."""
    if not rows:
        return LinearSolution(SolveStatus.underdetermined, None, 0)
    unknowns = len(rows[0])
    augmented = [list(r) + [b] for r, b in zip(rows, rhs)]
    a, pivots, order = echelon(augmented)
    if pivots and pivots[-1] == unknowns:
        return LinearSolution(SolveStatus.inconsistent, None, len(pivots) - 1, order[len(pivots) - 1])
    values = [Fraction(0)] * unknowns
    for r in range(len(pivots) - 1, -1, -1):
        c = pivots[r]
        acc = Fraction(a[r][unknowns])
        for k in range(c + 1, unknowns):
            acc -= a[r][k] * values[k]
        values[c] = acc / a[r][c]
    status = SolveStatus.unique if len(pivots) == unknowns else SolveStatus.underdetermined
    return LinearSolution(status, tuple(values), len(pivots))

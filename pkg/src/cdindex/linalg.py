"""Exact rational linear solving for the basis conversions.

Systems here are tiny (at most a few dozen columns, a few hundred rows) and
must be solved exactly: a nonzero residual is a meaningful mathematical
signal, not noise.  Plain Gaussian elimination over `fractions.Fraction`
is entirely adequate.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Optional, Sequence


def solve_int_columns(
    columns: Sequence[Mapping[str, int]], target: Mapping[str, int]
) -> Optional[list[int]]:
    """Solve sum_j x_j * columns[j] = target exactly.

    Columns and target are sparse vectors keyed by monomial.  Returns the
    integer coefficient list, or None when the system is inconsistent
    (target outside the column span).  The conversions this backs have
    linearly independent columns and integer solutions; a dependent system
    or fractional solution therefore raises, as it means a bug upstream.
    """
    rows = sorted(set(target) | {k for col in columns for k in col})
    ncols = len(columns)
    matrix = [
        [Fraction(col.get(row, 0)) for col in columns] + [Fraction(target.get(row, 0))]
        for row in rows
    ]
    pivot_cols: list[int] = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(matrix)) if matrix[i][c]), None)
        if pivot is None:
            continue
        matrix[r], matrix[pivot] = matrix[pivot], matrix[r]
        pv = matrix[r][c]
        matrix[r] = [x / pv for x in matrix[r]]
        for i in range(len(matrix)):
            if i != r and matrix[i][c]:
                factor = matrix[i][c]
                matrix[i] = [a - factor * b for a, b in zip(matrix[i], matrix[r])]
        pivot_cols.append(c)
        r += 1
    if len(pivot_cols) != ncols:
        raise ValueError("dependent columns: conversion basis is broken")
    for i in range(r, len(matrix)):
        if matrix[i][ncols]:
            return None
    solution = [Fraction(0)] * ncols
    for row, c in enumerate(pivot_cols):
        solution[c] = matrix[row][ncols]
    if any(x.denominator != 1 for x in solution):
        raise ValueError("non-integer solution: conversion basis is broken")
    return [int(x) for x in solution]

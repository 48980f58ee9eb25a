"""Punctured-count evaluation from the solved table.

A query (p, q, r, d) asks for the degree-d count of rational curves with
incoming contact orders p and q and one point-constrained output of order
r (recorded with positive sign).  Legal queries satisfy the grading
p + q - r = 3d.  For d = 0 the count is 1 exactly on the diagonal
r = p + q; for r = 0 it is the stored three-point count; otherwise it
reduces to two-point counts:

    value = (q - r) N(p, q - r) + (p - r) N(q, p - r)

with the vanishing rules applied inside the lookups.  Off-grading tuples
name no count; they are rejected rather than silently zeroed, unless the
caller explicitly opts into a lenient zero for batch exploration.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import GradingError
from .exact import ZERO
from .table import InvariantTable, degree_zero_three_point


def punctured_invariant(
    p: int,
    q: int,
    r: int,
    d: int,
    table: InvariantTable,
    allow_offgrade: bool = False,
) -> Fraction:
    """Evaluate one punctured count; see the module docstring for the cases."""
    if p < 0 or q < 0 or r < 0:
        raise ValueError("contact orders must be non-negative")
    if d < 0:
        raise ValueError("curve degree must be non-negative")
    if p + q - r != 3 * d:
        if allow_offgrade:
            return ZERO
        raise GradingError(
            f"grading violation: p + q - r = {p + q - r} but 3d = {3 * d}"
        )
    if d == 0:
        return degree_zero_three_point(p, q, r)
    if r == 0:
        return table.three_point_r0_value(p, q)
    return (q - r) * table.two_point_value(p, q - r) + (p - r) * table.two_point_value(
        q, p - r
    )


def punctured_table(
    d: int, table: InvariantTable, cap: int
) -> list[tuple[int, int, int, Fraction]]:
    """Every legal query with p, q <= cap at degree d, evaluated.

    Rows are (p, q, r, value) with r = p + q - 3d, listed for r >= 0 in
    lexicographic (p, q) order.
    """
    if cap < 0:
        raise ValueError("cap must be non-negative")
    rows = []
    for p in range(cap + 1):
        for q in range(cap + 1):
            r = p + q - 3 * d
            if r < 0:
                continue
            rows.append((p, q, r, punctured_invariant(p, q, r, d, table)))
    return rows

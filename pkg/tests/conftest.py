"""Shared fixtures: hand-committed known tables and session-solved tables."""

from fractions import Fraction

import pytest

from cubicgw import InvariantTable, UnknownId, compute_up_to

# Known low-degree values, used both to seed hand-built tables and as the
# expected output of the solver.
DEGREE1_SOLUTION = {
    UnknownId.two_point(1, 2): Fraction(1),
    UnknownId.two_point(2, 1): Fraction(4),
    UnknownId.three_point_r0(1, 2): Fraction(6),
}

DEGREE2_SOLUTION = {
    UnknownId.two_point(1, 5): Fraction(1),
    UnknownId.two_point(2, 4): Fraction(7, 2),
    UnknownId.two_point(3, 3): Fraction(9),
    UnknownId.two_point(4, 2): Fraction(14),
    UnknownId.two_point(5, 1): Fraction(25),
    UnknownId.three_point_r0(1, 5): Fraction(30),
    UnknownId.three_point_r0(2, 4): Fraction(42),
    UnknownId.three_point_r0(3, 3): Fraction(54),
}


def build_known_table(through_degree: int) -> InvariantTable:
    table = InvariantTable.empty()
    if through_degree >= 1:
        table = table.commit_degree(1, DEGREE1_SOLUTION)
    if through_degree >= 2:
        table = table.commit_degree(2, DEGREE2_SOLUTION)
    if through_degree > 2:
        raise ValueError("known values stop at degree 2")
    return table


@pytest.fixture
def table_d1() -> InvariantTable:
    return build_known_table(1)


@pytest.fixture
def table_d2() -> InvariantTable:
    return build_known_table(2)


@pytest.fixture(scope="session")
def solved_d3() -> InvariantTable:
    return compute_up_to(3)

"""Invariant table: vanishing rules, commits, serialization, lookup modes."""

from fractions import Fraction

import pytest

from cubicgw import (
    InvariantTable,
    LinForm,
    SymbolicMode,
    TableCommitError,
    UnknownId,
    UnsolvedDegreeError,
    degree_unknown_ids,
    degree_zero_three_point,
    three_point_ids,
    two_point_ids,
    vanishes,
)
from conftest import DEGREE1_SOLUTION, DEGREE2_SOLUTION


class TestVanishingRules:
    def test_exhaustive_scan(self, table_d2):
        for a in range(-5, 16):
            for b in range(-5, 16):
                if a <= 0 or b <= 0 or (a + b) % 3:
                    assert table_d2.two_point_value(a, b) == 0
                    assert table_d2.three_point_r0_value(a, b) == 0
                else:
                    assert not vanishes(a, b)

    def test_negative_order(self, table_d1):
        assert table_d1.two_point_value(4, -1) == 0

    def test_indivisible_sum(self, table_d1):
        assert table_d1.two_point_value(2, 2) == 0

    def test_zero_order_three_point(self, table_d1):
        assert table_d1.three_point_r0_value(0, 3) == 0


class TestLookups:
    def test_known_two_point(self, table_d2):
        assert table_d2.two_point_value(1, 2) == 1
        assert table_d2.two_point_value(2, 4) == Fraction(7, 2)

    def test_known_three_point(self, table_d2):
        assert table_d2.three_point_r0_value(1, 2) == 6
        assert table_d2.three_point_r0_value(3, 3) == 54

    def test_three_point_symmetry(self, table_d2):
        for a in range(-3, 9):
            for b in range(-3, 9):
                try:
                    left = table_d2.three_point_r0_value(a, b)
                    right = table_d2.three_point_r0_value(b, a)
                except UnsolvedDegreeError:
                    continue
                assert left == right

    def test_unsolved_degree_raises(self, table_d1):
        with pytest.raises(UnsolvedDegreeError):
            table_d1.two_point_value(2, 4)
        with pytest.raises(UnsolvedDegreeError):
            table_d1.three_point_r0_value(3, 3)


class TestDegreeZero:
    def test_diagonal(self):
        assert degree_zero_three_point(2, 3, 5) == 1

    def test_off_diagonal(self):
        assert degree_zero_three_point(2, 3, 4) == 0

    def test_origin(self):
        assert degree_zero_three_point(0, 0, 0) == 1

    def test_indicator_shape(self):
        for p in range(6):
            for q in range(6):
                for r in range(12):
                    value = degree_zero_three_point(p, q, r)
                    assert value in (0, 1)
                    assert (value == 1) == (r == p + q)

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            degree_zero_three_point(-1, 0, 0)


class TestUnknownEnumeration:
    def test_counts(self):
        assert len(two_point_ids(1)) == 2
        assert len(three_point_ids(1)) == 1
        assert len(two_point_ids(2)) == 5
        assert len(three_point_ids(2)) == 3
        assert len(degree_unknown_ids(3)) == 8 + 4

    def test_canonical_three_point(self):
        for uid in three_point_ids(4):
            assert uid.a <= uid.b


class TestCommit:
    def test_commit_degree_one(self):
        table = InvariantTable.empty().commit_degree(1, DEGREE1_SOLUTION)
        assert table.solved_through_degree == 1
        assert table.two_point_value(2, 1) == 4

    def test_commit_degree_two(self, table_d1):
        table = table_d1.commit_degree(2, DEGREE2_SOLUTION)
        assert table.solved_through_degree == 2
        assert table.three_point_r0_value(5, 1) == 30

    def test_degree_gap_rejected(self, table_d1):
        with pytest.raises(TableCommitError):
            table_d1.commit_degree(3, {})

    def test_missing_unknown_rejected(self, table_d1):
        partial = dict(DEGREE2_SOLUTION)
        del partial[UnknownId.two_point(3, 3)]
        with pytest.raises(TableCommitError):
            table_d1.commit_degree(2, partial)

    def test_extra_unknown_rejected(self):
        bloated = dict(DEGREE1_SOLUTION)
        bloated[UnknownId.two_point(2, 4)] = Fraction(0)
        with pytest.raises(TableCommitError):
            InvariantTable.empty().commit_degree(1, bloated)

    def test_commit_does_not_mutate(self, table_d1):
        table_d1.commit_degree(2, DEGREE2_SOLUTION)
        assert table_d1.solved_through_degree == 1


class TestSerialization:
    def test_json_round_trip(self, table_d2):
        clone = InvariantTable.from_json(table_d2.to_json())
        assert clone == table_d2

    def test_json_schema_fields(self, table_d1):
        data = table_d1.to_json_dict()
        assert data["solved_through_degree"] == 1
        assert {"a": 1, "b": 2, "value": "1"} in data["two_point"]
        assert {"a": 1, "b": 2, "d": 1, "value": "6"} in data["three_point_r0"]

    def test_json_fraction_strings(self, table_d2):
        data = table_d2.to_json_dict()
        values = {(row["a"], row["b"]): row["value"] for row in data["two_point"]}
        assert values[(2, 4)] == "7/2"

    def test_incomplete_json_rejected(self, table_d2):
        data = table_d2.to_json_dict()
        data["two_point"] = data["two_point"][1:]
        with pytest.raises(ValueError):
            InvariantTable.from_json_dict(data)

    def test_csv_columns(self, table_d2):
        lines = table_d2.to_csv().splitlines()
        assert lines[0] == "kind,a,b,d,value"
        assert "two_point,2,4,2,7/2" in lines
        assert "three_point_r0,3,3,2,54" in lines


class TestSymbolicMode:
    def test_solved_degree_is_concrete(self, table_d1):
        mode = SymbolicMode(table_d1, 2)
        assert mode.two_point(1, 2) == 1

    def test_working_degree_is_unknown(self, table_d1):
        mode = SymbolicMode(table_d1, 2)
        value = mode.two_point(2, 4)
        assert isinstance(value, LinForm)
        assert value.unknowns() == (UnknownId.two_point(2, 4),)

    def test_pin_overrides_unknown(self, table_d1):
        pins = {UnknownId.two_point(5, 1): Fraction(25)}
        mode = SymbolicMode(table_d1, 2, pins)
        assert mode.two_point(5, 1) == 25
        assert isinstance(mode.two_point(1, 5), LinForm)

    def test_vanishing_applies(self, table_d1):
        mode = SymbolicMode(table_d1, 2)
        assert mode.two_point(0, 6) == 0
        assert mode.three_point_r0(-1, 7) == 0

    def test_wrong_working_degree_rejected(self, table_d1):
        with pytest.raises(ValueError):
            SymbolicMode(table_d1, 3)

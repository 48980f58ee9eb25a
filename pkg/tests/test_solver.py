"""Equation generation and exact solving."""

from fractions import Fraction

import pytest

from cubicgw import (
    InconsistentSystemError,
    InvariantTable,
    LinForm,
    UnknownId,
    UnsolvedDegreeError,
    compute_up_to,
    compute_up_to_with_reports,
    default_slab_table,
    generate_equations,
    rational,
    seed_bottom,
    seed_top,
    solve_degree,
    verify_two_point_relations,
)
from conftest import DEGREE1_SOLUTION, DEGREE2_SOLUTION, build_known_table


def normalized(form: LinForm) -> LinForm:
    return form.normalized()


def contains_equation(equations, form: LinForm) -> bool:
    want = form.normalized()
    return any(eq.lhs_minus_rhs == want for eq in equations)


class TestGenerateEquations:
    def test_degree1_known_equations(self):
        equations = generate_equations(1, InvariantTable.empty(), 3)
        n12 = LinForm.unknown(UnknownId.two_point(1, 2))
        n21 = LinForm.unknown(UnknownId.two_point(2, 1))
        n120 = LinForm.unknown(UnknownId.three_point_r0(1, 2))
        assert contains_equation(equations, 2 * n12 + n120 - 2 * n21)
        assert contains_equation(equations, 4 * n12 - n21)

    def test_degree2_known_equations(self, table_d1):
        equations = generate_equations(2, table_d1, 6)
        n15 = LinForm.unknown(UnknownId.two_point(1, 5))
        n24 = LinForm.unknown(UnknownId.two_point(2, 4))
        n33 = LinForm.unknown(UnknownId.two_point(3, 3))
        n150 = LinForm.unknown(UnknownId.three_point_r0(1, 5))
        n330 = LinForm.unknown(UnknownId.three_point_r0(3, 3))
        assert contains_equation(equations, 5 * n15 + 4 * n24 + rational(8) - 3 * n33)
        assert contains_equation(equations, n330 - n150 - rational(24))

    def test_provenance_records_t_power(self, table_d1):
        for eq in generate_equations(2, table_d1, 6):
            assert eq.provenance[4] == 2

    def test_requires_previous_degrees(self):
        with pytest.raises(UnsolvedDegreeError):
            generate_equations(2, InvariantTable.empty(), 6)

    def test_deduplication(self, table_d1):
        equations = generate_equations(2, table_d1, 6)
        keys = {(eq.lhs_minus_rhs.constant, eq.lhs_minus_rhs.terms) for eq in equations}
        assert len(keys) == len(equations)

    def test_corrupted_table_detected(self):
        # A wrong degree-1 commit must surface as a residue below t^2.
        bad = dict(DEGREE1_SOLUTION)
        bad[UnknownId.two_point(2, 1)] = Fraction(5)
        table = InvariantTable.empty().commit_degree(1, bad)
        with pytest.raises(InconsistentSystemError):
            generate_equations(2, table, 6)


class TestSolveDegree:
    def test_degree1(self):
        report = solve_degree(1, InvariantTable.empty(), (Fraction(4), Fraction(1)))
        assert report.consistent
        assert report.solution == DEGREE1_SOLUTION
        assert report.num_unknowns == 1
        assert report.rank == 1

    def test_degree2(self, table_d1):
        report = solve_degree(2, table_d1, (Fraction(25), Fraction(1)))
        assert report.consistent
        assert report.solution == DEGREE2_SOLUTION
        assert report.rank == report.num_unknowns == 6

    def test_perturbed_seeds_still_consistent(self, table_d1):
        # (0, 0) respects the scaling identity between the two pins, so the
        # system stays solvable; the output is simply wrong geometry.
        report = solve_degree(2, table_d1, (Fraction(0), Fraction(0)))
        assert report.consistent
        assert report.solution != DEGREE2_SOLUTION

    def test_seeds_violating_scaling_identity_detected(self, table_d1):
        # The equations imply 25 N(1,5) = N(5,1); pins with top != 25 * bottom
        # therefore make the system inconsistent, with provenance attached.
        with pytest.raises(InconsistentSystemError) as info:
            solve_degree(2, table_d1, (Fraction(1), Fraction(1)))
        assert info.value.provenance is not None

    def test_resubstitution_zeroes_every_equation(self, table_d1):
        report = solve_degree(
            2, table_d1, (Fraction(25), Fraction(1)), keep_equations=True
        )
        unpinned = {
            uid: value
            for uid, value in report.solution.items()
            if uid not in (UnknownId.two_point(5, 1), UnknownId.two_point(1, 5))
        }
        for eq in report.equations:
            assert eq.lhs_minus_rhs.substitute(unpinned).as_constant() == 0

    def test_bound_stability_low_degrees(self):
        slab = default_slab_table()
        table = InvariantTable.empty()
        for d in range(1, 4):
            top = seed_top(d, slab)
            seeds = (top, seed_bottom(d, top))
            base = solve_degree(d, table, seeds, 3 * d)
            wide = solve_degree(d, table, seeds, 3 * d + 2)
            assert base.solution == wide.solution
            table = table.commit_degree(d, base.solution)

    def test_report_json(self, table_d1):
        report = solve_degree(2, table_d1, (Fraction(25), Fraction(1)))
        data = report.to_json_dict()
        assert data["degree"] == 2
        assert data["rank"] == 6
        assert data["consistent"] is True
        assert data["solution"]["N(2,4)"] == "7/2"
        assert data["solution"]["N(5,1)"] == "25"


class TestComputeUpTo:
    def test_degree1_table(self):
        table = compute_up_to(1)
        assert table.solved_through_degree == 1
        assert len(table.two_point) == 2
        assert len(table.three_point_r0) == 1

    def test_degree2_matches_known_values(self):
        assert compute_up_to(2) == build_known_table(2)

    def test_degree3_seeded_values(self, solved_d3):
        assert solved_d3.two_point_value(8, 1) == 256
        assert solved_d3.two_point_value(1, 8) == 4

    def test_failure_carries_degree(self):
        with pytest.raises(Exception) as info:
            compute_up_to(6)
        assert getattr(info.value, "degree", None) == 6

    def test_reports_shape(self):
        _, reports = compute_up_to_with_reports(2)
        assert [r.degree for r in reports] == [1, 2]
        assert all(r.consistent for r in reports)


class TestRelations:
    def test_solved_table_satisfies_relations(self, table_d2):
        assert verify_two_point_relations(table_d2)

    def test_perturbed_value_fails(self, table_d1):
        perturbed = dict(DEGREE2_SOLUTION)
        perturbed[UnknownId.two_point(3, 3)] = Fraction(10)
        table = table_d1.commit_degree(2, perturbed)
        assert not verify_two_point_relations(table)

    def test_all_zero_fails(self, table_d1):
        zeros = {uid: Fraction(0) for uid in DEGREE2_SOLUTION}
        table = table_d1.commit_degree(2, zeros)
        assert not verify_two_point_relations(table)

    def test_needs_degree_two(self, table_d1):
        with pytest.raises(UnsolvedDegreeError):
            verify_two_point_relations(table_d1)


class TestEquationText:
    def test_format(self, table_d1):
        equations = generate_equations(2, table_d1, 6)
        text = equations[0].text()
        assert text.endswith("= 0")
        assert text.startswith("(p=")

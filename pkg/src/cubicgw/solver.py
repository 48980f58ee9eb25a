"""Constraint generation and exact solving, one curve degree at a time.

For every triple (p, q, r) of positive generator indices the two
associations of theta_p * theta_q * theta_r must agree.  Expanding both at
truncation bound d, with the degree-d counts left symbolic, splits the
difference by generator index and t-power:

* coefficients at t^k for k < d contain solved constants only and must
  cancel identically; the generator checks this and treats any residue as
  an inconsistency in the committed table;
* coefficients at t^d are affine-linear in the degree-d unknowns and
  become equations.

Pinning the two seed counts N(3d-1, 1) and N(1, 3d-1) to their configured
values leaves a linear system that exact Gaussian elimination over the
rationals solves uniquely; the solution is re-substituted into every
generated equation before it is accepted.  Equations are deduplicated by
their normalized form (leading coefficient scaled to 1), so the output is
the same whatever order triples are visited in.

The default triple enumeration bound is 3d.  Generator indices above 3d
contribute nothing new at t^d, but the bound can be raised to cross-check
that the solution is stable under a larger system.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .errors import (
    CubicGWError,
    InconsistentSystemError,
    UnderdeterminedSystemError,
    UnsolvedDegreeError,
)
from .exact import ZERO, LinForm, UnknownId, format_rational, rational
from .ring import mul, mul_basis, theta
from .seeds import SlabCoefficients, default_slab_table, seed_bottom, seed_top
from .table import InvariantTable, SymbolicMode, degree_unknown_ids

LOG = logging.getLogger(__name__)

Provenance = tuple[int, int, int, int, int]


@dataclass(frozen=True)
class Equation:
    """One normalized constraint lhs_minus_rhs = 0 and where it came from.

    provenance = (p, q, r, theta_index, t_power): the generator triple whose
    two association orders were compared, the generator index whose series
    was read, and the t-power of the coefficient.
    """

    lhs_minus_rhs: LinForm
    provenance: Provenance

    def text(self, machine: bool = False) -> str:
        p, q, r, s, k = self.provenance
        return (
            f"(p={p}, q={q}, r={r}) theta_{s} t^{k}: "
            f"{self.lhs_minus_rhs.text(machine=machine)} = 0"
        )


@dataclass(frozen=True)
class SolveReport:
    """Outcome of one degree: system shape, rank, and the full solution.

    ``solution`` includes the pinned seed values, so it covers every legal
    unknown of the degree; ``num_unknowns`` and ``rank`` describe only the
    eliminated (unpinned) part.  ``equations`` is retained only when the
    caller asked for it and never serialized.
    """

    degree: int
    num_unknowns: int
    num_equations: int
    rank: int
    solution: Mapping[UnknownId, Fraction]
    consistent: bool
    equations: tuple[Equation, ...] | None = None

    def to_json_dict(self) -> dict:
        return {
            "degree": self.degree,
            "num_unknowns": self.num_unknowns,
            "num_equations": self.num_equations,
            "rank": self.rank,
            "consistent": self.consistent,
            "solution": {
                uid.key: format_rational(value)
                for uid, value in sorted(self.solution.items(), key=lambda kv: kv[0].sort_key)
            },
        }


def generate_equations(
    d: int,
    table: InvariantTable,
    triple_bound: int,
    pins: Mapping[UnknownId, Fraction] | None = None,
) -> list[Equation]:
    """All distinct degree-d constraints from triples 1 <= p, q, r <= triple_bound.

    With ``pins`` given, the pinned unknowns enter as constants and equations
    that collapse to 0 = 0 are dropped; without pins the system is fully
    symbolic in the degree-d unknowns.
    """
    if d < 1:
        raise ValueError("working degree starts at 1")
    if triple_bound < 1:
        raise ValueError("triple bound must be positive")
    if table.solved_through_degree != d - 1:
        raise UnsolvedDegreeError(
            f"generating degree {d} needs a table solved through {d - 1}, "
            f"have {table.solved_through_degree}"
        )
    mode = SymbolicMode(table, d, pins)
    found: dict[tuple, Equation] = {}
    for p in range(1, triple_bound + 1):
        for q in range(1, triple_bound + 1):
            inner_pq = mul_basis(p, q, mode)
            for r in range(1, triple_bound + 1):
                left = mul(inner_pq, theta(r, d), mode)
                right = mul(theta(p, d), mul_basis(q, r, mode), mode)
                difference = left - right
                for s, series in difference.terms:
                    for k in series.support():
                        c = series.coefficient(k)
                        form = c if isinstance(c, LinForm) else LinForm.const(c)
                        if k < d:
                            # Solved-degree coefficients must already cancel.
                            assert form.is_constant, "unknown leaked below t^d"
                            raise InconsistentSystemError(
                                f"committed values violate associativity at triple "
                                f"({p},{q},{r}), generator {s}, t^{k}: residue "
                                f"{format_rational(form.constant)}",
                                provenance=(p, q, r, s, k),
                            )
                        normalized = form.normalized()
                        key = (normalized.constant, normalized.terms)
                        provenance = (p, q, r, s, k)
                        known = found.get(key)
                        if known is None or provenance < known.provenance:
                            found[key] = Equation(normalized, provenance)
    return sorted(found.values(), key=lambda eq: eq.provenance)


def _solve_linear_system(
    equations: list[Equation], unknowns: list[UnknownId]
) -> tuple[dict[UnknownId, Fraction], int]:
    """Exact Gauss-Jordan elimination; raises on free unknowns or 0 = c rows."""
    n = len(unknowns)
    column = {uid: i for i, uid in enumerate(unknowns)}
    rows: list[list[Fraction]] = []
    labels: list[Provenance] = []
    for eq in equations:
        vec = [ZERO] * (n + 1)
        for uid, coeff in eq.lhs_minus_rhs.terms:
            if uid not in column:
                raise ValueError(f"equation references unexpected unknown {uid.key}")
            vec[column[uid]] = coeff
        vec[n] = -eq.lhs_minus_rhs.constant
        rows.append(vec)
        labels.append(eq.provenance)

    rank = 0
    pivot_columns: list[int] = []
    for col in range(n):
        pivot = None
        best = None
        for i in range(rank, len(rows)):
            if rows[i][col]:
                weight = (sum(1 for x in rows[i][:n] if x), i)
                if best is None or weight < best:
                    best = weight
                    pivot = i
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        labels[rank], labels[pivot] = labels[pivot], labels[rank]
        pivot_value = rows[rank][col]
        for i in range(len(rows)):
            if i == rank or not rows[i][col]:
                continue
            factor = rows[i][col] / pivot_value
            target, source = rows[i], rows[rank]
            for j in range(col, n + 1):
                if source[j]:
                    target[j] -= factor * source[j]
        pivot_columns.append(col)
        rank += 1

    free = [unknowns[c] for c in range(n) if c not in set(pivot_columns)]
    if free:
        raise UnderdeterminedSystemError(
            f"system leaves {len(free)} unknown(s) free: "
            + ", ".join(u.key for u in free),
            free_unknowns=free,
        )
    for i in range(rank, len(rows)):
        if rows[i][n]:
            raise InconsistentSystemError(
                f"no exact solution: equation from triple {labels[i][:3]} reduces "
                f"to 0 = {format_rational(rows[i][n])}",
                provenance=labels[i],
            )
    solution = {
        unknowns[col]: rows[i][n] / rows[i][col]
        for i, col in enumerate(pivot_columns)
    }
    return solution, rank


def solve_degree(
    d: int,
    table: InvariantTable,
    seeds: tuple[Fraction, Fraction],
    triple_bound: int | None = None,
    keep_equations: bool = False,
) -> SolveReport:
    """Pin the two seed counts, build the degree-d system, solve it exactly."""
    top, bottom = seeds
    pins = {
        UnknownId.two_point(3 * d - 1, 1): rational(top),
        UnknownId.two_point(1, 3 * d - 1): rational(bottom),
    }
    bound = 3 * d if triple_bound is None else triple_bound
    equations = generate_equations(d, table, bound, pins=pins)
    unknowns = [uid for uid in degree_unknown_ids(d) if uid not in pins]
    solution, rank = _solve_linear_system(equations, unknowns)

    for eq in equations:
        residue = eq.lhs_minus_rhs.substitute(solution)
        if residue.as_constant() != 0:
            raise InconsistentSystemError(
                f"solution fails re-substitution: {eq.text()}",
                provenance=eq.provenance,
            )

    full = dict(pins)
    full.update(solution)
    return SolveReport(
        degree=d,
        num_unknowns=len(unknowns),
        num_equations=len(equations),
        rank=rank,
        solution=full,
        consistent=True,
        equations=tuple(equations) if keep_equations else None,
    )


def compute_up_to_with_reports(
    max_degree: int,
    slab: SlabCoefficients | None = None,
    triple_bound: int | None = None,
    keep_equations: bool = False,
) -> tuple[InvariantTable, list[SolveReport]]:
    """Seed, solve and commit every degree 1..max_degree; return table and reports.

    Any per-degree failure is re-raised with the failing degree attached as a
    ``degree`` attribute.  When no explicit triple bound is given and a degree
    comes out rank-deficient at the default bound 3d, the solve is retried
    once at 3d + 2 and the event logged.
    """
    if max_degree < 0:
        raise ValueError("max degree must be non-negative")
    slab = default_slab_table() if slab is None else slab
    table = InvariantTable.empty()
    reports: list[SolveReport] = []
    for d in range(1, max_degree + 1):
        try:
            top = seed_top(d, slab)
            bottom = seed_bottom(d, top)
            bound = 3 * d if triple_bound is None else triple_bound
            try:
                report = solve_degree(d, table, (top, bottom), bound, keep_equations)
            except UnderdeterminedSystemError as err:
                if triple_bound is not None:
                    raise
                LOG.warning(
                    "degree %d: %s at triple bound %d; retrying at %d",
                    d, err, bound, bound + 2,
                )
                report = solve_degree(d, table, (top, bottom), bound + 2, keep_equations)
        except CubicGWError as err:
            err.degree = d
            raise
        table = table.commit_degree(d, report.solution)
        reports.append(report)
    return table, reports


def compute_up_to(
    max_degree: int,
    slab: SlabCoefficients | None = None,
    triple_bound: int | None = None,
) -> InvariantTable:
    """The solved table through max_degree (see compute_up_to_with_reports)."""
    table, _ = compute_up_to_with_reports(max_degree, slab, triple_bound)
    return table


def verify_two_point_relations(table: InvariantTable) -> bool:
    """Check the four degree-2 relations among the two-point counts.

    25 N(1,5) = N(5,1);  2 N(2,4) = 5 N(1,5) + 2;
    N(3,3) = 5 N(1,5) + 4;  N(4,2) = 10 N(1,5) + 4.
    """
    if table.solved_through_degree < 2:
        raise UnsolvedDegreeError("relations need a table solved through degree 2")
    n15 = table.two_point_value(1, 5)
    n51 = table.two_point_value(5, 1)
    n24 = table.two_point_value(2, 4)
    n42 = table.two_point_value(4, 2)
    n33 = table.two_point_value(3, 3)
    return (
        25 * n15 == n51
        and 2 * n24 == 5 * n15 + 2
        and n33 == 5 * n15 + 4
        and n42 == 10 * n15 + 4
    )

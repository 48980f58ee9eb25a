"""Canonical store of solved curve counts, with the vanishing rules baked in.

Two families are stored:

* two-point counts N(a, b): rational curves of degree (a+b)/3 tangent to
  the cubic to order ``a`` at a free point and order ``b`` at a fixed
  point.  Asymmetric in (a, b).
* three-point counts: degree-d rational curves tangent to orders ``a`` and
  ``b`` at two free points, through a fixed point away from the cubic.
  Symmetric in (a, b); keys canonicalized to a <= b.

Keys with a non-positive order, or whose orders do not sum to a multiple
of 3, resolve to zero by rule and are never stored: a degree-d curve meets
the cubic with total tangency 3d, and assigning zero to the zero-order
keys is exactly what makes the order-0 generator act as the ring identity.

The table is append-only, one degree at a time, and every lookup past the
solved range raises instead of guessing.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from .errors import TableCommitError, UnsolvedDegreeError
from .exact import (
    THREE_POINT_R0,
    TWO_POINT,
    ZERO,
    LinForm,
    UnknownId,
    format_rational,
    rational,
)


def vanishes(a: int, b: int) -> bool:
    """True when the pair of contact orders names no curve count."""
    return a <= 0 or b <= 0 or (a + b) % 3 != 0


def degree_zero_three_point(p: int, q: int, r: int) -> Fraction:
    """Degree-0 punctured count: 1 exactly on the diagonal r = p + q."""
    if p < 0 or q < 0 or r < 0:
        raise ValueError("contact orders must be non-negative")
    return Fraction(1) if r == p + q else ZERO


def two_point_ids(d: int) -> list[UnknownId]:
    """Every two-point unknown of curve degree d, in canonical order."""
    return [UnknownId.two_point(a, 3 * d - a) for a in range(1, 3 * d)]


def three_point_ids(d: int) -> list[UnknownId]:
    """Every three-point unknown of curve degree d (a <= b), in order."""
    return [UnknownId.three_point_r0(a, 3 * d - a) for a in range(1, 3 * d // 2 + 1)]


def degree_unknown_ids(d: int) -> list[UnknownId]:
    return two_point_ids(d) + three_point_ids(d)


@dataclass(frozen=True)
class InvariantTable:
    """Solved counts through ``solved_through_degree``, complete per degree."""

    solved_through_degree: int = 0
    two_point: Mapping[tuple[int, int], Fraction] = field(default_factory=dict)
    three_point_r0: Mapping[tuple[int, int, int], Fraction] = field(default_factory=dict)

    @staticmethod
    def empty() -> "InvariantTable":
        return InvariantTable(0, {}, {})

    # -- lookups -------------------------------------------------------------

    def two_point_value(self, a: int, b: int) -> Fraction:
        if vanishes(a, b):
            return ZERO
        d = (a + b) // 3
        if d > self.solved_through_degree:
            raise UnsolvedDegreeError(
                f"unsolved degree: two-point count ({a},{b}) needs degree {d}, "
                f"table is solved through {self.solved_through_degree}"
            )
        return self.two_point[(a, b)]

    def three_point_r0_value(self, a: int, b: int) -> Fraction:
        if a > b:
            a, b = b, a
        if vanishes(a, b):
            return ZERO
        d = (a + b) // 3
        if d > self.solved_through_degree:
            raise UnsolvedDegreeError(
                f"unsolved degree: three-point count ({a},{b}) needs degree {d}, "
                f"table is solved through {self.solved_through_degree}"
            )
        return self.three_point_r0[(a, b, d)]

    def value_of(self, uid: UnknownId) -> Fraction:
        if uid.kind == TWO_POINT:
            return self.two_point_value(uid.a, uid.b)
        return self.three_point_r0_value(uid.a, uid.b)

    def entries_for_degree(self, d: int) -> list[tuple[UnknownId, Fraction]]:
        """The solved (unknown, value) rows of one degree, in canonical order."""
        if d < 1 or d > self.solved_through_degree:
            raise UnsolvedDegreeError(f"degree {d} is not solved")
        return [(uid, self.value_of(uid)) for uid in degree_unknown_ids(d)]

    # -- growth ---------------------------------------------------------------

    def commit_degree(
        self, d: int, solution: Mapping[UnknownId, Fraction]
    ) -> "InvariantTable":
        """Return a new table extended by the full degree-d solution."""
        if d != self.solved_through_degree + 1:
            raise TableCommitError(
                f"degree gap: cannot commit degree {d} onto a table solved "
                f"through {self.solved_through_degree}"
            )
        expected = degree_unknown_ids(d)
        missing = [u.key for u in expected if u not in solution]
        if missing:
            raise TableCommitError(f"missing unknowns in commit: {', '.join(missing)}")
        extra = [u.key for u in solution if u not in set(expected)]
        if extra:
            raise TableCommitError(f"unexpected unknowns in commit: {', '.join(extra)}")
        two = dict(self.two_point)
        three = dict(self.three_point_r0)
        for uid in expected:
            value = rational(solution[uid])
            if uid.kind == TWO_POINT:
                two[(uid.a, uid.b)] = value
            else:
                three[(uid.a, uid.b, uid.d)] = value
        return InvariantTable(d, two, three)

    # -- serialization ---------------------------------------------------------

    def to_json_dict(self) -> dict:
        two = [
            {"a": a, "b": b, "value": format_rational(v)}
            for (a, b), v in sorted(
                self.two_point.items(), key=lambda kv: ((kv[0][0] + kv[0][1]) // 3, kv[0][0])
            )
        ]
        three = [
            {"a": a, "b": b, "d": d, "value": format_rational(v)}
            for (a, b, d), v in sorted(
                self.three_point_r0.items(), key=lambda kv: (kv[0][2], kv[0][0])
            )
        ]
        return {
            "solved_through_degree": self.solved_through_degree,
            "two_point": two,
            "three_point_r0": three,
        }

    def to_json(self, indent: int = 2) -> str:
        return json.dumps(self.to_json_dict(), indent=indent) + "\n"

    @staticmethod
    def from_json_dict(data: dict) -> "InvariantTable":
        solved = data["solved_through_degree"]
        two = {
            (row["a"], row["b"]): rational(row["value"]) for row in data["two_point"]
        }
        three = {
            (row["a"], row["b"], row["d"]): rational(row["value"])
            for row in data["three_point_r0"]
        }
        table = InvariantTable(solved, two, three)
        table._check_complete()
        return table

    @staticmethod
    def from_json(text: str) -> "InvariantTable":
        return InvariantTable.from_json_dict(json.loads(text))

    def _check_complete(self) -> None:
        expected_two = set()
        expected_three = set()
        for d in range(1, self.solved_through_degree + 1):
            expected_two.update((u.a, u.b) for u in two_point_ids(d))
            expected_three.update((u.a, u.b, u.d) for u in three_point_ids(d))
        if set(self.two_point) != expected_two or set(self.three_point_r0) != expected_three:
            raise ValueError(
                "table keys do not match the legal key set for "
                f"degrees 1..{self.solved_through_degree}"
            )

    def to_csv(self) -> str:
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["kind", "a", "b", "d", "value"])
        for d in range(1, self.solved_through_degree + 1):
            for uid in two_point_ids(d):
                writer.writerow(
                    [TWO_POINT, uid.a, uid.b, d, format_rational(self.two_point[(uid.a, uid.b)])]
                )
        for d in range(1, self.solved_through_degree + 1):
            for uid in three_point_ids(d):
                writer.writerow(
                    [
                        THREE_POINT_R0,
                        uid.a,
                        uid.b,
                        d,
                        format_rational(self.three_point_r0[(uid.a, uid.b, d)]),
                    ]
                )
        return out.getvalue()


class ConcreteMode:
    """Lookup handle returning solved rational values at a fixed bound."""

    def __init__(self, table: InvariantTable, bound: int):
        if bound < 0:
            raise ValueError("bound must be non-negative")
        self.table = table
        self.bound = bound
        self.basis_cache: dict = {}

    def two_point(self, a: int, b: int) -> Fraction:
        return self.table.two_point_value(a, b)

    def three_point_r0(self, a: int, b: int) -> Fraction:
        return self.table.three_point_r0_value(a, b)


class SymbolicMode:
    """Lookups while one degree is being solved.

    Counts of solved degrees come back as concrete rationals; counts of the
    working degree come back as symbolic unknowns, or as constants when
    pinned.  The truncation bound equals the working degree, so lookups past
    it cannot occur on legal inputs.
    """

    def __init__(
        self,
        table: InvariantTable,
        degree: int,
        pins: Mapping[UnknownId, Fraction] | None = None,
    ):
        if degree != table.solved_through_degree + 1:
            raise ValueError(
                f"symbolic degree must be {table.solved_through_degree + 1}, got {degree}"
            )
        self.table = table
        self.degree = degree
        self.bound = degree
        self.pins = {uid: rational(v) for uid, v in (pins or {}).items()}
        self.basis_cache: dict = {}

    def _lookup(self, uid_factory, concrete, a: int, b: int):
        if vanishes(a, b):
            return ZERO
        k = (a + b) // 3
        if k <= self.table.solved_through_degree:
            return concrete(a, b)
        if k == self.degree:
            uid = uid_factory(a, b)
            pinned = self.pins.get(uid)
            return LinForm.unknown(uid) if pinned is None else pinned
        raise UnsolvedDegreeError(
            f"lookup of degree {k} during the degree-{self.degree} solve"
        )

    def two_point(self, a: int, b: int):
        return self._lookup(UnknownId.two_point, self.table.two_point_value, a, b)

    def three_point_r0(self, a: int, b: int):
        return self._lookup(
            UnknownId.three_point_r0, self.table.three_point_r0_value, a, b
        )

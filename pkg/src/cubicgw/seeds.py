"""Per-degree seed counts from configured slab coefficients.

Each degree d needs one rational input n(d), the slab coefficient, from
which the two seed counts follow:

    top(d)    = (-1)^(3d) * (3d - 1) * n(d)      the count N(3d-1, 1)
    bottom(d) = top(d) / (3d - 1)^2              the count N(1, 3d-1)

The second line is the scaling identity between the two maximal-tangency
counts of a degree; it holds for every degree and is re-checked on solved
tables by the verification suite.

Built-in coefficients cover degrees 1 through 5.  Higher degrees must be
supplied through a JSON config file of the form

    {"slab": {"6": "num/den", ...}}

whose entries override or extend the defaults.  The package does not
derive slab coefficients itself; they are configuration inputs.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .errors import SlabConfigError
from .exact import rational

DEFAULT_SLAB_COEFFICIENTS: dict[int, Fraction] = {
    1: Fraction(-2),
    2: Fraction(5),
    3: Fraction(-32),
    4: Fraction(286),
    5: Fraction(-3038),
}


@dataclass(frozen=True)
class SlabCoefficients:
    """Map from curve degree d >= 1 to the rational slab coefficient n(d)."""

    n: Mapping[int, Fraction]

    def coefficient(self, d: int) -> Fraction:
        if d < 1:
            raise ValueError("slab coefficients are indexed by degrees >= 1")
        try:
            return self.n[d]
        except KeyError:
            raise SlabConfigError(f"slab coefficient not configured for d={d}") from None

    def covers(self, d: int) -> bool:
        return all(k in self.n for k in range(1, d + 1))


def default_slab_table() -> SlabCoefficients:
    return SlabCoefficients(dict(DEFAULT_SLAB_COEFFICIENTS))


def load_slab_file(path) -> SlabCoefficients:
    """Read a {"slab": {...}} JSON file; entries override or extend defaults."""
    with open(path, encoding="utf-8") as fp:
        try:
            data = json.load(fp)
        except json.JSONDecodeError as err:
            raise SlabConfigError(f"{path}: not valid JSON ({err})") from None
    if not isinstance(data, dict) or not isinstance(data.get("slab"), dict):
        raise SlabConfigError(f'{path}: expected an object with a "slab" member')
    merged = dict(DEFAULT_SLAB_COEFFICIENTS)
    for key, value in data["slab"].items():
        try:
            d = int(key)
        except ValueError:
            raise SlabConfigError(f"{path}: slab key {key!r} is not an integer") from None
        if d < 1:
            raise SlabConfigError(f"{path}: slab degree {d} must be >= 1")
        try:
            merged[d] = rational(value)
        except (ValueError, TypeError, ZeroDivisionError):
            raise SlabConfigError(
                f"{path}: slab value {value!r} for d={d} is not a rational"
            ) from None
    return SlabCoefficients(merged)


def seed_top(d: int, slab: SlabCoefficients) -> Fraction:
    """The count N(3d-1, 1), computed from the slab coefficient n(d)."""
    if d < 1:
        raise ValueError("seed degrees start at 1")
    return (-1) ** (3 * d) * (3 * d - 1) * slab.coefficient(d)


def seed_bottom(d: int, top: Fraction) -> Fraction:
    """The count N(1, 3d-1), from N(3d-1, 1) via the scaling identity."""
    if d < 1:
        raise ValueError("seed degrees start at 1")
    return rational(top) / (3 * d - 1) ** 2

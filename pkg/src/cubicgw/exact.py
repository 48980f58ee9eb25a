"""Exact scalars: rationals, named unknowns, linear forms, truncated series.

All arithmetic in this package is exact; there is no floating point
anywhere.  A scalar is either a ``fractions.Fraction`` (a solved value) or
a :class:`LinForm` (an affine linear combination of named unknowns with
rational coefficients).  The two kinds interoperate through the ordinary
operators, so container code never has to care which kind it holds.

:class:`TruncSeries` is a polynomial in a formal variable t, truncated at
a fixed inclusive degree bound.  Products drop terms beyond the bound
*before* multiplying their scalars.  That ordering is what keeps linear
forms linear: an unknown of working degree d only ever sits on the t^d
coefficient, so a product of two unknowns would land on t^(2d) > d and is
discarded instead of formed.  If such a product is ever attempted inside
the bound, NonlinearTermError flags it as a truncation-logic bug.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Union

from .errors import BoundMismatchError, NonlinearTermError

Rational = Fraction
Scalar = Union[Fraction, "LinForm"]

ZERO = Fraction(0)
ONE = Fraction(1)

TWO_POINT = "two_point"
THREE_POINT_R0 = "three_point_r0"


def rational(value: int | str | Fraction) -> Fraction:
    """Coerce an int, Fraction or "num/den" string to an exact rational.

    Floats are rejected on purpose.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def format_rational(value: Fraction) -> str:
    """Render as "num/den", omitting the denominator when it is 1."""
    return str(value)


@dataclass(frozen=True)
class UnknownId:
    """Name of a single unknown curve count.

    kind ``two_point``: the count N(a, b) of rational curves tangent to the
    divisor to order ``a`` at a free point and order ``b`` at a fixed point.
    (a, b) and (b, a) name different counts, so keys are stored as given.

    kind ``three_point_r0``: the count of degree-``d`` rational curves
    tangent to orders ``a`` and ``b`` at two free points of the divisor and
    passing through a fixed point away from it.  Symmetric in (a, b);
    canonicalized to a <= b.
    """

    kind: str
    a: int
    b: int
    d: int

    @staticmethod
    def two_point(a: int, b: int) -> "UnknownId":
        if a < 1 or b < 1 or (a + b) % 3:
            raise ValueError(f"no two-point unknown for orders ({a}, {b})")
        return UnknownId(TWO_POINT, a, b, (a + b) // 3)

    @staticmethod
    def three_point_r0(a: int, b: int) -> "UnknownId":
        if a < 1 or b < 1 or (a + b) % 3:
            raise ValueError(f"no three-point unknown for orders ({a}, {b})")
        if a > b:
            a, b = b, a
        return UnknownId(THREE_POINT_R0, a, b, (a + b) // 3)

    @property
    def sort_key(self) -> tuple[int, int, int]:
        return (0 if self.kind == TWO_POINT else 1, self.a, self.b)

    def __lt__(self, other: "UnknownId") -> bool:
        return self.sort_key < other.sort_key

    @property
    def key(self) -> str:
        """Canonical machine name, used as a JSON map key."""
        if self.kind == TWO_POINT:
            return f"N({self.a},{self.b})"
        return f"N3({self.a},{self.b};{self.d})"

    @property
    def display(self) -> str:
        """Human-readable name for tables and equation dumps."""
        if self.kind == TWO_POINT:
            return f"N_{{{self.a},{self.b}}}"
        return f"N_{{{self.a},{self.b},0}}^{{{self.d}}}"


@dataclass(frozen=True, eq=False)
class LinForm:
    """Affine linear form: constant + sum of coefficient * unknown.

    ``terms`` holds (unknown, coefficient) pairs with every coefficient
    nonzero, sorted by unknown; zero coefficients are never stored.
    Instances are immutable; all operators return new forms.
    """

    constant: Fraction = ZERO
    terms: tuple[tuple[UnknownId, Fraction], ...] = ()

    @staticmethod
    def const(value) -> "LinForm":
        return LinForm(rational(value), ())

    @staticmethod
    def unknown(uid: UnknownId, coeff=ONE) -> "LinForm":
        coeff = rational(coeff)
        if not coeff:
            return LinForm()
        return LinForm(ZERO, ((uid, coeff),))

    @staticmethod
    def _build(constant: Fraction, items: dict[UnknownId, Fraction]) -> "LinForm":
        terms = tuple(
            sorted(((u, c) for u, c in items.items() if c), key=lambda t: t[0].sort_key)
        )
        return LinForm(constant, terms)

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            return LinForm(self.constant + other, self.terms)
        if isinstance(other, LinForm):
            items = dict(self.terms)
            for u, c in other.terms:
                new = items.get(u, ZERO) + c
                if new:
                    items[u] = new
                elif u in items:
                    del items[u]
            return LinForm._build(self.constant + other.constant, items)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return LinForm(-self.constant, tuple((u, -c) for u, c in self.terms))

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, LinForm)):
            return self + (-other if isinstance(other, LinForm) else -Fraction(other))
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            f = Fraction(other)
            if not f:
                return LinForm()
            return LinForm(self.constant * f, tuple((u, c * f) for u, c in self.terms))
        if isinstance(other, LinForm):
            if self.terms and other.terms:
                raise NonlinearTermError(
                    f"nonlinear term: ({self.text()}) * ({other.text()})"
                )
            if other.terms:
                return other * self.constant
            return self * other.constant
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (ONE / Fraction(other))
        return NotImplemented

    # -- predicates and views -----------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.terms) or self.constant != 0

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return not self.terms and self.constant == other
        if isinstance(other, LinForm):
            return self.constant == other.constant and self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        # Constant forms hash like their value so x == y implies equal hashes
        # even across the Fraction/LinForm divide.
        if not self.terms:
            return hash(self.constant)
        return hash((self.constant, self.terms))

    @property
    def is_constant(self) -> bool:
        return not self.terms

    def as_constant(self) -> Fraction:
        if self.terms:
            raise ValueError(f"not a constant: {self.text()}")
        return self.constant

    def coefficient(self, uid: UnknownId) -> Fraction:
        for u, c in self.terms:
            if u == uid:
                return c
        return ZERO

    def unknowns(self) -> tuple[UnknownId, ...]:
        return tuple(u for u, _ in self.terms)

    def substitute(self, assignment: Mapping[UnknownId, Fraction]) -> "LinForm":
        """Replace every assigned unknown by its value; others stay symbolic."""
        constant = self.constant
        items: dict[UnknownId, Fraction] = {}
        for u, c in self.terms:
            if u in assignment:
                constant += c * assignment[u]
            else:
                items[u] = c
        return LinForm._build(constant, items)

    def normalized(self) -> "LinForm":
        """Scale so the leading coefficient is 1; canonical form for dedup."""
        if self.terms:
            lead = self.terms[0][1]
        elif self.constant:
            lead = self.constant
        else:
            return self
        return self * (ONE / lead)

    def text(self, machine: bool = False) -> str:
        """Render like "N_{1,5} + 4*N_{2,4} - 3*N_{3,3} + 8"."""
        pieces: list[tuple[str, bool]] = []
        for u, c in self.terms:
            name = u.key if machine else u.display
            mag = abs(c)
            body = name if mag == 1 else f"{mag}*{name}"
            pieces.append((body, c < 0))
        if self.constant or not pieces:
            pieces.append((str(abs(self.constant)), self.constant < 0))
        out = []
        for i, (body, negative) in enumerate(pieces):
            if i == 0:
                out.append(f"-{body}" if negative else body)
            else:
                out.append(f" - {body}" if negative else f" + {body}")
        return "".join(out)

    def __repr__(self):
        return f"LinForm({self.text(machine=True)})"


@dataclass(frozen=True)
class TruncSeries:
    """Polynomial in t truncated at an inclusive degree bound.

    ``coeffs`` always has length ``bound + 1``; indices beyond the bound do
    not exist by construction.  Coefficients are Fractions or LinForms.
    """

    bound: int
    coeffs: tuple[Scalar, ...]

    def __post_init__(self):
        if self.bound < 0:
            raise ValueError("truncation bound must be non-negative")
        if len(self.coeffs) != self.bound + 1:
            raise ValueError(
                f"need {self.bound + 1} coefficients for bound {self.bound}, "
                f"got {len(self.coeffs)}"
            )

    @staticmethod
    def zero(bound: int) -> "TruncSeries":
        return TruncSeries(bound, (ZERO,) * (bound + 1))

    @staticmethod
    def monomial(bound: int, power: int, coeff: Scalar = ONE) -> "TruncSeries":
        """coeff * t^power, or the zero series if power exceeds the bound."""
        if power < 0:
            raise ValueError("t-power must be non-negative")
        if power > bound or not coeff:
            return TruncSeries.zero(bound)
        coeffs = [ZERO] * (bound + 1)
        coeffs[power] = coeff
        return TruncSeries(bound, tuple(coeffs))

    def coefficient(self, power: int) -> Scalar:
        return self.coeffs[power] if power <= self.bound else ZERO

    def _check_bound(self, other: "TruncSeries") -> None:
        if self.bound != other.bound:
            raise BoundMismatchError(
                f"series bounds differ: {self.bound} != {other.bound}"
            )

    def __add__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        self._check_bound(other)
        return TruncSeries(
            self.bound, tuple(a + b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __sub__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return TruncSeries(self.bound, tuple(-c if c else ZERO for c in self.coeffs))

    def __mul__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        self._check_bound(other)
        out: list[Scalar] = [ZERO] * (self.bound + 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            # Truncate first: scalars beyond the bound are never multiplied.
            for j in range(self.bound - i + 1):
                b = other.coeffs[j]
                if not b:
                    continue
                out[i + j] = out[i + j] + a * b
        return TruncSeries(self.bound, tuple(out))

    def scale(self, factor: Scalar) -> "TruncSeries":
        if not factor:
            return TruncSeries.zero(self.bound)
        return TruncSeries(
            self.bound, tuple((c * factor if c else ZERO) for c in self.coeffs)
        )

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def support(self) -> tuple[int, ...]:
        return tuple(k for k, c in enumerate(self.coeffs) if c)

    def __repr__(self):
        body = ", ".join(f"t^{k}: {c!r}" for k, c in zip(range(self.bound + 1), self.coeffs) if c)
        return f"TruncSeries(bound={self.bound}, {{{body or '0'}}})"

"""Graded ring of tangency generators over truncated t-series.

An element is a finite sum over p of s_p(t) * theta_p with each s_p a
truncated series; theta_0 is the multiplicative identity.  The product of
two generators expands as

    theta_p * theta_q = theta_{p+q}
                      + C(p, q) t^((p+q)/3) theta_0
                      + sum_{r=1}^{max(p,q)}
                            [(q-r) N(p, q-r) + (p-r) N(q, p-r)] t^((p+q-r)/3) theta_r

where N is the two-point count and C the point-constrained three-point
count, both supplied by the active lookup mode.  Terms whose t-exponent is
fractional never exist (they are skipped at generation time, consistently
with the vanishing rules), and terms beyond the truncation bound are
dropped.  Every surviving term satisfies the grading p + q - r = 3k for
its t^k coefficient, which the code asserts on emission.

The bilinear extension is symmetric in its arguments because the basis
formula is, so products here commute; associativity is the nontrivial
property the solver module turns into equations.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BoundMismatchError
from .exact import LinForm, Scalar, TruncSeries, format_rational


@dataclass(frozen=True)
class ThetaElement:
    """Finitely supported combination of generators; zero series not stored."""

    bound: int
    terms: tuple[tuple[int, TruncSeries], ...]

    def support(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.terms)

    def series_for(self, p: int) -> TruncSeries:
        for index, series in self.terms:
            if index == p:
                return series
        return TruncSeries.zero(self.bound)

    def coefficient(self, p: int, power: int) -> Scalar:
        return self.series_for(p).coefficient(power)

    def _check_bound(self, other: "ThetaElement") -> None:
        if self.bound != other.bound:
            raise BoundMismatchError(
                f"element bounds differ: {self.bound} != {other.bound}"
            )

    def __add__(self, other):
        if not isinstance(other, ThetaElement):
            return NotImplemented
        self._check_bound(other)
        acc = {p: s for p, s in self.terms}
        for p, s in other.terms:
            acc[p] = acc[p] + s if p in acc else s
        return _element(self.bound, acc)

    def __sub__(self, other):
        if not isinstance(other, ThetaElement):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return ThetaElement(self.bound, tuple((p, -s) for p, s in self.terms))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __repr__(self):
        return f"ThetaElement({format_element(self)!r}, bound={self.bound})"


def _element(bound: int, acc: dict[int, TruncSeries]) -> ThetaElement:
    return ThetaElement(
        bound, tuple(sorted(((p, s) for p, s in acc.items() if s), key=lambda t: t[0]))
    )


def theta(p: int, bound: int) -> ThetaElement:
    """The generator theta_p as a ring element at the given bound."""
    if p < 0:
        raise ValueError("generator index must be non-negative")
    return ThetaElement(bound, ((p, TruncSeries.monomial(bound, 0)),))


def mul_basis(p: int, q: int, mode) -> ThetaElement:
    """Expand theta_p * theta_q under the given lookup mode."""
    if p < 0 or q < 0:
        raise ValueError("generator indices must be non-negative")
    cache_key = (p, q) if p <= q else (q, p)
    cached = mode.basis_cache.get(cache_key)
    if cached is not None:
        return cached

    bound = mode.bound
    total = p + q
    acc: dict[int, TruncSeries] = {total: TruncSeries.monomial(bound, 0)}

    if total >= 3 and total % 3 == 0 and total // 3 <= bound:
        k = total // 3
        c = mode.three_point_r0(p, q)
        if c:
            assert total - 0 == 3 * k, "grading violated on the theta_0 term"
            _accumulate(acc, 0, TruncSeries.monomial(bound, k, c))

    for r in range(1, max(p, q) + 1):
        remainder = total - r
        if remainder <= 0 or remainder % 3:
            continue  # fractional t-exponent: no such term exists
        k = remainder // 3
        if k > bound:
            continue
        c = (q - r) * mode.two_point(p, q - r) + (p - r) * mode.two_point(q, p - r)
        if c:
            assert total - r == 3 * k, "grading violated on a theta_r term"
            _accumulate(acc, r, TruncSeries.monomial(bound, k, c))

    element = _element(bound, acc)
    mode.basis_cache[cache_key] = element
    return element


def mul(x: ThetaElement, y: ThetaElement, mode) -> ThetaElement:
    """Bilinear extension of mul_basis with truncated series coefficients."""
    if x.bound != y.bound or x.bound != mode.bound:
        raise BoundMismatchError(
            f"bounds differ: {x.bound}, {y.bound}, mode {mode.bound}"
        )
    acc: dict[int, TruncSeries] = {}
    for px, sx in x.terms:
        for py, sy in y.terms:
            weight = sx * sy
            if not weight:
                continue
            for r, basis_series in mul_basis(px, py, mode).terms:
                term = basis_series * weight
                if term:
                    _accumulate(acc, r, term)
    return _element(x.bound, acc)


def _accumulate(acc: dict[int, TruncSeries], index: int, series: TruncSeries) -> None:
    acc[index] = acc[index] + series if index in acc else series


def _format_scalar(c: Scalar) -> tuple[bool, str]:
    """Split a scalar into (is_negative, magnitude string); LinForms get parens."""
    if isinstance(c, LinForm):
        return False, f"({c.text()})"
    return c < 0, format_rational(abs(c))


def format_element(x: ThetaElement, theta_symbol: str = "θ") -> str:
    """Render like "θ_6 + 2 t θ_3 + 30 t^2 θ_0": descending generator index."""
    pieces: list[tuple[bool, str]] = []
    for p, series in sorted(x.terms, key=lambda t: -t[0]):
        for k in series.support():
            negative, mag = _format_scalar(series.coefficient(k))
            words = []
            if mag != "1":
                words.append(mag)
            if k == 1:
                words.append("t")
            elif k > 1:
                words.append(f"t^{k}")
            words.append(f"{theta_symbol}_{p}")
            pieces.append((negative, " ".join(words)))
    if not pieces:
        return "0"
    out = []
    for i, (negative, body) in enumerate(pieces):
        if i == 0:
            out.append(f"-{body}" if negative else body)
        else:
            out.append(f" - {body}" if negative else f" + {body}")
    return "".join(out)


def element_to_json_dict(x: ThetaElement) -> dict:
    """Machine form with ASCII generator names and "num/den" values."""
    terms = []
    for p, series in x.terms:
        entries = []
        for k in series.support():
            c = series.coefficient(k)
            if isinstance(c, LinForm):
                c = c.as_constant()
            entries.append({"k": k, "value": format_rational(c)})
        terms.append({"p": p, "series": entries})
    return {"terms": terms}

"""The diagonal grading and shifted-polynomial coordinates.

The homogeneous piece of degree g consists of the elements supported on the
single diagonal i - j = g.  Such an element factors through the product XY:

    g >= 0:   X^g * f(XY)          g < 0:   f(XY) * Y^(-g)

for a unique polynomial f.  The bridge between monomial exponents and the
polynomial coordinate is the falling-factorial identity

    X^a Y^a = (XY)(XY - 1)(XY - 2) ... (XY - a + 1),

an integer triangular change of basis (Stirling numbers in both directions),
so conversion costs O(a^2) exact integer work and no algebra products.

XYPolynomial is a dense univariate polynomial over Fraction in a formal
variable Z standing for the product XY.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from math import comb
from typing import Iterable

from .core import Coefficient, WeylElement, from_terms, mul
from .errors import MalformedInputError, NotHomogeneousError, UndefinedOnZeroError
from .leading import diag_degree, _require_nonzero


class XYPolynomial:
    """Polynomial in Z with exact rational coefficients, ascending storage."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[Coefficient] = ()):
        out = [Fraction(c) for c in coeffs]
        while out and not out[-1]:
            out.pop()
        self._coeffs = tuple(out)

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial at -1."""
        return len(self._coeffs) - 1

    @property
    def leading_coeff(self) -> Fraction:
        if not self._coeffs:
            return Fraction(0)
        return self._coeffs[-1]

    def coefficient(self, m: int) -> Fraction:
        if 0 <= m < len(self._coeffs):
            return self._coeffs[m]
        return Fraction(0)

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, XYPolynomial):
            return self._coeffs == other._coeffs
        if isinstance(other, (int, Fraction)):
            return self._coeffs == XYPolynomial([other])._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __add__(self, other: "XYPolynomial | Coefficient") -> "XYPolynomial":
        if isinstance(other, (int, Fraction)):
            other = XYPolynomial([other])
        if not isinstance(other, XYPolynomial):
            return NotImplemented
        n = max(len(self._coeffs), len(other._coeffs))
        return XYPolynomial(
            [self.coefficient(m) + other.coefficient(m) for m in range(n)]
        )

    def __radd__(self, other: Coefficient) -> "XYPolynomial":
        return self.__add__(other)

    def __neg__(self) -> "XYPolynomial":
        return XYPolynomial([-c for c in self._coeffs])

    def __sub__(self, other: "XYPolynomial | Coefficient") -> "XYPolynomial":
        if isinstance(other, (int, Fraction)):
            other = XYPolynomial([other])
        if not isinstance(other, XYPolynomial):
            return NotImplemented
        return self.__add__(-other)

    def __mul__(self, other: "XYPolynomial | Coefficient") -> "XYPolynomial":
        if isinstance(other, (int, Fraction)):
            return XYPolynomial([c * Fraction(other) for c in self._coeffs])
        if not isinstance(other, XYPolynomial):
            return NotImplemented
        if not self or not other:
            return XYPolynomial()
        out = [Fraction(0)] * (len(self._coeffs) + len(other._coeffs) - 1)
        for m, a in enumerate(self._coeffs):
            if not a:
                continue
            for n, b in enumerate(other._coeffs):
                if b:
                    out[m + n] += a * b
        return XYPolynomial(out)

    def __rmul__(self, other: Coefficient) -> "XYPolynomial":
        return self.__mul__(other)

    def __pow__(self, n: int) -> "XYPolynomial":
        if n < 0:
            raise MalformedInputError("polynomial power must be nonnegative")
        out = XYPolynomial([1])
        for _ in range(n):
            out = out * self
        return out

    def shift(self, s: Coefficient) -> "XYPolynomial":
        """f(Z + s), expanded in the monomial basis."""
        s = Fraction(s)
        out = [Fraction(0)] * len(self._coeffs)
        for m, c in enumerate(self._coeffs):
            if not c:
                continue
            p = Fraction(1)
            for t in range(m, -1, -1):
                out[t] += c * comb(m, m - t) * p
                p *= s
        return XYPolynomial(out)

    def derivative(self) -> "XYPolynomial":
        return XYPolynomial([m * c for m, c in enumerate(self._coeffs)][1:])

    def monic(self) -> "XYPolynomial":
        if not self._coeffs:
            raise UndefinedOnZeroError("the zero polynomial cannot be made monic")
        lead = self._coeffs[-1]
        return XYPolynomial([c / lead for c in self._coeffs])

    def __call__(self, value: Coefficient) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self._coeffs):
            acc = acc * Fraction(value) + c
        return acc

    def __repr__(self) -> str:
        return f"XYPolynomial({[str(c) for c in self._coeffs]})"


Z = XYPolynomial([0, 1])


@dataclass(frozen=True)
class GradedForm:
    """A homogeneous element as X^grade * poly(XY), or poly(XY) * Y^(-grade).

    The polynomial sits on the left of the Y block when grade < 0.
    """

    grade: int
    poly: XYPolynomial

    def __post_init__(self) -> None:
        if not self.poly:
            raise MalformedInputError("graded form requires a nonzero polynomial")


@cache
def _falling_factorial_row(a: int) -> tuple[int, ...]:
    # ascending coefficients of Z(Z-1)...(Z-a+1)
    if a == 0:
        return (1,)
    prev = _falling_factorial_row(a - 1)
    t = a - 1
    out = [0] * (a + 1)
    for m, c in enumerate(prev):
        out[m + 1] += c
        out[m] -= c * t
    return tuple(out)


@cache
def _power_in_falling_rows(m: int) -> tuple[int, ...]:
    # Z^m = sum_a row[a] * Z(Z-1)...(Z-a+1); row holds Stirling set numbers
    if m == 0:
        return (1,)
    prev = _power_in_falling_rows(m - 1)
    out = [0] * (m + 1)
    for a, s in enumerate(prev):
        if s:
            # Z * FF_a = FF_{a+1} + a * FF_a
            out[a + 1] += s
            out[a] += s * a
    return tuple(out)


def homogeneous_components(p: WeylElement) -> dict[int, WeylElement]:
    """Split into diagonal components; the empty map for 0."""
    buckets: dict[int, dict] = {}
    for (i, j), c in p.terms.items():
        buckets.setdefault(i - j, {})[(i, j)] = c
    return {g: WeylElement._raw(t) for g, t in sorted(buckets.items())}


def is_homogeneous(p: WeylElement) -> bool:
    _require_nonzero(p, "homogeneity")
    diags = {i - j for i, j in p.terms}
    return len(diags) == 1


def to_graded_form(h: WeylElement) -> GradedForm:
    """Factor a homogeneous element through the product XY."""
    _require_nonzero(h, "graded form")
    if not is_homogeneous(h):
        raise NotHomogeneousError("only homogeneous elements factor through XY")
    g = diag_degree(h)
    acc: dict[int, Fraction] = {}
    for (i, j), c in h.terms.items():
        a = min(i, j)
        for m, s in enumerate(_falling_factorial_row(a)):
            if s:
                acc[m] = acc.get(m, Fraction(0)) + c * s
    coeffs = [Fraction(0)] * (max(acc) + 1)
    for m, c in acc.items():
        coeffs[m] = c
    return GradedForm(g, XYPolynomial(coeffs))


def from_graded_form(form: GradedForm) -> WeylElement:
    """Expand back into canonical normal form; inverse of to_graded_form."""
    falling: dict[int, Fraction] = {}
    for m, b in enumerate(form.poly.coeffs):
        if not b:
            continue
        for a, s in enumerate(_power_in_falling_rows(m)):
            if s:
                falling[a] = falling.get(a, Fraction(0)) + b * s
    g = form.grade
    terms = []
    for a, c in falling.items():
        if not c:
            continue
        if g >= 0:
            terms.append((a + g, a, c))
        else:
            terms.append((a, a - g, c))
    return from_terms(terms)


def evaluate_at_element(f: XYPolynomial, s: WeylElement) -> WeylElement:
    """f(s) inside the algebra, by Horner's scheme."""
    acc = WeylElement()
    for c in reversed(f.coeffs):
        acc = mul(acc, s) + c
    return acc

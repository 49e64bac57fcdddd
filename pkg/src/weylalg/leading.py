"""Leading-form calculus along the diagonal grading.

A monomial X^i Y^j sits on diagonal i - j; this grades the algebra, since
the normal-ordering corrections lower both exponents together.  For a
nonzero element the diagonal degree is the largest diagonal met by its
support, the leading form collects the terms on that diagonal, and the
leading weight is the exponent pair of the highest-X term among them.

Every quantity has a mirror version obtained by exchanging the roles of X
and Y in the definitions (largest j - i, highest Y exponent).  Mirror
results are reported in plain (x exponent, y exponent) coordinates.

All operations reject the zero element, for which none of this is defined.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .core import Monomial, WeylElement
from .errors import UndefinedOnZeroError, WrongSectorError

Weight = tuple[int, int]


def _require_nonzero(p: WeylElement, what: str) -> None:
    if not p:
        raise UndefinedOnZeroError(f"{what} is undefined on the zero element")


def support(p: WeylElement) -> frozenset[Monomial]:
    """Exponent pairs with nonzero coefficient; empty for 0."""
    return p.support()


def diag_degree(p: WeylElement) -> int:
    """max(i - j) over the support."""
    _require_nonzero(p, "diagonal degree")
    return max(i - j for i, j in p.terms)


def diag_degree_mirror(p: WeylElement) -> int:
    """max(j - i) over the support."""
    _require_nonzero(p, "mirror diagonal degree")
    return max(j - i for i, j in p.terms)


def leading_form(p: WeylElement) -> WeylElement:
    """Sum of the terms on the highest diagonal."""
    d = diag_degree(p)
    return WeylElement._raw({m: c for m, c in p.terms.items() if m[0] - m[1] == d})


def leading_form_mirror(p: WeylElement) -> WeylElement:
    d = diag_degree_mirror(p)
    return WeylElement._raw({m: c for m, c in p.terms.items() if m[1] - m[0] == d})


def leading_weight(p: WeylElement) -> Weight:
    """Exponent pair of the highest-X term on the leading diagonal."""
    d = diag_degree(p)
    return max((m for m in p.terms if m[0] - m[1] == d), key=lambda m: m[0])


def leading_weight_mirror(p: WeylElement) -> Weight:
    """Exponent pair of the highest-Y term on the mirror leading diagonal."""
    d = diag_degree_mirror(p)
    return max((m for m in p.terms if m[1] - m[0] == d), key=lambda m: m[1])


def leading_term(p: WeylElement) -> WeylElement:
    """The single term at the leading weight."""
    w = leading_weight(p)
    return WeylElement._raw({w: p.terms[w]})


def leading_term_mirror(p: WeylElement) -> WeylElement:
    w = leading_weight_mirror(p)
    return WeylElement._raw({w: p.terms[w]})


def leading_coeff(p: WeylElement) -> Fraction:
    return p.terms[leading_weight(p)]


def leading_coeff_mirror(p: WeylElement) -> Fraction:
    return p.terms[leading_weight_mirror(p)]


def is_monic(p: WeylElement) -> bool:
    return leading_coeff(p) == 1


def aligned(p: WeylElement, q: WeylElement) -> bool:
    """True when the leading weights lie on one ray from the origin."""
    _require_nonzero(q, "alignment")
    k, j = leading_weight(p)
    l, m = leading_weight(q)
    return k * m == j * l


def is_x_dominant(p: WeylElement) -> bool:
    """True when the diagonal degree is positive."""
    return diag_degree(p) > 0


def is_y_dominant(p: WeylElement) -> bool:
    """True when the mirror diagonal degree is positive."""
    return diag_degree_mirror(p) > 0


def primitive_direction(p: WeylElement) -> tuple[Weight, int]:
    """Write the leading weight as r * (i, j) with gcd(i, j) = 1 and r > 0.

    Only defined on x-dominant elements, whose leading weight is not (0, 0).
    """
    if not is_x_dominant(p):
        raise WrongSectorError("primitive direction requires an x-dominant element")
    i0, j0 = leading_weight(p)
    r = gcd(i0, j0)
    return (i0 // r, j0 // r), r


def primitive_direction_mirror(p: WeylElement) -> tuple[Weight, int]:
    """Mirror version, defined on y-dominant elements."""
    if not is_y_dominant(p):
        raise WrongSectorError("mirror primitive direction requires a y-dominant element")
    i0, j0 = leading_weight_mirror(p)
    r = gcd(i0, j0)
    return (i0 // r, j0 // r), r


@dataclass(frozen=True)
class LeadingData:
    """All leading-form data of one nonzero element."""

    diag: int
    diag_mirror: int
    weight: Weight
    weight_mirror: Weight
    form: WeylElement
    form_mirror: WeylElement
    term: WeylElement
    coeff: Fraction
    monic: bool


def leading_data(p: WeylElement) -> LeadingData:
    _require_nonzero(p, "leading data")
    return LeadingData(
        diag=diag_degree(p),
        diag_mirror=diag_degree_mirror(p),
        weight=leading_weight(p),
        weight_mirror=leading_weight_mirror(p),
        form=leading_form(p),
        form_mirror=leading_form_mirror(p),
        term=leading_term(p),
        coeff=leading_coeff(p),
        monic=is_monic(p),
    )

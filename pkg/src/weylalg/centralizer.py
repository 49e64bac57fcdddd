"""Centralizer computation up to a total-degree bound.

Two solvers live here.  For homogeneous elements, commutation reduces to a
functional equation between shifted polynomials in XY, solved exactly by
linear algebra on polynomial coefficients; the solution space in each
homogeneity degree has dimension at most one.

For a general element P of positive diagonal degree (or mirror degree), the
full solver computes the exact kernel of Q -> [P, Q] on the span of all
monomials of total degree at most D.  Commutators drop total degree by at
least two, so the kernel matrix has rows up to degree D + deg(P) - 2.  The
kernel is then put in reduced row echelon form under the diagonal-major
monomial order (diagonal first, then X exponent), which makes every basis
vector monic with a distinct leading term on the primitive ray of P, and
makes the basis unique for the given bound.

Everything returned is re-verified to commute with P by actual
multiplication; the linear algebra is never trusted on its own.

All results are exact relative to the bound D: the structure constants
(level set, its gcd, the period, the canonical picks) describe the
truncated centralizer, and a degenerate truncation is flagged so callers
can raise D.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Iterable, Literal

from .core import Monomial, ONE, WeylElement, commutator, mul, power, total_degree
from .core import _lowering_factor
from .errors import (
    BoundError,
    DegenerateMonoidError,
    InternalInconsistencyError,
    MembershipError,
    NotHomogeneousError,
    WrongSectorError,
)
from .graded import GradedForm, XYPolynomial, from_graded_form, is_homogeneous, to_graded_form
from .leading import (
    Weight,
    diag_degree,
    diag_degree_mirror,
    is_x_dominant,
    is_y_dominant,
    primitive_direction,
    primitive_direction_mirror,
)
from .linalg import dense_kernel, sparse_kernel

Sector = Literal["x", "y"]


class ComponentKind(Enum):
    EMPTY = "empty"
    LINE = "line"
    XY_POLYNOMIALS = "xy-polynomials"


@dataclass(frozen=True)
class CentralizerComponent:
    """Centralizer piece in one homogeneity degree: nothing, a line, or k[XY]."""

    kind: ComponentKind
    generator: GradedForm | None = None


def _functional_line(f: XYPolynomial, step_g: int, step_f: int, deg: int) -> XYPolynomial | None:
    """Monic g with g(Z) f(Z + step_f) = g(Z + step_g) f(Z), of degree deg.

    Returns None when only g = 0 solves the equation.  The solution space is
    at most a line and any nonzero solution has degree exactly deg; either
    failing would contradict the alignment constraint, so both are treated
    as internal errors.
    """
    shifted_f = f.shift(step_f)
    columns = []
    for m in range(deg + 1):
        zm = XYPolynomial([0] * m + [1])
        shifted_zm = XYPolynomial([step_g, 1]) ** m
        columns.append(zm * shifted_f - shifted_zm * f)
    nrows = deg + f.degree + 1
    matrix = [[col.coefficient(t) for col in columns] for t in range(nrows)]
    kernel = dense_kernel(matrix)
    if not kernel:
        return None
    if len(kernel) > 1:
        raise InternalInconsistencyError(
            "homogeneous commutation equation has a solution space of dimension > 1"
        )
    g = XYPolynomial(kernel[0])
    if g.degree != deg:
        raise InternalInconsistencyError(
            "homogeneous commutation solution has unexpected degree"
        )
    return g.monic()


def homogeneous_centralizer_component(p: WeylElement, grade: int) -> CentralizerComponent:
    """Solve for the centralizer of a homogeneous non-scalar p in one grade."""
    if not p:
        raise WrongSectorError("the centralizer of 0 is the whole algebra")
    if not is_homogeneous(p):
        raise NotHomogeneousError("the component solver requires a homogeneous element")
    if p.is_scalar():
        raise WrongSectorError("the centralizer of a scalar is the whole algebra")
    r = diag_degree(p)
    if r == 0:
        # p is a non-constant polynomial in XY; its centralizer is all of k[XY]
        if grade == 0:
            return CentralizerComponent(ComponentKind.XY_POLYNOMIALS)
        return CentralizerComponent(ComponentKind.EMPTY)
    if r > 0:
        if grade < 0:
            return CentralizerComponent(ComponentKind.EMPTY)
        if grade == 0:
            return CentralizerComponent(ComponentKind.LINE, GradedForm(0, XYPolynomial([1])))
        f = to_graded_form(p).poly
        num = f.degree * grade
        if num % r:
            return CentralizerComponent(ComponentKind.EMPTY)
        g = _functional_line(f, step_g=r, step_f=grade, deg=num // r)
    else:
        if grade > 0:
            return CentralizerComponent(ComponentKind.EMPTY)
        if grade == 0:
            return CentralizerComponent(ComponentKind.LINE, GradedForm(0, XYPolynomial([1])))
        f = to_graded_form(p).poly
        num = f.degree * (-grade)
        if num % (-r):
            return CentralizerComponent(ComponentKind.EMPTY)
        g = _functional_line(f, step_g=-r, step_f=-grade, deg=num // (-r))
    if g is None:
        return CentralizerComponent(ComponentKind.EMPTY)
    form = GradedForm(grade, g)
    if commutator(p, from_graded_form(form)):
        raise InternalInconsistencyError("claimed homogeneous generator does not commute")
    return CentralizerComponent(ComponentKind.LINE, form)


@dataclass(frozen=True)
class CentralizerBasis:
    """The centralizer of `element`, exactly, up to total degree `bound`.

    Basis vectors are indexed by their level l on the primitive ray:
    the leading term of by_level[l] is the monomial direction * l, monic.
    `levels` lists them ascending, `level_gcd` is the gcd of the nonzero
    levels, and `period` is the least nonzero normalized degree.  `picks`
    holds, per residue class of the normalized degree modulo the period,
    the basis element of least degree in that class (None when the class is
    not reached within the bound, which also sets `truncated`).
    """

    element: WeylElement
    bound: int
    sector: Sector
    direction: Weight
    levels: tuple[int, ...]
    level_gcd: int
    period: int
    by_level: dict[int, WeylElement]
    ray_degrees: dict[int, int]
    picks: tuple[WeylElement | None, ...]
    pick_levels: tuple[int | None, ...]
    truncated: bool

    @property
    def dimension(self) -> int:
        return len(self.levels)

    def ray_point(self, level: int) -> Monomial:
        return (level * self.direction[0], level * self.direction[1])

    def elements(self) -> list[WeylElement]:
        return [self.by_level[l] for l in self.levels]


def _order_key(sector: Sector):
    if sector == "x":
        return lambda m: (m[0] - m[1], m[0])
    return lambda m: (m[1] - m[0], m[1])


def _monomials_upto(bound: int, keyfn) -> list[Monomial]:
    monos = [(a, b) for a in range(bound + 1) for b in range(bound + 1 - a)]
    monos.sort(key=keyfn, reverse=True)
    return monos


def _integer_terms(p: WeylElement) -> list[tuple[int, int, int]]:
    scale = lcm(*(c.denominator for c in p.terms.values()))
    return [(i, j, int(c * scale)) for (i, j), c in p.terms.items()]


def _ad_matrix_rows(
    p_terms: list[tuple[int, int, int]],
    columns: list[Monomial],
    keyfn,
    rhs: WeylElement | None = None,
) -> tuple[list[dict[int, int]], int]:
    """Sparse rows of Q -> [P, Q] on the given column monomials.

    With `rhs` given, its entries are appended at column index len(columns)
    so the rows encode the inhomogeneous system [P, Q] = rhs.
    """
    ncols = len(columns)
    by_target: dict[Monomial, dict[int, int]] = {}
    for idx, (a, b) in enumerate(columns):
        for k, j, c in p_terms:
            top = max(min(j, a), min(b, k))
            for i in range(1, top + 1):
                w = _lowering_factor(j, a, i) - _lowering_factor(b, k, i)
                if not w:
                    continue
                target = (k + a - i, j + b - i)
                row = by_target.setdefault(target, {})
                s = row.get(idx, 0) + c * w
                if s:
                    row[idx] = s
                else:
                    del row[idx]
    if rhs is not None:
        scale = lcm(*(c.denominator for c in rhs.terms.values())) if rhs else 1
        for m, c in rhs.terms.items():
            row = by_target.setdefault(m, {})
            row[ncols] = int(c * scale)
    ordered = sorted(by_target, key=keyfn, reverse=True)
    return [by_target[m] for m in ordered], ncols


def _subtract_multiple(target: dict[Monomial, Fraction], ratio: Fraction, row: dict[Monomial, Fraction]) -> None:
    for m, v in row.items():
        s = target.get(m, Fraction(0)) - ratio * v
        if s:
            target[m] = s
        else:
            target.pop(m, None)


def _rref_by_leading(vectors: list[dict[Monomial, Fraction]], keyfn) -> list[dict[Monomial, Fraction]]:
    """Reduced echelon form of a list of element vectors, leading terms by keyfn."""
    by_lead: dict[Monomial, dict[Monomial, Fraction]] = {}
    for vec in vectors:
        cur = dict(vec)
        # clear every existing pivot position; pivot rows are mutually
        # reduced, so a single pass cannot reintroduce a cleared position
        for lead, prow in by_lead.items():
            ratio = cur.get(lead)
            if ratio:
                _subtract_multiple(cur, ratio, prow)
        if not cur:
            continue
        lead = max(cur, key=keyfn)
        lc = cur[lead]
        cur = {m: v / lc for m, v in cur.items()}
        for prow in by_lead.values():
            ratio = prow.get(lead)
            if ratio:
                _subtract_multiple(prow, ratio, cur)
        by_lead[lead] = cur
    return [by_lead[lead] for lead in sorted(by_lead, key=keyfn, reverse=True)]


def centralizer_basis(p: WeylElement, bound: int) -> CentralizerBasis:
    """All elements commuting with p of total degree at most `bound`."""
    if not p or (diag_degree(p) <= 0 and diag_degree_mirror(p) <= 0):
        raise WrongSectorError(
            "element has no dominant generator: its centralizer is k[XY] "
            "(or the whole algebra for a scalar)"
        )
    if bound < total_degree(p):
        raise BoundError(
            f"bound {bound} is below the total degree {total_degree(p)} of the element"
        )
    if is_x_dominant(p):
        sector: Sector = "x"
        direction, _ = primitive_direction(p)
    else:
        sector = "y"
        direction, _ = primitive_direction_mirror(p)
    keyfn = _order_key(sector)
    columns = _monomials_upto(bound, keyfn)
    rows, ncols = _ad_matrix_rows(_integer_terms(p), columns, keyfn)
    kernel = sparse_kernel(rows, ncols)
    vectors = [
        {columns[idx]: val for idx, val in vec.items()} for vec in kernel
    ]
    reduced = _rref_by_leading(vectors, keyfn)

    di, dj = direction
    by_level: dict[int, WeylElement] = {}
    for row in reduced:
        lead = max(row, key=keyfn)
        level = lead[0] // di if di else lead[1] // dj
        if lead != (level * di, level * dj) or level in by_level:
            raise InternalInconsistencyError(
                "kernel vector leading term is off the primitive ray"
            )
        by_level[level] = WeylElement._raw(row)
    if 0 not in by_level or by_level[0] != ONE:
        raise InternalInconsistencyError("the constants are missing from the kernel")
    for elem in by_level.values():
        if commutator(p, elem):
            raise InternalInconsistencyError("kernel vector does not commute exactly")

    levels = tuple(sorted(by_level))
    positive = [l for l in levels if l]
    if not positive:
        d, period = 1, 1
        picks: tuple[WeylElement | None, ...] = ()
        pick_levels: tuple[int | None, ...] = ()
        truncated = True
    else:
        d = reduce(gcd, positive)
        period = min(positive) // d
        ray_of = {l: l // d for l in positive}
        chosen: list[WeylElement | None] = []
        chosen_levels: list[int | None] = []
        for residue in range(period):
            cands = [l for l in positive if ray_of[l] % period == residue]
            if cands:
                best = min(cands)
                chosen.append(by_level[best])
                chosen_levels.append(best)
            else:
                chosen.append(None)
                chosen_levels.append(None)
        picks = tuple(chosen)
        pick_levels = tuple(chosen_levels)
        truncated = any(s is None for s in picks)
    return CentralizerBasis(
        element=p,
        bound=bound,
        sector=sector,
        direction=direction,
        levels=levels,
        level_gcd=d,
        period=period,
        by_level=by_level,
        ray_degrees={l: l // d for l in levels},
        picks=picks,
        pick_levels=pick_levels,
        truncated=truncated,
    )


def expand_in_basis(basis: CentralizerBasis, q: WeylElement) -> dict[int, Fraction] | None:
    """Coordinates of q in the basis, or None when q is outside the span.

    The basis is leading-reduced, so the coordinate at level l is just the
    coefficient of q at the ray monomial of level l.
    """
    coords = {}
    rebuilt = WeylElement()
    for l in basis.levels:
        c = q.coefficient(*basis.ray_point(l))
        if c:
            coords[l] = c
            rebuilt = rebuilt + c * basis.by_level[l]
    if rebuilt != q:
        return None
    return coords


def ray_degree(q: WeylElement, basis: CentralizerBasis) -> int:
    """Degree of a centralizer element: its ray level over the level gcd."""
    if not q:
        raise MembershipError("the zero element has no ray degree")
    coords = expand_in_basis(basis, q)
    if coords is None:
        raise MembershipError("element is not in the computed centralizer span")
    return basis.ray_degrees[max(coords)]


def _lead_coeff_on_ray(basis: CentralizerBasis, q: WeylElement) -> tuple[int, Fraction]:
    coords = expand_in_basis(basis, q)
    if coords is None:
        raise MembershipError("element is not in the computed centralizer span")
    top = max(coords)
    return top, coords[top]


def decompose(q: WeylElement, basis: CentralizerBasis) -> list[XYPolynomial]:
    """Write q as T_0(S_0) + T_1(S_0) S_1 + ... over the canonical picks.

    S_0 is picks[0] and S_r is picks[r]; the returned list holds the
    polynomials T_0 .. T_{period-1}.  Works by repeatedly matching the
    leading ray coefficient with the unique monic product S_0^m * S_r of
    the same degree, which lowers the degree strictly.
    """
    if expand_in_basis(basis, q) is None:
        raise MembershipError("element is not in the computed centralizer span")
    period = basis.period
    if basis.picks and any(s is None for s in basis.picks):
        raise BoundError("basis is truncated: some residue classes have no pick")
    coeffs: list[dict[int, Fraction]] = [dict() for _ in range(period)]
    residual = q
    while residual:
        if residual.is_scalar():
            coeffs[0][0] = coeffs[0].get(0, Fraction(0)) + residual.constant_term()
            break
        if not basis.picks:
            raise BoundError("basis is truncated: no nonconstant pick available")
        level, lam = _lead_coeff_on_ray(basis, residual)
        deg = basis.ray_degrees[level]
        residue = deg % period
        s0 = basis.picks[0]
        if residue == 0:
            m = deg // period
            factor = power(s0, m)
        else:
            pick = basis.picks[residue]
            pick_deg = basis.ray_degrees[basis.pick_levels[residue]]
            m = (deg - pick_deg) // period
            if m < 0:
                raise InternalInconsistencyError(
                    "pick degree exceeds the degree of its residue class member"
                )
            factor = mul(power(s0, m), pick)
        coeffs[residue][m] = coeffs[residue].get(m, Fraction(0)) + lam
        residual = residual - lam * factor
        if residual and not residual.is_scalar():
            new_level, _ = _lead_coeff_on_ray(basis, residual)
            if new_level >= level:
                raise InternalInconsistencyError("leading elimination failed to lower the degree")
    out = []
    for acc in coeffs:
        size = max(acc) + 1 if acc else 0
        vec = [Fraction(0)] * size
        for m, c in acc.items():
            vec[m] = c
        out.append(XYPolynomial(vec))
    return out


def recompose(parts: list[XYPolynomial], basis: CentralizerBasis) -> WeylElement:
    """Inverse of decompose: T_0(S_0) + sum of T_r(S_0) * S_r."""
    from .graded import evaluate_at_element

    s0 = basis.picks[0]
    out = evaluate_at_element(parts[0], s0)
    for r in range(1, len(parts)):
        out = out + mul(evaluate_at_element(parts[r], s0), basis.picks[r])
    return out


@dataclass(frozen=True)
class MonoidInfo:
    """Residue-class structure of an additive submonoid of the naturals."""

    min_positive: int
    gcd: int
    classes: dict[int, list[int]]
    complete: bool


def monoid_up_to(generators: Iterable[int], bound: int) -> set[int]:
    """All sums of the generators that do not exceed the bound."""
    reached = {0}
    frontier = [0]
    gens = sorted(set(g for g in generators if g > 0))
    while frontier:
        nxt = []
        for v in frontier:
            for g in gens:
                w = v + g
                if w <= bound and w not in reached:
                    reached.add(w)
                    nxt.append(w)
        frontier = nxt
    return reached


def monoid_classes(values: Iterable[int]) -> MonoidInfo:
    """Group an enumerated submonoid by residue modulo its least positive value.

    A class with d | r can be empty only because the enumeration stopped too
    early; that is reported through `complete`.  A nonempty class with a
    residue not divisible by the gcd is impossible and raises.
    """
    vals = sorted(set(values))
    positive = [v for v in vals if v > 0]
    if not positive or any(v < 0 for v in vals):
        raise DegenerateMonoidError("need a set of naturals with some positive member")
    r0 = positive[0]
    d = reduce(gcd, positive)
    classes: dict[int, list[int]] = {r: [] for r in range(r0)}
    for v in vals:
        classes[v % r0].append(v)
    complete = True
    for r in range(r0):
        if classes[r]:
            if r % d:
                raise InternalInconsistencyError(
                    "nonempty residue class not divisible by the monoid gcd"
                )
        elif r % d == 0:
            complete = False
    return MonoidInfo(min_positive=r0, gcd=d, classes=classes, complete=complete)


def is_monomial_algebra_embedding(basis: CentralizerBasis) -> bool:
    """For homogeneous input: do the basis elements multiply by adding levels?

    When true, level l -> Z^l embeds the centralizer into the polynomial
    ring as a monomial algebra.
    """
    if not is_homogeneous(basis.element):
        raise NotHomogeneousError("monomial-algebra embedding requires a homogeneous element")
    for l in basis.levels:
        for h in basis.levels:
            if l + h in basis.by_level:
                if mul(basis.by_level[l], basis.by_level[h]) != basis.by_level[l + h]:
                    return False
    return True

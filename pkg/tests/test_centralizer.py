from fractions import Fraction

import pytest

from weylalg import (
    BoundError,
    CentralizerBasis,
    ComponentKind,
    DegenerateMonoidError,
    GradedForm,
    MembershipError,
    NotHomogeneousError,
    ONE,
    WrongSectorError,
    X,
    XYPolynomial,
    Y,
    Z,
    ZERO,
    centralizer_basis,
    commutator,
    decompose,
    diag_degree,
    expand_in_basis,
    from_graded_form,
    from_terms,
    homogeneous_centralizer_component,
    is_monomial_algebra_embedding,
    leading_form,
    leading_term,
    monoid_classes,
    monoid_up_to,
    mul,
    power,
    ray_degree,
    recompose,
    to_graded_form,
    total_degree,
)
from weylalg.linalg import sparse_kernel

X2Y = from_terms([(2, 1, 1)])
X3Y = from_terms([(3, 1, 1)])
XY2 = from_terms([(1, 2, 1)])
XY = mul(X, Y)


def brute_force_component(p, grade: int, degree_cap: int) -> list:
    """Kernel of [p, -] on the monomial basis of one homogeneity degree.

    Independent of the functional-equation solver: it spans the candidate
    space with monomials X^(m+grade) Y^m (or X^m Y^(m-grade)) up to the
    polynomial degree cap and row-reduces the exact commutator matrix.
    """
    from math import lcm

    candidates = []
    for m in range(degree_cap + 1):
        if grade >= 0:
            candidates.append(from_terms([(m + grade, m, 1)]))
        else:
            candidates.append(from_terms([(m, m - grade, 1)]))
    images = [commutator(p, c) for c in candidates]
    targets = sorted({t for image in images for t in image.terms})
    rows = []
    for t in targets:
        entries = {ci: images[ci].coefficient(*t) for ci in range(len(candidates))}
        denom = lcm(*(v.denominator for v in entries.values() if v)) if any(entries.values()) else 1
        rows.append({ci: int(v * denom) for ci, v in entries.items() if v})
    kernel = sparse_kernel(rows, len(candidates))
    out = []
    for vec in kernel:
        elem = ZERO
        for ci, v in vec.items():
            elem = elem + v * candidates[ci]
        out.append(elem)
    return out


class TestHomogeneousComponent:
    def test_x2y_grade_two_line(self):
        result = homogeneous_centralizer_component(X2Y, 2)
        assert result.kind is ComponentKind.LINE
        assert result.generator == GradedForm(2, Z * (Z + 1))
        element = from_graded_form(result.generator)
        assert element == power(X2Y, 2)
        assert commutator(X2Y, element) == ZERO

    def test_xy_squared_grade_zero_is_everything(self):
        result = homogeneous_centralizer_component(power(XY, 2), 0)
        assert result.kind is ComponentKind.XY_POLYNOMIALS

    def test_x3y_grade_one_empty(self):
        result = homogeneous_centralizer_component(X3Y, 1)
        assert result.kind is ComponentKind.EMPTY
        # independent confirmation by brute force over a generous degree cap
        assert brute_force_component(X3Y, 1, 6) == []

    def test_grade_zero_is_constants_for_dominant_input(self):
        result = homogeneous_centralizer_component(X2Y, 0)
        assert result.kind is ComponentKind.LINE
        assert from_graded_form(result.generator) == ONE

    def test_negative_grade_empty_for_x_dominant(self):
        assert homogeneous_centralizer_component(X2Y, -1).kind is ComponentKind.EMPTY

    def test_mirror_side(self):
        result = homogeneous_centralizer_component(XY2, -2)
        assert result.kind is ComponentKind.LINE
        assert from_graded_form(result.generator) == power(XY2, 2)
        assert homogeneous_centralizer_component(XY2, 1).kind is ComponentKind.EMPTY

    def test_contract_errors(self):
        with pytest.raises(WrongSectorError):
            homogeneous_centralizer_component(ZERO, 0)
        with pytest.raises(NotHomogeneousError):
            homogeneous_centralizer_component(X + Y, 0)
        with pytest.raises(WrongSectorError):
            homogeneous_centralizer_component(2 * ONE, 0)

    @pytest.mark.parametrize(
        "p", [XY, power(XY, 2), power(X, 2), power(X, 3), X2Y, X3Y, XY2]
    )
    def test_agrees_with_brute_force(self, p):
        f_degree = to_graded_form(p).poly.degree
        for grade in range(-8, 9):
            cap = 2 * f_degree * abs(grade) + 4
            brute = brute_force_component(p, grade, cap)
            assert len(brute) <= 1 or diag_degree(p) == 0
            result = homogeneous_centralizer_component(p, grade)
            if result.kind is ComponentKind.LINE:
                assert len(brute) == 1
                element = from_graded_form(result.generator)
                # same line: the brute vector is a scalar multiple
                mono = next(iter(brute[0].terms))
                ratio = brute[0].coefficient(*mono) / element.coefficient(*mono)
                assert ratio and brute[0] == ratio * element
            elif result.kind is ComponentKind.EMPTY:
                assert brute == []
            else:
                # every candidate commutes: the kernel is the whole space
                assert len(brute) == cap + 1


class TestCentralizerBasis:
    def test_x_squared(self):
        basis = centralizer_basis(power(X, 2), 6)
        assert basis.levels == tuple(range(7))
        assert basis.direction == (1, 0)
        assert basis.level_gcd == 1
        assert basis.period == 1
        assert all(basis.by_level[l] == power(X, l) for l in basis.levels)
        assert basis.picks == (X,)
        assert not basis.truncated

    def test_x2y_is_powers(self):
        basis = centralizer_basis(X2Y, 9)
        assert basis.levels == (0, 1, 2, 3)
        assert basis.direction == (2, 1)
        assert all(basis.by_level[l] == power(X2Y, l) for l in basis.levels)

    def test_main_example_spans_powers(self):
        p = X + power(Y, 2)
        basis = centralizer_basis(p, 6)
        assert basis.dimension == 4
        for m in range(4):
            assert expand_in_basis(basis, power(p, m)) is not None

    def test_mirror_sector(self):
        basis = centralizer_basis(XY2, 9)
        assert basis.sector == "y"
        assert basis.direction == (1, 2)
        assert basis.levels == (0, 1, 2, 3)
        assert all(expand_in_basis(basis, power(XY2, m)) is not None for m in range(4))

    def test_every_member_commutes(self):
        p = X + power(Y, 2)
        basis = centralizer_basis(p, 8)
        for elem in basis.elements():
            assert commutator(p, elem) == ZERO

    def test_basis_laws(self):
        for p, bound in [(power(X, 2), 8), (X2Y, 9), (X + power(Y, 2), 6)]:
            basis = centralizer_basis(p, bound)
            assert basis.by_level[0] == ONE
            di, dj = basis.direction
            for l in basis.levels:
                assert leading_term(basis.by_level[l]) == from_terms([(l * di, l * dj, 1)])
            for l in basis.levels:
                for h in basis.levels:
                    if l + h in basis.by_level:
                        assert mul(
                            leading_form(basis.by_level[l]), leading_form(basis.by_level[h])
                        ) == leading_form(basis.by_level[l + h])

    def test_wrong_sector(self):
        with pytest.raises(WrongSectorError):
            centralizer_basis(XY, 6)
        with pytest.raises(WrongSectorError):
            centralizer_basis(ZERO, 6)
        with pytest.raises(WrongSectorError):
            centralizer_basis(power(XY, 2) + XY, 8)

    def test_bound_too_small(self):
        with pytest.raises(BoundError):
            centralizer_basis(power(X, 3), 2)

    def test_agreement_with_homogeneous_solver(self):
        for p in [X2Y, X3Y, power(X, 3)]:
            bound = 9
            basis = centralizer_basis(p, bound)
            step = diag_degree(p)
            direction_step = basis.direction[0] - basis.direction[1]
            for l in basis.levels:
                grade = l * direction_step
                component = homogeneous_centralizer_component(p, grade)
                assert component.kind is ComponentKind.LINE
                assert from_graded_form(component.generator) == basis.by_level[l]
            # grades reachable in the bound but absent from the basis are empty
            # or their generator is too large for the bound
            for grade in range(1, 2 * step + 1):
                if grade % direction_step:
                    component = homogeneous_centralizer_component(p, grade)
                    if component.kind is ComponentKind.LINE:
                        gen = from_graded_form(component.generator)
                        assert total_degree(gen) > bound


class TestRayDegree:
    def test_constant(self):
        basis = centralizer_basis(power(X, 2), 6)
        assert ray_degree(ONE, basis) == 0

    def test_x_cubed(self):
        basis = centralizer_basis(power(X, 2), 6)
        assert ray_degree(power(X, 3), basis) == 3

    def test_x2y_squared(self):
        basis = centralizer_basis(X2Y, 9)
        assert ray_degree(power(X2Y, 2), basis) == 2

    def test_membership_error(self):
        basis = centralizer_basis(power(X, 2), 6)
        with pytest.raises(MembershipError):
            ray_degree(Y, basis)
        with pytest.raises(MembershipError):
            ray_degree(ZERO, basis)


class TestDecompose:
    def test_constant(self):
        basis = centralizer_basis(power(X, 2), 6)
        assert decompose(ONE, basis) == [XYPolynomial([1])]

    def test_polynomial_readback(self):
        basis = centralizer_basis(power(X, 2), 6)
        parts = decompose(power(X, 3) + 2 * X, basis)
        assert parts == [XYPolynomial([0, 2, 0, 1])]

    def test_power_minus_constant(self):
        p = X + power(Y, 2)
        basis = centralizer_basis(p, 6)
        parts = decompose(power(p, 2) - 3, basis)
        assert parts == [Z * Z - 3]

    def test_recompose_roundtrip(self):
        p = X + power(Y, 2)
        basis = centralizer_basis(p, 8)
        element = power(p, 3) - Fraction(1, 2) * power(p, 2) + 5
        parts = decompose(element, basis)
        assert recompose(parts, basis) == element

    def test_uniqueness_under_shift(self):
        basis = centralizer_basis(power(X, 2), 8)
        element = power(X, 3) + 2 * X
        parts = decompose(element, basis)
        shifted = decompose(element + mul(basis.picks[0], element), basis)
        assert shifted == [(1 + Z) * parts[0]]

    def test_membership_error(self):
        basis = centralizer_basis(power(X, 2), 6)
        with pytest.raises(MembershipError):
            decompose(Y, basis)


def synthetic_two_class_basis(bound: int = 7) -> CentralizerBasis:
    """A base-and-picks structure with period 2 built from powers of X.

    Levels follow the numerical monoid generated by 2 and 3, so residue
    class 1 first appears at level 3; all members commute pairwise since
    they are powers of a single element.
    """
    levels = [0] + [l for l in range(2, bound + 1)]
    by_level = {l: power(X, l) for l in levels}
    return CentralizerBasis(
        element=power(X, 2),
        bound=bound,
        sector="x",
        direction=(1, 0),
        levels=tuple(levels),
        level_gcd=1,
        period=2,
        by_level=by_level,
        ray_degrees={l: l for l in levels},
        picks=(power(X, 2), power(X, 3)),
        pick_levels=(2, 3),
        truncated=False,
    )


class TestDecomposeSyntheticPeriodTwo:
    def test_even_power(self):
        basis = synthetic_two_class_basis()
        parts = decompose(power(X, 6), basis)
        assert parts == [Z ** 3, XYPolynomial()]

    def test_odd_power(self):
        basis = synthetic_two_class_basis()
        parts = decompose(power(X, 7), basis)
        assert parts == [XYPolynomial(), Z ** 2]

    def test_mixture(self):
        basis = synthetic_two_class_basis()
        element = power(X, 7) - 4 * power(X, 4) + power(X, 3) + Fraction(1, 3)
        parts = decompose(element, basis)
        assert recompose(parts, basis) == element
        assert parts == [XYPolynomial([Fraction(1, 3), 0, -4]), Z ** 2 + 1]


class TestMonoidClasses:
    def test_two_three(self):
        info = monoid_classes(monoid_up_to([2, 3], 12))
        assert info.min_positive == 2
        assert info.gcd == 1
        assert info.complete
        assert min(info.classes[1]) == 3

    def test_multiples_of_four(self):
        info = monoid_classes({0, 4, 8, 12})
        assert info.min_positive == 4
        assert info.gcd == 4
        assert info.classes[0] == [0, 4, 8, 12]
        assert info.classes[1] == [] and info.classes[2] == [] and info.classes[3] == []
        assert info.complete

    def test_six_ten_fifteen(self):
        info = monoid_classes(monoid_up_to([6, 10, 15], 60))
        assert info.min_positive == 6
        assert info.gcd == 1
        assert info.complete
        assert all(info.classes[r] for r in range(6))

    def test_degenerate(self):
        with pytest.raises(DegenerateMonoidError):
            monoid_classes(set())
        with pytest.raises(DegenerateMonoidError):
            monoid_classes({0})


class TestMonomialAlgebraEmbedding:
    def test_x2y(self):
        assert is_monomial_algebra_embedding(centralizer_basis(X2Y, 9))

    def test_x_squared(self):
        assert is_monomial_algebra_embedding(centralizer_basis(power(X, 2), 8))

    def test_diagonal_pattern(self):
        # for XY the centralizer is the polynomials in XY; the level-l basis
        # element (XY)^l multiplies monomially by construction
        levels = tuple(range(5))
        by_level = {l: power(XY, l) for l in levels}
        basis = CentralizerBasis(
            element=XY,
            bound=8,
            sector="x",
            direction=(1, 1),
            levels=levels,
            level_gcd=1,
            period=1,
            by_level=by_level,
            ray_degrees={l: l for l in levels},
            picks=(XY,),
            pick_levels=(1,),
            truncated=False,
        )
        assert is_monomial_algebra_embedding(basis)

    def test_rejects_inhomogeneous(self):
        basis = centralizer_basis(X + power(Y, 2), 6)
        with pytest.raises(NotHomogeneousError):
            is_monomial_algebra_embedding(basis)

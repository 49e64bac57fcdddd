import random
from fractions import Fraction

import hypothesis.strategies as st

from weylalg import WeylElement, from_terms


def random_element(
    rng: random.Random,
    max_exp: int = 6,
    max_terms: int = 5,
    coeff_num: int = 9,
    coeff_den: int = 9,
    nonzero: bool = False,
) -> WeylElement:
    """Uniform small element for the counted acceptance suites."""
    while True:
        n = rng.randint(1 if nonzero else 0, max_terms)
        terms = []
        for _ in range(n):
            num = rng.randint(-coeff_num, coeff_num)
            den = rng.randint(1, coeff_den)
            terms.append((rng.randint(0, max_exp), rng.randint(0, max_exp), Fraction(num, den)))
        element = from_terms(terms)
        if not nonzero or element:
            return element


def swap_exponents(a: WeylElement) -> WeylElement:
    """Exchange the X and Y exponents of every term (a support operation)."""
    return from_terms([(j, i, c) for (i, j), c in a.terms.items()])


_coeffs = st.fractions(min_value=-9, max_value=9, max_denominator=9).filter(bool)


@st.composite
def weyl_elements(draw, max_exp: int = 4, max_terms: int = 4, nonzero: bool = False):
    terms = draw(
        st.lists(
            st.tuples(
                st.integers(min_value=0, max_value=max_exp),
                st.integers(min_value=0, max_value=max_exp),
                _coeffs,
            ),
            min_size=1 if nonzero else 0,
            max_size=max_terms,
        )
    )
    element = from_terms(terms)
    if nonzero and not element:
        # collapsed by cancellation; fall back to the first monomial alone
        i, j, c = terms[0]
        element = from_terms([(i, j, c)])
    return element

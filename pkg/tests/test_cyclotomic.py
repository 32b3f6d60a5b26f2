from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from ppdiamond.cyclotomic import (
    CyclotomicNumber,
    NotRational,
    OrderMismatch,
    cyc_arith,
    cyc_to_rational,
    cyclotomic_polynomial,
    root_of_unity,
)


@pytest.mark.parametrize(
    "j,phi",
    [(1, (-1, 1)), (2, (1, 1)), (3, (1, 1, 1)), (4, (1, 0, 1)), (6, (1, -1, 1)),
     (12, (1, 0, -1, 0, 1))],
)
def test_cyclotomic_polynomials(j, phi):
    assert cyclotomic_polynomial(j) == phi


def test_root_of_unity_examples():
    assert cyc_to_rational(root_of_unity(1, 5)) == 1
    assert cyc_to_rational(root_of_unity(2, 3)) == -1
    assert cyc_to_rational(root_of_unity(3, 1) + root_of_unity(3, 2)) == -1


def test_arith_examples():
    one = CyclotomicNumber.rational(2, 1)
    assert cyc_to_rational(cyc_arith(one, root_of_unity(2, 1), "add")) == 0
    r3 = root_of_unity(3, 1)
    assert cyc_to_rational(r3 * r3 * r3) == 1
    i = root_of_unity(4, 1)
    assert cyc_to_rational((1 + i) * (1 - i)) == 2


@pytest.mark.parametrize("j", range(1, 13))
def test_rho_to_the_j_is_one(j):
    x = CyclotomicNumber.rational(j, 1)
    for _ in range(j):
        x = x * root_of_unity(j, 1)
    assert x.is_rational() and cyc_to_rational(x) == 1


@pytest.mark.parametrize("j", range(2, 13))
def test_inverse_pairs(j):
    for e in range(1, j):
        assert cyc_to_rational(root_of_unity(j, e) * root_of_unity(j, j - e)) == 1


@pytest.mark.parametrize("j", range(1, 13))
def test_full_sum_of_roots(j):
    total = sum((root_of_unity(j, e) for e in range(j)), CyclotomicNumber.rational(j, 0))
    assert cyc_to_rational(total) == (1 if j == 1 else 0)


def test_negative_exponent():
    assert root_of_unity(5, -2) == root_of_unity(5, 3)


def test_order_mismatch():
    with pytest.raises(OrderMismatch):
        root_of_unity(3, 1) + root_of_unity(4, 1)


def test_non_rational_rejected():
    with pytest.raises(NotRational):
        cyc_to_rational(root_of_unity(3, 1))


def test_power():
    assert root_of_unity(7, 2) ** 4 == root_of_unity(7, 8)


elements = st.builds(
    lambda cs: CyclotomicNumber.from_poly(9, cs),
    st.lists(st.fractions(max_denominator=5, min_value=-5, max_value=5), min_size=0, max_size=9),
)


@given(elements, elements, elements)
def test_field_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a - a == CyclotomicNumber.rational(9, 0)


@given(st.integers(0, 40), st.integers(0, 40))
def test_exponents_add(e, f):
    assert root_of_unity(10, e) * root_of_unity(10, f) == root_of_unity(10, e + f)


def test_canonical_length():
    x = CyclotomicNumber.from_poly(12, [Fraction(1)] * 30)
    assert len(x.coeffs) == 4

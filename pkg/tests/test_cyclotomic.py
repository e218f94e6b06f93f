import cmath

import pytest
from hypothesis import given, settings, strategies as st

from fusionwitt.cyclotomic import CycInt, cyclotomic_polynomial


def test_polynomials_small_orders():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(2) == (1, 1)
    assert cyclotomic_polynomial(3) == (1, 1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(8) == (1, 0, 0, 0, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)


def test_degree_is_euler_phi():
    from math import gcd

    for n in range(1, 40):
        degree = len(cyclotomic_polynomial(n)) - 1
        assert degree == sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)


def test_primitive_root_vanishes_numerically():
    for n in (5, 7, 8, 9, 12, 24):
        poly = cyclotomic_polynomial(n)
        z = cmath.exp(2j * cmath.pi / n)
        value = sum(c * z**i for i, c in enumerate(poly))
        assert abs(value) < 1e-9


def test_full_rotation_sums_to_zero():
    total = CycInt.integer(12, 0)
    for e in range(12):
        total = total + CycInt.root_of_unity(12, e)
    assert total.is_zero()


def test_known_identity_zeta3():
    # 1 + zeta_3 + zeta_3^2 = 0, expressed at order 24
    z = CycInt.root_of_unity(24, 8)
    total = CycInt.integer(24, 1) + z + z * z
    assert total.is_zero()


def test_as_integer():
    assert CycInt.integer(8, 5).as_integer() == 5
    assert CycInt.root_of_unity(8, 1).as_integer() is None
    # zeta_8^2 = i is not rational either
    assert CycInt.root_of_unity(8, 2).as_integer() is None
    # but zeta_8^4 = -1 is
    assert CycInt.root_of_unity(8, 4).as_integer() == -1


def test_conjugate_inverts_exponents():
    z = CycInt.root_of_unity(24, 5)
    assert z * z.conjugate() == CycInt.integer(24, 1)


def test_mixed_orders_rejected():
    with pytest.raises(ValueError):
        CycInt.integer(8, 1) + CycInt.integer(12, 1)


elements = st.builds(
    lambda pairs: CycInt.from_exponent_counts(24, dict(pairs)),
    st.lists(
        st.tuples(st.integers(min_value=0, max_value=23), st.integers(min_value=-5, max_value=5)),
        max_size=6,
    ),
)


@settings(max_examples=150)
@given(elements, elements)
def test_arithmetic_matches_complex_numerics(a, b):
    for exact, numeric in [
        (a + b, a.numeric() + b.numeric()),
        (a - b, a.numeric() - b.numeric()),
        (a * b, a.numeric() * b.numeric()),
    ]:
        assert abs(exact.numeric() - numeric) < 1e-7


@settings(max_examples=150)
@given(elements)
def test_conjugate_matches_complex_conjugate(a):
    assert abs(a.conjugate().numeric() - a.numeric().conjugate()) < 1e-7


@settings(max_examples=100)
@given(elements, elements)
def test_equality_is_canonical(a, b):
    diff = a - b
    assert diff.is_zero() == (a == b)
    if diff.is_zero():
        assert abs(a.numeric() - b.numeric()) < 1e-7

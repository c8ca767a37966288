from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tanglekit.scalar import ONE, QUANTUM_TWO, ZERO, Scalar, d, dp, v, w

exps = st.tuples(*(st.integers(-2, 2) for _ in range(4)))
coeffs = st.fractions(min_value=-5, max_value=5, max_denominator=6)
scalars = st.lists(st.tuples(exps, coeffs), max_size=4).map(Scalar)
points = st.tuples(*(st.fractions(min_value=Fraction(1, 4), max_value=4, max_denominator=5) for _ in range(4)))


def value(s: Scalar, point) -> Fraction:
    """Evaluate term by term, independently of the ring operations."""
    total = Fraction(0)
    for e, c in s.terms:
        term = Fraction(c)
        for x, k in zip(point, e):
            term *= x ** k
        total += term
    return total


@given(scalars, scalars, scalars)
def test_ring_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert (a + b) + c == a + (b + c)
    assert a * b == b * a
    assert a + b == b + a
    assert a * (b + c) == a * b + a * c
    assert a - a == ZERO
    assert a * ONE == a


@given(scalars, scalars, points)
def test_operations_agree_with_evaluation(a, b, point):
    assert value(a + b, point) == value(a, point) + value(b, point)
    assert value(a * b, point) == value(a, point) * value(b, point)
    assert value(-a, point) == -value(a, point)


@given(scalars, scalars, scalars)
@settings(max_examples=60)
def test_substitute_is_a_homomorphism(a, b, image):
    bind = {"v": w ** 2 * Fraction(3, 2), "d": image if image.is_monomial() and not image.is_zero() else dp}
    assert (a * b).substitute(bind) == a.substitute(bind) * b.substitute(bind)
    assert (a + b).substitute(bind) == a.substitute(bind) + b.substitute(bind)


@given(scalars)
def test_text_round_trip(a):
    assert Scalar.parse(str(a)) == a


@given(scalars)
def test_json_round_trip(a):
    assert Scalar.from_json(a.to_json()) == a


def test_quantum_two_square():
    assert QUANTUM_TWO * QUANTUM_TWO == v ** 2 + 2 + v ** -2


def test_half_quantum_two_text():
    assert str(QUANTUM_TWO / 2) == "1/2 v^-1 + 1/2 v"


def test_monomial_inverse():
    m = Scalar.const(Fraction(2, 3)) * d ** 2 * v ** -1
    assert m * m.inverse() == ONE
    assert m ** -2 == (m * m).inverse()


def test_non_monomial_inverse_raises():
    with pytest.raises(ZeroDivisionError):
        QUANTUM_TWO.inverse()


def test_zero_text():
    assert str(ZERO) == "0"
    assert Scalar.parse("0") == ZERO


def test_substitution_is_simultaneous():
    swapped = (v * w ** 2).substitute({"v": w, "w": v})
    assert swapped == w * v ** 2


def test_json_form():
    assert (Scalar.const(Fraction(-1, 2)) * v ** -1).to_json() == [{"num": -1, "den": 2, "pows": {"v": -1}}]

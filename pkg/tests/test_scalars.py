from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from lpgg.scalars import (
    InexactDivisionError,
    InexactSqrtError,
    Radical,
    approx_equal,
    coerce,
    squarefree_decompose,
)

rationals = st.fractions(
    min_value=Fraction(-50), max_value=Fraction(50), max_denominator=12
)
squarefree_keys = st.sampled_from([1, 2, 3, 5, 6, 7, 10, 15, 21])


def radical_strategy():
    return st.dictionaries(squarefree_keys, rationals, max_size=3).map(
        lambda terms: sum(
            (Radical.sqrt(m) * c for m, c in terms.items()), Radical(0)
        )
    )


def test_squarefree_decompose():
    assert squarefree_decompose(1) == (1, 1)
    assert squarefree_decompose(12) == (2, 3)
    assert squarefree_decompose(49) == (7, 1)
    assert squarefree_decompose(360) == (6, 10)
    with pytest.raises(ValueError):
        squarefree_decompose(0)


def test_sqrt_key_reduction():
    assert Radical.sqrt(2) * Radical.sqrt(3) * Radical.sqrt(6) == Radical(6)
    assert Radical.sqrt(8) == Radical(2) * Radical.sqrt(2)
    assert Radical.sqrt(Fraction(2, 3)) == Radical.sqrt(6) / 3
    assert Radical.sqrt(Fraction(9, 4)) == Radical(Fraction(3, 2))


def test_sqrt_of_negative_rejected():
    with pytest.raises(InexactSqrtError):
        Radical.sqrt(-2)
    with pytest.raises(InexactSqrtError):
        Radical.sqrt(Radical.sqrt(2))


def test_division_single_and_double_term():
    assert Radical(1) / (2 * Radical.sqrt(3)) == Radical.sqrt(3) / 6
    x = Radical(1) + Radical.sqrt(2)
    assert x / x == Radical(1)
    y = Radical.sqrt(2) + Radical.sqrt(3) * Fraction(1, 2)
    assert (y * y) / y == y


def test_division_three_terms_signals():
    z = Radical(1) + Radical.sqrt(2) + Radical.sqrt(3)
    with pytest.raises(InexactDivisionError):
        Radical(1) / z


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        Radical(1) / Radical(0)


def test_sign():
    assert Radical(0).sign() == 0
    assert (Radical.sqrt(2) - 1).sign() == 1
    assert (Radical(Fraction(3, 2)) - Radical.sqrt(2)).sign() == 1
    assert (Radical(Fraction(7, 5)) - Radical.sqrt(2)).sign() == -1
    assert (-Radical.sqrt(5)).sign() == -1


def test_float_round_trip():
    value = Radical(Fraction(3, 7)) + Radical.sqrt(5) * Fraction(2, 3)
    expected = 3 / 7 + (2 / 3) * 5 ** 0.5
    assert approx_equal(float(value), expected, rel=1e-15)


def test_json_terms_round_trip():
    value = Radical(Fraction(-1, 3)) + Radical.sqrt(21) * Fraction(2, 7)
    assert Radical.from_json_terms(value.to_json_terms()) == value


def test_coerce_widening_only():
    assert coerce(Fraction(1, 2), "approx") == 0.5
    assert coerce(Radical.sqrt(2), "complex") == complex(2 ** 0.5)
    with pytest.raises(TypeError):
        coerce(0.5, "exact")
    with pytest.raises(TypeError):
        coerce(1j, "approx")


@given(radical_strategy(), radical_strategy(), radical_strategy())
def test_ring_laws(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(radical_strategy())
def test_float_consistency(a):
    direct = float(a)
    doubled = float(a + a)
    assert approx_equal(doubled, 2 * direct, rel=1e-12, abs_tol=1e-12)


@given(radical_strategy(), rationals)
def test_scalar_multiplication_matches_float(a, q):
    assert approx_equal(float(a * q), float(a) * float(q), rel=1e-12,
                        abs_tol=1e-12)

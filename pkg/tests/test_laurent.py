from __future__ import annotations

from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from chordal.laurent import ONE, ZERO, LaurentPoly, t_power

T = sympy.Symbol("t")

polys = st.dictionaries(st.integers(-12, 12), st.integers(-5, 5), max_size=6).map(LaurentPoly)


def as_sympy(p: LaurentPoly):
    return sum((c * T ** sympy.Rational(k, 4) for k, c in p.terms.items()), sympy.Integer(0))


@given(polys, polys)
def test_ring_operations_match_sympy(p, q):
    assert sympy.expand(as_sympy(p + q) - (as_sympy(p) + as_sympy(q))) == 0
    assert sympy.expand(as_sympy(p * q) - as_sympy(p) * as_sympy(q)) == 0
    assert p - p == ZERO


@given(polys)
def test_invert_variable_is_involution(p):
    assert p.invert_variable().invert_variable() == p


def test_rendering():
    W = t_power(1) + t_power(-1)
    assert str(W) == "t + t^-1"
    assert str(-W) == "-t - t^-1"
    assert str(LaurentPoly.monomial(Fraction(5, 2))) == "t^(5/2)"
    assert str(ZERO) == "0" and str(ONE) == "1"


def test_span_and_json_roundtrip():
    p = LaurentPoly.from_powers({4: -1, 3: 1}) + LaurentPoly.monomial(Fraction(5, 2))
    assert p.span() == Fraction(3, 2)
    assert LaurentPoly.from_json(p.to_json()) == p


def test_substitution_a_to_t_minus_quarter():
    A = LaurentPoly.monomial(1, var="A", unit=1)
    assert (A ** 3).substitute_power(-1, 4) == LaurentPoly.monomial(Fraction(-3, 4))


def test_negative_power_needs_monomial():
    with pytest.raises(ValueError):
        (t_power(1) + ONE) ** -1

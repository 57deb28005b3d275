"""Laurent coefficient ring: arithmetic, the sign-flip twist, evaluation."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from cubichecke.coeffs import (
    A, B, C, CINV, ONE, ZERO, CoeffError, LaurentCoeff, SpecPoint,
)

exps = st.integers(min_value=-3, max_value=3)
coefvals = st.integers(min_value=-40, max_value=40).filter(lambda v: v != 0)
polys = st.dictionaries(
    st.tuples(st.integers(0, 3), st.integers(0, 3), exps),
    coefvals, max_size=5,
).map(LaurentCoeff)

PT = SpecPoint(101, 3, 5, 2)
PT0 = SpecPoint(0, 2, -1, 3)


def test_constants():
    assert ZERO.is_zero()
    assert ONE.is_unit()
    assert not A.is_unit()
    assert (C * CINV) == ONE
    assert A * B == B * A
    assert repr(A + B) == "b + a"  # exponent-sorted term order


def test_mono_and_repr():
    x = LaurentCoeff.mono(-2, 1, 0, -1)
    assert repr(x) == "-2*a*c^-1"
    assert x.eval(PT) == (-2 * 3 * pow(2, -1, 101)) % 101


def test_zero_terms_rejected_in_constructor():
    with pytest.raises(CoeffError):
        LaurentCoeff({(0, 0, 0): 0})
    assert (A - A).is_zero()


@given(polys, polys)
def test_add_commutes(x, y):
    assert x + y == y + x


@given(polys, polys, polys)
def test_mul_distributes(x, y, z):
    assert x * (y + z) == x * y + x * z


@given(polys)
def test_neg_cancels(x):
    assert (x + (-x)).is_zero()


@given(polys, st.integers(-4, 4))
def test_mul_cpow_matches_c_power(x, k):
    ck = LaurentCoeff.mono(1, 0, 0, k)
    assert x.mul_cpow(k) == x * ck


@given(polys)
def test_phi_involution(x):
    assert x.phi().phi() == x


@given(polys, polys)
def test_phi_is_ring_map(x, y):
    assert (x + y).phi() == x.phi() + y.phi()
    assert (x * y).phi() == x.phi() * y.phi()


@given(polys)
def test_phi_matches_substitution_at_point(x):
    # a -> -b/c, b -> -a/c, c -> 1/c evaluated at PT
    cinv = pow(PT.c, -1, PT.p)
    sub = SpecPoint(PT.p, (-PT.b * cinv) % PT.p, (-PT.a * cinv) % PT.p, cinv)
    assert x.phi().eval(PT) == x.eval(sub)


@given(polys, polys)
def test_eval_is_ring_map(x, y):
    assert (x + y).eval(PT) == (x.eval(PT) + y.eval(PT)) % PT.p
    assert (x * y).eval(PT) == (x.eval(PT) * y.eval(PT)) % PT.p


@given(polys)
def test_eval_rational(x):
    v = x.eval(PT0)
    assert isinstance(v, Fraction)
    w = sum(
        Fraction(k) * PT0.a ** ea * PT0.b ** eb * Fraction(PT0.c) ** ec
        for (ea, eb, ec), k in x.terms()
    )
    assert v == w


@given(polys)
@settings(max_examples=60)
def test_json_roundtrip(x):
    assert LaurentCoeff.from_json(x.to_json()) == x


def test_json_rejects_zero_and_dup():
    with pytest.raises(CoeffError):
        LaurentCoeff.from_json({"terms": [{"ea": 0, "eb": 0, "ec": 0, "k": "0"}]})
    t = {"ea": 1, "eb": 0, "ec": 0, "k": "2"}
    with pytest.raises(CoeffError):
        LaurentCoeff.from_json({"terms": [t, t]})


def test_units_are_signed_c_powers():
    assert LaurentCoeff.mono(-1, 0, 0, 5).is_unit()
    assert not LaurentCoeff.mono(2, 0, 0, 1).is_unit()
    assert not (ONE + A).is_unit()


def test_spec_point_validation():
    with pytest.raises(CoeffError):
        SpecPoint(101, 0, 0, 0)
    with pytest.raises(CoeffError):
        SpecPoint(0, 1, 1, 0)
    with pytest.raises(CoeffError):
        SpecPoint(1, 0, 0, 1)
    with pytest.raises(CoeffError):
        SpecPoint(-7, 0, 0, 1)


def test_spec_point_reduce():
    assert SpecPoint(7, 0, 0, 1).reduce(-1) == 6
    assert SpecPoint(0, 0, 0, 1).reduce(3) == Fraction(3)

"""Braid word utilities."""

import pytest
from hypothesis import given, strategies as st

from cubichecke import words as W

letters = st.integers(min_value=-4, max_value=4).filter(lambda x: x != 0)
braidwords = st.lists(letters, max_size=12).map(tuple)


def test_check_word():
    assert W.check_word((1, -3, 2), 4) == (1, -3, 2)
    with pytest.raises(W.WordError):
        W.check_word((4,), 4)
    with pytest.raises(W.WordError):
        W.check_word((0,), 4)
    with pytest.raises(W.WordError):
        W.check_word((1.0,), 4)


@given(braidwords)
def test_free_reduce_idempotent(w):
    r = W.free_reduce(w)
    assert W.free_reduce(r) == r


@given(braidwords)
def test_free_reduce_kills_inverse(w):
    assert W.free_reduce(w + W.inverse(w)) == ()
    assert W.concat(W.inverse(w), w) == ()


def test_free_reduce_nested():
    assert W.free_reduce((1, 2, -2, -1, 3)) == (3,)
    assert W.free_reduce((1, -2, 2, 2)) == (1, 2)


@given(braidwords, braidwords)
def test_inverse_antihomomorphism(u, v):
    assert W.inverse(u + v) == W.inverse(v) + W.inverse(u)


@given(braidwords, st.integers(-3, 3))
def test_power_adds(w, k):
    assert W.power(w, k) == W.free_reduce(
        W.power(w, k - 1) + W.free_reduce(w)) if k > 0 else True
    assert W.power(w, 0) == ()
    assert W.power(w, -1) == W.inverse(W.free_reduce(w))


def test_shift_and_mirror():
    assert W.shift((1, -2), 2) == (3, -4)
    assert W.mirror((1, -2, 3), 4) == (3, -2, 1)
    assert W.mirror(W.mirror((1, -2, 3), 4), 4) == (1, -2, 3)
    with pytest.raises(W.WordError):
        W.shift((1,), -1)
    with pytest.raises(W.WordError):
        W.mirror((4,), 4)


def test_ad_delta():
    assert W.ad_delta((1, 2, -3)) == (3, 2, -1)
    assert W.ad_delta(W.ad_delta((1, -2, 3))) == (1, -2, 3)
    with pytest.raises(W.WordError):
        W.ad_delta((4,))


def test_special_words():
    assert W.special("delta_garside", 4) == (1, 2, 3, 1, 2, 1)
    assert W.special("w0", 5) == (3, 2, 1, 1, 2, 3)
    assert W.special("delta5", 5) == (4, 3, 2, 1, 1, 2, 3, 4)
    assert W.special("c_n", 3) == W.power((1, 2), 3)
    assert W.special("y_n", 4) == (3, 2, 1, 1, 2, 3)
    assert W.special("x_plus", 5) == (2, 1, 3, -2, 1, 3, 2)
    assert W.special("x_minus", 5) == (-2, -3, -1, 2, -3, -1, -2)
    with pytest.raises(W.UnknownName):
        W.special("nope", 4)
    with pytest.raises(W.WordError):
        W.special("delta5", 4)


def test_special_full_twist_is_central_word():
    # the full twist on n strands is the n-th power of the rotation
    for n in (2, 3, 4, 5):
        c = W.special("c_n", n)
        assert c == W.power(tuple(range(1, n)), n)

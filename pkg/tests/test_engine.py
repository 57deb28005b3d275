"""Word reduction engine: normal forms, idempotence, homomorphism."""

import random

import pytest

from cubichecke.catalog import basis_words, get_catalog
from cubichecke.coeffs import LaurentCoeff
from cubichecke.engine import Engine, IrreducibleWord, default_engine
from cubichecke.oracle import oracle_A3
from cubichecke.words import free_reduce, inverse

RAW_ONE = {(0, 0, 0): 1}


def _unit(red):
    return red == {(): RAW_ONE}


def test_unit_and_generators():
    eng = default_engine()
    assert _unit(eng.reduce((), 3))
    assert eng.reduce((2,), 3) == {(2,): RAW_ONE}
    assert eng.reduce((1, -1), 4) == {(): RAW_ONE}


def test_square_expansion():
    # s^2 = a s + b + c s^-1: the length-three basis is {1, s, s^-1}
    eng = default_engine()
    assert eng.reduce((1, 1), 3) == {
        (1,): {(1, 0, 0): 1},
        (): {(0, 1, 0): 1},
        (-1,): {(0, 0, 1): 1},
    }


def test_cube_expansion():
    # s^3 = (a^2+b) s + (ab+c) + ac s^-1
    eng = default_engine()
    assert eng.reduce((1, 1, 1), 3) == {
        (1,): {(2, 0, 0): 1, (0, 1, 0): 1},
        (): {(1, 1, 0): 1, (0, 0, 1): 1},
        (-1,): {(1, 0, 1): 1},
    }


def test_braid_relation_normalizes():
    eng = default_engine()
    assert eng.reduce((2, 1, 2), 3) == eng.reduce((1, 2, 1), 3)


def test_basis_idempotence_level3():
    eng = default_engine()
    for w in basis_words(3):
        assert eng.reduce(w, 3) == {w: RAW_ONE}, w


def test_basis_idempotence_level4_sample():
    eng = default_engine()
    rng = random.Random(20260817)
    ws = basis_words(4)
    for w in rng.sample(ws, 60):
        assert eng.reduce(w, 4) == {w: RAW_ONE}, w


def test_inverse_pairs_reduce_to_unit():
    eng = default_engine()
    rng = random.Random(7)
    for n in (3, 4):
        for _ in range(8):
            w = tuple(rng.choice([i for i in range(-(n - 1), n) if i])
                      for _ in range(rng.randint(1, 5)))
            assert _unit(eng.reduce(free_reduce(w + inverse(w)), n)), w


def test_matches_oracle_on_random_words():
    eng = default_engine()
    model = oracle_A3()
    rng = random.Random(11)
    for _ in range(25):
        w = tuple(rng.choice((1, -1, 2, -2)) for _ in range(rng.randint(0, 7)))
        w = free_reduce(w)
        red = {v: LaurentCoeff(dict(cd)) for v, cd in eng.reduce(w, 3).items()}
        assert red == model.fold_to_laurent(w), w


def test_reduction_is_support_on_catalog():
    eng = default_engine()
    cat = get_catalog(4)
    red = eng.reduce((3, 3, 2, 1, 1, 2, 3), 4)
    assert red
    for w in red:
        assert cat.index(w) is not None


def test_irreducible_raises_with_trace():
    eng = Engine(depth_limit=1, state_limit=4)
    with pytest.raises(IrreducibleWord) as ei:
        eng.reduce((3, -2, 3, 1, -2, 1, 3), 4)
    trace = ei.value.trace
    assert trace["level"] == 4
    assert trace["word"] == [3, -2, 3, 1, -2, 1, 3]

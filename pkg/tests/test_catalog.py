"""Tower basis catalog: counts, strata, split/index round trips."""

import pytest

from cubichecke.catalog import (
    LevelOutOfRange, basis_words, get_catalog, tower_gens,
)

RANKS = {2: 3, 3: 24, 4: 648, 5: 155520}


def test_ranks():
    for n, r in RANKS.items():
        assert len(basis_words(n)) == r


def test_tower_gen_counts():
    assert len(tower_gens(2)) == 3
    assert len(tower_gens(3)) == 8
    assert len(tower_gens(4)) == 27
    assert len(tower_gens(5)) == 240


def test_level_out_of_range():
    with pytest.raises(LevelOutOfRange):
        get_catalog(6)
    with pytest.raises(LevelOutOfRange):
        tower_gens(1)


def test_words_distinct():
    for n in (2, 3, 4):
        ws = basis_words(n)
        assert len(set(ws)) == len(ws)


def test_level5_strata_sizes():
    tg = tower_gens(5)
    assert len(tg) == 240
    assert len(set(tg)) == 240
    # empty word, then five nonempty strata
    sizes = [1, 54, 72, 54, 56, 3]
    start = 0
    assert tg[0] == ()
    # stratum boundaries follow the generating construction order
    bounds = []
    for s in sizes:
        bounds.append((start, start + s))
        start += s
    assert start == 240
    # single-top stratum: one leading +-4, rest over indices <= 3
    for i in range(*bounds[1]):
        t = tg[i]
        assert abs(t[0]) == 4
        assert all(abs(x) <= 3 for x in t[1:])


def test_additions_start_with_top_generator():
    for n in (3, 4, 5):
        for t in tower_gens(n):
            if t:
                assert abs(t[0]) == n - 1


def test_level5_length_histogram():
    hist = {}
    for t in tower_gens(5):
        hist[len(t)] = hist.get(len(t), 0) + 1
    assert hist == {
        0: 1, 1: 2, 2: 4, 3: 9, 4: 20, 5: 16, 6: 24, 7: 18,
        8: 32, 9: 38, 10: 19, 11: 30, 12: 10, 13: 15, 14: 2,
    }


def test_tower_product_structure():
    # level-n words are exactly (level n-1 word) + (tower word)
    for n in (3, 4):
        cat = get_catalog(n)
        lower = basis_words(n - 1)
        tg = tower_gens(n)
        assert basis_words(n) == [u + t for u in lower for t in tg]
        assert cat.word(0) == ()


def test_split_and_index_roundtrip():
    cat = get_catalog(4)
    for i in (0, 1, 23, 24, 100, 647):
        w = cat.word(i)
        assert cat.index(w) == i
        u, t = cat.split(w)
        assert u + t == w
        assert get_catalog(3).index(u) is not None


def test_split_rejects_non_catalog_tail():
    cat = get_catalog(3)
    assert cat.split((2, 2)) is None
    assert cat.index((2, -1, 2)) is None
    # (1,2,1) does split: lower part (1), tower tail (2,1)
    assert cat.split((1, 2, 1)) == ((1,), (2, 1))


def test_membership_subtleties():
    cat = get_catalog(3)
    assert cat.index((1, -2, 1, -2)) is not None
    assert cat.index((-2, 1, -2, 1)) is None
    assert cat.index((2, -1, 2)) is None
    assert cat.index((1, -2, 1)) is not None


def test_index_layout_tail_minor():
    cat = get_catalog(4)
    T = len(cat.tgens)
    for iu in (0, 5, 23):
        for it in (0, 3, 26):
            w = get_catalog(3).word(iu) + cat.tgens[it]
            assert cat.index(w) == iu * T + it


def test_level5_index_fast():
    cat = get_catalog(5)
    assert cat.index(()) == 0
    w = cat.word(155519)
    assert cat.index(w) == 155519
    u, t = cat.split(w)
    assert get_catalog(4).index(u) == 647
    assert t == cat.tgens[239]

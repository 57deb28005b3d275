"""Canonical basis catalogs for levels 2 through 5.

Each level n > 2 is a free module over level n-1 on a finite generating
set T_n of words; the level-n catalog is {concat(u, t)} ordered u-major,
so index(u.t) = index(u) * |T_n| + index(t).  Every non-identity word in
T_n starts with the top generator (index n-1), which makes the (u, t)
split of a catalog word unique and purely structural: cut at the first
letter of index n-1.

Generating sets:
  T_3: 8 words.
  T_4: the 27-word set gens_A (with gens_Aprime its 1<->3 letter swap).
  T_5: 240 words in six strata built from gens_A, gens_Aprime, gens_B
       and the named 4-strand words.
"""

from __future__ import annotations

from functools import lru_cache

from cubichecke.words import Word, free_reduce, inverse, mirror, special

RANKS = {2: 3, 3: 24, 4: 648, 5: 155520}

T5_STRATUM_SIZES = (1, 54, 72, 54, 56, 3)


class CountMismatch(RuntimeError):
    pass


class LevelOutOfRange(ValueError):
    pass


def _signs(*patterns):
    """Expand sign slots: each pattern is a tuple of abs-indices; yields
    all sign choices, positive before negative, leftmost slot major."""
    out = []
    for pat in patterns:
        combos = [()]
        for idx in pat:
            combos = [c + (s * idx,) for c in combos for s in (1, -1)]
        out.extend(combos)
    return out


@lru_cache(maxsize=None)
def gens_T3() -> tuple[Word, ...]:
    t = [(), (2,), (2, 1), (2, -1), (-2,), (-2, 1), (-2, -1), (-2, 1, -2)]
    if len(t) != 8:
        raise CountMismatch("T_3 must have 8 words")
    return tuple(t)


@lru_cache(maxsize=None)
def gens_A() -> tuple[Word, ...]:
    words: list[Word] = [
        (),
        (-3, 2, -1, 2, -3),
        (3, -2, 1, -2, 3),
        (3,),
        (-3,),
    ]
    words += _signs((3, 2))                      # 4 words
    words += _signs((3, 2, 1))                   # 8 words
    words += [(3, -2, 1, -2), (-3, -2, 1, -2)]
    words += [(3, -2, 3)]
    words += [(3, -2, 3, 1), (3, -2, 3, -1)]
    words += [(3, -2, 3, 1, -2, 1)]
    words += [(3, -2, 3, 1, 2), (3, -2, 3, 1, -2), (3, -2, 3, -1, 2), (3, -2, 3, -1, -2)]
    if len(words) != 27 or len(set(words)) != 27:
        raise CountMismatch("the level-4 generating set must have 27 distinct words")
    return tuple(words)


@lru_cache(maxsize=None)
def gens_Aprime() -> tuple[Word, ...]:
    return tuple(mirror(w, 4) for w in gens_A())


def _pm_tail(*indices: int) -> list[Word]:
    """Tails g_{i1}^{e1} g_{i2}^{e2} ... with each e in {0, +1, -1}."""
    combos: list[Word] = [()]
    for idx in indices:
        combos = [c + tail for c in combos for tail in ((), (idx,), (-idx,))]
    return combos


@lru_cache(maxsize=None)
def gens_B() -> tuple[Word, ...]:
    stage1: list[Word] = [()]
    for head in ((2,), (-2,)):
        stage1 += [head + t1 + t3 for t1 in ((), (1,), (-1,)) for t3 in ((), (3,), (-3,))]

    stage2: list[Word] = [(2, 1, 3, 2), (-2, -1, -3, -2)]
    stage2 += [(2, -1, 2) + t for t in ((), (3,), (-3,))]
    stage2 += [(2, -3, 2) + t for t in ((), (1,), (-1,))]
    stage2 += [(2, 1, -3, -2) + t for t in ((), (1,), (-1,))]
    stage2 += [(2, -1, 3, -2) + t for t in ((), (3,), (-3,))]
    for x in ((2, -1, 3, 2), (2, -1, -3, 2), (2, -1, -3, -2), (-2, 1, 3, -2)):
        stage2 += [x + t1 + t3 for t1 in ((), (1,), (-1,)) for t3 in ((), (3,), (-3,))]

    stage3 = [special("x_plus", 5), special("x_minus", 5), special("y_minus_word", 5)]

    if len(stage1) != 19 or len(stage2) != 50 or len(stage3) != 3:
        raise CountMismatch("level-4 module generating set stages must be 19 + 50 + 3")
    words = stage1 + stage2 + stage3
    if len(set(words)) != 72:
        raise CountMismatch("the 72 module generator words must be distinct")
    return tuple(words)


@lru_cache(maxsize=None)
def gens_T5() -> tuple[Word, ...]:
    A = gens_A()
    Ap = gens_Aprime()
    B = gens_B()
    w0 = special("w0", 5)
    w0i = inverse(w0)
    wp = special("w_plus", 5)
    wm = special("w_minus", 5)

    g0: list[Word] = [()]
    g1 = [(4,) + x for x in A] + [(-4,) + x for x in A]
    g2 = [(4, -3, 4) + x for x in B]
    g3 = [(4, 3, 2, 2, 3, 4) + x for x in Ap] + [(-4, -3, -2, -2, -3, -4) + x for x in Ap]
    g4 = [(4,) + w0 + (4,), (-4,) + w0i + (-4,)]
    g4 += [(4,) + w0i + (4,) + x for x in A]
    g4 += [(-4,) + w0 + (-4,) + x for x in A]
    g5 = [
        (4,) + wm + (4,) + wm + (4,),
        (4,) + wp + (-4,) + wp + (4,),
        (-4,) + wm + (4,) + wm + (-4,),
    ]

    strata = (g0, g1, g2, g3, g4, g5)
    sizes = tuple(len(g) for g in strata)
    if sizes != T5_STRATUM_SIZES:
        raise CountMismatch(f"T_5 stratum sizes {sizes} != {T5_STRATUM_SIZES}")
    words = [w for g in strata for w in g]
    if len(words) != 240 or len(set(words)) != 240:
        raise CountMismatch("T_5 must have 240 distinct words")
    for w in words:
        if free_reduce(w) != w:
            raise CountMismatch(f"T_5 word {w} is not freely reduced")
    return tuple(words)


def tower_gens(n: int) -> tuple[Word, ...]:
    """Module generating set of level n over level n-1 (n=2: over the ring)."""
    if n == 2:
        return ((), (1,), (-1,))
    if n == 3:
        return gens_T3()
    if n == 4:
        return gens_A()
    if n == 5:
        return gens_T5()
    raise LevelOutOfRange(f"no catalog at level {n}")


class BasisCatalog:
    """Ordered basis of level n with structural index lookup."""

    def __init__(self, n: int):
        if n < 2 or n > 5:
            raise LevelOutOfRange(f"no catalog at level {n}")
        self.n = n
        self.tgens = tower_gens(n)
        self._tindex = {t: i for i, t in enumerate(self.tgens)}
        self.lower = BasisCatalog(n - 1) if n > 2 else None
        self.size = RANKS[n]

    @property
    def words(self) -> list[Word]:
        cached = getattr(self, "_words", None)
        if cached is None:
            if self.lower is None:
                cached = list(self.tgens)
            else:
                cached = [u + t for u in self.lower.words for t in self.tgens]
            if len(cached) != self.size:
                raise CountMismatch(f"level {self.n}: {len(cached)} words, expected {self.size}")
            self._words = cached
        return cached

    def split(self, w: Word) -> tuple[Word, Word] | None:
        """Cut a word into (lower part, generator part) at the first top letter."""
        top = self.n - 1
        cut = len(w)
        for i, x in enumerate(w):
            if abs(x) == top:
                cut = i
                break
        u, t = w[:cut], w[cut:]
        if t not in self._tindex:
            return None
        return u, t

    def index(self, w: Word) -> int | None:
        """Index of an exact catalog word, None if w is not in the catalog."""
        if self.lower is None:
            return self._tindex.get(w)
        st = self.split(w)
        if st is None:
            return None
        u, t = st
        iu = self.lower.index(u)
        if iu is None:
            return None
        return iu * len(self.tgens) + self._tindex[t]

    def word(self, i: int) -> Word:
        if not 0 <= i < self.size:
            raise IndexError(i)
        if self.lower is None:
            return self.tgens[i]
        q, r = divmod(i, len(self.tgens))
        return self.lower.word(q) + self.tgens[r]


@lru_cache(maxsize=None)
def get_catalog(n: int) -> BasisCatalog:
    return BasisCatalog(n)


def basis_words(n: int) -> list[Word]:
    return get_catalog(n).words

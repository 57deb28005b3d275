"""Braid words on n strands.

A word is a tuple of nonzero signed ints; letter i > 0 is the i-th Artin
generator, -i its inverse, with 1 <= |i| <= n-1.  Words here carry group
structure only (free reduction, concatenation, inversion) plus the index
remappings used for rule transport, and the named words that the higher
layers keep referring to.
"""

from __future__ import annotations

from typing import Iterable

Word = tuple[int, ...]


class WordError(ValueError):
    pass


class UnknownName(KeyError):
    pass


def check_word(w: Iterable[int], n: int) -> Word:
    w = tuple(w)
    for x in w:
        if not isinstance(x, int) or x == 0 or abs(x) > n - 1:
            raise WordError(f"letter {x!r} invalid on {n} strands")
    return w


def free_reduce(w: Iterable[int]) -> Word:
    """Cancel adjacent inverse pairs until none remain."""
    stack: list[int] = []
    for x in w:
        if stack and stack[-1] == -x:
            stack.pop()
        else:
            stack.append(x)
    return tuple(stack)


def concat(u: Iterable[int], v: Iterable[int]) -> Word:
    return free_reduce(tuple(u) + tuple(v))


def inverse(w: Iterable[int]) -> Word:
    return tuple(-x for x in reversed(tuple(w)))


def power(w: Iterable[int], k: int) -> Word:
    w = tuple(w)
    if k < 0:
        w, k = inverse(w), -k
    out: Word = ()
    for _ in range(k):
        out = concat(out, w)
    return out


def shift(w: Iterable[int], k: int = 1) -> Word:
    """Send generator index i to i + k, keeping signs."""
    out = []
    for x in w:
        i = abs(x) + k
        if i < 1:
            raise WordError(f"shift by {k} pushes letter {x} below index 1")
        out.append(i if x > 0 else -i)
    return tuple(out)


def mirror(w: Iterable[int], n: int) -> Word:
    """Send generator index i to n - i, keeping signs."""
    out = []
    for x in w:
        i = n - abs(x)
        if i < 1:
            raise WordError(f"mirror at n={n} invalid for letter {x}")
        out.append(i if x > 0 else -i)
    return tuple(out)


def ad_delta(w: Iterable[int]) -> Word:
    """Conjugation by the 4-strand half-twist on letters: 1 <-> 3, 2 fixed."""
    table = {1: 3, -1: -3, 3: 1, -3: -1, 2: 2, -2: -2}
    try:
        return tuple(table[x] for x in w)
    except KeyError as exc:
        raise WordError(f"ad_delta needs letters over indices 1..3, got {exc}") from None


_P = (1, 3)
_PINV = (-3, -1)


def special(name: str, n: int) -> Word:
    """Named words used throughout the construction and checks."""
    if name == "delta_garside":
        if n != 4:
            raise WordError("delta_garside is a 4-strand word")
        return (1, 2, 3, 1, 2, 1)
    if name == "w0":
        if n < 4:
            raise WordError("w0 needs at least 4 strands")
        return (3, 2, 1, 1, 2, 3)
    if name == "w_plus":
        if n < 4:
            raise WordError("w_plus needs at least 4 strands")
        return (3, -2, 1, -2, 3)
    if name == "w_minus":
        if n < 4:
            raise WordError("w_minus needs at least 4 strands")
        return (-3, 2, -1, 2, -3)
    if name == "delta5":
        if n != 5:
            raise WordError("delta5 is a 5-strand word")
        return (4, 3, 2, 1, 1, 2, 3, 4)
    if name == "c_n":
        base = tuple(range(1, n))
        return power(base, n)
    if name == "y_n":
        if n < 2:
            raise WordError("y_n needs at least 2 strands")
        down = tuple(range(n - 1, 0, -1))
        return down + tuple(reversed(down))
    if name == "x_plus":
        if n != 5:
            raise WordError("x_plus is a 5-strand word")
        return (2,) + _P + (-2,) + _P + (2,)
    if name == "x_minus":
        if n != 5:
            raise WordError("x_minus is a 5-strand word")
        return (-2,) + _PINV + (2,) + _PINV + (-2,)
    if name == "y_plus_word":
        if n != 5:
            raise WordError("y_plus_word is a 5-strand word")
        return (2,) + _PINV + (2,) + _PINV + (2,)
    if name == "y_minus_word":
        if n != 5:
            raise WordError("y_minus_word is a 5-strand word")
        return (-2,) + _P + (-2,) + _P + (-2,)
    raise UnknownName(name)

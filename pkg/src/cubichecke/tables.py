"""Right regular representation tables and algebra arithmetic.

An AlgebraElement is a normal-form vector: a sparse map from basis
index to coefficient.  ActionTable holds right multiplication by one
signed generator as a sparse column-major matrix; column j is the
normal form of (basis word j) * g.

Tables bootstrap up the tower.  Level 2 columns come straight from the
reduction engine.  At levels 3 and 4 only the seed products t * g for
t in the tower generating set are reduced by the engine; a general
column splits its basis word as u * t with u one level down, and

    (u * t) * g = u * (t * g) = sum_k c_k (u * u_k) * t_k

where t * g = sum_k c_k u_k t_k is the seed expansion.  The inner
product u * u_k happens in the level-(n-1) tables, and appending t_k
lands every term on a basis word again.  Column construction is then
pure table arithmetic; the engine is consulted once per seed product.

Seed reduction runs in catalog order with one retry pass: a handful of
products only reduce once the routes of their natural prerequisites,
which appear later in the ordering, have been memoized.
"""

from __future__ import annotations

from fractions import Fraction

from cubichecke import kernels
from cubichecke.catalog import get_catalog
from cubichecke.coeffs import LaurentCoeff, SpecPoint
from cubichecke.engine import Engine, IrreducibleWord, default_engine
from cubichecke.words import Word, free_reduce, inverse


class TableError(RuntimeError):
    pass


class ZeroC(ValueError):
    """c evaluates to zero at the point, so the table cannot specialize."""


class AlgebraElement:
    """Element of A_n in normal form: sparse basis-index -> LaurentCoeff."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: dict[int, LaurentCoeff] | None = None):
        self.n = n
        self.terms = {i: c for i, c in (terms or {}).items() if not c.is_zero()}

    @staticmethod
    def zero(n: int) -> "AlgebraElement":
        return AlgebraElement(n)

    @staticmethod
    def unit(n: int) -> "AlgebraElement":
        return AlgebraElement.basis_elem(n, get_catalog(n).index(()))

    @staticmethod
    def basis_elem(n: int, index: int) -> "AlgebraElement":
        return AlgebraElement(n, {index: LaurentCoeff.one()})

    @staticmethod
    def from_word_coeffs(n: int, mapping) -> "AlgebraElement":
        """Build from {basis word: LaurentCoeff}; words must be exact
        catalog members."""
        cat = get_catalog(n)
        terms = {}
        for w, c in mapping.items():
            i = cat.index(tuple(w))
            if i is None:
                raise TableError(f"{tuple(w)} is not a basis word at level {n}")
            terms[i] = c
        return AlgebraElement(n, terms)

    def word_coeffs(self) -> dict[Word, LaurentCoeff]:
        cat = get_catalog(self.n)
        return {cat.word(i): c for i, c in self.terms.items()}

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        if self.n != other.n:
            raise TableError("level mismatch")
        out = dict(self.terms)
        for i, c in other.terms.items():
            s = out.get(i)
            out[i] = c if s is None else s + c
        return AlgebraElement(self.n, out)

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self + other.scale(LaurentCoeff.from_int(-1))

    def scale(self, coeff: LaurentCoeff) -> "AlgebraElement":
        return AlgebraElement(self.n, {i: c * coeff for i, c in self.terms.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def __repr__(self) -> str:
        if not self.terms:
            return f"<A_{self.n} zero>"
        cat = get_catalog(self.n)
        parts = [f"({self.terms[i]!r})*{cat.word(i)}" for i in sorted(self.terms)][:4]
        more = "" if len(self.terms) <= 4 else f" +{len(self.terms) - 4} terms"
        return f"<A_{self.n} " + " + ".join(parts) + more + ">"

    # raw views keep the hot loops on plain dicts
    def _raw(self) -> dict:
        return {i: dict(c.d) for i, c in self.terms.items()}

    @staticmethod
    def _wrap(n: int, raw: dict) -> "AlgebraElement":
        return AlgebraElement(
            n, {i: LaurentCoeff(d, _validated=True) for i, d in raw.items() if d}
        )


class ActionTable:
    """Right multiplication by one signed generator, column-major.

    cols[j] maps basis row index -> coefficient dict; the column is the
    normal form of (basis word j) * g.  Entries stay raw coefficient
    dicts internally; entry() wraps them.
    """

    __slots__ = ("n", "g", "cols")

    def __init__(self, n: int, g: int, cols: list[dict]):
        self.n = n
        self.g = g
        self.cols = cols

    def entry(self, i: int, j: int) -> LaurentCoeff:
        d = self.cols[j].get(i)
        return LaurentCoeff(dict(d), _validated=True) if d else LaurentCoeff.zero()

    def apply_raw(self, vec: dict) -> dict:
        """Image of a raw vector {index: coeff dict} under the action."""
        out: dict = {}
        cols = self.cols
        for j, p in vec.items():
            kernels.vec_axpy_inplace(out, p, cols[j])
        return out

    def column(self, j: int) -> "AlgebraElement":
        return AlgebraElement._wrap(self.n, {i: dict(d) for i, d in self.cols[j].items()})


class TableSet:
    """All signed-generator tables of one level."""

    def __init__(self, n: int, by_gen: dict[int, ActionTable]):
        self.n = n
        self.by_gen = by_gen

    def table(self, g: int) -> ActionTable:
        try:
            return self.by_gen[g]
        except KeyError:
            raise TableError(f"no generator {g} at level {self.n}") from None

    def apply_word_raw(self, vec: dict, w) -> dict:
        for g in w:
            vec = self.by_gen[g].apply_raw(vec)
        return vec


_CACHE: dict[int, TableSet] = {}


def signed_gens(n: int) -> list[int]:
    return [s * i for i in range(1, n) for s in (1, -1)]


def _seed_products(n: int, engine: Engine) -> dict[tuple[int, int], dict]:
    """Engine reductions of t * g for every tower generator and signed
    generator, with a single retry pass for order-dependent cases."""
    cat = get_catalog(n)
    jobs = [(it, g) for it in range(len(cat.tgens)) for g in signed_gens(n)]
    out: dict[tuple[int, int], dict] = {}
    failed: list[tuple[int, int]] = []
    for it, g in jobs:
        w = free_reduce(cat.tgens[it] + (g,))
        try:
            out[(it, g)] = engine.reduce(w, n)
        except IrreducibleWord:
            failed.append((it, g))
    for it, g in failed:
        w = free_reduce(cat.tgens[it] + (g,))
        out[(it, g)] = engine.reduce(w, n)  # propagates on genuine failure
    return out


def _build_level(n: int, engine: Engine) -> TableSet:
    cat = get_catalog(n)
    if n == 2:
        by_gen = {}
        for g in signed_gens(2):
            cols = []
            for w in cat.words:
                red = engine.reduce(free_reduce(w + (g,)), 2)
                cols.append({cat.index(v): dict(cd) for v, cd in red.items()})
            by_gen[g] = ActionTable(2, g, cols)
        return TableSet(2, by_gen)

    lower = tables(n - 1)
    lowcat = get_catalog(n - 1)
    T = len(cat.tgens)
    tindex = {t: k for k, t in enumerate(cat.tgens)}

    seeds = _seed_products(n, engine)
    # decompose each seed term as (coefficient, lower word, tail index)
    split_seeds: dict[tuple[int, int], list] = {}
    for key, red in seeds.items():
        parts = []
        for m, cd in red.items():
            st = cat.split(m)
            if st is None:
                raise TableError(f"engine returned non-basis word {m} at level {n}")
            u, t = st
            parts.append((dict(cd), u, tindex[t]))
        split_seeds[key] = parts

    nlow = lowcat.size
    foldmemo: dict[tuple[int, Word], dict] = {}

    def fold_lower(iu: int, uw: Word) -> dict:
        key = (iu, uw)
        hit = foldmemo.get(key)
        if hit is None:
            hit = lower.apply_word_raw({iu: {(0, 0, 0): 1}}, uw)
            foldmemo[key] = hit
        return hit

    by_gen = {}
    for g in signed_gens(n):
        cols: list[dict] = []
        for iu in range(nlow):
            for it in range(T):
                acc: dict = {}
                for cd, uw, tk in split_seeds[(it, g)]:
                    vecu = fold_lower(iu, uw)
                    for i2, p in vecu.items():
                        row = i2 * T + tk
                        cur = acc.get(row)
                        if cur is None:
                            cur = {}
                            acc[row] = cur
                        kernels.poly_addmul_inplace(cur, cd, p)
                        if not cur:
                            del acc[row]
                cols.append(acc)
        by_gen[g] = ActionTable(n, g, cols)
    return TableSet(n, by_gen)


def tables(n: int, engine: Engine | None = None) -> TableSet:
    """Build (and cache) the full table set for a level, bootstrapping
    lower levels first.  Levels 2..4 build exactly over R; level 5 is
    handled by the dedicated SpecPoint pipeline in the verify module."""
    if n < 2 or n > 4:
        raise TableError(f"exact tables cover levels 2..4, not {n}")
    ts = _CACHE.get(n)
    if ts is None:
        ts = _build_level(n, engine or default_engine())
        _CACHE[n] = ts
    return ts


def build_action_table(n: int, g: int, engine: Engine | None = None) -> ActionTable:
    return tables(n, engine).table(g)


# -- arithmetic over the tables ------------------------------------------


def fold_word(n: int, w, start: AlgebraElement | None = None) -> AlgebraElement:
    """Normal form of start * w (start defaults to the unit element)."""
    ts = tables(n)
    vec = (start or AlgebraElement.unit(n))._raw()
    vec = ts.apply_word_raw(vec, w)
    return AlgebraElement._wrap(n, vec)


def reduce_element(w, n: int, engine: Engine | None = None) -> AlgebraElement:
    """Engine reduction of an arbitrary braid word, as an AlgebraElement."""
    red = (engine or default_engine()).reduce(free_reduce(tuple(w)), n)
    return AlgebraElement._wrap(n, {
        get_catalog(n).index(v): dict(cd) for v, cd in red.items()
    })


def multiply(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    """Product x * y, folding y's basis words through the tables.

    Words are visited in lexicographic order and the partial images of
    x are kept on a stack, so shared prefixes (pervasive in the tower
    catalogs) are applied once.
    """
    if x.n != y.n:
        raise TableError("level mismatch")
    n = x.n
    ts = tables(n)
    cat = get_catalog(n)
    if x.is_zero() or y.is_zero():
        return AlgebraElement.zero(n)

    items = sorted((cat.word(j), c) for j, c in y.terms.items())
    acc: dict = {}
    prefix: list[int] = []
    stack: list[dict] = [x._raw()]
    for w, c in items:
        k = 0
        while k < len(prefix) and k < len(w) and prefix[k] == w[k]:
            k += 1
        del prefix[k:]
        del stack[k + 1:]
        for g in w[k:]:
            stack.append(ts.by_gen[g].apply_raw(stack[-1]))
            prefix.append(g)
        cd = c.d
        for i, p in stack[-1].items():
            cur = acc.get(i)
            if cur is None:
                cur = {}
                acc[i] = cur
            kernels.poly_addmul_inplace(cur, cd, p)
            if not cur:
                del acc[i]
    return AlgebraElement._wrap(n, acc)


def phi(x: AlgebraElement) -> AlgebraElement:
    """The sign-flip automorphism: s_i -> s_i^-1 letterwise with the
    coefficient twist a -> -b/c, b -> -a/c, c -> 1/c."""
    n = x.n
    cat = get_catalog(n)
    out = AlgebraElement.zero(n)
    for i, c in x.terms.items():
        w = tuple(-g for g in cat.word(i))
        out = out + fold_word(n, w).scale(c.phi())
    return out


def psi(x: AlgebraElement) -> AlgebraElement:
    """The anti-automorphism: word reversal composed with phi, so each
    basis word maps to its group inverse with the phi twist."""
    n = x.n
    cat = get_catalog(n)
    out = AlgebraElement.zero(n)
    for i, c in x.terms.items():
        out = out + fold_word(n, inverse(cat.word(i))).scale(c.phi())
    return out


def include(x: AlgebraElement) -> AlgebraElement:
    """Image under the tower inclusion A_n -> A_{n+1}; basis words map
    to basis words because every generating set contains the empty word."""
    n = x.n
    if n >= 5:
        raise TableError("inclusion tops out at level 5")
    cat, up = get_catalog(n), get_catalog(n + 1)
    terms = {}
    for i, c in x.terms.items():
        j = up.index(cat.word(i))
        if j is None:
            raise TableError(f"basis word {cat.word(i)} missing upstairs")
        terms[j] = c
    return AlgebraElement(n + 1, terms)


def specialize_table(table: ActionTable, at: SpecPoint):
    """Entrywise evaluation.

    For a prime point, returns scipy.sparse.csc_array with int64 entries
    in [0, p).  For the rational point (p == 0) returns a list of
    {row: Fraction} columns, since scipy has no exact rational dtype.
    """
    if at.p == 0:
        if at.c == 0:
            raise ZeroC("c = 0 at the point")
        out = []
        for col in table.cols:
            newcol = {}
            for i, d in col.items():
                v = LaurentCoeff(dict(d), _validated=True).eval(at)
                if v:
                    newcol[i] = Fraction(v)
            out.append(newcol)
        return out
    if at.c % at.p == 0:
        raise ZeroC("c = 0 mod p at the point")
    import numpy as np
    from scipy.sparse import csc_array

    size = len(table.cols)
    indptr = [0]
    indices: list[int] = []
    data: list[int] = []
    for col in table.cols:
        rows = []
        for i, d in col.items():
            v = LaurentCoeff(dict(d), _validated=True).eval(at)
            if v:
                rows.append((i, v))
        rows.sort()
        for i, v in rows:
            indices.append(i)
            data.append(v)
        indptr.append(len(indices))
    return csc_array(
        (np.array(data, dtype=np.int64),
         np.array(indices, dtype=np.int64),
         np.array(indptr, dtype=np.int64)),
        shape=(size, size),
    )

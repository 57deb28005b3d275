"""Independent linear model of the three-strand algebra.

This module rebuilds the rank-24 algebra on three strands from scratch,
sharing nothing with the rewrite engine: no rewrite rules, no catalog
recursion, no normal-form search.  It spans freely reduced braid words
up to a length bound over the fraction field Q(a, b, c), imposes the
defining relations as sparse linear rows (cube relation, braid relation,
their inverse and mixed-sign consequences, and the expansion of an
inverse letter through the cube), and eliminates.  If the surviving
free coordinates are exactly the 24 catalog words, the quotient carries
right-multiplication matrices for every generator.

Those matrices are the oracle.  Checking the defining relations on the
matrices directly shows they generate a representation of the braid
group algebra in which the 24 catalog classes map to independent unit
vectors, so the catalog is linearly independent: a lower bound on the
rank that does not lean on the engine.  The engine supplies the
matching upper bound by reducing every word to a catalog combination.
Agreement of fold() with the engine's reduce() is the strongest
cross-check in the test suite; neither side can copy the other's bugs.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from cubichecke.catalog import get_catalog
from cubichecke.coeffs import CoeffError, LaurentCoeff
from cubichecke.words import Word, free_reduce

ORACLE_MAX_LEN = 7

# Same-length consequences of the braid relation.  Each pair is an
# equality of words in the braid group on three strands; the mixed-sign
# forms are the conjugation rearrangements obtained by moving one letter
# across the relation.  All six are verified group-theoretically in the
# test suite via the action on a free group.
BRAID_EQUALITIES: tuple[tuple[Word, Word], ...] = (
    ((1, 2, 1), (2, 1, 2)),
    ((-1, -2, -1), (-2, -1, -2)),
    ((-1, 2, 1), (2, 1, -2)),
    ((-1, -2, 1), (2, -1, -2)),
    ((-2, 1, 2), (1, 2, -1)),
    ((-2, -1, 2), (1, -2, -1)),
)


class ClosureFailure(RuntimeError):
    """The truncated span did not close onto the expected 24 classes."""


@lru_cache(maxsize=1)
def _field():
    # Lazy: sympy is only paid for when the oracle is actually used.
    from sympy import QQ
    from sympy.polys.fields import field

    F, fa, fb, fc = field("a b c", QQ)
    return F, fa, fb, fc


def laurent_to_field(coeff: LaurentCoeff):
    """Embed Z[a,b,c,c^-1] into Q(a,b,c)."""
    _, fa, fb, fc = _field()
    total = 0
    for (ea, eb, ec), v in coeff.d.items():
        total += v * fa**ea * fb**eb * fc**ec
    return total


def field_to_laurent(x) -> LaurentCoeff:
    """Inverse embedding.  Fails if x is not a Laurent polynomial whose
    denominator is a power of c with integer quotients."""
    if not x:
        return LaurentCoeff.zero()
    den = x.denom.terms()
    if len(den) != 1:
        raise CoeffError(f"denominator not a monomial: {x.denom}")
    (da, db, dc), dq = den[0]
    if da or db:
        raise CoeffError(f"denominator involves a or b: {x.denom}")
    d: dict = {}
    for (ea, eb, ec), p in x.numer.terms():
        q = Fraction(p.numerator, p.denominator) / Fraction(dq.numerator, dq.denominator)
        if q.denominator != 1:
            raise CoeffError(f"non-integer coefficient {q} in {x}")
        d[(ea, eb, ec - dc)] = int(q)
    return LaurentCoeff(d)


def _all_words(max_len: int) -> list[Word]:
    """Freely reduced words over {1, -1, 2, -2} up to max_len letters."""
    out: list[Word] = [()]
    frontier: list[Word] = [()]
    for _ in range(max_len):
        nxt = []
        for w in frontier:
            for g in (1, -1, 2, -2):
                if w and w[-1] == -g:
                    continue
                nxt.append(w + (g,))
        out.extend(nxt)
        frontier = nxt
    return out


class LinearClosureModel:
    """Truncated-span model of the three-strand algebra over Q(a,b,c).

    Attributes after construction:
      basis        the 24 catalog words, in catalog order
      dim          24
      action       right-multiplication matrix for each letter g in
                   {1, -1, 2, -2}; action[g][i] is the coordinate row
                   of basis[i] * g over basis
    """

    def __init__(self, max_len: int = ORACLE_MAX_LEN):
        self.max_len = max_len
        F, fa, fb, fc = _field()
        self._one = F.one
        cat = tuple(get_catalog(3).words)
        self.basis = cat
        self.basis_index = {w: i for i, w in enumerate(cat)}
        catset = frozenset(cat)

        words = _all_words(max_len)
        wordset = set(words)
        # Every relation row has a unique maximal word under this order,
        # and catalog words rank below everything else, so a row whose
        # support is not all catalog always pivots on a non-catalog word.
        okey = {w: (w not in catset, len(w), w) for w in words}

        rows = self._relation_rows(words, wordset, fa, fb, fc)
        self._express = self._sweep(words, rows, okey, catset)
        self.dim = len(cat)
        self.action = {g: self._action_matrix(g) for g in (1, -1, 2, -2)}

    # -- model construction ----------------------------------------------

    def _relation_rows(self, words, wordset, fa, fb, fc):
        cinv = fc**-1
        one = self._one
        rows = []

        def sub(w, i, k, parts):
            return free_reduce(w[:i] + parts + w[i + k:])

        for w in words:
            L = len(w)
            for i, g in enumerate(w):
                # inverse letter expanded through the cube:
                # g^-1 = c^-1 g^2 - a c^-1 g - b c^-1
                if g < 0 and L < self.max_len:
                    p = -g
                    rows.append(self._row(
                        ((w, one),
                         (sub(w, i, 1, (p, p)), -cinv),
                         (sub(w, i, 1, (p,)), fa * cinv),
                         (sub(w, i, 1, ()), fb * cinv))))
            for i in range(L - 2):
                x = w[i]
                if w[i + 1] == x and w[i + 2] == x:
                    if x > 0:
                        # g^3 = a g^2 + b g + c
                        rows.append(self._row(
                            ((w, one),
                             (sub(w, i, 3, (x, x)), -fa),
                             (sub(w, i, 3, (x,)), -fb),
                             (sub(w, i, 3, ()), -fc))))
                    else:
                        # g^-3 = -b c^-1 g^-2 - a c^-1 g^-1 + c^-1
                        cinv_ = fc**-1
                        rows.append(self._row(
                            ((w, one),
                             (sub(w, i, 3, (x, x)), fb * cinv_),
                             (sub(w, i, 3, (x,)), fa * cinv_),
                             (sub(w, i, 3, ()), -cinv_))))
                win = w[i:i + 3]
                for lhs, rhs in BRAID_EQUALITIES:
                    if win == lhs:
                        v = sub(w, i, 3, rhs)
                    elif win == rhs:
                        v = sub(w, i, 3, lhs)
                    else:
                        continue
                    if v in wordset:
                        rows.append(self._row(((w, one), (v, -one))))
        return rows

    @staticmethod
    def _row(entries):
        row: dict = {}
        for w, c in entries:
            s = row.get(w, 0) + c
            if s:
                row[w] = s
            elif w in row:
                del row[w]
        return row

    def _sweep(self, words, rows, okey, catset):
        """Express every word over the catalog in two stages.

        Ascending pass: each row is consumed at its maximal word, whose
        other support is then already expressed, so rows never need
        rewriting in word space.  The first row pivoting at a word
        defines its coordinates; words no row pivots on become
        provisional free coordinates; every additional row folds into a
        relation among coordinates expressed so far and is harvested.

        Cleanup pass: classical elimination on the harvested relations,
        which live in the small space spanned by the catalog and the
        provisional coordinates.  Closure holds exactly when every
        provisional coordinate gets pivoted away and no relation falls
        entirely on catalog words.
        """
        by_pivot: dict[Word, list[dict]] = {}
        for row in rows:
            if row:
                by_pivot.setdefault(max(row, key=okey.get), []).append(row)

        express: dict[Word, dict] = {}
        provisional: list[Word] = []
        harvest: list[dict] = []

        def fold_row(row, skip=None):
            acc: dict = {}
            for v, cv in row.items():
                if v == skip:
                    continue
                for t, ct in express[v].items():
                    s = acc.get(t, 0) + cv * ct
                    if s:
                        acc[t] = s
                    elif t in acc:
                        del acc[t]
            return acc

        for w in sorted(words, key=okey.get):
            pivot_rows = by_pivot.get(w, ())
            if w in catset:
                express[w] = {w: self._one}
                for row in pivot_rows:
                    harvest.append(fold_row(row))
                continue
            if not pivot_rows:
                provisional.append(w)
                express[w] = {w: self._one}
                continue
            definer, *rest = pivot_rows
            cw = definer[w]
            express[w] = {t: -ct / cw
                          for t, ct in fold_row(definer, skip=w).items()}
            for row in rest:
                acc = fold_row(row)
                if acc:
                    harvest.append(acc)

        # Stage two: eliminate the provisional coordinates.
        pivots: dict[Word, dict] = {}
        catalog_deps = 0
        for row in harvest:
            while row:
                top = max(row, key=okey.get)
                expr = pivots.get(top)
                if expr is None:
                    break
                c = row.pop(top)
                for v, cv in expr.items():
                    s = row.get(v, 0) + c * cv
                    if s:
                        row[v] = s
                    elif v in row:
                        del row[v]
            if not row:
                continue
            if top in catset:
                catalog_deps += 1
                continue
            c = row.pop(top)
            pivots[top] = {v: -cv / c for v, cv in row.items()}

        unresolved = [w for w in provisional if w not in pivots]
        interior = [w for w in unresolved if len(w) < self.max_len]
        if interior or catalog_deps:
            raise ClosureFailure(
                f"truncated span at max_len={self.max_len} did not close: "
                f"{len(interior)} unconstrained words beyond the catalog "
                f"(sample {interior[:5]}), {catalog_deps} relations "
                f"falling entirely on catalog words"
            )
        # Maximal-length words whose every relation instance would leave
        # the truncation can stay unconstrained.  Expressions are built
        # in ascending order, so no shorter word ever references one;
        # they are merely unusable, and are kept out of the matrices.
        self.boundary_unresolved = tuple(unresolved)

        # Resolve pivot chains, then substitute into every expression.
        resolved: dict[Word, dict] = {}
        for m in sorted(pivots, key=okey.get):
            acc: dict = {}
            for v, cv in pivots[m].items():
                parts = resolved.get(v)
                if parts is None:
                    parts = {v: self._one}
                for t, ct in parts.items():
                    s = acc.get(t, 0) + cv * ct
                    if s:
                        acc[t] = s
                    elif t in acc:
                        del acc[t]
            resolved[m] = acc
        for w, vec in express.items():
            if not any(t in resolved for t in vec):
                continue
            acc = {}
            for v, cv in vec.items():
                parts = resolved.get(v)
                if parts is None:
                    parts = {v: self._one}
                for t, ct in parts.items():
                    s = acc.get(t, 0) + cv * ct
                    if s:
                        acc[t] = s
                    elif t in acc:
                        del acc[t]
            express[w] = acc
        return express

    def _action_matrix(self, g: int):
        mat = []
        for t in self.basis:
            expr = self._express[free_reduce(t + (g,))]
            stray = set(expr) - set(self.basis_index)
            if stray:
                raise ClosureFailure(
                    f"product {t + (g,)} expressed over non-catalog "
                    f"coordinates {sorted(stray)[:3]}"
                )
            row = [expr.get(v, 0) for v in self.basis]
            mat.append(row)
        return mat

    # -- public interface --------------------------------------------------

    def fold(self, word) -> list:
        """Coordinate vector of an arbitrary braid word over the basis.

        Walks the word through the action matrices, so the construction
        length bound does not constrain the input.
        """
        vec = [self._one if t == () else 0 for t in self.basis]
        for g in word:
            if abs(g) not in (1, 2):
                raise ValueError(f"letter {g} outside three strands")
            mat = self.action[g]
            out = [0] * self.dim
            for i, vi in enumerate(vec):
                if not vi:
                    continue
                mrow = mat[i]
                for j, mij in enumerate(mrow):
                    if mij:
                        out[j] = out[j] + vi * mij
            vec = out
        return vec

    def fold_to_laurent(self, word) -> dict[Word, LaurentCoeff]:
        """fold() with coefficients pulled back to Z[a,b,c,c^-1]."""
        vec = self.fold(word)
        out = {}
        for t, x in zip(self.basis, vec):
            if x:
                out[t] = field_to_laurent(x)
        return out

    def action_at(self, g: int, at) -> list:
        """Generator action matrix evaluated at a spec point.

        Rows come back over the point's field (Fraction for p = 0,
        ints mod p otherwise); entries must clear to the coefficient
        ring, which field_to_laurent enforces.
        """
        mat = self.action[g]
        out = []
        for row in mat:
            out.append([field_to_laurent(x).eval(at) if x else 0
                        for x in row])
        return out

    def check_word_identity(self, lhs_terms, rhs_terms) -> bool:
        """Exact equality of two formal combinations of braid words.

        Each side is an iterable of (LaurentCoeff, word) pairs over
        letters {1, -1, 2, -2}.
        """
        acc = [0] * self.dim
        for coeff, w in lhs_terms:
            x = laurent_to_field(coeff)
            for j, vj in enumerate(self.fold(w)):
                acc[j] = acc[j] + x * vj
        for coeff, w in rhs_terms:
            x = laurent_to_field(coeff)
            for j, vj in enumerate(self.fold(w)):
                acc[j] = acc[j] - x * vj
        return not any(acc)

    def self_check(self) -> list[str]:
        """Verify the defining relations hold on the action matrices and
        that the basis words fold to unit vectors.  Returns the names of
        failed identities; an empty list certifies the model."""
        _, fa, fb, fc = _field()
        failures = []

        def mmul(A, B):
            n = self.dim
            return [
                [sum(A[i][k] * B[k][j] for k in range(n) if A[i][k])
                 for j in range(n)]
                for i in range(n)
            ]

        ident = [[self._one if i == j else 0 for j in range(self.dim)]
                 for i in range(self.dim)]

        def meq(A, B):
            return all(A[i][j] == B[i][j]
                       for i in range(self.dim) for j in range(self.dim))

        for g in (1, 2):
            M, Minv = self.action[g], self.action[-g]
            if not meq(mmul(M, Minv), ident):
                failures.append(f"inverse.{g}")
            M2 = mmul(M, M)
            M3 = mmul(M2, M)
            rhs = [[fa * M2[i][j] + fb * M[i][j] + (fc if i == j else 0)
                    for j in range(self.dim)] for i in range(self.dim)]
            if not meq(M3, rhs):
                failures.append(f"cube.{g}")
        M1, M2_ = self.action[1], self.action[2]
        if not meq(mmul(mmul(M1, M2_), M1), mmul(mmul(M2_, M1), M2_)):
            failures.append("braid")
        for i, t in enumerate(self.basis):
            vec = self.fold(t)
            if any(vec[j] != (self._one if j == i else 0)
                   for j in range(self.dim)):
                failures.append(f"unit.{t}")
        return failures


@lru_cache(maxsize=1)
def oracle_A3() -> LinearClosureModel:
    """Shared instance; construction costs a few seconds."""
    return LinearClosureModel()

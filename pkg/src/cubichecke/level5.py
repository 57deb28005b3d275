"""Five-strand tables at evaluation points.

The exact engine only ever reduces the 1920 seed products t * g (tower
word times signed generator); those land in a JSONL checkpoint that is
safe to resume.  Everything 155520-dimensional happens per SpecPoint
in sparse integer matrices mod p: a column for basis word u * t splits
through the level-4 tables exactly as in the exact builder, so

    (u * t) * g = sum_k c_k (u * u_k) * t_k

turns into placing the matrix of u_k (a level-4 word product) into the
tail block (t -> t_k).  Generator matrices are cached on disk per
point; relation checks stream the identity through them in column
slabs with a progress file, so an interrupted run resumes.
"""

from __future__ import annotations

import json
import os
import time

import numpy as np
from scipy import sparse

from cubichecke import words as W
from cubichecke.catalog import get_catalog
from cubichecke.coeffs import LaurentCoeff, SpecPoint
from cubichecke.engine import IrreducibleWord, default_engine
from cubichecke.tables import _seed_products, signed_gens, specialize_table, tables
from cubichecke.words import free_reduce

DEFAULT_SEEDS_PATH = os.path.join("artifacts", "seeds5.jsonl")
DEFAULT_CACHE_DIR = os.path.join("artifacts", "m5_cache")


class SeedFileError(RuntimeError):
    pass


# -- seed campaign -----------------------------------------------------------


def _encode_reduction(red) -> list:
    return [[list(w), [[ea, eb, ec, str(k)] for (ea, eb, ec), k in cd.items()]]
            for w, cd in red.items()]


def _decode_terms(terms) -> dict:
    out = {}
    for wlist, monos in terms:
        out[tuple(wlist)] = {(ea, eb, ec): int(k) for ea, eb, ec, k in monos}
    return out


def read_seed_file(path: str) -> dict:
    """Checkpoint -> {(tail index, generator): {word: coeff dict}}."""
    out = {}
    with open(path) as f:
        for line in f:
            line = line.strip()
            if not line:
                continue
            rec = json.loads(line)
            out[(rec["it"], rec["g"])] = _decode_terms(rec["terms"])
    return out


def generate_seeds(path: str = DEFAULT_SEEDS_PATH, engine=None,
                   progress=None) -> dict:
    """Run (or resume) the level-5 seed campaign into a JSONL checkpoint.

    Lower levels are warmed first because stuck level-5 words derive
    rules by reducing shifted windows at level 4.  Jobs run shortest
    first; failures get one retry after the rest, when the route table
    is at its densest.
    """
    say = progress or (lambda s: None)
    os.makedirs(os.path.dirname(path) or ".", exist_ok=True)
    done = {}
    if os.path.exists(path):
        done = read_seed_file(path)
    cat = get_catalog(5)
    jobs = [(it, g) for it in range(len(cat.tgens)) for g in signed_gens(5)]
    pending = [j for j in jobs if j not in done]
    if not pending:
        return done

    eng = engine or default_engine()
    t0 = time.time()
    _seed_products(3, eng)
    _seed_products(4, eng)
    say(f"warmup {time.time() - t0:.0f}s")

    pending.sort(key=lambda job: (
        len(free_reduce(cat.tgens[job[0]] + (job[1],))), job))
    failures = []
    with open(path, "a") as out:
        def run(it, g):
            w = free_reduce(cat.tgens[it] + (g,))
            red = eng.reduce(w, 5)
            out.write(json.dumps(
                {"it": it, "g": g, "terms": _encode_reduction(red)}) + "\n")
            out.flush()
            done[(it, g)] = red

        for count, (it, g) in enumerate(pending, 1):
            try:
                run(it, g)
            except IrreducibleWord:
                failures.append((it, g))
            if count % 100 == 0:
                say(f"{count}/{len(pending)} seeds, "
                    f"{time.time() - t0:.0f}s")
        for it, g in failures:
            run(it, g)  # propagates if genuinely stuck
    return done


# -- matrix assembly ---------------------------------------------------------


def _point_key(at: SpecPoint) -> str:
    return f"p{at.p}_a{at.a}_b{at.b}_c{at.c}"


class PointTables5:
    """The eight signed-generator action matrices of the 155520-space,
    assembled mod p and cached on disk."""

    def __init__(self, at: SpecPoint, mats: dict):
        if at.p <= 0:
            raise ValueError("five-strand tables need a positive prime")
        self.at = at
        self.p = at.p
        self.size = get_catalog(5).size
        self.mats = mats  # g -> csc int64

    def fold(self, word, vec=None) -> np.ndarray:
        """Image of a coordinate vector under right multiplication by a
        word (unit vector of the empty word by default)."""
        if vec is None:
            vec = np.zeros(self.size, dtype=np.int64)
            vec[get_catalog(5).index(())] = 1
        for g in word:
            vec = self.mats[g] @ vec
            vec %= self.p
        return vec

    def fold_many(self, word, block: np.ndarray) -> np.ndarray:
        """fold() over the columns of a dense block, one matmul per
        letter."""
        for g in word:
            block = self.mats[g] @ block
            block %= self.p
        return block


def _split_seed_terms(seeds: dict) -> dict:
    """Decompose seed expansions as (coefficient, level-4 word, tail)."""
    cat = get_catalog(5)
    tindex = {t: k for k, t in enumerate(cat.tgens)}
    out = {}
    for key, red in seeds.items():
        parts = []
        for w, cd in red.items():
            st = cat.split(w)
            if st is None:
                raise SeedFileError(f"seed term {w} is not a basis word")
            u, t = st
            parts.append((LaurentCoeff(dict(cd)), u, tindex[t]))
        out[key] = parts
    return out


def _level4_point_mats(at: SpecPoint) -> dict:
    ts4 = tables(4)
    return {g: specialize_table(ts4.table(g), at).tocsr()
            for g in ts4.by_gen}


def assemble_generator(at: SpecPoint, g: int, split_seeds: dict,
                       m4: dict, word_mats: dict) -> sparse.csc_array:
    """One signed-generator matrix at a point, from the seed expansions.

    word_mats memoizes level-4 word products across generators.
    """
    p = at.p
    n4 = get_catalog(4).size
    T = len(get_catalog(5).tgens)

    def mat_of_word(uw):
        hit = word_mats.get(uw)
        if hit is None:
            acc = sparse.identity(n4, dtype=np.int64, format="csr")
            for letter in uw:
                acc = m4[letter] @ acc
                acc.data %= p
            hit = acc.tocoo()
            word_mats[uw] = hit
        return hit

    rows, cols, data = [], [], []
    for it in range(T):
        for coeff, uw, tk in split_seeds[(it, g)]:
            cval = int(coeff.eval(at)) % p
            if cval == 0:
                continue
            S = mat_of_word(uw)
            rows.append(S.row.astype(np.int64) * T + tk)
            cols.append(S.col.astype(np.int64) * T + it)
            data.append((S.data * cval) % p)
    size = n4 * T
    M = sparse.coo_array(
        (np.concatenate(data),
         (np.concatenate(rows), np.concatenate(cols))),
        shape=(size, size)).tocsc()
    M.data %= p
    M.eliminate_zeros()
    return M


def point_tables(at: SpecPoint, seeds_path: str = DEFAULT_SEEDS_PATH,
                 cache_dir: str = DEFAULT_CACHE_DIR,
                 progress=None) -> PointTables5:
    """Load the eight generator matrices for a point, assembling and
    caching them if the cache is cold."""
    say = progress or (lambda s: None)
    pdir = os.path.join(cache_dir, _point_key(at))
    os.makedirs(pdir, exist_ok=True)
    mats = {}
    missing = []
    for g in signed_gens(5):
        fn = os.path.join(pdir, f"g{'m' if g < 0 else ''}{abs(g)}.npz")
        if os.path.exists(fn):
            mats[g] = sparse.csc_array(sparse.load_npz(fn))
        else:
            missing.append((g, fn))
    if missing:
        seeds = read_seed_file(seeds_path)
        if len(seeds) != len(get_catalog(5).tgens) * 8:
            raise SeedFileError(
                f"seed checkpoint incomplete: {len(seeds)}/1920 products; "
                f"run the seed campaign first")
        split = _split_seed_terms(seeds)
        m4 = _level4_point_mats(at)
        word_mats: dict = {}
        for g, fn in missing:
            t0 = time.time()
            M = assemble_generator(at, g, split, m4, word_mats)
            sparse.save_npz(fn, M)
            mats[g] = M
            say(f"assembled g={g} nnz={M.nnz} {time.time() - t0:.0f}s")
    return PointTables5(at, mats)


# -- relation checks ---------------------------------------------------------

from cubichecke.verify import ClaimResult, VerificationReport  # noqa: E402


def _slab(size: int, j0: int, j1: int) -> sparse.csc_array:
    n = j1 - j0
    return sparse.csc_array(
        (np.ones(n, dtype=np.int64), (np.arange(j0, j1), np.arange(n))),
        shape=(size, n))


def _apply_word(pt: PointTables5, word, X):
    for g in word:
        X = pt.mats[g] @ X
        X.data %= pt.p
    return X


def _first_defect(D: sparse.csc_array, j0: int):
    D = sparse.csc_array(D)
    D.eliminate_zeros()
    if D.nnz == 0:
        return None
    col = int(np.flatnonzero(np.diff(D.indptr))[0])
    return {"column": j0 + col, "nnz": int(D.nnz)}


def check_relations_spec(points, slab_width: int = 6000,
                         progress_path: str | None = None,
                         seeds_path: str = DEFAULT_SEEDS_PATH,
                         cache_dir: str = DEFAULT_CACHE_DIR,
                         progress=None) -> VerificationReport:
    """Braid, commutation, cubic, and inverse identities on the
    five-strand tables at each point, streamed in column slabs."""
    say = progress or (lambda s: None)
    rep = VerificationReport(suite="relations-n5-spec")
    done = set()
    if progress_path and os.path.exists(progress_path):
        with open(progress_path) as f:
            for line in f:
                if line.strip():
                    r = json.loads(line)
                    done.add((r["point"], r["relation"], r["slab"]))
    log = open(progress_path, "a") if progress_path else None

    relations = []
    for i in (1, 2, 3):
        relations.append((f"braid-{i}{i + 1}", (i, i + 1, i), (i + 1, i, i + 1)))
    for i, j in ((1, 3), (1, 4), (2, 4)):
        relations.append((f"comm-{i}{j}", (i, j), (j, i)))
    for i in (1, 2, 3, 4):
        relations.append((f"cube-{i}", (i, i, i), None))
        relations.append((f"inv-{i}", (i, -i), ()))

    for at in points:
        key = _point_key(at)
        pt = point_tables(at, seeds_path, cache_dir, progress=say)
        size = pt.size
        p = pt.p
        av, bv, cv = (int(LaurentCoeff.mono(1, 1, 0, 0).eval(at)) % p,
                      int(LaurentCoeff.mono(1, 0, 1, 0).eval(at)) % p,
                      int(LaurentCoeff.mono(1, 0, 0, 1).eval(at)) % p)
        for name, lhs, rhs in relations:
            t0 = time.time()
            defect = None
            for j0 in range(0, size, slab_width):
                j1 = min(j0 + slab_width, size)
                if (key, name, j0) in done:
                    continue
                X0 = _slab(size, j0, j1)
                if name.startswith("cube"):
                    i = lhs[0]
                    X1 = pt.mats[i] @ X0
                    X1.data %= p
                    X2 = pt.mats[i] @ X1
                    X2.data %= p
                    X3 = pt.mats[i] @ X2
                    X3.data %= p
                    R = X2 * av + X1 * bv + X0 * cv
                    R.data %= p
                    D = X3 - R
                else:
                    D = _apply_word(pt, lhs, X0) - _apply_word(pt, rhs, X0)
                D.data %= p
                defect = _first_defect(D, j0)
                if defect is not None:
                    defect["point"] = key
                    break
                if log:
                    log.write(json.dumps(
                        {"point": key, "relation": name, "slab": j0}) + "\n")
                    log.flush()
            rep.add(ClaimResult(
                f"{name}@{key}",
                "defining relation on the 155520-dimensional table",
                "pass" if defect is None else "fail", witness=defect),
                time.time() - t0)
            say(f"{key} {name}: "
                f"{'ok' if defect is None else 'FAIL'} "
                f"{rep.timings[f'{name}@{key}']:.0f}s")
    if log:
        log.close()
    return rep


# -- centrality, homomorphism, and the deep cube -----------------------------


def check_centrality(at: SpecPoint,
                     seeds_path: str = DEFAULT_SEEDS_PATH,
                     cache_dir: str = DEFAULT_CACHE_DIR) -> VerificationReport:
    """The four-strand-commuting element and the braid center element,
    checked as element identities at one point."""
    rep = VerificationReport(suite=f"centrality-n5-{_point_key(at)}")
    pt = point_tables(at, seeds_path, cache_dir)
    delta = W.special("delta5", 5)
    for i in (1, 2, 3):
        t0 = time.time()
        ok = bool((pt.fold(delta + (i,)) == pt.fold((i,) + delta)).all())
        rep.add(ClaimResult(
            f"delta-comm-{i}",
            f"the commuting element commutes with s_{i}",
            "pass" if ok else "fail",
            witness=None if ok else {"point": _point_key(at)}),
            time.time() - t0)
    c5 = W.special("c_n", 5)
    for i in (1, 2, 3, 4):
        t0 = time.time()
        ok = bool((pt.fold(c5 + (i,)) == pt.fold((i,) + c5)).all())
        rep.add(ClaimResult(
            f"center-comm-{i}",
            f"the braid center element commutes with s_{i}",
            "pass" if ok else "fail",
            witness=None if ok else {"point": _point_key(at)}),
            time.time() - t0)
    return rep


def check_homomorphism(at: SpecPoint, pairs: int = 100, seed: int = 0,
                       seeds_path: str = DEFAULT_SEEDS_PATH,
                       cache_dir: str = DEFAULT_CACHE_DIR) -> VerificationReport:
    """reduce(uv) = reduce(u) * reduce(v) at a point.

    The product route expands v in its normal form and multiplies u's
    image through the basis-word columns, so it shares no arithmetic
    with folding uv letter by letter.
    """
    import random as _random

    rng = _random.Random(seed)
    rep = VerificationReport(suite=f"homomorphism-n5-{_point_key(at)}",
                             seed=seed)
    pt = point_tables(at, seeds_path, cache_dir)
    cat = get_catalog(5)
    gens = [g for i in range(1, 5) for g in (i, -i)]
    t0 = time.time()
    bad = None
    for trial in range(pairs):
        u = tuple(rng.choice(gens) for _ in range(rng.randrange(1, 6)))
        v = tuple(rng.choice(gens) for _ in range(rng.randrange(1, 4)))
        direct = pt.fold(u + v)
        xu = pt.fold(u)
        xv = pt.fold(v)
        split = np.zeros_like(direct)
        for j in np.flatnonzero(xv):
            w = cat.word(int(j))
            split = (split + int(xv[j]) * pt.fold(w, xu.copy())) % pt.p
        if not (direct == split).all():
            bad = {"u": list(u), "v": list(v), "trial": trial}
            break
    rep.add(ClaimResult(
        "normal-form-homomorphism-n5",
        f"reduce(uv) = reduce(u)*reduce(v) on {pairs} pairs at a point",
        "pass" if bad is None else "fail", witness=bad),
        time.time() - t0)
    return rep


def check_delta_cubed(at: SpecPoint,
                      seeds_path: str = DEFAULT_SEEDS_PATH,
                      cache_dir: str = DEFAULT_CACHE_DIR) -> VerificationReport:
    """Cube of the commuting element: product route against direct fold,
    plus its commutation with every generator."""
    rep = VerificationReport(suite=f"delta-cubed-{_point_key(at)}")
    pt = point_tables(at, seeds_path, cache_dir)
    cat = get_catalog(5)
    delta = W.special("delta5", 5)

    t0 = time.time()
    x = pt.fold(delta)
    rep.add(ClaimResult(
        "delta-support", "the commuting element has nonempty support",
        "pass" if int((x != 0).sum()) >= 1 else "fail"),
        time.time() - t0)

    def elt_mul(xv, yv):
        out = np.zeros_like(xv)
        nz = np.flatnonzero(yv)
        for j in nz:
            out = (out + int(yv[j]) * pt.fold(cat.word(int(j)), xv.copy())) % pt.p
        return out

    t0 = time.time()
    direct = pt.fold(delta + delta + delta)
    via_products = elt_mul(elt_mul(x, x), x)
    ok = bool((direct == via_products).all())
    rep.add(ClaimResult(
        "delta-cubed-product-route",
        "cube via normal-form products equals the direct reduction",
        "pass" if ok else "fail",
        witness=None if ok else {"point": _point_key(at)}),
        time.time() - t0)

    t0 = time.time()
    cube = direct
    bad = None
    for i in (1, 2, 3, 4):
        lhs = pt.fold((i,), cube.copy())
        rhs = elt_mul(pt.fold((i,)), cube)
        if not (lhs == rhs).all():
            bad = {"generator": i}
            break
    rep.add(ClaimResult(
        "delta-cubed-central",
        "the cubed element commutes with every generator",
        "pass" if bad is None else "fail", witness=bad),
        time.time() - t0)
    return rep

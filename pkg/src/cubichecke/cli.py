"""Command-line interface.

Subcommands: normalize, mul, basis, table, verify, rank.  Everything
prints one JSON document to stdout; progress and human summaries go to
stderr so stdout stays byte-stable for a fixed (version, seed, flags).

Exit codes: 0 success, 1 a verification suite failed, 2 a word did not
reduce within budget, 64 usage errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from cubichecke import __version__, io as cio
from cubichecke.coeffs import SpecPoint
from cubichecke.engine import Engine, IrreducibleWord, default_engine
from cubichecke.catalog import (
    LevelOutOfRange,
    T5_STRATUM_SIZES,
    get_catalog,
    tower_gens,
)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_IRREDUCIBLE = 2
EXIT_USAGE = 64


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _emit(obj: dict, out: str | None) -> None:
    text = json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"
    if out:
        with open(out, "w") as f:
            f.write(text)
    else:
        sys.stdout.write(text)


def _say(msg: str) -> None:
    sys.stderr.write(msg + "\n")
    sys.stderr.flush()


def _engine_for(args) -> Engine:
    if getattr(args, "depth_limit", None):
        return Engine(depth_limit=args.depth_limit)
    return default_engine()


def _point_from(args) -> SpecPoint | None:
    if args.prime is None and args.a is None:
        return None
    if args.prime is None:
        raise SystemExit(EXIT_USAGE)
    return SpecPoint(p=args.prime, a=args.a or 0, b=args.b or 0,
                     c=args.c if args.c is not None else 1)


def cmd_normalize(args) -> int:
    from cubichecke.tables import reduce_element

    w = cio.parse_word(args.word)
    try:
        x = reduce_element(w, args.n, engine=_engine_for(args))
    except IrreducibleWord as e:
        _say(f"irreducible: {e}")
        return EXIT_IRREDUCIBLE
    _emit(cio.element_to_json(x), args.out)
    return EXIT_OK


def cmd_mul(args) -> int:
    from cubichecke.tables import multiply, reduce_element

    try:
        x = reduce_element(cio.parse_word(args.left), args.n)
        y = reduce_element(cio.parse_word(args.right), args.n)
        z = multiply(x, y)
    except IrreducibleWord as e:
        _say(f"irreducible: {e}")
        return EXIT_IRREDUCIBLE
    _emit(cio.element_to_json(z), args.out)
    return EXIT_OK


def cmd_basis(args) -> int:
    _emit(cio.basis_export(args.n), args.out)
    return EXIT_OK


def cmd_table(args) -> int:
    if args.n == 5:
        from cubichecke import level5

        seeds_path = args.resume or level5.DEFAULT_SEEDS_PATH
        try:
            seeds = level5.generate_seeds(seeds_path, progress=_say)
        except IrreducibleWord as e:
            _say(f"irreducible seed product: {e}")
            return EXIT_IRREDUCIBLE
        result = {"n": 5, "seeds": len(seeds), "checkpoint": seeds_path}
        at = _point_from(args)
        if at is not None:
            pt = level5.point_tables(at, seeds_path, progress=_say)
            result["point"] = {"p": at.p, "a": at.a, "b": at.b, "c": at.c}
            result["nnz"] = {str(g): int(m.nnz) for g, m in pt.mats.items()}
        _emit(result, args.out)
        return EXIT_OK

    from cubichecke.tables import tables

    try:
        ts = tables(args.n, _engine_for(args))
    except IrreducibleWord as e:
        _say(f"irreducible: {e}")
        return EXIT_IRREDUCIBLE
    _emit(cio.table_export(ts.table(args.gen)), args.out)
    return EXIT_OK


def cmd_rank(args) -> int:
    cat = get_catalog(args.n)
    out = {"n": args.n, "rank": cat.size,
           "tower_counts": {str(m): len(tower_gens(m))
                            for m in range(3, 6) if m <= args.n}}
    if args.n == 5:
        out["strata"] = list(T5_STRATUM_SIZES)
    _emit(out, args.out)
    return EXIT_OK


def _report_payload(rep) -> dict:
    # timings vary run to run; the CLI payload stays byte-stable
    out = rep.to_json()
    out.pop("timings", None)
    return out


def cmd_verify(args) -> int:
    from cubichecke import verify

    suite = args.suite
    reports = []
    try:
        if suite in ("identities", "all"):
            reports.append(verify.check_identity_lemmas())
        if suite in ("relations", "all"):
            levels = [args.n] if args.n else [2, 3, 4]
            for n in levels:
                reports.append(verify.check_relations(
                    n, mode=args.mode, seed=args.seed))
        if suite in ("group", "all"):
            for n in ([args.n] if args.n else [3, 4]):
                reports.append(verify.check_group_specialization(
                    n, prime=args.prime or 7))
        if suite in ("automorphisms", "all"):
            reports.append(verify.check_center_and_automorphisms(
                args.n or 4, seed=args.seed))
        if suite in ("homomorphism", "all"):
            for n in ([args.n] if args.n else [3, 4]):
                reports.append(verify.check_homomorphism(
                    n, pairs=args.pairs, seed=args.seed))
        if suite in ("tower", "all"):
            reports.append(verify.check_tower_injectivity())
        if suite == "a5":
            points = ([_point_from(args)] if _point_from(args)
                      else verify.default_spec_points(args.seed))
            reports.append(verify.check_relations(
                5, mode="spec", points=points, seed=args.seed,
                progress_path=args.resume))
        if suite == "delta3":
            reports.append(verify.check_delta_cubed(
                _point_from(args), seed=args.seed))
    except IrreducibleWord as e:
        _say(f"irreducible: {e}")
        return EXIT_IRREDUCIBLE
    if not reports:
        _say(f"unknown suite {suite!r}")
        return EXIT_USAGE
    merged = (reports[0] if len(reports) == 1
              else verify.merge_reports(suite, reports))
    for rep in reports:
        _say(rep.summary())
    _emit(_report_payload(merged), args.out)
    return EXIT_OK if merged.passed() else EXIT_VERIFY_FAILED


def build_parser() -> _Parser:
    p = _Parser(prog="cubichecke",
                description="exact cubic Hecke algebra computations "
                            "on 2 to 5 strands")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="cmd", required=True)

    def common(sp, n_default=None):
        sp.add_argument("--n", type=int, default=n_default)
        sp.add_argument("--seed", type=int, default=20260817)
        sp.add_argument("--depth-limit", type=int, dest="depth_limit")
        sp.add_argument("--threads", type=int, default=os.cpu_count(),
                        help="worker cap; results do not depend on it")
        sp.add_argument("--out")
        sp.add_argument("--prime", type=int)
        sp.add_argument("--a", type=int)
        sp.add_argument("--b", type=int)
        sp.add_argument("--c", type=int)

    sp = sub.add_parser("normalize", help="reduce a word to normal form")
    sp.add_argument("word")
    common(sp, 3)
    sp.set_defaults(fn=cmd_normalize)

    sp = sub.add_parser("mul", help="multiply two words in normal form")
    sp.add_argument("left")
    sp.add_argument("right")
    common(sp, 3)
    sp.set_defaults(fn=cmd_mul)

    sp = sub.add_parser("basis", help="export the canonical basis")
    common(sp, 3)
    sp.set_defaults(fn=cmd_basis)

    sp = sub.add_parser("table", help="export an action table")
    sp.add_argument("--gen", type=int, default=1)
    sp.add_argument("--resume", help="seed checkpoint path (n=5)")
    common(sp, 3)
    sp.set_defaults(fn=cmd_table)

    sp = sub.add_parser("rank", help="basis cardinality and tower counts")
    common(sp, 3)
    sp.set_defaults(fn=cmd_rank)

    sp = sub.add_parser("verify", help="run a verification suite")
    sp.add_argument("--suite", default="identities",
                    choices=["identities", "relations", "group",
                             "automorphisms", "homomorphism", "tower",
                             "a5", "delta3", "all"])
    sp.add_argument("--mode", default="exact", choices=["exact", "spec"])
    sp.add_argument("--pairs", type=int, default=1000)
    sp.add_argument("--resume", help="progress checkpoint path")
    common(sp, None)
    sp.set_defaults(fn=cmd_verify)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (cio.FormatError, LevelOutOfRange, ValueError) as e:
        _say(f"usage error: {e}")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

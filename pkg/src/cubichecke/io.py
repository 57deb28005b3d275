"""JSON and text serialization for words, elements, bases, and tables.

Word text grammar: whitespace-separated signed decimal tokens, so
"3 -2 1 -2 3" is s_3 s_2^-1 s_1 s_2^-1 s_3.  Exported table and basis
files carry a header with the package version and the tower generator
counts so a reader can reject a file from a mismatched build.
"""

from __future__ import annotations

import json

from cubichecke import __version__
from cubichecke.catalog import T5_STRATUM_SIZES, get_catalog, tower_gens
from cubichecke.coeffs import LaurentCoeff
from cubichecke.tables import ActionTable, AlgebraElement
from cubichecke.words import Word, free_reduce


class FormatError(ValueError):
    pass


def parse_word(text: str) -> Word:
    """Parse the whitespace-separated signed-index grammar."""
    out = []
    for tok in text.split():
        try:
            v = int(tok, 10)
        except ValueError:
            raise FormatError(f"bad word token {tok!r}") from None
        if v == 0:
            raise FormatError("generator index 0 is not valid")
        out.append(v)
    return tuple(out)


def format_word(w: Word) -> str:
    return " ".join(str(x) for x in w)


def word_to_json(n: int, w: Word) -> dict:
    return {"n": n, "word": list(w)}


def word_from_json(obj: dict) -> tuple[int, Word]:
    n = int(obj["n"])
    w = tuple(int(x) for x in obj["word"])
    for x in w:
        if x == 0 or abs(x) >= n:
            raise FormatError(f"letter {x} out of range for {n} strands")
    return n, w


def element_to_json(x: AlgebraElement) -> dict:
    cat = get_catalog(x.n)
    terms = [{"word": list(cat.word(i)), "coeff": c.to_json()}
             for i, c in sorted(x.terms.items())]
    return {"n": x.n, "terms": terms}


def element_from_json(obj: dict) -> AlgebraElement:
    n = int(obj["n"])
    mapping = {}
    for t in obj["terms"]:
        w = free_reduce(tuple(int(v) for v in t["word"]))
        mapping[w] = LaurentCoeff.from_json(t["coeff"])
    return AlgebraElement.from_word_coeffs(n, mapping)


def file_header() -> dict:
    return {
        "package": "cubichecke",
        "version": __version__,
        "tower_counts": {str(n): len(tower_gens(n)) for n in (3, 4, 5)},
        "strata_5": list(T5_STRATUM_SIZES),
    }


def basis_export(n: int) -> dict:
    cat = get_catalog(n)
    return {"header": file_header(), "n": n,
            "words": [list(w) for w in cat.words]}


def table_export(table: ActionTable) -> dict:
    cols = []
    for col in table.cols:
        cols.append([{"row": r, "coeff": LaurentCoeff(dict(cd)).to_json()}
                     for r, cd in sorted(col.items())])
    return {"header": file_header(), "n": table.n, "gen": table.g,
            "cols": cols}


def table_from_json(obj: dict) -> ActionTable:
    cols = []
    for col in obj["cols"]:
        cols.append({int(e["row"]): dict(LaurentCoeff.from_json(e["coeff"]).d)
                     for e in col})
    return ActionTable(int(obj["n"]), int(obj["gen"]), cols)


def dump(obj: dict, path: str) -> None:
    with open(path, "w") as f:
        json.dump(obj, f, separators=(",", ":"))
        f.write("\n")


def load(path: str) -> dict:
    with open(path) as f:
        return json.load(f)

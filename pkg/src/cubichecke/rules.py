"""Oriented rewrite rules over an adjacent generator pair.

Rules are written in pattern symbols: +-1 is the lower generator of an
adjacent pair, +-2 the higher.  A rule instance at pair (i, i+1) maps
symbol 1 to i and 2 to i+1 ("normal"), or 1 to i+1 and 2 to i
("flipped"); the flipped form is valid because index reversal extends
to an algebra automorphism.  Single-symbol rules (the quadratic ones)
instantiate at every generator index.

Every identity here holds in the quotient algebra; two structure maps
transport rules to rules and the catalog is closed under both:

  phi:  flip the sign of every letter and twist coefficients by
        a -> -b/c, b -> -a/c, c -> 1/c  (an algebra automorphism);
  rev:  reverse every word, coefficients unchanged (the algebra
        anti-automorphism fixing the generators).

The seed list below holds the quadratic expansions, the braid moves,
the four slide identities (conjugating one generator across its
neighbour) with their inverse orientations, the negative-sandwich
expansion, and the degree-4/degree-6 alternating-word identities.
Soundness of the full closed catalog is machine-checked in the tests
against the independent linear-closure model and the action tables.
"""

from __future__ import annotations

from dataclasses import dataclass

from cubichecke.coeffs import CINV, LaurentCoeff

Word = tuple[int, ...]

# priority classes, low runs first in the strategy
PRIO_POWER = 0
PRIO_COMM_DOWN = 1
PRIO_SLIDE = 2
PRIO_BRAID = 3
PRIO_SANDWICH = 4
PRIO_ALT = 5
PRIO_SEARCH_ONLY = 6
PRIO_DERIVED = 7


def _m(k: int, ea: int = 0, eb: int = 0, ec: int = 0) -> LaurentCoeff:
    return LaurentCoeff.mono(k, ea, eb, ec)


@dataclass(frozen=True)
class Rule:
    rid: str
    pattern: Word
    terms: tuple[tuple[LaurentCoeff, Word], ...]
    priority: int
    provenance: str
    nsyms: int  # 1 = single index, 2 = adjacent pair, 3 = consecutive triple

    def canonical(self) -> tuple:
        return (self.pattern, tuple(sorted((w, tuple(c.terms())) for c, w in self.terms)))


def _rule(rid, pattern, terms, priority, provenance, nsyms=2) -> Rule:
    return Rule(rid, tuple(pattern), tuple((c, tuple(w)) for c, w in terms), priority, provenance, nsyms)


def phi_rule(r: Rule) -> Rule:
    """Transport along the sign-flip automorphism."""
    return Rule(
        r.rid + ".phi",
        tuple(-x for x in r.pattern),
        tuple((c.phi(), tuple(-x for x in w)) for c, w in r.terms),
        r.priority if r.priority != PRIO_SEARCH_ONLY else PRIO_SEARCH_ONLY,
        r.provenance,
        r.nsyms,
    )


def rev_rule(r: Rule) -> Rule:
    """Transport along the generator-fixing anti-automorphism."""
    return Rule(
        r.rid + ".rev",
        tuple(reversed(r.pattern)),
        tuple((c, tuple(reversed(w))) for c, w in r.terms),
        r.priority,
        r.provenance,
        r.nsyms,
    )


def _seed_rules() -> list[Rule]:
    one = LaurentCoeff.one()
    a = _m(1, 1, 0, 0)
    b = _m(1, 0, 1, 0)
    c = _m(1, 0, 0, 1)

    rules = [
        # quadratic expansions from the degree-3 relation on one generator
        _rule("cube.sq", (1, 1), [(a, (1,)), (b, ()), (c, (-1,))],
              PRIO_POWER, "square of a generator", nsyms=1),
        _rule("cube.sqinv", (-1, -1),
              [(CINV, (1,)), (_m(-1, 1, 0, -1), ()), (_m(-1, 0, 1, -1), (-1,))],
              PRIO_POWER, "square of an inverse generator", nsyms=1),
        # braid moves, both orientations
        _rule("braid.dn", (2, 1, 2), [(one, (1, 2, 1))], PRIO_BRAID, "braid move"),
        _rule("braid.dn.neg", (-2, -1, -2), [(one, (-1, -2, -1))], PRIO_BRAID, "braid move, inverses"),
        _rule("braid.up", (1, 2, 1), [(one, (2, 1, 2))], PRIO_SEARCH_ONLY, "braid move"),
        _rule("braid.up.neg", (-1, -2, -1), [(one, (-2, -1, -2))], PRIO_SEARCH_ONLY, "braid move, inverses"),
        # slide identities: conjugating one generator across its neighbour
        _rule("slide.1", (2, 1, -2), [(one, (-1, 2, 1))], PRIO_SLIDE, "slide, from the braid move"),
        _rule("slide.2", (2, -1, -2), [(one, (-1, -2, 1))], PRIO_SLIDE, "slide, from the braid move"),
        _rule("slide.3", (-2, 1, 2), [(one, (1, 2, -1))], PRIO_SLIDE, "slide, from the braid move"),
        _rule("slide.4", (-2, -1, 2), [(one, (1, -2, -1))], PRIO_SLIDE, "slide, from the braid move"),
        _rule("slide.1r", (-1, 2, 1), [(one, (2, 1, -2))], PRIO_SEARCH_ONLY, "slide, reverse orientation"),
        _rule("slide.2r", (-1, -2, 1), [(one, (2, -1, -2))], PRIO_SEARCH_ONLY, "slide, reverse orientation"),
        _rule("slide.3r", (1, 2, -1), [(one, (-2, 1, 2))], PRIO_SEARCH_ONLY, "slide, reverse orientation"),
        _rule("slide.4r", (1, -2, -1), [(one, (-2, -1, 2))], PRIO_SEARCH_ONLY, "slide, reverse orientation"),
        # negative sandwich: expand y- x y- through the quadratic relation
        _rule("sand", (-2, 1, -2),
              [(CINV, (2, -1, 2, 1)),
               (_m(-1, 1, 0, -1), (-1, 2, 1)),
               (_m(-1, 0, 1, -1), (1, -2))],
              PRIO_SANDWICH, "negative sandwich expansion"),
        # degree-6 alternating word in terms of shorter words; the
        # expansion is machine-derived and validated in the independent
        # linear model, see the oracle module
        _rule("alt6", (-2, 1, -2, 1, -2, 1),
              [(_m(-2, 1, 1, -1) + _m(-1, 2, 2, -2), ()),
               (_m(-1, 0, 2, -1) + _m(-1, 1, 3, -2), (-2,)),
               (_m(-1, 1, 0, 0) + _m(-1, 2, 1, -1), (-1,)),
               (_m(-1, 2, 0, -1) + _m(-1, 3, 1, -2), (1,)),
               (_m(1, 0, 1, -1) + _m(1, 1, 2, -2), (2,)),
               (_m(1, 1, 2, -1), (-2, -1)),
               (_m(1, 2, 2, -2), (-2, 1)),
               (_m(-1, 0, 1, 0) + _m(-2, 1, 2, -1), (-1, -2)),
               (_m(1, 0, 0, 0) + _m(2, 1, 1, -1), (-1, 2)),
               (_m(-1, 1, 1, -1) + _m(-2, 2, 2, -2), (1, -2)),
               (_m(1, 1, 0, -1) + _m(2, 2, 1, -2), (1, 2)),
               (_m(-1, 2, 1, -2), (2, 1)),
               (_m(-1, 0, 2, -1), (-2, 1, -2)),
               (_m(-1, 0, 2, -1), (-1, -2, 1)),
               (_m(1, 1, 0, 0), (-1, 2, -1)),
               (_m(1, 0, 1, -1) + _m(1, 2, 0, -1), (-1, 2, 1)),
               (_m(1, 0, 2, -1) + _m(-1, 1, 0, 0), (1, -2, -1)),
               (_m(-1, 2, 0, -1), (1, -2, 1)),
               (_m(-1, 0, 1, 0), (-1, -2, 1, -2)),
               (_m(-2, 1, 1, -1), (1, -2, 1, -2))],
              PRIO_ALT, "degree-6 alternating expansion"),
        # degree-4 alternating identities: three conversions into the
        # word starting with the inverse higher generator
        _rule("alt4.a", (1, -2, 1, -2),
              [(one, (-2, 1, -2, 1)),
               (_m(1, 1, 0, -1), (1, 2)),
               (_m(-1, 1, 0, -1), (2, 1)),
               (_m(-1, 1, 1, -1), (1, -2)),
               (_m(1, 1, 1, -1), (-2, 1)),
               (_m(1, 0, 1, 0), (-2, -1)),
               (_m(-1, 0, 1, 0), (-1, -2))],
              PRIO_SEARCH_ONLY, "degree-4 alternating conversion"),
        _rule("alt4.b", (2, -1, 2, -1),
              [(one, (-2, 1, -2, 1)),
               (_m(1, 1, 0, 0), (-1, 2, -1)),
               (_m(-1, 1, 0, 0), (-2, 1, -2)),
               (_m(-1, 1, 1, -1), (1, -2)),
               (_m(1, 1, 1, -1), (-1, 2)),
               (_m(1, 0, 1, -1), (1, -2, 1)),
               (_m(-1, 0, 1, -1), (2, -1, 2))],
              PRIO_ALT, "degree-4 alternating conversion"),
        _rule("alt4.c", (-1, 2, -1, 2),
              [(one, (-2, 1, -2, 1)),
               (_m(1, 1, 0, -1), (1, 2)),
               (_m(-1, 1, 0, 0), (-2, 1, -2)),
               (_m(-1, 1, 0, -1), (2, 1)),
               (_m(1, 1, 0, 0), (-1, 2, -1)),
               (_m(-1, 1, 1, -1), (1, -2)),
               (_m(1, 0, 1, -1), (1, -2, 1)),
               (_m(1, 1, 1, -1), (2, -1)),
               (_m(-1, 0, 1, -1), (2, -1, 2)),
               (_m(1, 0, 1, 0), (-2, -1)),
               (_m(-1, 0, 1, 0), (-1, -2))],
              PRIO_ALT, "degree-4 alternating conversion"),
        # degree-4 alternating reorderings, solved toward the word whose
        # lower generator leads
        _rule("alt4.d", (-2, 1, -2, 1),
              [(one, (1, -2, 1, -2)),
               (_m(-1, 1, 0, -1), (1, 2)),
               (_m(1, 1, 0, -1), (2, 1)),
               (_m(1, 1, 1, -1), (1, -2)),
               (_m(-1, 1, 1, -1), (-2, 1)),
               (_m(-1, 0, 1, 0), (-2, -1)),
               (_m(1, 0, 1, 0), (-1, -2))],
              PRIO_ALT, "degree-4 alternating reordering"),
        _rule("alt4.e", (-1, 2, -1, 2),
              [(one, (2, -1, 2, -1)),
               (_m(-1, 1, 1, -1), (-1, 2)),
               (_m(1, 1, 0, -1), (1, 2)),
               (_m(-1, 1, 0, -1), (2, 1)),
               (_m(1, 1, 1, -1), (2, -1)),
               (_m(1, 0, 1, 0), (-2, -1)),
               (_m(-1, 0, 1, 0), (-1, -2))],
              PRIO_SEARCH_ONLY, "degree-4 alternating reordering"),
        # Three-index bridges.  A sandwich-fixed middle block between two
        # top letters admits no pair rule; expanding the middle by the
        # negative-sandwich identity and commuting the freed low letter
        # past the outer top letter gives an exact three-index rewrite.
        _rule("bridge.mm", (-3, -2, 1, -2, -3),
              [(CINV, (-3, 2, -1, 2, -3, 1)),
               (_m(-1, 1, 0, -1), (-1, -3, 2, -3, 1)),
               (_m(-1, 0, 1, -1), (1, -3, -2, -3))],
              PRIO_SANDWICH, "double-inverse bridge over three indices",
              nsyms=3),
        # Pure braid-group rewrite: conjugating the middle through the
        # right top letter after an inverse braid insertion.
        _rule("bridge.pm", (3, -2, 1, -2, -3),
              [(one, (-2, -3, 2, 1, -2, -3, 2))],
              PRIO_SANDWICH, "mixed-sign bridge over three indices",
              nsyms=3),
    ]
    return rules


def rule_set() -> list[Rule]:
    """The closed rule catalog: seed rules plus phi/rev transports."""
    seeds = _seed_rules()
    out: list[Rule] = []
    seen: set = set()
    for r in seeds:
        for t in (r, phi_rule(r), rev_rule(r), rev_rule(phi_rule(r))):
            key = t.canonical()
            if key not in seen:
                seen.add(key)
                out.append(t)
    return out


def instantiate(rule: Rule, lo: int, hi: int | None = None, flipped: bool = False):
    """Concrete (pattern, terms) at generator indices.

    Single-symbol rules take just lo.  Pair rules map symbol 1 -> lo and
    2 -> hi with hi = lo + 1; triple rules map 1, 2, 3 -> lo, lo + 1, hi
    with hi = lo + 2.  Flipped reverses the index assignment.
    """
    if rule.nsyms == 1:
        amap = {1: lo, -1: -lo}
    elif rule.nsyms == 2:
        if hi != lo + 1:
            raise ValueError("pair rules need an adjacent pair")
        x, y = (hi, lo) if flipped else (lo, hi)
        amap = {1: x, -1: -x, 2: y, -2: -y}
    else:
        if hi != lo + 2:
            raise ValueError("triple rules need three consecutive indices")
        mid = lo + 1
        x, y, z = (hi, mid, lo) if flipped else (lo, mid, hi)
        amap = {1: x, -1: -x, 2: y, -2: -y, 3: z, -3: -z}
    pat = tuple(amap[s] for s in rule.pattern)
    terms = tuple((c, tuple(amap[s] for s in w)) for c, w in rule.terms)
    return pat, terms

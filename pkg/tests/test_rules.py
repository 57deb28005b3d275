"""Rewrite rule catalog, validated word-by-word against the closure model."""

import pytest

from cubichecke.coeffs import ONE
from cubichecke.oracle import oracle_A3
from cubichecke.rules import Rule, instantiate, phi_rule, rev_rule, rule_set


def test_rule_set_closed_under_transports():
    rules = rule_set()
    keys = {r.canonical() for r in rules}
    assert len(keys) == len(rules)
    for r in rules:
        assert phi_rule(r).canonical() in keys
        assert rev_rule(r).canonical() in keys


def test_rule_arity_fields():
    for r in rule_set():
        assert r.nsyms in (1, 2, 3)
        syms = {abs(x) for x in r.pattern}
        assert syms <= set(range(1, r.nsyms + 1))
        for _, w in r.terms:
            assert {abs(x) for x in w} <= set(range(1, r.nsyms + 1))


def test_instantiate_shapes():
    r = next(r for r in rule_set() if r.nsyms == 2)
    pat, terms = instantiate(r, 2, 3)
    assert {abs(x) for x in pat} <= {2, 3}
    with pytest.raises(ValueError):
        instantiate(r, 2, 4)
    tri = [r for r in rule_set() if r.nsyms == 3]
    if tri:
        pat, _ = instantiate(tri[0], 1, 3)
        assert {abs(x) for x in pat} <= {1, 2, 3}


def _oracle_checks_rule(model, pat, terms):
    return model.check_word_identity([(ONE, pat)], list(terms))


def test_every_checkable_rule_instance_holds_in_the_algebra():
    """Each one- and two-index rule instance is an identity in the
    three-strand closure model.  Three-index rules need a fourth strand;
    those are exercised by the level-4 relation checks instead."""
    model = oracle_A3()
    checked = 0
    for r in rule_set():
        if r.nsyms == 1:
            insts = [instantiate(r, 1), instantiate(r, 2)]
        elif r.nsyms == 2:
            insts = [instantiate(r, 1, 2), instantiate(r, 1, 2, flipped=True)]
        else:
            continue
        for pat, terms in insts:
            assert _oracle_checks_rule(model, pat, terms), (r.rid, pat)
            checked += 1
    assert checked >= 40


def test_rule_priorities_are_ints():
    for r in rule_set():
        assert isinstance(r.priority, int)
        assert isinstance(r.provenance, str) and r.provenance

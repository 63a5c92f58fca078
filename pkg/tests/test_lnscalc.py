import pytest

from subexp import context as cx
from subexp.core import Signature
from subexp.lnscalc import (ASSOCIATIVE, DEFAULT_LABEL, LNS, NON_ASSOCIATIVE,
                            Component, Link, LnsRuleInstance, MissingSuccedent,
                            ModeMismatch, end_active_check, interpret,
                            lns_applicable, lns_apply, reachable_releases)
from subexp.search import SearchBudget, prove
from subexp.syntax import parse_context, parse_formula, parse_lns, show

PRE = Signature({"a", "b"}, {("a", "b")}, {"a": {"K"}, "b": {"K"}}, "functorial")
ASSOC = Signature({"i"}, (), {"i": {"K", "A1", "A2"}}, "associative")


def rules(g, sig, mode=NON_ASSOCIATIVE):
    return [i.rule for i in lns_applicable(g, sig, mode)]


def test_interpret_single_component():
    assert interpret(parse_lns("A |- B")) == parse_formula("A \\ B")
    assert interpret(parse_lns("|- F")) == parse_formula("1 \\ F")
    assert interpret(parse_lns("(A, (B, C)) |- D")) == parse_formula("A * (B * C) \\ D")


def test_interpret_nesting_uses_par():
    got = interpret(parse_lns("A |- B //[i] C |- D"))
    assert got == parse_formula("A \\ B | ![i](C \\ D)")
    assert show(got) == "A \\ B | ![i](C \\ D)"
    # unfinished links read the same way
    assert interpret(parse_lns("A |- B //^[i] C |- D")) == got


def test_interpret_needs_succedents():
    with pytest.raises(MissingSuccedent):
        interpret(parse_lns("A |- //^[i] B |-"))


def test_bare_link_uses_default_label():
    g = parse_lns("A |- B // C |- D")
    assert g.links == (Link(DEFAULT_LABEL, True),)


def test_lns_structure_is_checked():
    with pytest.raises(ValueError):
        LNS(())
    with pytest.raises(ValueError):
        LNS((Component(cx.EMPTY, None), Component(cx.EMPTY, None)), ())


def test_promotion_opens_a_skeleton():
    g = parse_lns("![b]p |- ![a]p")
    assert "!" in rules(g, PRE)
    (opened,) = lns_apply(g, LnsRuleInstance("!", 0, labels=("a",)), PRE, NON_ASSOCIATIVE)
    assert opened == parse_lns("![b]p |- //^[a] {} |- p")


def test_move_then_release_closes_preorder_law():
    g = parse_lns("![b]p |- //^[a] {} |- p")
    move = LnsRuleInstance("!k", 0, "", "", ("a", "b"))
    assert move in lns_applicable(g, PRE, NON_ASSOCIATIVE)
    (moved,) = lns_apply(g, move, PRE, NON_ASSOCIATIVE)
    assert moved == parse_lns("{} |- //^[a] p |- p")
    (released,) = lns_apply(moved, LnsRuleInstance("r", 0, labels=("a",)), PRE, NON_ASSOCIATIVE)
    assert released == parse_lns("p |- p")


def test_moves_respect_the_preorder():
    g = parse_lns("![a]p |- //^[b] {} |- p")
    assert rules(g, PRE) == []


def test_release_needs_a_consumed_succedent():
    g = parse_lns("|- 1 //^[a] {} |- p")
    assert "r" not in rules(g, PRE)


def test_open_links_allow_only_moves_release_and_zero():
    g = parse_lns("(![b]p, ![b]q) |- //^[a] ({L}, {R}) |- p * q")
    assert set(rules(g, PRE)) == {"!k"}
    g = parse_lns("(![b]p, {R}) |- //^[a] ({L}, 0) |- q")
    assert set(rules(g, PRE)) == {"!k", "0L"}


def test_no_dereliction_in_lns():
    sig = Signature({"i"}, (), {"i": {"K"}}, "functorial")
    assert rules(parse_lns("![i]p |- p"), sig) == []


def test_t_and_d_rules():
    sig = Signature({"i"}, (), {"i": {"K", "T", "D"}}, "functorial")
    assert set(rules(parse_lns("![i]p |- p"), sig)) == {"!d", "!t"}
    (d,) = lns_apply(parse_lns("![i]0 |- 1"), LnsRuleInstance("!d", 0, "", None, ("i",)), sig,
                     NON_ASSOCIATIVE)
    assert d == parse_lns("{} |- 1 //^[i] 0 |-")
    assert "0L" in rules(d, sig)


def test_weakening_move_drops_the_inner_hole():
    sig = Signature({"i", "k"}, (), {"i": {"K"}, "k": {"K", "W"}}, "functorial")
    g = parse_lns("(![i]A, ![k]C) |- //^[i] ({L}, {R}) |- A")
    inst = LnsRuleInstance("w", 0, "R", "R", ("k",))
    (after,) = lns_apply(g, inst, sig, NON_ASSOCIATIVE)
    assert after == parse_lns("(![i]A, {R}) |- //^[i] {L} |- A")


def test_release_reachability_with_four_and_weakening():
    sig = Signature({"i", "j", "k"}, {("i", "j")},
                    {"i": {"K"}, "j": {"K", "4"}, "k": {"K", "W"}}, "functorial")
    got = reachable_releases(parse_context("(![i]A, (![j]B, ![k]C))"), "i", sig)
    assert got == {parse_context("(A, ![j]B)"), parse_context("(A, B)")}


def test_associative_moves_prepend():
    g = parse_lns("(![i]a, ![i]b) |- ![i](a * b)")
    (opened,) = lns_apply(g, LnsRuleInstance("!", 0, labels=("i",)), ASSOC, ASSOCIATIVE)
    assert opened == parse_lns("(![i]a, ![i]b) |- //^[i] () |- a * b")
    (first,) = lns_apply(opened, LnsRuleInstance("!k", 0, "R", None, ("i", "i")), ASSOC, ASSOCIATIVE)
    (second,) = lns_apply(first, LnsRuleInstance("!k", 0, "", None, ("i", "i")), ASSOC, ASSOCIATIVE)
    assert second == parse_lns("() |- //^[i] (a, b) |- a * b")
    assert prove(g, ASSOC, "lns-assoc", SearchBudget(8)).status == "proved"


def test_mode_mismatch():
    with pytest.raises(ModeMismatch):
        lns_applicable(parse_lns("p |- p"), PRE, ASSOCIATIVE)
    with pytest.raises(ModeMismatch):
        lns_applicable(parse_lns("p |- p"), Signature({"i"}, (), {}), NON_ASSOCIATIVE)


def test_end_active_check():
    g = parse_lns("a |- b //[i] c |- d //^[j] e |- f")
    assert end_active_check(g, LnsRuleInstance("!k", 1))
    assert end_active_check(g, LnsRuleInstance("*L", 2))
    assert not end_active_check(g, LnsRuleInstance("*L", 1))
    assert not end_active_check(g, LnsRuleInstance("!k", 0))
    assert end_active_check(parse_lns("a |- a"), LnsRuleInstance("init", 0))


def test_generated_instances_are_end_active():
    sig = Signature({"i", "j"}, {("i", "j")}, {"i": {"K", "T", "D"}, "j": {"K", "4", "T", "D"}},
                    "functorial")
    g = parse_lns("a |- b //[i] (![j]a, ![i]0) |- ![i](a * b)")
    insts = lns_applicable(g, sig, NON_ASSOCIATIVE)
    assert insts and all(end_active_check(g, i) for i in insts)

import pytest

from subexp.core import Signature
from subexp.sellcalc import (InvalidInstance, RuleInstance, applicable, apply,
                             check_step)
from subexp.syntax import parse_sequent

SIG = Signature({"i", "j", "k"}, {("i", "j")}, {"k": {"W"}})
SIG_NO_W = SIG.with_features(k=set())
GOAL = parse_sequent("(![i]A, (![j]B, ![k]C)) |- ![i](A * B)")
PROMOTE = RuleInstance("!R", labels=("i",))


def seqs(*texts):
    return [parse_sequent(t) for t in texts]


def test_promotion_offered_only_when_restriction_defined():
    assert PROMOTE in applicable(GOAL, SIG)
    assert not any(inst.rule == "!R" for inst in applicable(GOAL, SIG_NO_W))


def test_atomic_identity_has_only_init():
    assert applicable(parse_sequent("A |- A"), SIG) == [RuleInstance("init")]


def test_promotion_premise():
    seq = parse_sequent("(![i]A, ![j]B) |- ![i](A * B)")
    assert apply(seq, PROMOTE, SIG) == seqs("(![i]A, ![j]B) |- A * B")
    assert apply(GOAL, PROMOTE, SIG) == seqs("(![i]A, ![j]B) |- A * B")


def test_tensor_right_splits_at_root():
    seq = parse_sequent("(![i]A, ![j]B) |- A * B")
    assert apply(seq, RuleInstance("*R", split=0), SIG) == seqs("![i]A |- A", "![j]B |- B")


def test_one_right_closes():
    assert apply(parse_sequent("() |- 1"), RuleInstance("1R"), SIG) == []


def test_invalid_instance():
    with pytest.raises(InvalidInstance):
        apply(parse_sequent("A |- B"), RuleInstance("init"), SIG)


def test_check_step():
    good = seqs("(![i]A, ![j]B) |- A * B")
    assert check_step(GOAL, PROMOTE, good, SIG)
    unrestricted = seqs("(![i]A, (![j]B, ![k]C)) |- A * B")
    assert not check_step(GOAL, PROMOTE, unrestricted, SIG)
    assert not check_step(parse_sequent("A |- B"), RuleInstance("init"), [], SIG)
    assert not check_step(GOAL, RuleInstance("!R", "LLL", ("i",)), good, SIG)


@pytest.mark.parametrize("text, rule, position, premises", [
    ("(a, a \\ b) |- b", "\\L", "", ["a |- a", "b |- b"]),
    ("(b / a, a) |- b", "/L", "", ["a |- a", "b |- b"]),
    ("a |- b \\ c", "\\R", "", ["(b, a) |- c"]),
    ("a |- c / b", "/R", "", ["(a, b) |- c"]),
    ("(a * b, c) |- d", "*L", "L", ["((a, b), c) |- d"]),
    ("(1, c) |- d", "1L", "L", ["c |- d"]),
    ("a + b |- c", "+L", "", ["a |- c", "b |- c"]),
    ("a |- b & c", "&R", "", ["a |- b", "a |- c"]),
    ("a & b |- c", "&L2", "", ["b |- c"]),
    ("a |- b + c", "+R1", "", ["a |- b"]),
    ("(a, ![i]b) |- c", "!L", "R", ["(a, b) |- c"]),
])
def test_rule_table(text, rule, position, premises):
    seq = parse_sequent(text)
    inst = next(i for i in applicable(seq, SIG) if i.rule == rule and i.position == position)
    assert apply(seq, inst, SIG) == seqs(*premises)


def test_zero_left_closes_anywhere():
    seq = parse_sequent("(a, (0, b)) |- c")
    assert RuleInstance("0L", "RL") in applicable(seq, SIG)


def test_left_residual_needs_the_argument_on_its_left():
    # (a\b, a) offers no \L at the root: the argument sits on the wrong side
    seq = parse_sequent("(a \\ b, a) |- b")
    assert not any(i.rule == "\\L" for i in applicable(seq, SIG))


def test_every_offered_instance_checks():
    seq = parse_sequent("((![k]a, b * c), ![i](a \\ b)) |- ![k]c")
    sig = Signature({"i", "k"}, (), {"i": {"C", "E"}, "k": {"W", "A1", "A2"}})
    for inst in applicable(seq, sig):
        assert check_step(seq, inst, apply(seq, inst, sig), sig)

"""Property-based checks of the invariants each module promises."""
from hypothesis import HealthCheck, assume, given, settings
from hypothesis import strategies as st

from subexp import context as cx
from subexp.core import (ONE, ZERO, Atom, Bang, Over, Par, Plus,
                         Quest, Signature, Tensor, Under, With, closure,
                         contains, labels_of, size, upset, upset4, validate_signature)
from subexp.lnscalc import (ASSOCIATIVE, LNS, NON_ASSOCIATIVE, Component,
                            Link, interpret, lns_expansions)
from subexp.oracle import oracle_provable
from subexp.search import SearchBudget, check_certificate, prove
from subexp.sellcalc import Sequent, applicable, apply, check_step
from subexp.syntax import parse_formula, parse_lns, show

LABELS = ("i", "j", "k")
FEATURES = ("C", "W", "E", "A1", "A2", "T", "4", "D")

atoms = st.sampled_from([Atom("p"), Atom("q"), Atom("r")])


def formulas(labels=LABELS, binary=(Tensor, With, Plus, Under, Over), units=(ONE, ZERO),
             quest=True, max_leaves=6):
    leaf = st.one_of(atoms, st.sampled_from(units)) if units else atoms
    kinds = (Bang, Quest) if quest else (Bang,)

    def extend(inner):
        made = st.builds(lambda k, a, b: k(a, b), st.sampled_from(binary), inner, inner)
        if labels:
            made |= st.builds(lambda k, lab, a: k(lab, a), st.sampled_from(kinds), st.sampled_from(labels), inner)
        return made
    return st.recursive(leaf, extend, max_leaves=max_leaves)


def trees(leaf):
    return st.recursive(leaf.map(cx.Leaf), lambda t: st.builds(cx.Node, t, t), max_leaves=6)


@st.composite
def signatures(draw, mode="plain"):
    labels = draw(st.lists(st.sampled_from(LABELS), min_size=1, max_size=3, unique=True))
    pairs = draw(st.sets(st.tuples(st.sampled_from(labels), st.sampled_from(labels)), max_size=3))
    base = {"plain": set(), "functorial": {"K"}, "associative": {"K", "A1", "A2"}}[mode]
    feats = {lab: base | draw(st.sets(st.sampled_from(FEATURES), max_size=3)) for lab in labels}
    order = closure(labels, pairs)
    # make the feature map upward closed by pushing features up the order
    closed = {b: set().union(*(feats[a] for a in labels if (a, b) in order)) for b in labels}
    return Signature(frozenset(labels), frozenset(pairs), closed, mode)


def labels_in(ctx, *fs):
    out = set()
    for f in cx.formulas(ctx) + list(fs):
        out |= labels_of(f)
    return out


def no_empty_children(ctx):
    return all(not (isinstance(t, cx.Node) and (isinstance(t.left, cx.Empty) or isinstance(t.right, cx.Empty)))
               for _, t in cx.subtrees(ctx))


# ------------------------------------------------------------------- core

@given(signatures())
def test_generated_signatures_are_valid(sig):
    assert validate_signature(sig) == []


@given(signatures())
def test_closure_idempotent(sig):
    assert closure(sig.labels, sig.order) == sig.order


@given(signatures())
def test_upset_monotone_and_upset4_inside(sig):
    for a, b in sig.order:
        assert upset(sig, b) <= upset(sig, a)
    for a in sig.labels:
        assert upset4(sig, a) <= upset(sig, a)


# ---------------------------------------------------------------- context

@given(trees(formulas()), st.data())
def test_replace_with_own_subtree_is_identity(ctx, data):
    paths = [p for p, _ in cx.subtrees(ctx)]
    p = data.draw(st.sampled_from(paths))
    assert cx.replace_at(ctx, p, cx.subtree_at(ctx, p)) == ctx
    assert no_empty_children(cx.replace_at(ctx, p, cx.EMPTY))


@given(trees(formulas()), signatures(), st.sampled_from(LABELS))
def test_restriction_keeps_only_banged_leaves(ctx, sig, i):
    assume(i in sig.labels and labels_in(ctx) <= sig.labels)
    kept = cx.restrict_upset(ctx, i, sig)
    if kept is not None:
        assert no_empty_children(kept)
        assert all(isinstance(f, Bang) and f.label in upset(sig, i) for f in cx.formulas(kept))


@given(trees(formulas()))
def test_skeleton_refill_reconstructs(ctx):
    sk = cx.skeleton(ctx)
    assert cx.is_skeleton(sk)
    assert cx.hole_ids(sk) == {p for p, _ in cx.leaves(ctx)}
    out = sk
    for p, t in cx.leaves(ctx):
        out = cx.fill_hole(out, p, t.formula)
    assert out == ctx


def banged(labels=LABELS):
    return st.one_of(atoms, st.builds(Bang, st.sampled_from(labels), atoms))


@given(trees(banged()), signatures(), st.booleans())
def test_symmetric_rewrites_are_reversible(ctx, sig, assoc):
    assume(labels_in(ctx) <= sig.labels)
    if assoc:
        ctx = cx.flatten(ctx)
    for rw in cx.structural_rewrites(ctx, sig, assoc):
        assert no_empty_children(rw.context)
        if rw.rule in ("W", "C"):
            continue
        back = {r.context for r in cx.structural_rewrites(rw.context, sig, assoc)}
        assert ctx in back, rw


# --------------------------------------------------------------- sellcalc

@settings(suppress_health_check=[HealthCheck.too_slow])
@given(trees(formulas(max_leaves=4)), formulas(max_leaves=4), signatures())
def test_every_applicable_instance_checks(ctx, goal, sig):
    assume(labels_in(ctx, goal) <= sig.labels)
    seq = Sequent(ctx, goal)
    for inst in applicable(seq, sig):
        assert check_step(seq, inst, apply(seq, inst, sig), sig)


quest_free = formulas(labels=("i", "j"), quest=False, max_leaves=3)


@settings(max_examples=150, deadline=None)
@given(quest_free, signatures())
def test_identity_expansion(f, sig):
    assume(size(f) <= 5)
    assume(labels_of(f) <= sig.labels)
    res = prove(Sequent(cx.Leaf(f), f), sig, "sell", SearchBudget(12, 20_000))
    assert res.status == "proved", show(f)
    assert check_certificate(res.certificate, sig)


@settings(max_examples=150, deadline=None)
@given(trees(formulas(labels=("i",), binary=(Tensor, Under, Over), units=(ONE,), max_leaves=3)),
       formulas(labels=("i",), binary=(Tensor, Under, Over), units=(ONE,), max_leaves=3),
       st.sets(st.sampled_from(("C", "W", "E", "A1", "A2")), max_size=2),
       st.sampled_from(("C", "W", "E", "A1", "A2")))
def test_feature_monotonicity(ctx, goal, feats, extra):
    assume(len(cx.formulas(ctx)) <= 3)
    small = Signature({"i"}, (), {"i": feats})
    big = Signature({"i"}, (), {"i": feats | {extra}})
    res = prove(Sequent(ctx, goal), small, "sell", SearchBudget(6, 5000))
    if res.status == "proved":
        assert prove(Sequent(ctx, goal), big, "sell", SearchBudget(6, 20_000)).status == "proved"


mult = formulas(labels=(), binary=(Tensor, Under, Over), units=(ONE,), quest=False, max_leaves=4)


@settings(max_examples=200, deadline=None)
@given(st.one_of(st.just(cx.EMPTY), trees(mult)), mult)
def test_certificates_round_trip_and_match_oracle(ctx, goal):
    assume(all(size(f) <= 7 for f in cx.formulas(ctx) + [goal]))
    assume(len(cx.formulas(ctx)) <= 3)
    seq = Sequent(ctx, goal)
    sig = Signature({"i"}, (), {})
    depth = sum(size(f) for f in cx.formulas(ctx)) + size(goal) + 1
    res = prove(seq, sig, "sell", SearchBudget(depth, 10**6))
    assert (res.status == "proved") == oracle_provable(seq)
    if res.status == "proved":
        assert check_certificate(res.certificate, sig)
        assert prove(seq, sig, "sell", SearchBudget(depth, 10**6)).certificate == res.certificate


# ---------------------------------------------------------------- lnscalc

def reachable(g, sig, mode, limit=300):
    seen, todo = {g}, [g]
    while todo and len(seen) < limit:
        h = todo.pop()
        for _, premises in lns_expansions(h, sig, mode):
            for p in premises:
                if p not in seen:
                    seen.add(p)
                    todo.append(p)
    return seen


@settings(max_examples=60, deadline=None)
@given(trees(st.builds(Bang, st.sampled_from(("i", "j")), atoms)),
       formulas(labels=("i", "j"), binary=(Tensor, Under), units=(ONE,), quest=False, max_leaves=3),
       signatures(mode="associative"), st.booleans())
def test_reachable_lns_invariants(ctx, goal, sig, assoc):
    assume({"i", "j"} <= sig.labels)
    mode = ASSOCIATIVE if assoc else NON_ASSOCIATIVE
    if assoc:
        ctx = cx.flatten(ctx)
    start = LNS.single(ctx, Bang("i", goal))
    for g in reachable(start, sig, mode):
        assert all(link.finished for link in g.links[:-1])
        if g.is_open and not assoc and g.components[-2].succedent is None:
            outer, inner = g.components[-2].antecedent, g.components[-1].antecedent
            unmoved = {p for p, t in cx.leaves(outer) if isinstance(t, cx.Leaf)}
            assert cx.hole_ids(inner) == unmoved
        if len(g.components) == 1 and cx.is_concrete(g.components[0].antecedent):
            assert not contains(interpret(g), Par)


@given(formulas(max_leaves=8))
def test_print_parse_round_trip(f):
    assert parse_formula(show(f)) == f


@given(st.lists(st.tuples(trees(formulas(max_leaves=3)), formulas(max_leaves=3)), min_size=1, max_size=3),
       st.lists(st.tuples(st.sampled_from(LABELS), st.booleans()), min_size=2, max_size=2))
def test_lns_print_parse_round_trip(comps, links):
    g = LNS(tuple(Component(a, s) for a, s in comps),
            tuple(Link(lab, fin) for lab, fin in links[:len(comps) - 1]))
    assert parse_lns(show(g)) == g

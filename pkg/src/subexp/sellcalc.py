"""Sequent calculus over tree contexts with subexponentials.

Rules are read backwards.  :func:`expansions` is the single rule table;
:func:`applicable`, :func:`apply` and :func:`check_step` are views of it.

Rule table (``R{X}`` is the context with X at some position)::

    init    a |- a                         (a atomic)
    1R      () |- 1
    0L      R{0} |- H
    *L      R{F*G} |- H        <=  R{(F,G)} |- H
    1L      R{1} |- H          <=  R{} |- H
    \\R      G |- F\\H           <=  (F,G) |- H
    /R      G |- H/F           <=  (G,F) |- H
    &R      G |- F&H           <=  G |- F ;  G |- H
    +L      R{F+G} |- H        <=  R{F} |- H ;  R{G} |- H
    *R      (D1,D2) |- F*G     <=  D1 |- F ;  D2 |- G
    \\L      R{(D, F\\G)} |- H   <=  D |- F ;  R{G} |- H
    /L      R{(G/F, D)} |- H   <=  D |- F ;  R{G} |- H
    +R1/2   G |- F1+F2         <=  G |- Fk
    &L1/2   R{F1&F2} |- H      <=  R{Fk} |- H
    !R      G |- !iF           <=  G^i |- F     (G^i = restrict_upset)
    !L      R{!iF} |- H        <=  R{F} |- H
    W C E1 E2 A1 A1inv A2 A2inv: see context.structural_rewrites
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

from . import context as cx
from .context import EMPTY, Context, Leaf, Node
from .core import (Atom, Bang, Formula, One, Over, Plus, Signature, Tensor,
                   Under, With, Zero, hash_once)


class InvalidInstance(ValueError):
    pass


@hash_once
@dataclass(frozen=True)
class Sequent:
    antecedent: Context
    succedent: Optional[Formula]


@dataclass(frozen=True)
class RuleInstance:
    rule: str
    position: str = ""
    labels: tuple = ()
    split: Optional[int] = None


LOGICAL_RULES = ("init", "1R", "0L", "*L", "1L", "\\R", "/R", "&R", "+L",
                 "*R", "\\L", "/L", "+R1", "+R2", "&L1", "&L2")
STRUCTURAL_RULES = ("W", "C", "E1", "E2", "A1", "A1inv", "A2", "A2inv")
RULES = LOGICAL_RULES + ("!R", "!L") + STRUCTURAL_RULES


def _leaf_formulas(ctx: Context):
    for p, t in cx.leaves(ctx):
        if isinstance(t, Leaf):
            yield p, t.formula


def closing(seq: Sequent) -> Iterator[tuple]:
    ctx, goal = seq.antecedent, seq.succedent
    if isinstance(ctx, Leaf) and isinstance(ctx.formula, Atom) and ctx.formula == goal:
        yield RuleInstance("init"), ()
    if isinstance(ctx, cx.Empty) and isinstance(goal, One):
        yield RuleInstance("1R"), ()
    for p, f in _leaf_formulas(ctx):
        if isinstance(f, Zero):
            yield RuleInstance("0L", p), ()


def logical(seq: Sequent, associative: bool = False) -> Iterator[tuple]:
    """Invertible rules first, then the ones that commit to a choice."""
    ctx, goal = seq.antecedent, seq.succedent
    fix = cx.flatten if associative else (lambda c: c)

    def at(p, sub):
        return fix(cx.replace_at(ctx, p, sub))

    leafs = list(_leaf_formulas(ctx))
    for p, f in leafs:
        if isinstance(f, Tensor):
            yield RuleInstance("*L", p), (Sequent(at(p, Node(Leaf(f.left), Leaf(f.right))), goal),)
    for p, f in leafs:
        if isinstance(f, One):
            yield RuleInstance("1L", p), (Sequent(at(p, EMPTY), goal),)
    if isinstance(goal, Under):
        yield RuleInstance("\\R"), (Sequent(fix(cx.node(Leaf(goal.left), ctx)), goal.right),)
    if isinstance(goal, Over):
        yield RuleInstance("/R"), (Sequent(fix(cx.node(ctx, Leaf(goal.right))), goal.left),)
    if isinstance(goal, With):
        yield RuleInstance("&R"), (Sequent(ctx, goal.left), Sequent(ctx, goal.right))
    for p, f in leafs:
        if isinstance(f, Plus):
            yield RuleInstance("+L", p), (Sequent(at(p, Leaf(f.left)), goal),
                                          Sequent(at(p, Leaf(f.right)), goal))

    if associative:
        yield from _list_splits(ctx, goal)
    else:
        if isinstance(goal, Tensor) and isinstance(ctx, Node):
            yield RuleInstance("*R", split=0), (Sequent(ctx.left, goal.left),
                                                Sequent(ctx.right, goal.right))
        for p, t in cx.subtrees(ctx):
            if not isinstance(t, Node):
                continue
            r = t.right
            if isinstance(r, Leaf) and isinstance(r.formula, Under):
                imp = r.formula
                yield RuleInstance("\\L", p), (Sequent(t.left, imp.left),
                                               Sequent(cx.replace_at(ctx, p, Leaf(imp.right)), goal))
            l = t.left
            if isinstance(l, Leaf) and isinstance(l.formula, Over):
                imp = l.formula
                yield RuleInstance("/L", p), (Sequent(t.right, imp.right),
                                              Sequent(cx.replace_at(ctx, p, Leaf(imp.left)), goal))

    if isinstance(goal, Plus):
        yield RuleInstance("+R1"), (Sequent(ctx, goal.left),)
        yield RuleInstance("+R2"), (Sequent(ctx, goal.right),)
    for p, f in leafs:
        if isinstance(f, With):
            yield RuleInstance("&L1", p), (Sequent(at(p, Leaf(f.left)), goal),)
            yield RuleInstance("&L2", p), (Sequent(at(p, Leaf(f.right)), goal),)


def _list_splits(ctx: Context, goal) -> Iterator[tuple]:
    # Associative contexts: every split into nonempty contiguous blocks.
    items = cx.to_list(ctx)
    n = len(items)
    lst = cx.from_list
    if isinstance(goal, Tensor):
        for k in range(1, n):
            yield RuleInstance("*R", split=k), (Sequent(lst(items[:k]), goal.left),
                                                Sequent(lst(items[k:]), goal.right))
    for b, t in enumerate(items):
        if not isinstance(t, Leaf):
            continue
        f = t.formula
        if isinstance(f, Under):
            for a in range(b):
                yield RuleInstance("\\L", cx.list_path(n, b), split=a), (
                    Sequent(lst(items[a:b]), f.left),
                    Sequent(lst(items[:a] + [Leaf(f.right)] + items[b + 1:]), goal))
        if isinstance(f, Over):
            for c in range(b + 2, n + 1):
                yield RuleInstance("/L", cx.list_path(n, b), split=c), (
                    Sequent(lst(items[b + 1:c]), f.right),
                    Sequent(lst(items[:b] + [Leaf(f.left)] + items[c:]), goal))


def exponential(seq: Sequent, sig: Signature) -> Iterator[tuple]:
    ctx, goal = seq.antecedent, seq.succedent
    if isinstance(goal, Bang):
        kept = cx.restrict_upset(ctx, goal.label, sig)
        if kept is not None:
            yield RuleInstance("!R", labels=(goal.label,)), (Sequent(kept, goal.body),)
    for p, f in _leaf_formulas(ctx):
        if isinstance(f, Bang):
            yield RuleInstance("!L", p, (f.label,)), (Sequent(cx.replace_at(ctx, p, Leaf(f.body)), goal),)


def structural(seq: Sequent, sig: Signature, associative: bool = False) -> Iterator[tuple]:
    for rw in cx.structural_rewrites(seq.antecedent, sig, associative):
        yield RuleInstance(rw.rule, rw.path, (rw.label,)), (Sequent(rw.context, seq.succedent),)


def expansions(seq: Sequent, sig: Signature) -> Iterator[tuple]:
    """All ``(instance, premises)`` pairs, in search order."""
    yield from closing(seq)
    yield from logical(seq)
    yield from exponential(seq, sig)
    yield from structural(seq, sig)


def applicable(seq: Sequent, sig: Signature) -> list:
    return [inst for inst, _ in expansions(seq, sig)]


def apply(seq: Sequent, inst: RuleInstance, sig: Signature) -> list:
    for cand, premises in expansions(seq, sig):
        if cand == inst:
            return list(premises)
    raise InvalidInstance(f"{inst.rule} at {inst.position or 'root'} does not apply")


def check_step(seq: Sequent, inst: RuleInstance, premises, sig: Signature) -> bool:
    try:
        return apply(seq, inst, sig) == list(premises)
    except (InvalidInstance, cx.BadPath, KeyError):
        return False

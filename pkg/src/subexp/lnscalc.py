"""Linear nested sequents for functorial signatures.

An LNS is a list of components joined by links ``//[i]`` (finished) or
``//^[i]`` (unfinished).  Search only ever opens an unfinished link at the
end, and only the last two components are touched (end-active).

While the final link ``Γ |- //^[i] Δ |- F`` is open, the outer antecedent
``Γ`` is emptied one leaf at a time:

    !k   a leaf !jF with j ⪰ i moves into Δ as F
    !4   a leaf !jF with j ⪰ i and 4 ∈ f(j) moves into Δ unchanged
    w    a leaf !kF with W ∈ f(k) is dropped
    r    once Γ holds no formulas (and has no succedent), Δ |- F replaces
         both components

In non-associative mode Δ starts as the skeleton of Γ and each outer leaf
at path ``p`` lands in the hole whose id is ``p``, so the tree shape
survives the move.  In associative mode contexts are lists, Δ starts
empty, and leaves move from the end of Γ to the front of Δ.

Other rules act on the last component only when no link is open: the
sequent rules of :mod:`subexp.sellcalc` (minus its promotion and
dereliction), promotion ``!`` that opens a link, ``!d`` (D) that opens a
link with a succedent-free inner component, and ``!t`` (T).  ``init`` and
``1R`` close single-component LNS only; ``0L`` closes in any last
component.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

from . import context as cx
from . import sellcalc
from .context import EMPTY, Context, Hole, Leaf
from .core import (ONE, Axiom, Bang, Formula, Par, Signature, Tensor, Under, Zero,
                   hash_once, is_associative, is_functorial, upset, upset4)

ASSOCIATIVE = "associative"
NON_ASSOCIATIVE = "non-associative"
DEFAULT_LABEL = "d"
# feature set giving the unindexed link of plain linear logic
DEFAULT_FEATURES = frozenset({Axiom.K, Axiom.FOUR, Axiom.T, Axiom.C, Axiom.W,
                              Axiom.E, Axiom.A1, Axiom.A2})

MOVE_RULES = ("!k", "!4", "w")
LNS_RULES = sellcalc.LOGICAL_RULES + sellcalc.STRUCTURAL_RULES + ("!", "!d", "!t", "r") + MOVE_RULES


class ModeMismatch(ValueError):
    pass


class MissingSuccedent(ValueError):
    pass


@hash_once
@dataclass(frozen=True)
class Component:
    antecedent: Context
    succedent: Optional[Formula] = None


@dataclass(frozen=True)
class Link:
    label: str
    finished: bool = False


@hash_once
@dataclass(frozen=True)
class LNS:
    components: tuple
    links: tuple = ()

    def __post_init__(self):
        if not self.components:
            raise ValueError("an LNS needs at least one component")
        if len(self.links) != len(self.components) - 1:
            raise ValueError("need exactly one link between adjacent components")

    @classmethod
    def single(cls, antecedent: Context, succedent: Optional[Formula]) -> "LNS":
        return cls((Component(antecedent, succedent),))

    @property
    def is_open(self) -> bool:
        return bool(self.links) and not self.links[-1].finished

    def with_last(self, *comps, link: Optional[Link] = None, drop: int = 1) -> "LNS":
        """Replace the last ``drop`` components by ``comps``."""
        components = self.components[:-drop] + comps
        links = self.links[:len(self.links) - (drop - 1)] if drop > 1 else self.links
        if link is not None:
            links = links + (link,)
        return LNS(components, links)


@dataclass(frozen=True)
class LnsRuleInstance:
    rule: str
    component: int
    position: str = ""
    hole: Optional[str] = None
    labels: tuple = ()
    split: Optional[int] = None


def check_mode(sig: Signature, mode: str):
    if mode not in (ASSOCIATIVE, NON_ASSOCIATIVE):
        raise ModeMismatch(f"unknown LNS mode {mode!r}")
    if not is_functorial(sig):
        raise ModeMismatch("LNS rules need a functorial signature (K on every label)")
    if mode == ASSOCIATIVE and not is_associative(sig):
        raise ModeMismatch("associative mode needs A1 and A2 on every label")


# ----------------------------------------------------------------- rules

def _lift(g: LNS, n: int, inst: sellcalc.RuleInstance, premises) -> tuple:
    out = tuple(g.with_last(Component(s.antecedent, s.succedent)) for s in premises)
    return LnsRuleInstance(inst.rule, n - 1, inst.position, None, inst.labels, inst.split), out


def _open_expansions(g: LNS, sig: Signature, assoc: bool) -> Iterator[tuple]:
    n = len(g.components)
    outer, inner = g.components[-2], g.components[-1]
    i = g.links[-1].label
    for p, t in cx.leaves(inner.antecedent):
        if isinstance(t, Leaf) and isinstance(t.formula, Zero):
            yield LnsRuleInstance("0L", n - 1, p), ()
    if outer.succedent is None and not cx.has_formulas(outer.antecedent):
        released = Component(cx.prune_holes(inner.antecedent), inner.succedent)
        yield LnsRuleInstance("r", n - 2, labels=(i,)), (g.with_last(released, drop=2),)

    up, up4 = upset(sig, i), upset4(sig, i)
    if assoc:
        items = cx.to_list(outer.antecedent)
        if not items:
            return
        t = items[-1]
        if not (isinstance(t, Leaf) and isinstance(t.formula, Bang)):
            return
        f = t.formula
        p = cx.list_path(len(items), len(items) - 1)
        rest = cx.from_list(items[:-1])
        tail = cx.to_list(inner.antecedent)
        moved = []
        if f.label in up:
            moved.append(("!k", Leaf(f.body)))
        if f.label in up4:
            moved.append(("!4", t))
        for rule, leaf in moved:
            yield (LnsRuleInstance(rule, n - 2, p, None, (i, f.label)),
                   (g.with_last(Component(rest, outer.succedent),
                                Component(cx.from_list([leaf] + tail), inner.succedent), drop=2,
                                link=g.links[-1]),))
        if sig.has(f.label, Axiom.W):
            yield (LnsRuleInstance("w", n - 2, p, None, (f.label,)),
                   (g.with_last(Component(rest, outer.succedent), inner, drop=2, link=g.links[-1]),))
        return

    for p, t in cx.leaves(outer.antecedent):
        if not (isinstance(t, Leaf) and isinstance(t.formula, Bang)):
            continue
        target = cx.find_hole(inner.antecedent, p)
        if target is None:
            continue
        f = t.formula
        emptied = Component(cx.replace_at(outer.antecedent, p, Hole(p)), outer.succedent)
        moved = []
        if f.label in up:
            moved.append(("!k", Leaf(f.body)))
        if f.label in up4:
            moved.append(("!4", t))
        if sig.has(f.label, Axiom.W):
            moved.append(("w", EMPTY))
        for rule, leaf in moved:
            labels = (f.label,) if rule == "w" else (i, f.label)
            filled = Component(cx.replace_at(inner.antecedent, target, leaf), inner.succedent)
            yield (LnsRuleInstance(rule, n - 2, p, p, labels),
                   (g.with_last(emptied, filled, drop=2, link=g.links[-1]),))


def _closed_expansions(g: LNS, sig: Signature, assoc: bool) -> Iterator[tuple]:
    n = len(g.components)
    last = g.components[-1]
    seq = sellcalc.Sequent(last.antecedent, last.succedent)
    for inst, prem in sellcalc.closing(seq):
        if n == 1 or inst.rule == "0L":
            yield _lift(g, n, inst, prem)
    for inst, prem in sellcalc.logical(seq, assoc):
        yield _lift(g, n, inst, prem)

    ctx, goal = last.antecedent, last.succedent
    if isinstance(goal, Bang):
        inner = EMPTY if assoc else cx.skeleton(ctx)
        yield (LnsRuleInstance("!", n - 1, labels=(goal.label,)),
               (g.with_last(Component(ctx, None), Component(inner, goal.body), link=Link(goal.label)),))

    items = cx.to_list(ctx)
    for k, (p, t) in enumerate(cx.leaves(ctx)):
        if not (isinstance(t, Leaf) and isinstance(t.formula, Bang)):
            continue
        f = t.formula
        if not sig.has(f.label, Axiom.D):
            continue
        if assoc:
            if k != len(items) - 1:
                continue
            outer, inner = cx.from_list(items[:-1]), Leaf(f.body)
        else:
            outer = cx.replace_at(ctx, p, Hole(p))
            inner = cx.replace_at(cx.skeleton(ctx), p, Leaf(f.body))
        yield (LnsRuleInstance("!d", n - 1, p, None, (f.label,)),
               (g.with_last(Component(outer, goal), Component(inner, None), link=Link(f.label)),))

    fix = cx.flatten if assoc else (lambda c: c)
    for p, t in cx.leaves(ctx):
        if isinstance(t, Leaf) and isinstance(t.formula, Bang) and sig.has(t.formula.label, Axiom.T):
            new = fix(cx.replace_at(ctx, p, Leaf(t.formula.body)))
            yield (LnsRuleInstance("!t", n - 1, p, None, (t.formula.label,)),
                   (g.with_last(Component(new, goal)),))

    for inst, prem in sellcalc.structural(seq, sig, assoc):
        yield _lift(g, n, inst, prem)


def lns_expansions(g: LNS, sig: Signature, mode: str) -> Iterator[tuple]:
    """All ``(instance, premises)`` pairs for ``g``, in search order."""
    assoc = mode == ASSOCIATIVE
    if g.is_open:
        yield from _open_expansions(g, sig, assoc)
    else:
        yield from _closed_expansions(g, sig, assoc)


def lns_applicable(g: LNS, sig: Signature, mode: str) -> list:
    check_mode(sig, mode)
    return [inst for inst, _ in lns_expansions(g, sig, mode)]


def lns_apply(g: LNS, inst: LnsRuleInstance, sig: Signature, mode: str) -> list:
    check_mode(sig, mode)
    for cand, premises in lns_expansions(g, sig, mode):
        if cand == inst:
            return list(premises)
    raise sellcalc.InvalidInstance(f"{inst.rule} on component {inst.component} does not apply")


def touched(inst: LnsRuleInstance) -> set:
    """Component indices an instance reads or writes."""
    if inst.rule in MOVE_RULES or inst.rule == "r":
        return {inst.component, inst.component + 1}
    return {inst.component}


def end_active_check(g: LNS, inst: LnsRuleInstance) -> bool:
    """True iff ``inst`` touches only the two rightmost components, the last included."""
    n = len(g.components)
    hit = touched(inst)
    return all(max(n - 2, 0) <= c <= n - 1 for c in hit) and (n - 1) in hit


def reachable_releases(ctx: Context, label: str, sig: Signature, mode: str = NON_ASSOCIATIVE,
                       succedent: Formula = ONE) -> set:
    """Inner antecedents that reach release after promoting ``ctx |- !label F``.

    Explores every order of the moving rules (``!k``, ``!4``, ``w``).
    """
    check_mode(sig, mode)
    start = LNS.single(ctx, Bang(label, succedent))
    (opened,) = lns_apply(start, LnsRuleInstance("!", 0, labels=(label,)), sig, mode)
    seen, frontier, out = {opened}, [opened], set()
    while frontier:
        g = frontier.pop()
        for inst, premises in _open_expansions(g, sig, mode == ASSOCIATIVE):
            if inst.rule == "r":
                out.add(premises[0].components[-1].antecedent)
            elif inst.rule in MOVE_RULES:
                for h in premises:
                    if h not in seen:
                        seen.add(h)
                        frontier.append(h)
    return out


# --------------------------------------------------------- interpretation

def tensor_of(ctx: Context) -> Formula:
    """Multiply the leaves of a concrete context along its tree shape."""
    if isinstance(ctx, cx.Empty):
        return ONE
    if isinstance(ctx, Leaf):
        return ctx.formula
    if isinstance(ctx, cx.Node):
        return Tensor(tensor_of(ctx.left), tensor_of(ctx.right))
    raise ValueError("cannot interpret a context that still has holes")


def interpret(g: LNS, sig: Optional[Signature] = None) -> Formula:
    """Translate an LNS into one formula of the language extended with Par."""
    def comp(c: Component) -> Formula:
        if c.succedent is None:
            raise MissingSuccedent("every component needs a succedent to be interpreted")
        return Under(tensor_of(c.antecedent), c.succedent)

    out = comp(g.components[-1])
    for c, link in zip(reversed(g.components[:-1]), reversed(g.links)):
        if sig is not None:
            sig._check(link.label)
        out = Par(comp(c), Bang(link.label, out))
    return out

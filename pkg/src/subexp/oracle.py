"""Saturation decider for the exponential-free multiplicative fragment.

Used only to cross-check :func:`subexp.search.prove`.  It shares no rule
code with :mod:`subexp.sellcalc`: sequents are re-encoded as plain tuples,
the finite set of backward-reachable sequents is generated, and provability
is computed as a least fixpoint over that set.
"""
from __future__ import annotations

from . import context as cx
from .core import Atom, One, Over, Tensor, Under, size

MAX_SIZE = 7


class FragmentViolation(ValueError):
    pass


# formulas: ("a", name) | ("1",) | ("*", l, r) | ("\\", l, r) | ("/", l, r)
# contexts: None (empty) | ("f", formula) | (",", left, right)

def _encode_formula(f):
    if isinstance(f, Atom):
        return ("a", f.name)
    if isinstance(f, One):
        return ("1",)
    tag = {Tensor: "*", Under: "\\", Over: "/"}.get(type(f))
    if tag is None:
        raise FragmentViolation(f"{type(f).__name__} is outside the multiplicative fragment")
    return (tag, _encode_formula(f.left), _encode_formula(f.right))


def _encode_context(ctx):
    if isinstance(ctx, cx.Empty):
        return None
    if isinstance(ctx, cx.Leaf):
        return ("f", _encode_formula(ctx.formula))
    if isinstance(ctx, cx.Node):
        return (",", _encode_context(ctx.left), _encode_context(ctx.right))
    raise FragmentViolation("holes are outside the fragment")


def _pair(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return (",", a, b)


def _positions(ctx, rebuild=lambda x: x):
    """Yield ``(subtree, plug)`` where ``plug(t)`` puts ``t`` back in place."""
    if ctx is None:
        return
    yield ctx, rebuild
    if ctx[0] == ",":
        _, l, r = ctx
        yield from _positions(l, lambda t, r=r: rebuild(_pair(t, r)))
        yield from _positions(r, lambda t, l=l: rebuild(_pair(l, t)))


def _alternatives(seq):
    """Each alternative is a tuple of premises; () is an axiom."""
    ctx, goal = seq
    out = []
    if ctx is not None and ctx[0] == "f" and ctx[1][0] == "a" and ctx[1] == goal:
        out.append(())
    if ctx is None and goal == ("1",):
        out.append(())
    if goal[0] == "*" and ctx is not None and ctx[0] == ",":
        out.append(((ctx[1], goal[1]), (ctx[2], goal[2])))
    if goal[0] == "\\":
        out.append(((_pair(("f", goal[1]), ctx), goal[2]),))
    if goal[0] == "/":
        out.append(((_pair(ctx, ("f", goal[2])), goal[1]),))
    for sub, plug in _positions(ctx):
        if sub[0] == "f":
            f = sub[1]
            if f[0] == "*":
                out.append(((plug((",", ("f", f[1]), ("f", f[2]))), goal),))
            elif f[0] == "1":
                out.append(((plug(None), goal),))
        else:
            _, l, r = sub
            if r[0] == "f" and r[1][0] == "\\":
                out.append(((l, r[1][1]), (plug(("f", r[1][2])), goal)))
            if l[0] == "f" and l[1][0] == "/":
                out.append(((r, l[1][2]), (plug(("f", l[1][1])), goal)))
    return out


def oracle_provable(seq, sig=None) -> bool:
    """Decide a multiplicative sequent with no exponentials.

    Every formula must have size at most 7.  ``sig`` is accepted for
    interface symmetry and ignored: no feature can fire in this fragment.
    """
    fs = cx.formulas(seq.antecedent) + [seq.succedent]
    for f in fs:
        if size(f) > MAX_SIZE:
            raise FragmentViolation(f"formula of size {size(f)} exceeds {MAX_SIZE}")
    start = (_encode_context(seq.antecedent), _encode_formula(seq.succedent))

    rules = {}
    todo = [start]
    while todo:
        s = todo.pop()
        if s in rules:
            continue
        rules[s] = _alternatives(s)
        for alt in rules[s]:
            todo.extend(p for p in alt if p not in rules)

    provable = set()
    changed = True
    while changed:
        changed = False
        for s, alts in rules.items():
            if s not in provable and any(all(p in provable for p in alt) for alt in alts):
                provable.add(s)
                changed = True
    return start in provable

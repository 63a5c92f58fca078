"""Tree-shaped antecedents.

A context is a binary comma-tree.  Positions are paths: strings over
``"L"``/``"R"`` read from the root (``""`` is the root itself).  Holes carry
an identifier; :func:`skeleton` uses each leaf's own path as the hole id,
so ids stay valid however the tree is later pruned.
"""
from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Iterator, NamedTuple, Optional, Union

from .core import Axiom, Bang, Formula, Signature, hash_once, upset


class BadPath(LookupError):
    pass


class NotAHole(ValueError):
    pass


@hash_once
@dataclass(frozen=True)
class Empty:
    pass


@hash_once
@dataclass(frozen=True)
class Leaf:
    formula: Formula


@hash_once
@dataclass(frozen=True)
class Hole:
    id: str = ""


@hash_once
@dataclass(frozen=True)
class Node:
    left: "Context"
    right: "Context"


EMPTY = Empty()
Context = Union[Empty, Leaf, Hole, Node]
Path = str


def node(left: Context, right: Context) -> Context:
    """Build a Node, collapsing Empty children."""
    if isinstance(left, Empty):
        return right
    if isinstance(right, Empty):
        return left
    return Node(left, right)


def subtree_at(ctx: Context, path: Path) -> Context:
    cur = ctx
    for step in path:
        if not isinstance(cur, Node):
            raise BadPath(path)
        cur = cur.left if step == "L" else cur.right
    return cur


def replace_at(ctx: Context, path: Path, sub: Context) -> Context:
    if not path:
        return sub
    if not isinstance(ctx, Node):
        raise BadPath(path)
    if path[0] == "L":
        return node(replace_at(ctx.left, path[1:], sub), ctx.right)
    if path[0] == "R":
        return node(ctx.left, replace_at(ctx.right, path[1:], sub))
    raise BadPath(path)


def subtrees(ctx: Context, path: Path = "") -> Iterator[tuple]:
    """Yield ``(path, subtree)`` in pre-order, left before right."""
    if isinstance(ctx, Empty):
        return
    stack = [(path, ctx)]
    while stack:
        p, t = stack.pop()
        yield p, t
        if isinstance(t, Node):
            stack.append((p + "R", t.right))
            stack.append((p + "L", t.left))


def leaves(ctx: Context) -> Iterator[tuple]:
    """Yield ``(path, Leaf|Hole)`` left to right."""
    for p, t in subtrees(ctx):
        if not isinstance(t, Node):
            yield p, t


def formulas(ctx: Context) -> list:
    return [t.formula for _, t in leaves(ctx) if isinstance(t, Leaf)]


def is_concrete(ctx: Context) -> bool:
    return all(isinstance(t, Leaf) for _, t in leaves(ctx))


def is_skeleton(ctx: Context) -> bool:
    return all(isinstance(t, Hole) for _, t in leaves(ctx))


def has_formulas(ctx: Context) -> bool:
    return any(isinstance(t, Leaf) for _, t in leaves(ctx))


def hole_ids(ctx: Context) -> set:
    return {t.id for _, t in leaves(ctx) if isinstance(t, Hole)}


def find_hole(ctx: Context, hole_id: str) -> Optional[Path]:
    for p, t in leaves(ctx):
        if isinstance(t, Hole) and t.id == hole_id:
            return p
    return None


# -------------------------------------------------------------- operations

def restrict_upset(ctx: Context, i: str, sig: Signature) -> Optional[Context]:
    """The context kept by promotion to ``!i``, or None when undefined.

    Banged leaves with a label above ``i`` stay, banged leaves whose label
    has weakening are dropped, anything else makes the restriction undefined.
    """
    up = upset(sig, i)

    def go(t):
        if isinstance(t, Empty):
            return t
        if isinstance(t, Node):
            left = go(t.left)
            if left is None:
                return None
            right = go(t.right)
            if right is None:
                return None
            return node(left, right)
        if not isinstance(t, Leaf) or not isinstance(t.formula, Bang):
            return None
        lab = t.formula.label
        if lab in up:
            return t
        if sig.has(lab, Axiom.W):
            return EMPTY
        return None

    return go(ctx)


def skeleton(ctx: Context) -> Context:
    def go(t, p):
        if isinstance(t, Node):
            return Node(go(t.left, p + "L"), go(t.right, p + "R"))
        if isinstance(t, Empty):
            return t
        return Hole(p)

    return go(ctx, "")


def fill_hole(skel: Context, path: Path, f: Formula) -> Context:
    target = subtree_at(skel, path)
    if not isinstance(target, Hole):
        raise NotAHole(path)
    return replace_at(skel, path, Leaf(f))


def prune_holes(ctx: Context) -> Context:
    if isinstance(ctx, Hole):
        return EMPTY
    if isinstance(ctx, Node):
        return node(prune_holes(ctx.left), prune_holes(ctx.right))
    return ctx


# ------------------------------------------------------- list (associative)

def to_list(ctx: Context) -> list:
    """Leaf nodes left to right, for associative contexts."""
    return [t for _, t in leaves(ctx)]


def from_list(items) -> Context:
    """Right-leaning tree over ``items`` (Empty when there are none)."""
    out = EMPTY
    for t in reversed(list(items)):
        out = node(t, out)
    return out


def flatten(ctx: Context) -> Context:
    return from_list(to_list(ctx))


def list_path(n: int, k: int) -> Path:
    """Path of item ``k`` in a right-leaning tree of ``n`` items."""
    return "R" * k + ("L" if k < n - 1 else "")


# --------------------------------------------------------- structural rules

class Rewrite(NamedTuple):
    rule: str
    path: Path
    context: Context
    label: str


@functools.lru_cache(maxsize=1 << 16)
def bang_label(ctx: Context) -> Optional[str]:
    """The single label ``e`` if every leaf of ``ctx`` is ``!e``-rooted."""
    labels = set()
    for _, t in leaves(ctx):
        if not (isinstance(t, Leaf) and isinstance(t.formula, Bang)):
            return None
        labels.add(t.formula.label)
    return labels.pop() if len(labels) == 1 else None


def _leaf_bang(t: Context) -> Optional[str]:
    if isinstance(t, Leaf) and isinstance(t.formula, Bang):
        return t.formula.label
    return None


def structural_rewrites(ctx: Context, sig: Signature, associative: bool = False) -> list:
    """Every single-step feature-guarded rewrite of ``ctx``.

    Read backwards: each result is a premise context for a conclusion
    ``ctx``.  E and A rewrites come in mutually inverse pairs.  With
    ``associative`` the context is treated as a flat list: A1/A2 are not
    produced and exchange swaps adjacent items.
    """
    if associative:
        return _list_rewrites(ctx, sig)
    out = []
    for p, t in subtrees(ctx):
        lab = _leaf_bang(t)
        if lab is not None:
            if sig.has(lab, Axiom.W):
                out.append(Rewrite("W", p, replace_at(ctx, p, EMPTY), lab))
            if sig.has(lab, Axiom.C):
                out.append(Rewrite("C", p, replace_at(ctx, p, Node(t, t)), lab))
        if not isinstance(t, Node):
            continue
        left, right = t.left, t.right
        swapped = replace_at(ctx, p, Node(right, left))
        e = bang_label(left)
        if e is not None and sig.has(e, Axiom.E):
            out.append(Rewrite("E1", p, swapped, e))
        e = bang_label(right)
        if e is not None and sig.has(e, Axiom.E):
            out.append(Rewrite("E2", p, swapped, e))
        # (Δ,(Δ2,Δ3)) -> ((Δ,Δ2),Δ3) with Δ banged; A2 mirrors on the right
        if isinstance(right, Node):
            a = bang_label(left)
            if a is not None and sig.has(a, Axiom.A1):
                out.append(Rewrite("A1", p, replace_at(ctx, p, Node(Node(left, right.left), right.right)), a))
            a = bang_label(right.right)
            if a is not None and sig.has(a, Axiom.A2):
                out.append(Rewrite("A2inv", p, replace_at(ctx, p, Node(Node(left, right.left), right.right)), a))
        if isinstance(left, Node):
            a = bang_label(right)
            if a is not None and sig.has(a, Axiom.A2):
                out.append(Rewrite("A2", p, replace_at(ctx, p, Node(left.left, Node(left.right, right))), a))
            a = bang_label(left.left)
            if a is not None and sig.has(a, Axiom.A1):
                out.append(Rewrite("A1inv", p, replace_at(ctx, p, Node(left.left, Node(left.right, right))), a))
    return out


def _list_rewrites(ctx: Context, sig: Signature) -> list:
    items = to_list(ctx)
    n = len(items)
    out = []
    for k, t in enumerate(items):
        lab = _leaf_bang(t)
        p = list_path(n, k)
        if lab is not None:
            if sig.has(lab, Axiom.W):
                out.append(Rewrite("W", p, from_list(items[:k] + items[k + 1:]), lab))
            if sig.has(lab, Axiom.C):
                out.append(Rewrite("C", p, from_list(items[:k] + [t, t] + items[k + 1:]), lab))
        if k + 1 < n:
            swapped = from_list(items[:k] + [items[k + 1], t] + items[k + 2:])
            if lab is not None and sig.has(lab, Axiom.E):
                out.append(Rewrite("E1", p, swapped, lab))
            lab2 = _leaf_bang(items[k + 1])
            if lab2 is not None and sig.has(lab2, Axiom.E):
                out.append(Rewrite("E2", p, swapped, lab2))
    return out

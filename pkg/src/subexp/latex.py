"""LaTeX rendering of formulas, sequents, LNS and proof trees (bussproofs)."""
from __future__ import annotations

from .context import Empty, Hole, Leaf, Node
from .core import Atom, Bang, One, Over, Par, Plus, Quest, Tensor, Under, With, Zero
from .lnscalc import LNS, Component
from .search import ProofCertificate, ProofNode
from .sellcalc import Sequent

PREAMBLE = r"""\documentclass{article}
\usepackage{amsmath,amssymb}
\usepackage{graphicx}
\usepackage{bussproofs}
\newcommand{\lpar}{\mathbin{\rotatebox[origin=c]{180}{$\&$}}}
\newcommand{\nest}[1]{\mathrel{/\!\!/_{#1}}}
\newcommand{\nestu}[1]{\mathrel{\widehat{/\!\!/}_{#1}}}
\begin{document}
"""

_OPS = {Tensor: r"\otimes", With: r"\mathbin{\&}", Plus: r"\oplus", Under: r"\backslash",
        Over: "/", Par: r"\lpar"}

_RULE_NAMES = {"*L": r"$\otimes$L", "*R": r"$\otimes$R", "&L1": r"$\&$L$_1$", "&L2": r"$\&$L$_2$",
               "&R": r"$\&$R", "+L": r"$\oplus$L", "+R1": r"$\oplus$R$_1$", "+R2": r"$\oplus$R$_2$",
               "\\L": r"$\backslash$L", "\\R": r"$\backslash$R"}


def _label(lab: str) -> str:
    return r"\mathsf{" + lab.replace("_", r"\_") + "}"


def formula(f) -> str:
    if isinstance(f, Atom):
        return f.name.replace("_", r"\_")
    if isinstance(f, One):
        return "1"
    if isinstance(f, Zero):
        return "0"
    if isinstance(f, (Bang, Quest)):
        mark = "!" if isinstance(f, Bang) else "?"
        body = formula(f.body)
        return f"{mark}^{{{_label(f.label)}}}{body}"
    return f"({formula(f.left)} {_OPS[type(f)]} {formula(f.right)})"


def _bare(f) -> str:
    # binary formulas render with one outer pair of parentheses
    s = formula(f)
    return s[1:-1] if isinstance(f, tuple(_OPS)) else s


def context(ctx) -> str:
    if isinstance(ctx, Empty):
        return r"\cdot"
    if isinstance(ctx, Hole):
        return r"\{\,\}"
    if isinstance(ctx, Leaf):
        return _bare(ctx.formula)
    return f"({context(ctx.left)}, {context(ctx.right)})"


def _component(ctx, succ) -> str:
    left = "" if isinstance(ctx, Empty) else context(ctx) + " "
    right = "" if succ is None else " " + _bare(succ)
    return rf"{left}\vdash{right}"


def render(value) -> str:
    """Math-mode LaTeX (without delimiters) for a formula, sequent or LNS."""
    if isinstance(value, (Sequent, Component)):
        return _component(value.antecedent, value.succedent)
    if isinstance(value, LNS):
        parts = [render(value.components[0])]
        for link, comp in zip(value.links, value.components[1:]):
            op = r"\nest" if link.finished else r"\nestu"
            parts.append(f"{op}{{{_label(link.label)}}} {render(comp)}")
        return " ".join(parts)
    if isinstance(value, (Empty, Hole, Leaf, Node)):
        return context(value)
    return _bare(value)


def _rule_name(rule: str) -> str:
    if rule in _RULE_NAMES:
        return _RULE_NAMES[rule]
    return rule.replace("!", r"$!$").replace("_", r"\_")


def _tree(node: ProofNode, out: list):
    for p in node.premises:
        _tree(p, out)
    if not node.premises:
        out.append(r"\AxiomC{}")
    labs = ",".join(node.rule.labels)
    name = _rule_name(node.rule.rule) + (f"$_{{{labs}}}$" if labs else "")
    out.append(rf"\RightLabel{{\scriptsize {name}}}")
    inf = {0: "UnaryInfC", 1: "UnaryInfC", 2: "BinaryInfC", 3: "TrinaryInfC"}[len(node.premises)]
    out.append(rf"\{inf}{{${render(node.conclusion)}$}}")


def render_latex(value) -> str:
    """A standalone document: a proof tree for certificates, a display otherwise."""
    body = []
    if isinstance(value, ProofCertificate):
        body.append(r"\begin{prooftree}")
        _tree(value.root, body)
        body.append(r"\end{prooftree}")
    else:
        body.append(r"\[" + render(value) + r"\]")
    return PREAMBLE + "\n".join(body) + "\n\\end{document}\n"


def count_inferences(doc: str) -> int:
    """Number of inference lines in a rendered proof tree."""
    return sum(doc.count(rf"\{k}{{") for k in ("UnaryInfC", "BinaryInfC", "TrinaryInfC"))

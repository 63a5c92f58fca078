"""Provability tests for each axiom, instantiated at one label.

Each axiom is turned into a sequent over fresh atoms whose provability
under a signature says whether the label behaves as the axiom demands.
"""
from __future__ import annotations

from .core import Axiom, Signature
from .search import SearchBudget, prove
from .syntax import parse_sequent

TEMPLATES = {
    Axiom.C: "![{i}]p |- ![{i}]p * ![{i}]p",
    Axiom.W: "(p, ![{i}]q) |- p",
    Axiom.E: "(![{i}]p, q) |- q * ![{i}]p",
    Axiom.A1: "(![{i}]p, (q, r)) |- (![{i}]p * q) * r",
    Axiom.A2: "((q, r), ![{i}]p) |- q * (r * ![{i}]p)",
    Axiom.K: "(![{i}]p, ![{i}](p \\ q)) |- ![{i}]q",
    Axiom.T: "![{i}]p |- p",
    Axiom.FOUR: "![{i}]p |- ![{i}]![{i}]p",
    Axiom.D: "![{i}]0 |- 1",
}


def instance(axiom: Axiom, label: str):
    return parse_sequent(TEMPLATES[axiom].format(i=label))


def preorder_instance(lower: str, upper: str):
    """``!upper p |- !lower p``: provable iff ``lower ⪯ upper``."""
    return parse_sequent(f"![{upper}]p |- ![{lower}]p")


def axiom_matrix(sig: Signature, system: str, budget: SearchBudget = SearchBudget()) -> dict:
    """``{label: {axiom: result}}`` for every label and axiom."""
    return {
        lab: {ax: prove(instance(ax, lab), sig, system, budget) for ax in Axiom}
        for lab in sorted(sig.labels)
    }

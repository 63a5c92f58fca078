"""Bounded backward proof search with re-checkable certificates.

Search is depth-first iterative deepening.  Each branch carries the set of
states above it; revisiting one of them prunes the branch (a shortest
proof never repeats a state on a branch).  A failure is reported as
exhausted only when no branch was cut by the depth or node budget, so the
answer is three-valued: proved, unprovable, or inconclusive.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Optional, Union

from . import context as cx
from . import lnscalc, sellcalc
from .core import Par, Signature, contains, labels_of, validate_signature
from .lnscalc import LNS, LnsRuleInstance
from .sellcalc import RuleInstance, Sequent

SYSTEMS = {
    "sell": None,
    "lns-assoc": lnscalc.ASSOCIATIVE,
    "lns-nonassoc": lnscalc.NON_ASSOCIATIVE,
}


class IllFormedGoal(ValueError):
    pass


@dataclass(frozen=True)
class SearchBudget:
    max_depth: int = 12
    max_nodes: int = 100_000
    loop_check: bool = True

    def __post_init__(self):
        if self.max_depth < 1 or self.max_nodes < 1:
            raise ValueError("search bounds must be positive")


@dataclass(frozen=True)
class ProofNode:
    conclusion: Union[Sequent, LNS]
    rule: Union[RuleInstance, LnsRuleInstance]
    premises: tuple = ()
    height: int = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "height", 1 + max((p.height for p in self.premises), default=0))

    def walk(self, where: tuple = ()) -> Iterator[tuple]:
        """Yield ``(address, node)`` pairs; an address lists child indices."""
        yield where, self
        for k, p in enumerate(self.premises):
            yield from p.walk(where + (k,))


@dataclass(frozen=True)
class ProofCertificate:
    goal: Union[Sequent, LNS]
    root: ProofNode
    system: str
    fingerprint: str

    def nodes(self) -> list:
        return [n for _, n in self.root.walk()]

    @property
    def size(self) -> int:
        return len(self.nodes())


@dataclass(frozen=True)
class Proved:
    certificate: ProofCertificate
    expansions: int = 0
    status = "proved"


@dataclass(frozen=True)
class ExhaustedUnprovable:
    expansions: int = 0
    status = "unprovable"


@dataclass(frozen=True)
class BoundReached:
    reason: str = "depth"
    expansions: int = 0
    status = "bound"


SearchResult = Union[Proved, ExhaustedUnprovable, BoundReached]


@dataclass(frozen=True)
class Verdict:
    accepted: bool
    node: Optional[tuple] = None
    reason: str = ""

    def __bool__(self):
        return self.accepted


# ------------------------------------------------------------------ rules

def _expander(sig: Signature, system: str):
    if system not in SYSTEMS:
        raise IllFormedGoal(f"unknown system {system!r}; expected one of {sorted(SYSTEMS)}")
    mode = SYSTEMS[system]
    if mode is None:
        return lambda s: sellcalc.expansions(s, sig)
    lnscalc.check_mode(sig, mode)
    return lambda g: lnscalc.lns_expansions(g, sig, mode)


def _apply(state, inst, sig: Signature, system: str) -> list:
    mode = SYSTEMS[system]
    if mode is None:
        if not isinstance(state, Sequent) or not isinstance(inst, RuleInstance):
            raise sellcalc.InvalidInstance("sell certificates hold sequents and sequent rules")
        return sellcalc.apply(state, inst, sig)
    if not isinstance(state, LNS) or not isinstance(inst, LnsRuleInstance):
        raise sellcalc.InvalidInstance("LNS certificates hold LNS and LNS rules")
    if not lnscalc.end_active_check(state, inst):
        raise sellcalc.InvalidInstance("rule application is not end-active")
    return lnscalc.lns_apply(state, inst, sig, mode)


def normalize_goal(goal, system: str):
    """Coerce a sequent goal to a one-component LNS for the LNS systems."""
    if SYSTEMS.get(system) is not None and isinstance(goal, Sequent):
        return LNS.single(goal.antecedent, goal.succedent)
    return goal


def _check_goal(goal, sig: Signature, system: str):
    problems = validate_signature(sig)
    if problems:
        raise IllFormedGoal("invalid signature: " + "; ".join(map(str, problems)))
    if SYSTEMS[system] is None:
        if not isinstance(goal, Sequent):
            raise IllFormedGoal("the sell system proves sequents")
        comps = [(goal.antecedent, goal.succedent)]
        if goal.succedent is None:
            raise IllFormedGoal("sell sequents need a succedent")
        if not cx.is_concrete(goal.antecedent):
            raise IllFormedGoal("goal antecedent contains holes")
    else:
        if not isinstance(goal, LNS):
            raise IllFormedGoal("LNS systems prove linear nested sequents")
        comps = [(c.antecedent, c.succedent) for c in goal.components]
        for link in goal.links:
            if link.label not in sig.labels:
                raise IllFormedGoal(f"unknown label {link.label!r}")
    for ctx, succ in comps:
        fs = cx.formulas(ctx) + ([succ] if succ is not None else [])
        for f in fs:
            if contains(f, Par):
                raise IllFormedGoal("par belongs to the interpretation language only")
            unknown = labels_of(f) - sig.labels
            if unknown:
                raise IllFormedGoal(f"unknown label(s) {sorted(unknown)}")


# ----------------------------------------------------------------- search

class _OutOfNodes(Exception):
    pass


class _Search:
    def __init__(self, expand, budget: SearchBudget, cancel=None):
        self.expand = expand
        self.budget = budget
        self.cancel = cancel
        self.proved = {}    # state -> ProofNode
        self.dead = set()   # failed with no cut and no loop pruning: unprovable
        self.dead_at = {}   # state -> deepest budget that failed by cut alone
        self.branch = set()
        self.expansions = 0

    def solve(self, state, remaining: int):
        """Return ``(node or None, cut, looped)``."""
        hit = self.proved.get(state)
        if hit is not None and hit.height <= remaining:
            return hit, False, False
        if state in self.dead:
            return None, False, False
        if self.budget.loop_check and state in self.branch:
            return None, False, True
        if remaining <= 0 or self.dead_at.get(state, -1) >= remaining:
            return None, True, False
        self.expansions += 1
        if self.expansions > self.budget.max_nodes:
            raise _OutOfNodes("nodes")
        if self.cancel is not None and self.cancel.is_set():
            raise _OutOfNodes("cancelled")

        cut = looped = False
        tried = set()
        self.branch.add(state)
        try:
            for inst, premises in self.expand(state):
                if premises in tried:
                    continue
                tried.add(premises)
                kids = []
                for p in premises:
                    sub, c, lp = self.solve(p, remaining - 1)
                    if sub is None:
                        cut |= c
                        looped |= lp
                        break
                    kids.append(sub)
                else:
                    found = ProofNode(state, inst, tuple(kids))
                    self.proved[state] = found
                    return found, False, False
        finally:
            self.branch.discard(state)
        if not cut and not looped:
            self.dead.add(state)
        elif not looped:
            self.dead_at[state] = max(self.dead_at.get(state, -1), remaining)
        return None, cut, looped


def prove(goal, sig: Signature, system: str = "sell", budget: SearchBudget = SearchBudget(),
          cancel=None) -> SearchResult:
    """Search for a proof of ``goal`` under ``sig``.

    ``goal`` is a :class:`Sequent` (any system) or an :class:`LNS` (LNS
    systems).  ``cancel`` may be a :class:`threading.Event`; it is polled
    between expansions.
    """
    expand = _expander(sig, system)
    goal = normalize_goal(goal, system)
    _check_goal(goal, sig, system)
    engine = _Search(expand, budget, cancel)
    try:
        for depth in range(1, budget.max_depth + 1):
            found, cut, _ = engine.solve(goal, depth)
            if found is not None:
                cert = ProofCertificate(goal, found, system, sig.fingerprint())
                return Proved(cert, engine.expansions)
            if not cut:
                return ExhaustedUnprovable(engine.expansions)
    except _OutOfNodes as exc:
        return BoundReached(str(exc), engine.expansions)
    return BoundReached("depth", engine.expansions)


def check_certificate(cert: ProofCertificate, sig: Signature) -> Verdict:
    """Replay every step of ``cert`` without any search.

    Steps are replayed before the fingerprint is compared, so a certificate
    checked against the wrong signature is rejected at the first step that
    the signature does not license when there is one.
    """
    if cert.system not in SYSTEMS:
        return Verdict(False, None, f"unknown system {cert.system!r}")
    try:
        if SYSTEMS[cert.system] is not None:
            lnscalc.check_mode(sig, SYSTEMS[cert.system])
    except lnscalc.ModeMismatch as exc:
        return Verdict(False, None, str(exc))
    if cert.root.conclusion != cert.goal:
        return Verdict(False, (), "root conclusion is not the goal")

    for where, node in cert.root.walk():
        try:
            expected = _apply(node.conclusion, node.rule, sig, cert.system)
        except (sellcalc.InvalidInstance, cx.BadPath, KeyError, ValueError) as exc:
            return Verdict(False, where, f"{node.rule.rule}: {exc}")
        got = [p.conclusion for p in node.premises]
        if got != expected:
            return Verdict(False, where, f"{node.rule.rule}: recorded premises differ from the rule's")
    if cert.fingerprint != sig.fingerprint():
        return Verdict(False, None, "signature fingerprint does not match")
    return Verdict(True)

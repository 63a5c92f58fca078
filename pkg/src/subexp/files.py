"""Signature and certificate files.

Both are YAML documents with a ``format: 1`` header.  A signature file::

    format: 1
    labels: [i, j, k]
    order: [[i, j]]          # generating pairs; closed on load
    features: {k: [W]}
    mode: plain              # plain | functorial | associative

Certificates embed the goal and every conclusion as concrete syntax, so
checking needs nothing beyond the certificate and the signature.
"""
from __future__ import annotations

import yaml

from .core import MODES, Axiom, Signature, UnknownLabel, validate_signature
from .lnscalc import LnsRuleInstance
from .search import SYSTEMS, ProofCertificate, ProofNode
from .sellcalc import RuleInstance
from .syntax import ParseError, parse_lns, parse_sequent, show

FORMAT = 1


class FormatError(ValueError):
    """A file could not be turned into a value; ``diagnostics`` says why."""

    def __init__(self, diagnostics):
        self.diagnostics = list(diagnostics)
        super().__init__("; ".join(self.diagnostics))


def _load_yaml(text: str) -> dict:
    try:
        doc = yaml.safe_load(text)
    except yaml.YAMLError as exc:
        raise FormatError([f"not valid YAML: {exc}"]) from None
    if not isinstance(doc, dict):
        raise FormatError(["expected a mapping at the top level"])
    if doc.get("format") != FORMAT:
        raise FormatError([f"expected 'format: {FORMAT}', got {doc.get('format')!r}"])
    return doc


# ------------------------------------------------------------- signatures

def signature_from_text(text: str, validate: bool = True) -> Signature:
    doc = _load_yaml(text)
    problems = []
    labels = doc.get("labels")
    if not isinstance(labels, list) or not all(isinstance(x, (str, int)) for x in labels):
        raise FormatError(["'labels' must be a list of identifiers"])
    labels = [str(x) for x in labels]
    order = doc.get("order") or []
    pairs = []
    for k, pair in enumerate(order):
        if not (isinstance(pair, list) and len(pair) == 2):
            problems.append(f"order[{k}] must be a 2-element list")
        else:
            pairs.append((str(pair[0]), str(pair[1])))
    features = {}
    for lab, axs in (doc.get("features") or {}).items():
        lab = str(lab)
        feats = set()
        for ax in axs or []:
            try:
                feats.add(Axiom.parse(ax))
            except ValueError:
                problems.append(f"features[{lab}]: unknown axiom {ax!r}")
        features[lab] = feats
    mode = doc.get("mode", "plain")
    if mode not in MODES:
        problems.append(f"mode must be one of {', '.join(MODES)}")
    if problems:
        raise FormatError(problems)
    try:
        sig = Signature(frozenset(labels), frozenset(pairs), features, mode)
    except UnknownLabel as exc:
        raise FormatError([str(exc)]) from None
    if validate:
        violations = validate_signature(sig)
        if violations:
            raise FormatError([str(v) for v in violations])
    return sig


def load_signature(path, validate: bool = True) -> Signature:
    with open(path, encoding="utf-8") as fh:
        return signature_from_text(fh.read(), validate)


def signature_to_text(sig: Signature) -> str:
    doc = sig.canonical()
    doc["order"] = [p for p in doc["order"] if p[0] != p[1]]
    return yaml.safe_dump({"format": FORMAT, **doc}, sort_keys=False, allow_unicode=True)


# ----------------------------------------------------------- certificates

def _node_to_dict(node: ProofNode) -> dict:
    r = node.rule
    d = {"conclusion": show(node.conclusion), "rule": r.rule, "position": r.position,
         "labels": list(r.labels)}
    if r.split is not None:
        d["split"] = r.split
    if isinstance(r, LnsRuleInstance):
        d["component"] = r.component
        if r.hole is not None:
            d["hole"] = r.hole
    d["premises"] = [_node_to_dict(p) for p in node.premises]
    return d


def certificate_to_text(cert: ProofCertificate) -> str:
    doc = {
        "format": FORMAT,
        "system": cert.system,
        "signature": cert.fingerprint,
        "goal": show(cert.goal),
        "proof": _node_to_dict(cert.root),
    }
    return yaml.safe_dump(doc, sort_keys=False, allow_unicode=True, width=1000)


def certificate_from_text(text: str) -> ProofCertificate:
    doc = _load_yaml(text)
    system = doc.get("system")
    if system not in SYSTEMS:
        raise FormatError([f"unknown system {system!r}"])
    parse = parse_sequent if SYSTEMS[system] is None else parse_lns

    def node(d, where):
        try:
            conclusion = parse(d["conclusion"])
            labels = tuple(str(x) for x in d.get("labels") or ())
            if SYSTEMS[system] is None:
                rule = RuleInstance(str(d["rule"]), str(d.get("position") or ""), labels, d.get("split"))
            else:
                rule = LnsRuleInstance(str(d["rule"]), int(d["component"]), str(d.get("position") or ""),
                                       d.get("hole"), labels, d.get("split"))
            premises = tuple(node(p, where + (k,)) for k, p in enumerate(d.get("premises") or ()))
        except ParseError as exc:
            raise FormatError([f"node {list(where)}: {exc}"]) from None
        except (KeyError, TypeError, ValueError) as exc:
            raise FormatError([f"node {list(where)}: malformed ({exc})"]) from None
        return ProofNode(conclusion, rule, premises)

    try:
        goal = parse(doc["goal"])
    except (KeyError, ParseError) as exc:
        raise FormatError([f"goal: {exc}"]) from None
    return ProofCertificate(goal, node(doc.get("proof") or {}, ()), system, str(doc.get("signature")))


def load_certificate(path) -> ProofCertificate:
    with open(path, encoding="utf-8") as fh:
        return certificate_from_text(fh.read())

"""Formulas, axioms and subexponential signatures.

A signature is a finite label set with a pre-order and a feature map that
assigns each label a set of axioms.  Orders are given by generating pairs
and closed here; the closed relation is what every other module sees.
"""
from __future__ import annotations

import dataclasses
import enum
import hashlib
import json
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Union


class UnknownLabel(KeyError):
    """A label was used that the signature does not declare."""

    def __str__(self):
        return f"unknown label {self.args[0]!r}"


def hash_once(cls):
    """Give a frozen dataclass a hash that is computed once and cached.

    Search keeps whole sequents in sets; recomputing deep hashes dominates
    otherwise.
    """
    names = tuple(f.name for f in dataclasses.fields(cls))

    def __hash__(self):
        h = self.__dict__.get("_hash")
        if h is None:
            h = hash((cls.__name__,) + tuple(getattr(self, n) for n in names))
            object.__setattr__(self, "_hash", h)
        return h

    cls.__hash__ = __hash__
    return cls


# ---------------------------------------------------------------- formulas

@hash_once
@dataclass(frozen=True)
class Atom:
    name: str


@hash_once
@dataclass(frozen=True)
class One:
    pass


@hash_once
@dataclass(frozen=True)
class Zero:
    pass


@hash_once
@dataclass(frozen=True)
class Tensor:
    left: "Formula"
    right: "Formula"


@hash_once
@dataclass(frozen=True)
class With:
    left: "Formula"
    right: "Formula"


@hash_once
@dataclass(frozen=True)
class Plus:
    left: "Formula"
    right: "Formula"


@hash_once
@dataclass(frozen=True)
class Under:
    """``left \\ right``: consumes ``left`` from the left, yields ``right``."""
    left: "Formula"
    right: "Formula"


@hash_once
@dataclass(frozen=True)
class Over:
    """``left / right``: consumes ``right`` from the right, yields ``left``."""
    left: "Formula"
    right: "Formula"


@hash_once
@dataclass(frozen=True)
class Bang:
    label: str
    body: "Formula"


@hash_once
@dataclass(frozen=True)
class Quest:
    label: str
    body: "Formula"


@hash_once
@dataclass(frozen=True)
class Par:
    # Only produced by the LNS interpretation; provers reject it.
    left: "Formula"
    right: "Formula"


ONE = One()
ZERO = Zero()

Formula = Union[Atom, One, Zero, Tensor, With, Plus, Under, Over, Bang, Quest, Par]
BINARY = (Tensor, With, Plus, Under, Over, Par)
MODAL = (Bang, Quest)


def size(f: Formula) -> int:
    if isinstance(f, BINARY):
        return 1 + size(f.left) + size(f.right)
    if isinstance(f, MODAL):
        return 1 + size(f.body)
    return 1


def labels_of(f: Formula) -> set:
    if isinstance(f, BINARY):
        return labels_of(f.left) | labels_of(f.right)
    if isinstance(f, MODAL):
        return {f.label} | labels_of(f.body)
    return set()


def contains(f: Formula, kind) -> bool:
    """True if some subformula of ``f`` is an instance of ``kind``."""
    if isinstance(f, kind):
        return True
    if isinstance(f, BINARY):
        return contains(f.left, kind) or contains(f.right, kind)
    if isinstance(f, MODAL):
        return contains(f.body, kind)
    return False


# -------------------------------------------------------------- signatures

class Axiom(enum.Enum):
    C = "C"
    W = "W"
    A1 = "A1"
    A2 = "A2"
    E = "E"
    K = "K"
    FOUR = "4"
    T = "T"
    D = "D"

    def __str__(self):
        return self.value

    @classmethod
    def parse(cls, text: str) -> "Axiom":
        return cls(str(text))


STRUCTURAL = frozenset({Axiom.C, Axiom.W, Axiom.A1, Axiom.A2, Axiom.E})
MODES = ("plain", "functorial", "associative")


def closure(labels: Iterable[str], pairs: Iterable[tuple]) -> frozenset:
    """Reflexive-transitive closure of ``pairs`` over ``labels``."""
    labels = set(labels)
    rel = {(a, a) for a in labels}
    for a, b in pairs:
        for x in (a, b):
            if x not in labels:
                raise UnknownLabel(x)
        rel.add((a, b))
    # Warshall; label sets are small
    for k in labels:
        ups = {b for (a, b) in rel if a == k}
        downs = {a for (a, b) in rel if b == k}
        rel.update((a, b) for a in downs for b in ups)
    return frozenset(rel)


@dataclass(frozen=True, eq=False)
class Signature:
    """A triple (labels, pre-order, features) plus a mode flag.

    ``order`` may be given as generating pairs; it is closed on construction.
    Labels missing from ``features`` get the empty feature set.
    """
    labels: frozenset
    order: frozenset = frozenset()
    features: Mapping[str, frozenset] = field(default_factory=dict)
    mode: str = "plain"

    def __post_init__(self):
        labels = frozenset(self.labels)
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "order", closure(labels, self.order))
        feats = {}
        for lab, axs in dict(self.features).items():
            if lab not in labels:
                raise UnknownLabel(lab)
            feats[lab] = frozenset(a if isinstance(a, Axiom) else Axiom.parse(a) for a in axs)
        for lab in labels:
            feats.setdefault(lab, frozenset())
        object.__setattr__(self, "features", feats)
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}, got {self.mode!r}")

    def _check(self, label):
        if label not in self.labels:
            raise UnknownLabel(label)

    def leq(self, a: str, b: str) -> bool:
        self._check(a)
        self._check(b)
        return (a, b) in self.order

    def has(self, label: str, axiom: Axiom) -> bool:
        self._check(label)
        return axiom in self.features[label]

    def with_features(self, **changes) -> "Signature":
        feats = dict(self.features)
        feats.update(changes)
        return Signature(self.labels, self.order, feats, self.mode)

    def canonical(self) -> dict:
        return {
            "labels": sorted(self.labels),
            "order": sorted([a, b] for a, b in self.order),
            "features": {k: sorted(str(a) for a in v) for k, v in sorted(self.features.items())},
            "mode": self.mode,
        }

    def fingerprint(self) -> str:
        blob = json.dumps(self.canonical(), sort_keys=True, separators=(",", ":"))
        return "sha256:" + hashlib.sha256(blob.encode()).hexdigest()

    def __eq__(self, other):
        return isinstance(other, Signature) and self.canonical() == other.canonical()

    def __hash__(self):
        return hash(self.fingerprint())


def upset(sig: Signature, i: str) -> frozenset:
    """All labels ``j`` with ``i ⪯ j``."""
    sig._check(i)
    return frozenset(j for (a, j) in sig.order if a == i)


def upset4(sig: Signature, i: str) -> frozenset:
    """Labels above ``i`` that carry axiom 4."""
    return frozenset(j for j in upset(sig, i) if Axiom.FOUR in sig.features[j])


@dataclass(frozen=True)
class Violation:
    """One reason a signature is not acceptable.

    ``kind`` is ``"upward"`` (``lower ⪯ upper`` but ``axiom`` is in the
    features of ``lower`` only) or ``"mode"`` (``axiom`` is required on
    ``lower`` by the signature mode; ``upper`` is None).
    """
    kind: str
    lower: str
    upper: object
    axiom: Axiom

    def __str__(self):
        if self.kind == "upward":
            return f"{self.lower} ⪯ {self.upper} but {self.axiom} ∈ f({self.lower}) \\ f({self.upper})"
        return f"{self.axiom} required in f({self.lower}) by mode"


def validate_signature(sig: Signature) -> list:
    out = []
    for a, b in sorted(sig.order):
        for ax in sorted(sig.features[a] - sig.features[b], key=lambda x: x.value):
            out.append(Violation("upward", a, b, ax))
    required = {
        "plain": (),
        "functorial": (Axiom.K,),
        "associative": (Axiom.K, Axiom.A1, Axiom.A2),
    }[sig.mode]
    for lab in sorted(sig.labels):
        for ax in required:
            if ax not in sig.features[lab]:
                out.append(Violation("mode", lab, None, ax))
    return out


def is_functorial(sig: Signature) -> bool:
    return all(Axiom.K in fs for fs in sig.features.values())


def is_associative(sig: Signature) -> bool:
    return all({Axiom.K, Axiom.A1, Axiom.A2} <= fs for fs in sig.features.values())

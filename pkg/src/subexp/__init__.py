"""Proof search and certificate checking for linear logic with subexponentials.

Covers non-commutative, non-associative contexts (binary trees) and the
linear nested sequent systems with K, T, D and 4 chosen per label.
"""
from .core import (ONE, ZERO, Atom, Axiom, Bang, One, Over, Par, Plus, Quest,
                   Signature, Tensor, Under, UnknownLabel, With, Zero, closure,
                   upset, upset4, validate_signature)
from .context import EMPTY, Empty, Hole, Leaf, Node
from .lnscalc import LNS, Component, Link, interpret
from .oracle import oracle_provable
from .search import (BoundReached, ExhaustedUnprovable, ProofCertificate,
                     Proved, SearchBudget, check_certificate, prove)
from .sellcalc import Sequent
from .syntax import (parse_context, parse_formula, parse_lns, parse_sequent,
                     show)

__version__ = "0.1.0"

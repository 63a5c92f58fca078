"""How hypotheses travel into a nested component before it is released.

After promoting to ![i] the context's shape is copied into the new
component as a tree of holes.  Each banged hypothesis then moves in (k),
moves in still banged (4) or is dropped (w).  The antecedents that can be
released show which configurations the nested component may start from.
"""
from subexp import Signature
from subexp.lnscalc import interpret, reachable_releases
from subexp.syntax import parse_context, parse_lns, show

sig = Signature({"i", "j", "k"}, {("i", "j")},
                {"i": {"K"}, "j": {"K", "4"}, "k": {"K", "W"}}, "functorial")
ctx = parse_context("(![i]A, (![j]B, ![k]C))")

for released in sorted(reachable_releases(ctx, "i", sig), key=show):
    print("released:", show(released))

# Without 4 on j, ![j]B can only arrive stripped.
weaker = sig.with_features(j={"K"})
print("without 4 on j:", sorted(show(c) for c in reachable_releases(ctx, "i", weaker)))

# A nested sequent reads as one formula once par is allowed.
g = parse_lns("![i]A |- B //[i] (A, C) |- D")
print("\n", show(g))
print("reads as:", show(interpret(g)), " ('|' is par)")

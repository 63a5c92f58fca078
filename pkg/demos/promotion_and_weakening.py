"""Promotion keeps only what the target label may see.

Three banged hypotheses sit in a non-associative context.  Label i sits
below j, and k is unrelated to both.  Promoting to ![i] must therefore get
rid of ![k]C, which is only possible when k allows weakening.
"""
from subexp import Signature, SearchBudget, check_certificate, prove
from subexp.context import restrict_upset
from subexp.latex import render_latex
from subexp.syntax import parse_sequent, show

sig = Signature({"i", "j", "k"}, {("i", "j")}, {"k": {"W"}})
goal = parse_sequent("(![i]A, (![j]B, ![k]C)) |- ![i](A * B)")

# What promotion keeps from the antecedent.
kept = restrict_upset(goal.antecedent, "i", sig)
print("kept by promotion:", show(kept))

res = prove(goal, sig, "sell", SearchBudget(10))
print("with W on k:", res.status, f"({res.expansions} expansions)")
for where, node in res.certificate.root.walk():
    print("   " + "  " * len(where) + f"{node.rule.rule:<5} {show(node.conclusion)}")

# Drop weakening from k: nothing can remove ![k]C, so promotion is blocked.
strict = sig.with_features(k=set())
print("restriction without W:", restrict_upset(goal.antecedent, "i", strict))
print("without W on k:", prove(goal, strict, "sell", SearchBudget(10)).status)

# The certificate only replays under the signature it was found with.
print("replay, same signature:", bool(check_certificate(res.certificate, sig)))
verdict = check_certificate(res.certificate, strict)
print("replay, other signature:", verdict.accepted, "-", verdict.reason)

tex = render_latex(res.certificate)
print(f"LaTeX proof tree: {len(tex.splitlines())} lines")

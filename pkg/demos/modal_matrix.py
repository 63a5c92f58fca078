"""Which modal axioms a label validates, read off by proof search.

In the nested systems nothing about a label is assumed beyond K.  T, 4 and D
hold exactly when the feature map grants them, and contraction only makes
refutation harder (the search is then cut by its budget instead of running
dry).
"""
from subexp import Signature, SearchBudget
from subexp.axioms import TEMPLATES, axiom_matrix
from subexp.core import Axiom

budget = SearchBudget(12, max_nodes=5000)
shown = (Axiom.K, Axiom.T, Axiom.FOUR, Axiom.D)

for ax in shown:
    print(f"{str(ax):>2}: {TEMPLATES[ax].format(i='i')}")
print()

for feats in ({"K"}, {"K", "T"}, {"K", "4"}, {"K", "D"}, {"K", "C"}):
    sig = Signature({"i"}, (), {"i": feats}, "functorial")
    row = axiom_matrix(sig, "lns-nonassoc", budget)["i"]
    cells = "  ".join(f"{str(ax)}:{row[ax].status:<10}" for ax in shown)
    print(f"f(i) = {{{', '.join(sorted(feats))}}}".ljust(18), cells)

# In the plain sequent calculus dereliction is built in, so T always holds.
plain = Signature({"i"}, (), {})
row = axiom_matrix(plain, "sell", SearchBudget(8))["i"]
print("\nsequent calculus, f(i) = {}:", "T:" + row[Axiom.T].status, "4:" + row[Axiom.FOUR].status)

"""Swapping the clique score for paths or cycles.

Any way of scoring a colour class gives its own threshold question:
how many vertices force the top-j class scores to sum past a target?
Cliques recover the family-sum search; paths and cycles behave quite
differently (a cycle score can be zero on arbitrarily large forests).
"""

from ramseykit import EdgeColoring, ScoreKind, score_sum, search_threshold_score

c = EdgeColoring.from_text("4:babbaa", 2)
for kind in ScoreKind:
    value, profile = score_sum(c, kind, j=2)
    print(f"{kind.value:>6} scores of 4:babbaa  per colour {profile.per_color}  sum {value}")

print("""
That colouring splits K4 into two spanning forests, so neither colour
has a cycle.  One more vertex makes that impossible:
""")

r = search_threshold_score(ScoreKind.CYCLE, 2, 2, 2)
print(f"cycle-sum target 2: threshold n = {r.value}, "
      f"last counterexample {r.lower.witness_coloring}")

print("\npath-sum thresholds (m=2, j=2):")
for target in range(1, 6):
    r = search_threshold_score(ScoreKind.PATH, 2, 2, target)
    print(f"  target {target}: n = {r.value}")

print("\nclique scores reduce to the family-sum search:")
a = search_threshold_score(ScoreKind.CLIQUE, 2, 2, 4).value
b = search_threshold_score(ScoreKind.CLIQUE, 2, 1, 3).value
print(f"  j=m=2, target 4: n = {a} (same as the rprime_m search)")
print(f"  j=1, target 3:   n = {b} (the triangle threshold again)")

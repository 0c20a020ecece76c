"""Closed-form upper bounds next to exhaustively computed thresholds.

The greedy halving argument gives explicit formulas.  They are far from
tight, but they are one-liners, and the computed values never exceed
them.  Everything here is plain integer arithmetic.
"""

from ramseykit import (
    bound_formulas,
    multicolor_ramsey_bound,
    pair_sum_bound,
    search_threshold,
    two_color_ramsey_bound,
)

print("pair-sum targets: computed threshold vs 2^(t-2) bound")
for t in range(2, 6):
    computed = search_threshold("rprime", t).value
    print(f"  t={t}: computed {computed:>2}   bound {pair_sum_bound(t):>3}")

print("\nsingle-clique bound 2^(2n-3) at small n:")
for n in range(2, 6):
    print(f"  n={n}: bound {two_color_ramsey_bound(n)}")

print("\nthe m-colour formula collapses to the 2-colour one at m=2:")
for n in range(2, 7):
    assert multicolor_ramsey_bound(n, 2) == two_color_ramsey_bound(n)
print("  verified for n = 2..6")

print("\none bundle with everything, n=4, m=3:")
b = bound_formulas(4, m=3)
print(f"  clique-or-independent: {b.clique_or_independent}")
print(f"  multicolour:           {b.multicolor}")
print(f"  pair-sum:              {b.pair_sum}")
print(f"  family-sum:            {b.family_sum}")

"""Certified threshold search.

search_threshold("rprime", t) finds the least n such that EVERY graph on
n vertices has pair score >= t.  The result carries two certificates:
a witness graph just below the threshold, and an exhaustive-scan record
at the threshold itself.  revalidate() recomputes both from scratch.
"""

from ramseykit import revalidate, search_threshold

for target in range(2, 6):
    r = search_threshold("rprime", target)
    lower = r.lower.witness_graph6 if r.lower else "(none: n=1 already fails)"
    print(f"target {target}: threshold n = {r.value}   "
          f"witness below: {lower}   scanned at top: {r.upper.scanned_count}")

print()
r = search_threshold("rprime", 5)
print("certificates for target 5 revalidate:",
      revalidate(r.lower), "and", revalidate(r.upper, deep=True))

print("""
The same machinery answers the classical question "how many vertices
force a monochromatic triangle" - phrase it as a single-clique target:
""")
r = search_threshold("ramsey", 3)
print(f"triangle threshold = {r.value}, counterexample below = "
      f"{r.lower.witness_graph6} (score {r.lower.value})")

print("""
Multicolour variant, m = 3: the least n where every 3-colouring of the
edges of K_n has monochromatic cliques summing past the target.
""")
for k in range(3):
    r = search_threshold("rprime_m", 3 + k, m=3)
    print(f"  target {3 + k}: n = {r.value}")

"""A first look at pair scores.

For a graph G on n vertices, take the largest clique and the largest
independent set and add their sizes.  That sum is surprisingly rigid:
it can only stay small while n is small, which is the engine behind
every threshold this package computes.
"""

from ramseykit import Graph, clique_indep_pair, parse_graph6, write_graph6


def show(name, g):
    pair = clique_indep_pair(g)
    print(f"{name:>10}  n={g.n:<3} graph6={write_graph6(g):<12} "
          f"clique={sorted_bits(pair.a)} independent={sorted_bits(pair.b)} "
          f"score={pair.value}")


def sorted_bits(mask):
    return [i for i in range(64) if mask >> i & 1]


print("pair score = size of a largest clique + size of a largest independent set\n")

show("K5", Graph.complete(5))
show("empty", Graph.empty(5))
show("C5", Graph.cycle(5))

# The Petersen graph: 10 vertices, triangle-free, independence number 4.
petersen = Graph.from_edges(10, [
    (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),      # outer 5-cycle
    (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),      # inner 5-cycle, twisted
    (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),      # spokes
])
show("Petersen", petersen)

print("""
C5 is the tight example: clique 2, independence 2, score 4.  No other
graph does as well relative to its size, which is why it reappears as
the counterexample certificate throughout the search demos.
""")

g = parse_graph6("DLo")
print("the minimum-code 5-vertex graph with score 4 is", write_graph6(g),
      "with degrees", [g.degree(v) for v in range(g.n)], "- the 5-cycle again")

"""Category, complexity, and cup-length of small graphs.

Every connected graph G has cat(G) in {0, 1} and TC(G) in {0, 1, 2},
classified by the number of independent cycles (the first Betti number).
The zero-divisor cup-length, computed by exact rational linear algebra,
meets the complexity value on every graph.
"""

import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), os.pardir, "src"))

from wildcat import (build_graph, betti1, cat_graph, tc_graph,
                     zero_divisor_cuplength, spanning_forest, deforest)

zoo = {
    "point": build_graph(["a"], []),
    "path": build_graph(["a", "b", "c"], [("e0", "a", "b"), ("e1", "b", "c")]),
    "triangle": build_graph(["a", "b", "c"],
                            [("e0", "a", "b"), ("e1", "b", "c"), ("e2", "c", "a")]),
    "loop": build_graph(["a"], [("l", "a", "a")]),
    "theta": build_graph(["a", "b"],
                         [("e0", "a", "b"), ("e1", "a", "b"), ("e2", "a", "b")]),
    "figure eight": build_graph(["a"], [("l0", "a", "a"), ("l1", "a", "a")]),
    "K4": build_graph(["a", "b", "c", "d"],
                      [("e0", "a", "b"), ("e1", "a", "c"), ("e2", "a", "d"),
                       ("e3", "b", "c"), ("e4", "b", "d"), ("e5", "c", "d")]),
}

print(f"{'graph':>14}  betti1  cat  tc  cuplength")
for name, g in zoo.items():
    print(f"{name:>14}  {betti1(g):>6}  {cat_graph(g):>3}  {tc_graph(g):>2}"
          f"  {zero_divisor_cuplength(g):>9}")

# deforestation: a hairy circle strong-deformation-retracts onto its core
hairy = build_graph(
    ["a", "b", "c", "tip1", "tip2"],
    [("c0", "a", "b"), ("c1", "b", "c"), ("c2", "c", "a"),
     ("h0", "a", "tip1"), ("h1", "tip1", "tip2")])
core, homotopy = deforest(hairy)
print(f"\nhairy circle core: {sorted(core.edge_by_id)} "
      f"({len(homotopy.collapses)} collapses, betti1 preserved: "
      f"{betti1(core) == betti1(hairy)})")
print(f"spanning forest of K4: {spanning_forest(zoo['K4'])}")

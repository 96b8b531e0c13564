"""Wildness rank and the exact category/complexity formulas.

One-dimensional spaces with wild points (think shrinking earrings) escape
the graph classification: iterating the wild-set operator gives a rank n,
and then cat is n-1 or n and TC is 2n-2, 2n-1, or 2n depending on how many
simple closed curves survive at the deepest level.  The values grow without
bound as expressions nest deeper.
"""

import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), os.pardir, "src"))

from wildcat import (build_graph, Vertex, Node, SeqFamily, Subcomplex,
                     SelfWild, ZeroDimWild, graph_expr, wild_set, wrk, cat,
                     tc, profile, cat_certificate, tc_certificate, truncate,
                     betti1, tc_graph)

point = build_graph(["v"], [])
circle = build_graph(["c0"], [("l", "c0", "c0")])
triangle = build_graph(["a", "b", "c"],
                       [("e0", "a", "b"), ("e1", "b", "c"), ("e2", "c", "a")])

earring = Node(point, (), (SeqFamily(Subcomplex.of(point, ["v"]),
                                     graph_expr(circle), Vertex("c0")),))
wild_circle = Node(triangle, (), (SeqFamily(Subcomplex.whole(triangle),
                                            graph_expr(circle), Vertex("c0")),))
nested = Node(point, (), (SeqFamily(Subcomplex.of(point, ["v"]),
                                    wild_circle, Vertex("a")),))

print(f"{'space':>22}  wrk  cat  tc")
for name, expr in [("earring", earring), ("wild circle", wild_circle),
                   ("nested rank-3", nested), ("self-wild carpet", SelfWild()),
                   ("zero-dim wild", ZeroDimWild())]:
    print(f"{name:>22}  {wrk(expr)!s:>3}  {cat(expr)!s:>3}  {tc(expr)!s:>2}")

# the wild set of the earring is its basepoint; of the wild circle, the circle
print(f"\nw(earring) pieces: {[p.base.vertices for p in wild_set(earring)]}")
print(f"w(wild circle) betti1: {betti1(wild_set(wild_circle)[0].base)}")
print(f"tower of nested expression: "
      f"{[(lv.count, lv.b1) for lv in profile(nested).tower]}")

# certificates mirror the filtration constructions behind the formulas
for name, expr in [("earring", earring), ("wild circle", wild_circle)]:
    c = tc_certificate(expr)
    print(f"\ntc certificate for the {name} (length {c.length}):")
    for level in c.levels:
        print(f"  [{level.reason}] {level.description}")

# finite truncations never exceed the symbolic complexity
print(f"\ntruncations of the earring (tc = {tc(earring)}):")
for depth in (1, 2, 4, 8):
    g = truncate(earring, depth)
    print(f"  depth {depth}: betti1 {betti1(g)}, tc_graph {tc_graph(g)}")

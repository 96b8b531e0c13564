"""Finite multigraphs with an exact unit-length geometric realization.

Every edge is realized as a copy of the unit interval, so points on edges,
arclengths, and path parameters are rational numbers and every geometric
predicate in this module is decided exactly.  Loops and parallel edges are
allowed everywhere; a loop counts as a cycle.  All values are immutable
after construction and all operations are pure functions.
"""

import re
from collections import deque
from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "GraphError",
    "Edge",
    "Vertex",
    "EdgeInterior",
    "GraphPoint",
    "MultiGraph",
    "build_graph",
    "subgraph",
    "betti1",
    "spanning_forest",
    "Collapse",
    "CollapseHomotopy",
    "deforest",
    "PathStep",
    "PLPath",
    "constant_path",
    "concat_paths",
    "TreeRouter",
    "tree_path",
    "vertex_distances",
    "point_dist",
    "cat_graph",
    "tc_graph",
]

_IDENT = re.compile(r"[A-Za-z0-9_]+\Z")


class GraphError(ValueError):
    """Malformed graph data, or an operation applied to an unsuitable graph."""


@dataclass(frozen=True)
class Edge:
    id: str
    v0: str
    v1: str

    @property
    def is_loop(self) -> bool:
        return self.v0 == self.v1

    def other(self, v: str) -> str:
        if v == self.v0:
            return self.v1
        if v == self.v1:
            return self.v0
        raise GraphError(f"vertex {v!r} is not an endpoint of edge {self.id!r}")


@dataclass(frozen=True)
class Vertex:
    v: str


@dataclass(frozen=True)
class EdgeInterior:
    edge: str
    t: Fraction

    def __post_init__(self):
        t = self.t if isinstance(self.t, Fraction) else Fraction(self.t)
        object.__setattr__(self, "t", t)
        if not 0 < t < 1:
            raise GraphError(f"interior parameter must lie strictly in (0,1), got {t}")


GraphPoint = Vertex | EdgeInterior


class MultiGraph:
    """Validated immutable multigraph with precomputed component data.

    ``vertices`` and ``edges`` keep declaration order; all deterministic
    tie-breaking elsewhere is by smallest identifier.  The all-pairs vertex
    distance table is computed on first use and cached (write-once,
    deterministic).
    """

    __slots__ = ("vertices", "edges", "edge_by_id", "incident", "degree",
                 "component_of", "n_components", "_dist")

    def __init__(self, vertices, edges):
        vs = tuple(vertices)
        es = tuple(e if isinstance(e, Edge) else Edge(*e) for e in edges)
        vset = set()
        for v in vs:
            if not isinstance(v, str) or not _IDENT.match(v):
                raise GraphError(f"invalid vertex identifier {v!r}")
            if v in vset:
                raise GraphError(f"duplicate identifier {v!r}")
            vset.add(v)
        eset = set()
        for e in es:
            if not _IDENT.match(e.id):
                raise GraphError(f"invalid edge identifier {e.id!r}")
            if e.id in eset:
                raise GraphError(f"duplicate identifier {e.id!r}")
            eset.add(e.id)
            for v in (e.v0, e.v1):
                if v not in vset:
                    raise GraphError(f"dangling endpoint {v!r} on edge {e.id!r}")
        self.vertices = vs
        self.edges = es
        self.edge_by_id = {e.id: e for e in es}
        incident = {v: [] for v in vs}
        degree = {v: 0 for v in vs}
        for e in es:
            incident[e.v0].append(e.id)
            if e.is_loop:
                degree[e.v0] += 2
            else:
                incident[e.v1].append(e.id)
                degree[e.v0] += 1
                degree[e.v1] += 1
        self.incident = {v: tuple(sorted(ids)) for v, ids in incident.items()}
        self.degree = degree
        comp = {}
        n = 0
        for root in sorted(vs):
            if root in comp:
                continue
            queue = deque([root])
            comp[root] = n
            while queue:
                u = queue.popleft()
                for eid in self.incident[u]:
                    w = self.edge_by_id[eid].other(u)
                    if w not in comp:
                        comp[w] = n
                        queue.append(w)
            n += 1
        self.component_of = comp
        self.n_components = n
        self._dist = None

    def __eq__(self, other):
        if not isinstance(other, MultiGraph):
            return NotImplemented
        return self.vertices == other.vertices and self.edges == other.edges

    def __hash__(self):
        return hash((self.vertices, self.edges))

    def __repr__(self):
        return f"MultiGraph({len(self.vertices)} vertices, {len(self.edges)} edges)"

    def point(self, edge_id: str, t) -> GraphPoint:
        """Canonical point at parameter t of an edge; t=0,1 normalize to vertices."""
        e = self.edge_by_id.get(edge_id)
        if e is None:
            raise GraphError(f"unknown edge {edge_id!r}")
        if not isinstance(t, Fraction):
            t = Fraction(t)
        if t == 0:
            return Vertex(e.v0)
        if t == 1:
            return Vertex(e.v1)
        return EdgeInterior(edge_id, t)

    def contains_point(self, p: GraphPoint) -> bool:
        if isinstance(p, Vertex):
            return p.v in self.degree
        return p.edge in self.edge_by_id


def build_graph(vertices, edges) -> MultiGraph:
    """Validate vertex/edge records and build a multigraph.

    ``edges`` may hold ``Edge`` values or ``(id, v0, v1)`` triples.  Raises
    :class:`GraphError` naming the offending identifier on duplicates or
    dangling endpoints.
    """
    return MultiGraph(vertices, edges)


def subgraph(g: MultiGraph, edge_ids, vertices=None) -> MultiGraph:
    """Subgraph on the given edges (plus their endpoints) and extra vertices.

    When ``vertices`` is None every vertex of g is retained, so the result can
    have isolated vertices.  Declaration order of g is preserved.
    """
    eset = set(edge_ids)
    for eid in eset:
        if eid not in g.edge_by_id:
            raise GraphError(f"unknown edge {eid!r}")
    if vertices is None:
        keep = set(g.vertices)
    else:
        keep = set(vertices)
        for v in keep:
            if v not in g.degree:
                raise GraphError(f"unknown vertex {v!r}")
        for eid in eset:
            e = g.edge_by_id[eid]
            keep.add(e.v0)
            keep.add(e.v1)
    vs = tuple(v for v in g.vertices if v in keep)
    es = tuple(e for e in g.edges if e.id in eset)
    return MultiGraph(vs, es)


def betti1(g: MultiGraph) -> int:
    """First Betti number |E| - |V| + #components (the number of independent cycles)."""
    return len(g.edges) - len(g.vertices) + g.n_components


def _require_connected(g: MultiGraph, op: str):
    if g.n_components != 1:
        raise GraphError(f"{op} requires a connected graph "
                         f"({g.n_components} components)")


def spanning_forest(g: MultiGraph) -> tuple:
    """Maximal cycle-free edge subset, one tree per component.

    Deterministic: edges are considered in increasing id order; loops never
    enter the forest.
    """
    parent = {v: v for v in g.vertices}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    chosen = []
    for e in sorted(g.edges, key=lambda e: e.id):
        if e.is_loop:
            continue
        a, b = find(e.v0), find(e.v1)
        if a != b:
            parent[a] = b
            chosen.append(e.id)
    return tuple(sorted(chosen))


@dataclass(frozen=True)
class Collapse:
    edge: str
    kept: str


class CollapseHomotopy:
    """Strong deformation retraction of a graph onto a core subgraph.

    Recorded as an ordered sequence of elementary free-edge collapses, each
    removing an edge with a degree-1 endpoint and retaining the other
    endpoint.  ``retract`` gives the induced retraction r and ``slide`` the
    path D(x, .) from a point to r(x).
    """

    __slots__ = ("graph", "core", "collapses", "_final", "_kept_of")

    def __init__(self, graph: MultiGraph, core: MultiGraph, collapses):
        collapses = tuple(collapses)
        final = {v: v for v in core.vertices}
        for c in reversed(collapses):
            e = graph.edge_by_id.get(c.edge)
            if e is None:
                raise GraphError(f"collapse references unknown edge {c.edge!r}")
            if e.is_loop:
                raise GraphError(f"loop edge {c.edge!r} cannot be collapsed")
            if c.kept not in (e.v0, e.v1):
                raise GraphError(f"{c.kept!r} is not an endpoint of {c.edge!r}")
            if c.kept not in final:
                raise GraphError(f"collapse order broken at edge {c.edge!r}")
            final[e.other(c.kept)] = final[c.kept]
        self.graph = graph
        self.core = core
        self.collapses = collapses
        self._final = final
        self._kept_of = {c.edge: c.kept for c in collapses}

    def retract(self, p: GraphPoint) -> GraphPoint:
        if isinstance(p, Vertex):
            return Vertex(self._final[p.v])
        if p.edge in self.core.edge_by_id:
            return p
        kept = self._kept_of.get(p.edge)
        if kept is None:
            raise GraphError(f"point on edge {p.edge!r} outside graph and core")
        return Vertex(self._final[kept])

    def slide(self, p: GraphPoint) -> "PLPath":
        """Path from p to retract(p), following the collapses in order."""
        steps = []
        cur = p
        for c in self.collapses:
            e = self.graph.edge_by_id[c.edge]
            free = e.other(c.kept)
            kp = Fraction(0) if c.kept == e.v0 else Fraction(1)
            if isinstance(cur, EdgeInterior) and cur.edge == c.edge:
                steps.append(PathStep(c.edge, cur.t, kp))
                cur = Vertex(c.kept)
            elif isinstance(cur, Vertex) and cur.v == free:
                steps.append(PathStep(c.edge, 1 - kp, kp))
                cur = Vertex(c.kept)
        return PLPath(self.graph, steps, source=p)


def deforest(g: MultiGraph):
    """Collapse free edges until no vertex has degree <= 1.

    Returns ``(core, homotopy)`` where the core is the unique subgraph with
    no free edges (a single vertex when g is a tree) and the homotopy
    witnesses the strong deformation retraction; betti1 is preserved.
    Deterministic: the smallest-id degree-1 vertex is collapsed first.
    """
    _require_connected(g, "deforest")
    degree = dict(g.degree)
    alive = {v: set(g.incident[v]) for v in g.vertices}
    live_edges = set(g.edge_by_id)
    removed = set()
    collapses = []
    while True:
        leaves = sorted(v for v, d in degree.items() if d == 1 and v not in removed)
        if not leaves:
            break
        v = leaves[0]
        eid = min(alive[v])
        e = g.edge_by_id[eid]
        kept = e.other(v)
        collapses.append(Collapse(eid, kept))
        live_edges.discard(eid)
        alive[v].discard(eid)
        alive[kept].discard(eid)
        degree[v] -= 1
        degree[kept] -= 1
        removed.add(v)
    core_vertices = [v for v in g.vertices if v not in removed]
    if not core_vertices:
        core_vertices = [g.vertices[0]]
    core = subgraph(g, sorted(live_edges), core_vertices)
    return core, CollapseHomotopy(g, core, collapses)


@dataclass(frozen=True)
class PathStep:
    edge: str
    a: Fraction
    b: Fraction

    def __post_init__(self):
        a = self.a if isinstance(self.a, Fraction) else Fraction(self.a)
        b = self.b if isinstance(self.b, Fraction) else Fraction(self.b)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        if not (0 <= a <= 1 and 0 <= b <= 1):
            raise GraphError(f"step parameters must lie in [0,1], got {a}..{b}")


class PLPath:
    """Piecewise-affine path, reparametrized uniformly by arclength over [0,1].

    Steps are (edge, start parameter, end parameter), each monotone along its
    edge; consecutive steps share an endpoint.  A constant path has no steps
    (at a vertex) or a single degenerate step (at an edge-interior point).
    Evaluation at 0 and 1 returns the declared endpoints exactly.
    """

    __slots__ = ("graph", "steps", "source", "length", "_cum", "_ends")

    def __init__(self, graph: MultiGraph, steps, source: GraphPoint = None):
        steps = tuple(s if isinstance(s, PathStep) else PathStep(*s) for s in steps)
        if steps:
            if len(steps) > 1 and any(s.a == s.b for s in steps):
                raise GraphError("degenerate step inside a multi-step path")
            edge_by_id = graph.edge_by_id
            prev_key = None
            for s in steps:
                e = edge_by_id.get(s.edge)
                if e is None:
                    raise GraphError(f"unknown edge {s.edge!r} in path")
                a, b = s.a, s.b
                key = ("v", e.v0) if a == 0 else (("v", e.v1) if a == 1
                                                  else (s.edge, a))
                if prev_key is not None and key != prev_key:
                    raise GraphError("discontinuous consecutive steps")
                prev_key = ("v", e.v0) if b == 0 else (("v", e.v1) if b == 1
                                                       else (s.edge, b))
            first = graph.point(steps[0].edge, steps[0].a)
            if source is None:
                source = first
            elif source != first:
                raise GraphError("declared source does not match the first step")
        else:
            if source is None:
                raise GraphError("a path with no steps needs a source point")
            if not graph.contains_point(source):
                raise GraphError("source point not on the graph")
        self.graph = graph
        self.steps = steps
        self.source = source
        cum = [Fraction(0)]
        for s in steps:
            cum.append(cum[-1] + abs(s.b - s.a))
        self._cum = tuple(cum)
        self.length = cum[-1]
        self._ends = None

    def _endpoints(self):
        if self._ends is None:
            if self.steps:
                self._ends = (self.graph.point(self.steps[0].edge, self.steps[0].a),
                              self.graph.point(self.steps[-1].edge, self.steps[-1].b))
            else:
                self._ends = (self.source, self.source)
        return self._ends

    @property
    def endpoint0(self) -> GraphPoint:
        return self._endpoints()[0]

    @property
    def endpoint1(self) -> GraphPoint:
        return self._endpoints()[1]

    def at(self, time) -> GraphPoint:
        """Exact evaluation at a rational time in [0,1]."""
        if time == 0:
            return self._endpoints()[0]
        if time == 1:
            return self._endpoints()[1]
        time = Fraction(time)
        if not 0 <= time <= 1:
            raise GraphError(f"time {time} outside [0,1]")
        if self.length == 0:
            return self._endpoints()[0]
        s = time * self.length
        for i, st in enumerate(self.steps):
            if s <= self._cum[i + 1]:
                local = s - self._cum[i]
                t = st.a + (local if st.b > st.a else -local)
                return self.graph.point(st.edge, t)
        return self._endpoints()[1]

    def reverse(self) -> "PLPath":
        rsteps = tuple(PathStep(s.edge, s.b, s.a) for s in reversed(self.steps))
        return PLPath(self.graph, rsteps, source=self.endpoint1)

    def __repr__(self):
        return f"PLPath(length={self.length}, steps={len(self.steps)})"


def constant_path(g: MultiGraph, p: GraphPoint) -> PLPath:
    if isinstance(p, EdgeInterior):
        return PLPath(g, (PathStep(p.edge, p.t, p.t),), source=p)
    return PLPath(g, (), source=p)


def concat_paths(g: MultiGraph, source: GraphPoint, paths) -> PLPath:
    """Concatenate paths end to start, dropping degenerate steps."""
    steps = []
    cur = source
    for p in paths:
        if p.endpoint0 != cur:
            raise GraphError("paths do not chain")
        steps.extend(s for s in p.steps if s.a != s.b)
        cur = p.endpoint1
    if not steps:
        return constant_path(g, source)
    return PLPath(g, steps, source=source)


class TreeRouter:
    """Reduced-path router for a forest, with cached vertex-to-vertex walks.

    Paths between vertices of a forest are unique once backtracks are
    cancelled; this precomputes BFS parent tables (root = smallest vertex id
    per component, adjacency scanned in edge-id order) and serves exact
    reduced paths between arbitrary points.
    """

    __slots__ = ("forest", "_parent", "_depth", "_walks")

    def __init__(self, forest: MultiGraph):
        if betti1(forest) != 0:
            raise GraphError("router requires a forest (betti1 = 0)")
        parent = {}
        depth = {}
        seen = set()
        for root in sorted(forest.vertices):
            if root in seen:
                continue
            seen.add(root)
            parent[root] = None
            depth[root] = 0
            queue = deque([root])
            while queue:
                u = queue.popleft()
                for eid in forest.incident[u]:
                    w = forest.edge_by_id[eid].other(u)
                    if w not in seen:
                        seen.add(w)
                        parent[w] = (eid, u)
                        depth[w] = depth[u] + 1
                        queue.append(w)
        self.forest = forest
        self._parent = parent
        self._depth = depth
        self._walks = {}

    def _vertex_walk(self, a: str, b: str):
        """Oriented steps (edge, from, to) of the reduced walk a -> b."""
        key = (a, b)
        cached = self._walks.get(key)
        if cached is not None:
            return cached
        if self.forest.component_of.get(a) != self.forest.component_of.get(b):
            raise GraphError("points lie in different components")
        up_a = []
        up_b = []
        x, y = a, b
        depth = self._depth
        parent = self._parent
        while x != y:
            if depth[x] >= depth[y]:
                eid, px = parent[x]
                up_a.append((eid, x, px))
                x = px
            else:
                eid, py = parent[y]
                up_b.append((eid, y, py))
                y = py
        walk = tuple(up_a + [(eid, py, v) for eid, v, py in reversed(up_b)])
        self._walks[key] = walk
        return walk

    def route_steps(self, p: GraphPoint, q: GraphPoint):
        """Parametric steps of the unique reduced path from p to q."""
        forest = self.forest
        raw = []
        if isinstance(p, EdgeInterior):
            e = forest.edge_by_id.get(p.edge)
            if e is None:
                raise GraphError(f"point not on the forest: edge {p.edge!r}")
            raw.append(PathStep(p.edge, p.t, Fraction(0)))
            a = e.v0
        else:
            if p.v not in forest.degree:
                raise GraphError(f"point not on the forest: vertex {p.v!r}")
            a = p.v
        post = []
        if isinstance(q, EdgeInterior):
            e = forest.edge_by_id.get(q.edge)
            if e is None:
                raise GraphError(f"point not on the forest: edge {q.edge!r}")
            post.append(PathStep(q.edge, Fraction(0), q.t))
            b = e.v0
        else:
            if q.v not in forest.degree:
                raise GraphError(f"point not on the forest: vertex {q.v!r}")
            b = q.v
        for eid, u, w in self._vertex_walk(a, b):
            e = forest.edge_by_id[eid]
            if u == e.v0:
                raw.append(PathStep(eid, Fraction(0), Fraction(1)))
            else:
                raw.append(PathStep(eid, Fraction(1), Fraction(0)))
        raw.extend(post)
        out = []
        for st in raw:
            cur = st
            if cur.a == cur.b:
                continue
            while out and out[-1].edge == cur.edge and out[-1].b == cur.a:
                prev = out.pop()
                if prev.a == cur.b:
                    cur = None
                    break
                cur = PathStep(cur.edge, prev.a, cur.b)
            if cur is not None:
                out.append(cur)
        return out

    def route(self, p: GraphPoint, q: GraphPoint, into: MultiGraph = None) -> PLPath:
        g = into if into is not None else self.forest
        steps = self.route_steps(p, q)
        if not steps:
            return constant_path(g, p)
        return PLPath(g, steps, source=p)


def tree_path(forest: MultiGraph, p: GraphPoint, q: GraphPoint) -> PLPath:
    """Unique reduced path between two points of the same tree component.

    For repeated queries on one forest build a :class:`TreeRouter` once.
    """
    return TreeRouter(forest).route(p, q)


def vertex_distances(g: MultiGraph) -> dict:
    """All-pairs vertex distances (unit edge lengths), cached on the graph."""
    if g._dist is None:
        dist = {}
        for src in g.vertices:
            d = {src: 0}
            queue = deque([src])
            while queue:
                u = queue.popleft()
                for eid in g.incident[u]:
                    w = g.edge_by_id[eid].other(u)
                    if w not in d:
                        d[w] = d[u] + 1
                        queue.append(w)
            dist[src] = d
        g._dist = dist
    return g._dist


def _endpoint_offsets(g: MultiGraph, p: GraphPoint):
    if isinstance(p, Vertex):
        return ((p.v, Fraction(0)),)
    e = g.edge_by_id[p.edge]
    return ((e.v0, p.t), (e.v1, 1 - p.t))


def point_dist(g: MultiGraph, x: GraphPoint, y: GraphPoint) -> Fraction:
    """Exact path-metric distance between two points of the realization."""
    if x == y:
        return Fraction(0)
    dist = vertex_distances(g)
    best = None
    if isinstance(x, EdgeInterior) and isinstance(y, EdgeInterior) and x.edge == y.edge:
        best = abs(x.t - y.t)
    for a, da in _endpoint_offsets(g, x):
        row = dist[a]
        for b, db in _endpoint_offsets(g, y):
            if b in row:
                cand = da + row[b] + db
                if best is None or cand < best:
                    best = cand
    if best is None:
        raise GraphError("points lie in different components")
    return best


def cat_graph(g: MultiGraph) -> int:
    """LS-category of a connected graph: 0 for trees, 1 otherwise."""
    _require_connected(g, "cat_graph")
    return 0 if betti1(g) == 0 else 1


def tc_graph(g: MultiGraph) -> int:
    """Topological complexity of a connected graph: 0 / 1 / 2 for
    betti1 = 0 / = 1 / >= 2."""
    _require_connected(g, "tc_graph")
    b = betti1(g)
    if b == 0:
        return 0
    return 1 if b == 1 else 2

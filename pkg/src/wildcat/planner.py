"""Stratified motion plans on connected graphs, and their verification.

A motion plan is an ordered closed filtration of G x G together with one
computable path rule per filtration difference.  Plans built here always
have exactly tc_graph(G) + 1 strata: one global tree rule for trees, the
rotate/geodesic pair for a single cycle (lifted through deforestation when
the graph has hairs), and the tree / one-coordinate-evacuated /
two-coordinates-evacuated triple otherwise.  ``verify_plan`` checks
closedness, nesting, coverage, the exact section property and sampled
continuity; the product filtration combinator witnesses the additivity of
category under products.
"""

import random
from dataclasses import dataclass
from fractions import Fraction

from .graphs import (MultiGraph, Vertex, EdgeInterior, GraphPoint,
                     PLPath, PathStep, CollapseHomotopy, TreeRouter, betti1,
                     spanning_forest, subgraph, deforest, constant_path,
                     concat_paths, tc_graph, vertex_distances)
from .regions import (Region, Box, Shift, RetractPreimage, CellUnion,
                      whole_graph_cells, VertexCell, ClosedEdgeCell,
                      OpenEdgeCell, SubArcCell)

__all__ = [
    "PlanError",
    "CycleCoords",
    "TreeRule",
    "CycleRotateRule",
    "CycleGeodesicRule",
    "EdgeEvacuateRule",
    "LiftedRule",
    "PairPath",
    "ProductRule",
    "MotionPlan",
    "plan_tree",
    "plan_circle",
    "plan_graph",
    "lift_plan",
    "execute",
    "GraphFiltration",
    "cat_filtration",
    "ProductFiltration",
    "product_cat_filtration",
    "corrupt_plan_swap_endpoints",
    "CheckResult",
    "VerifyReport",
    "verify_plan",
    "DEFAULT_DELTA",
    "DEFAULT_EPS",
    "TIME_SAMPLES",
]

DEFAULT_DELTA = Fraction(1, 1000)
DEFAULT_EPS = Fraction(1, 20)
TIME_SAMPLES = 32


class PlanError(ValueError):
    """Invalid plan construction or query."""


class CycleCoords:
    """Arclength coordinates on a graph that is a single cycle.

    The cycle is oriented deterministically: the walk starts at the smallest
    vertex id along its smallest incident edge id.  Points correspond to
    arclengths modulo the total length (= number of edges).
    """

    __slots__ = ("graph", "length", "steps", "_edge_slot", "_vertex_at",
                 "_vertex_coord")

    def __init__(self, g: MultiGraph):
        if g.n_components != 1 or betti1(g) != 1:
            raise PlanError("not a single cycle")
        if any(d != 2 for d in g.degree.values()):
            raise PlanError("not a single cycle (free or branching vertex)")
        start = min(g.vertices)
        steps = []
        used = set()
        vertex_at = {}
        cur = start
        while len(used) < len(g.edges):
            vertex_at[len(steps)] = cur
            eid = min(e for e in g.incident[cur] if e not in used)
            e = g.edge_by_id[eid]
            forward = e.v0 == cur
            steps.append((e, forward))
            used.add(eid)
            cur = e.v1 if forward else e.v0
        if cur != start:
            raise PlanError("not a single cycle")
        self.graph = g
        self.length = Fraction(len(steps))
        self.steps = tuple(steps)
        self._edge_slot = {e.id: (i, fwd) for i, (e, fwd) in enumerate(steps)}
        self._vertex_at = vertex_at
        self._vertex_coord = {v: Fraction(i) for i, v in vertex_at.items()}

    def coord(self, p: GraphPoint):
        """Arclength of a point, or None if the point misses the cycle."""
        if isinstance(p, Vertex):
            return self._vertex_coord.get(p.v)
        slot = self._edge_slot.get(p.edge)
        if slot is None:
            return None
        i, fwd = slot
        return i + (p.t if fwd else 1 - p.t)

    def point_at(self, s) -> GraphPoint:
        s = Fraction(s) % self.length
        k = int(s)
        f = s - k
        if f == 0:
            return Vertex(self._vertex_at[k])
        e, fwd = self.steps[k]
        return EdgeInterior(e.id, f if fwd else 1 - f)

    def march(self, s0, dist):
        """Parametric steps from arclength s0 moving dist (signed) along the cycle."""
        s0 = Fraction(s0)
        dist = Fraction(dist)
        steps = []
        if dist == 0:
            return steps
        direction = 1 if dist > 0 else -1
        remaining = abs(dist)
        s = s0 % self.length
        while remaining > 0:
            k = int(s)
            f = s - k
            if direction > 0:
                room = 1 - f
                take = min(room, remaining)
                e, fwd = self.steps[k]
                a, b = (f, f + take) if fwd else (1 - f, 1 - f - take)
                steps.append(PathStep(e.id, a, b))
                s = (s + take) % self.length
            else:
                if f == 0:
                    k = (k - 1) % int(self.length)
                    f = Fraction(1)
                take = min(f, remaining)
                e, fwd = self.steps[k]
                a, b = (f, f - take) if fwd else (1 - f, 1 - f + take)
                steps.append(PathStep(e.id, a, b))
                s = (s - take) % self.length
            remaining -= take
        return steps


class TreeRule:
    """Route through the unique reduced path of a forest."""

    def __init__(self, g: MultiGraph, router: TreeRouter):
        self.graph = g
        self.router = router

    def path_for(self, x: GraphPoint, y: GraphPoint) -> PLPath:
        return self.router.route(x, y, into=self.graph)

    def piece_id(self, x, y):
        return 0


class CycleRotateRule:
    """Rotate forward by half the cycle perimeter (anti-diagonal stratum)."""

    def __init__(self, g: MultiGraph, cycle: CycleCoords):
        self.graph = g
        self.cycle = cycle

    def path_for(self, x: GraphPoint, y: GraphPoint) -> PLPath:
        s = self.cycle.coord(x)
        if s is None:
            raise PlanError("query point misses the cycle")
        steps = self.cycle.march(s, self.cycle.length / 2)
        return PLPath(self.graph, steps, source=x)

    def piece_id(self, x, y):
        return 0


class CycleGeodesicRule:
    """Follow the unique shorter arc between two non-antipodal cycle points."""

    def __init__(self, g: MultiGraph, cycle: CycleCoords):
        self.graph = g
        self.cycle = cycle

    def _gap(self, x, y):
        sx = self.cycle.coord(x)
        sy = self.cycle.coord(y)
        if sx is None or sy is None:
            raise PlanError("query point misses the cycle")
        return sx, (sy - sx) % self.cycle.length

    def path_for(self, x: GraphPoint, y: GraphPoint) -> PLPath:
        sx, d = self._gap(x, y)
        if d == 0:
            return constant_path(self.graph, x)
        half = self.cycle.length / 2
        dist = d if d < half else d - self.cycle.length
        steps = self.cycle.march(sx, dist)
        return PLPath(self.graph, steps, source=x)

    def piece_id(self, x, y):
        _, d = self._gap(x, y)
        return "fwd" if d < self.cycle.length / 2 else "bwd"


class EdgeEvacuateRule:
    """Slide off-tree coordinates to their designated endpoints, then route.

    The evacuation endpoint of a non-tree edge is the endpoint with the
    smaller vertex id (the unique endpoint for a loop); within each open
    edge the slide is affine, so the rule is continuous on every separated
    piece of its stratum difference.
    """

    def __init__(self, g: MultiGraph, tree_edges, router: TreeRouter):
        self.graph = g
        self.tree_edges = frozenset(tree_edges)
        self.router = router

    def _evacuate(self, p: GraphPoint):
        if isinstance(p, EdgeInterior) and p.edge not in self.tree_edges:
            e = self.graph.edge_by_id[p.edge]
            u = min(e.v0, e.v1)
            pu = Fraction(0) if u == e.v0 else Fraction(1)
            return [PathStep(p.edge, p.t, pu)], Vertex(u)
        return [], p

    def path_for(self, x: GraphPoint, y: GraphPoint) -> PLPath:
        pre, x2 = self._evacuate(x)
        post, y2 = self._evacuate(y)
        steps = pre + self.router.route_steps(x2, y2)
        steps.extend(PathStep(s.edge, s.b, s.a) for s in reversed(post))
        if not steps:
            return constant_path(self.graph, x)
        return PLPath(self.graph, steps, source=x)

    def piece_id(self, x, y):
        cx = x.edge if isinstance(x, EdgeInterior) and x.edge not in self.tree_edges else "T"
        cy = y.edge if isinstance(y, EdgeInterior) and y.edge not in self.tree_edges else "T"
        return (cx, cy)


class LiftedRule:
    """Conjugate a core rule by the slide paths of a collapse homotopy."""

    def __init__(self, homotopy: CollapseHomotopy, inner):
        self.homotopy = homotopy
        self.inner = inner
        self.graph = homotopy.graph

    def path_for(self, x: GraphPoint, y: GraphPoint) -> PLPath:
        sx = self.homotopy.slide(x)
        sy = self.homotopy.slide(y)
        core = self.inner.path_for(sx.endpoint1, sy.endpoint1)
        mid = PLPath(self.graph, core.steps, source=core.source)
        return concat_paths(self.graph, x, (sx, mid, sy.reverse()))

    def piece_id(self, x, y):
        return self.inner.piece_id(self.homotopy.retract(x),
                                   self.homotopy.retract(y))


class PairPath:
    """Coordinatewise pair of paths: a path in a product of two graphs."""

    def __init__(self, first: PLPath, second: PLPath):
        self.first = first
        self.second = second

    @property
    def endpoint0(self):
        return (self.first.endpoint0, self.second.endpoint0)

    @property
    def endpoint1(self):
        return (self.first.endpoint1, self.second.endpoint1)

    def at(self, time):
        return (self.first.at(time), self.second.at(time))


class ProductRule:
    """Pairwise composition of two rules for queries in a product space."""

    def __init__(self, rule1, rule2):
        self.rule1 = rule1
        self.rule2 = rule2

    def path_for(self, x, y) -> PairPath:
        (a1, b1), (a2, b2) = x, y
        return PairPath(self.rule1.path_for(a1, a2), self.rule2.path_for(b1, b2))

    def piece_id(self, x, y):
        (a1, b1), (a2, b2) = x, y
        return (self.rule1.piece_id(a1, a2), self.rule2.piece_id(b1, b2))


@dataclass(frozen=True)
class MotionPlan:
    """Ordered closed filtration of G x G with one path rule per difference."""

    graph: MultiGraph
    strata: tuple
    rules: tuple

    def __post_init__(self):
        if len(self.strata) != len(self.rules):
            raise PlanError("one rule per stratum difference is required")
        if not self.strata:
            raise PlanError("a plan needs at least one stratum")

    def stratum_index(self, x: GraphPoint, y: GraphPoint) -> int:
        for j, region in enumerate(self.strata):
            if region.contains(x, y):
                return j
        raise PlanError("pair not covered by the top stratum")


def plan_tree(t: MultiGraph) -> MotionPlan:
    """Single-stratum plan on a tree: the unique reduced path rule."""
    if t.n_components != 1:
        raise PlanError("plan_tree requires a connected graph")
    if betti1(t) != 0:
        raise PlanError("plan_tree requires a tree (input has a cycle)")
    everything = whole_graph_cells(t)
    router = TreeRouter(t)
    return MotionPlan(t, (Region(Box(everything, everything)),),
                      (TreeRule(t, router),))


def plan_circle(c: MultiGraph) -> MotionPlan:
    """Two-stratum plan on a cycle: rotate on the anti-diagonal, else the
    shorter arc."""
    cyc = CycleCoords(c)
    everything = whole_graph_cells(c)
    f0 = Region(Shift(cyc, cyc.length / 2))
    f1 = Region(Box(everything, everything))
    return MotionPlan(c, (f0, f1),
                      (CycleRotateRule(c, cyc), CycleGeodesicRule(c, cyc)))


def lift_plan(p: MotionPlan, h: CollapseHomotopy) -> MotionPlan:
    """Lift a plan on the core of a collapse homotopy to the whole graph.

    Strata become preimages under r x r; rules slide both query points to
    the core, run the core rule, and slide back.  The identity homotopy
    returns the plan unchanged.
    """
    if not h.collapses and h.graph == p.graph:
        return p
    if h.core != p.graph:
        raise PlanError("homotopy core does not match the plan's graph")
    strata = tuple(Region(RetractPreimage(h, f)) for f in p.strata)
    rules = tuple(LiftedRule(h, r) for r in p.rules)
    return MotionPlan(h.graph, strata, rules)


def plan_graph(g: MultiGraph) -> MotionPlan:
    """Stratified plan with exactly tc_graph(g) + 1 strata.

    Dispatch on the first Betti number: trees get the global tree rule; a
    graph with one cycle is deforested onto its unique cycle and the circle
    plan is lifted back; otherwise the strata are T x T, then
    G x T union T x G, then G x G for a spanning tree T.
    """
    if g.n_components != 1:
        raise PlanError("plan_graph requires a connected graph")
    b = betti1(g)
    if b == 0:
        return plan_tree(g)
    if b == 1:
        core, h = deforest(g)
        return lift_plan(plan_circle(core), h)
    tree_edges = spanning_forest(g)
    tree = subgraph(g, tree_edges)
    router = TreeRouter(tree)
    tree_cells = CellUnion(g, [VertexCell(v) for v in g.vertices]
                           + [ClosedEdgeCell(e) for e in tree_edges])
    everything = whole_graph_cells(g)
    f0 = Region(Box(tree_cells, tree_cells))
    f1 = Region(Box(everything, tree_cells), Box(tree_cells, everything))
    f2 = Region(Box(everything, everything))
    evac = EdgeEvacuateRule(g, tree_edges, router)
    return MotionPlan(g, (f0, f1, f2), (TreeRule(g, router), evac, evac))


def execute(p: MotionPlan, x: GraphPoint, x2: GraphPoint):
    """Run a plan on a query pair.

    Returns ``(j, path)`` where j indexes the smallest stratum difference
    containing the pair and the path connects x to x2 with exact endpoints.
    """
    if not (p.graph.contains_point(x) and p.graph.contains_point(x2)):
        raise PlanError("query points must lie on the plan's graph")
    j = p.stratum_index(x, x2)
    return j, p.rules[j].path_for(x, x2)


@dataclass(frozen=True)
class GraphFiltration:
    """Nested closed cell unions of one graph, largest level last."""

    graph: MultiGraph
    levels: tuple

    def __post_init__(self):
        if not self.levels:
            raise PlanError("a filtration needs at least one level")
        for lv in self.levels:
            if not isinstance(lv, CellUnion) or lv.graph is not self.graph:
                raise PlanError("filtration levels must be cell unions of the graph")
            if not lv.is_closed():
                raise PlanError("filtration levels must be closed")
        for a, b in zip(self.levels, self.levels[1:]):
            if not _cells_subset(a, b):
                raise PlanError("filtration levels must be nested")

    def level_index(self, p: GraphPoint) -> int:
        for i, lv in enumerate(self.levels):
            if lv.contains(p):
                return i
        raise PlanError("point not covered by the top level")

    @property
    def length(self) -> int:
        return len(self.levels) - 1


def _cell_probe_points(g: MultiGraph, cell):
    if isinstance(cell, VertexCell):
        return (Vertex(cell.v),)
    if isinstance(cell, SubArcCell):
        mid = (cell.lo + cell.hi) / 2
        return tuple(g.point(cell.edge, t)
                     for t in dict.fromkeys((cell.lo, mid, cell.hi)))
    mid = EdgeInterior(cell.edge, Fraction(1, 2))
    if isinstance(cell, OpenEdgeCell):
        return (mid,)
    e = g.edge_by_id[cell.edge]
    return (Vertex(e.v0), mid, Vertex(e.v1))


def _cells_subset(a: CellUnion, b: CellUnion) -> bool:
    g = a.graph
    for cell in a.cells:
        for p in _cell_probe_points(g, cell):
            if not b.contains(p):
                return False
    return True


def cat_filtration(g: MultiGraph) -> GraphFiltration:
    """Canonical category filtration of a connected graph.

    A tree is a single level; otherwise the spanning tree followed by the
    whole graph (the open non-tree edges forming the categorical difference).
    """
    if g.n_components != 1:
        raise PlanError("cat_filtration requires a connected graph")
    everything = whole_graph_cells(g)
    if betti1(g) == 0:
        return GraphFiltration(g, (everything,))
    tree_cells = CellUnion(g, [VertexCell(v) for v in g.vertices]
                           + [ClosedEdgeCell(e) for e in spanning_forest(g)])
    return GraphFiltration(g, (tree_cells, everything))


@dataclass(frozen=True)
class ProductFiltration:
    """Filtration H_k of X x Y built from filtrations of the factors:
    H_k is the union of F_i x G_j over i + j = k."""

    first: GraphFiltration
    second: GraphFiltration
    levels: tuple

    @property
    def length(self) -> int:
        return len(self.levels) - 1

    def level_index(self, x: GraphPoint, y: GraphPoint) -> int:
        for k, region in enumerate(self.levels):
            if region.contains(x, y):
                return k
        raise PlanError("pair not covered by the top level")

    def factor_indices(self, x: GraphPoint, y: GraphPoint):
        return (self.first.level_index(x), self.second.level_index(y))


def product_cat_filtration(f: GraphFiltration, g: GraphFiltration) -> ProductFiltration:
    """Product filtration of length len(f) + len(g).

    Level k is the union of boxes F_i x G_j with i + j = k; the difference at
    level k is the separated union of the factor differences with i + j = k.
    """
    n, m = len(f.levels) - 1, len(g.levels) - 1
    levels = []
    for k in range(n + m + 1):
        boxes = [Box(f.levels[i], g.levels[k - i])
                 for i in range(max(0, k - m), min(n, k) + 1)]
        levels.append(Region(*boxes))
    return ProductFiltration(f, g, tuple(levels))


class _SwappedRule:
    """Deliberately broken rule answering queries with reversed endpoints."""

    def __init__(self, inner):
        self.inner = inner

    def path_for(self, x, y):
        return self.inner.path_for(y, x)

    def piece_id(self, x, y):
        return self.inner.piece_id(y, x)


def corrupt_plan_swap_endpoints(p: MotionPlan) -> MotionPlan:
    """Negative-control fixture: same strata, every rule answers reversed."""
    return MotionPlan(p.graph, p.strata, tuple(_SwappedRule(r) for r in p.rules))


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str
    witness: str = None


@dataclass(frozen=True)
class VerifyReport:
    strata_count: int
    expected_strata: int
    samples: int
    continuity_samples: int
    checks: tuple

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)


def _fmt_point(p: GraphPoint) -> str:
    if isinstance(p, Vertex):
        return f"vertex {p.v}"
    return f"edge {p.edge} {p.t}"


def _fmt_pair(x, y) -> str:
    return f"({_fmt_point(x)}; {_fmt_point(y)})"


def _float_point(p: GraphPoint):
    if isinstance(p, Vertex):
        return ("v", p.v)
    return (p.edge, float(p.t))


def _float_samples(path: PLPath, times):
    """Float positions of a path at the given ascending times in [0,1]."""
    steps = path.steps
    if not steps or path.length == 0:
        pt = _float_point(path.endpoint0)
        return [pt] * len(times)
    total = float(path.length)
    bounds = [float(c) for c in path._cum]
    out = []
    i = 0
    last = len(steps) - 1
    for t in times:
        s = t * total
        while i < last and s > bounds[i + 1]:
            i += 1
        st = steps[i]
        a, b = float(st.a), float(st.b)
        local = s - bounds[i]
        pos = a + (local if b > a else -local)
        out.append((st.edge, pos))
    return out


def _float_dist(g: MultiGraph, dist, fp, fq) -> float:
    if fp == fq:
        return 0.0
    if fp[0] == "v":
        ends_p = ((fp[1], 0.0),)
    else:
        e = g.edge_by_id[fp[0]]
        ends_p = ((e.v0, fp[1]), (e.v1, 1.0 - fp[1]))
    if fq[0] == "v":
        ends_q = ((fq[1], 0.0),)
    else:
        e = g.edge_by_id[fq[0]]
        ends_q = ((e.v0, fq[1]), (e.v1, 1.0 - fq[1]))
    best = None
    if fp[0] != "v" and fq[0] != "v" and fp[0] == fq[0]:
        best = abs(fp[1] - fq[1])
    for a, da in ends_p:
        row = dist[a]
        for b, db in ends_q:
            d = row.get(b)
            if d is None:
                continue
            cand = da + d + db
            if best is None or cand < best:
                best = cand
    return best if best is not None else float("inf")


def _random_point(rng, g: MultiGraph, denom=4096) -> GraphPoint:
    n_v = len(g.vertices)
    k = rng.randrange(n_v + len(g.edges))
    if k < n_v:
        return Vertex(g.vertices[k])
    e = g.edges[k - n_v]
    return EdgeInterior(e.id, Fraction(rng.randrange(1, denom), denom))


def _nudge(rng, p: GraphPoint, max_shift: Fraction) -> GraphPoint:
    if isinstance(p, Vertex):
        return p
    span = max_shift.numerator * ((1 << 22) // max_shift.denominator)
    j = rng.randrange(-span, span + 1)
    t = p.t + Fraction(j, 1 << 22)
    lo = Fraction(1, 1 << 22)
    t = max(lo, min(1 - lo, t))
    return EdgeInterior(p.edge, t)


def verify_plan(p: MotionPlan, g: MultiGraph, samples: int = 1000,
                delta: Fraction = DEFAULT_DELTA, eps: Fraction = DEFAULT_EPS,
                seed: int = 0, continuity_samples: int = None) -> VerifyReport:
    """Check a motion plan against its contracts.

    (a) every stratum is closed (read from the region descriptors);
    (b) strata are nested and cover G x G, checked exhaustively on
        representative points of every (cell, cell) pair and on the sampled
        queries;
    (c) the section property holds exactly (rational equality of endpoints)
        on ``samples`` seeded random queries;
    (d) continuity: for perturbed query pairs in the same stratum difference
        and the same separated piece at path-metric distance < delta, the
        uniform distance between the two answer paths over 32 time samples
        is <= eps (floating point is used only here).

    The report is deterministic for fixed inputs and seed.
    """
    if continuity_samples is None:
        continuity_samples = samples
    rng = random.Random(seed)
    dist = vertex_distances(g)
    checks = []

    closed_bad = [j for j, f in enumerate(p.strata) if not f.is_closed()]
    checks.append(CheckResult(
        "closedness", not closed_bad,
        "every stratum closed by descriptor" if not closed_bad
        else f"non-closed strata: {closed_bad}"))

    cover_witness = None
    nest_witness = None
    probes = [Vertex(v) for v in g.vertices]
    for e in g.edges:
        probes.extend(EdgeInterior(e.id, Fraction(k, 4)) for k in (1, 2, 3))
    for x in probes:
        if cover_witness and nest_witness:
            break
        for y in probes:
            member = [f.contains(x, y) for f in p.strata]
            if not member[-1]:
                cover_witness = cover_witness or _fmt_pair(x, y)
                continue
            first = member.index(True)
            if not all(member[first:]):
                nest_witness = nest_witness or _fmt_pair(x, y)
    checks.append(CheckResult(
        "coverage-cells", cover_witness is None,
        f"all ({len(probes)} x {len(probes)}) cell representatives covered"
        if cover_witness is None else "cell pair escapes the top stratum",
        cover_witness))
    checks.append(CheckResult(
        "nesting-cells", nest_witness is None,
        "stratum membership monotone on cell representatives"
        if nest_witness is None else "nesting violated",
        nest_witness))

    section_witness = None
    nest_sample_witness = None
    queries = []
    for _ in range(samples):
        x = _random_point(rng, g)
        y = _random_point(rng, g)
        queries.append((x, y))
    answered = []
    for x, y in queries:
        member = [f.contains(x, y) for f in p.strata]
        if not member[-1]:
            nest_sample_witness = nest_sample_witness or _fmt_pair(x, y)
            continue
        j = member.index(True)
        if not all(member[j:]):
            nest_sample_witness = nest_sample_witness or _fmt_pair(x, y)
        path = p.rules[j].path_for(x, y)
        if len(answered) < continuity_samples:
            answered.append((x, y, j, path))
        if path.endpoint0 != x or path.endpoint1 != y or path.at(0) != x or path.at(1) != y:
            if section_witness is None:
                section_witness = _fmt_pair(x, y)
    checks.append(CheckResult(
        "nesting-samples", nest_sample_witness is None,
        f"{samples} sampled pairs covered and monotone"
        if nest_sample_witness is None else "sampled nesting/coverage violated",
        nest_sample_witness))
    checks.append(CheckResult(
        "section", section_witness is None,
        f"exact endpoints on {samples} sampled queries"
        if section_witness is None else "path endpoints differ from the query",
        section_witness))

    times = [k / (TIME_SAMPLES - 1) for k in range(TIME_SAMPLES)]
    eps_f = float(eps) + 1e-9
    half = delta / 2
    cont_witness = None
    compared = 0
    skipped = 0
    for x, y, j1, path1 in answered:
        x2 = _nudge(rng, x, half)
        y2 = _nudge(rng, y, half)
        if isinstance(x, Vertex) and isinstance(y, Vertex):
            skipped += 1
            continue
        j2 = p.stratum_index(x2, y2)
        if j1 != j2:
            skipped += 1
            continue
        rule = p.rules[j1]
        if rule.piece_id(x, y) != rule.piece_id(x2, y2):
            skipped += 1
            continue
        path2 = rule.path_for(x2, y2)
        pts1 = _float_samples(path1, times)
        pts2 = _float_samples(path2, times)
        sup = 0.0
        for a, b in zip(pts1, pts2):
            d = _float_dist(g, dist, a, b)
            if d > sup:
                sup = d
        compared += 1
        if sup > eps_f and cont_witness is None:
            cont_witness = f"{_fmt_pair(x, y)} vs {_fmt_pair(x2, y2)}: sup {sup:.4f}"
    checks.append(CheckResult(
        "continuity", cont_witness is None,
        f"{compared} perturbed pairs within delta={delta} stayed within "
        f"eps={eps} ({skipped} skipped: different difference/piece or "
        "vertex-vertex)" if cont_witness is None
        else "paths of nearby queries diverge",
        cont_witness))

    expected = tc_graph(g) + 1
    checks.append(CheckResult(
        "strata-count", len(p.strata) == expected,
        f"strata count {len(p.strata)} = tc_graph + 1 = {expected}"
        if len(p.strata) == expected
        else f"strata count {len(p.strata)} != tc_graph + 1 = {expected}"))

    return VerifyReport(len(p.strata), expected, samples,
                        continuity_samples, tuple(checks))

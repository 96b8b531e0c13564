"""Symbolic calculus of w-stable one-dimensional Peano continua.

Spaces are described by a small grammar: a finite base multigraph, finitely
many attached child spaces, and null-sequence families that attach shrinking
copies of a pattern space along a subcomplex of the base (each copy glued at
a designated anchor point of the pattern).  Two opaque atoms cover the
remaining behaviour: a self-wild subspace (Sierpinski-carpet-like, every
point wild) and a space whose wild set is non-empty, zero-dimensional and
contained in a dendrite.

Structural recursion computes iterated wild sets, the wildness rank, the
category and topological complexity formulas, filtration certificates, and
finite graph truncations for cross-checks.  Copy sizes and attachment
density are abstract: only the closure subcomplex of an attachment sequence
matters for the wild set, so no metric data is stored.
"""

import math
from collections import Counter, defaultdict
from dataclasses import dataclass
from fractions import Fraction

from .graphs import (MultiGraph, Edge, Vertex, EdgeInterior, GraphPoint,
                     build_graph, subgraph, betti1)

__all__ = [
    "INF",
    "ExprError",
    "UnstableExpressionError",
    "InfiniteRankError",
    "Subcomplex",
    "SeqFamily",
    "Attachment",
    "Node",
    "SelfWild",
    "ZeroDimWild",
    "SpaceExpr",
    "graph_expr",
    "is_connected_expr",
    "contains_scc",
    "contains_atom",
    "StabilityReport",
    "is_w_stable",
    "wild_set",
    "wild_tower",
    "wrk",
    "TowerLevel",
    "WildProfile",
    "profile",
    "cat",
    "tc",
    "CERT_REASONS",
    "CertificateLevel",
    "Certificate",
    "cat_certificate",
    "tc_certificate",
    "truncate",
]

INF = math.inf


class ExprError(ValueError):
    """Malformed space expression or an unsupported operation on one."""


class UnstableExpressionError(ExprError):
    """The expression fails the w-stability check; carries the diagnostic."""


class InfiniteRankError(ExprError):
    """An operation that needs finite wildness rank met an infinite one."""


@dataclass(frozen=True)
class Subcomplex:
    """Closed subcomplex of a base graph: vertices and edges, normalized so
    that the vertex list always contains every listed edge's endpoints."""

    vertices: tuple
    edges: tuple

    @classmethod
    def of(cls, g: MultiGraph, vertices=(), edges=()):
        vs = set(vertices)
        es = set(edges)
        for v in vs:
            if v not in g.degree:
                raise ExprError(f"subcomplex vertex {v!r} not in the base")
        for eid in es:
            e = g.edge_by_id.get(eid)
            if e is None:
                raise ExprError(f"subcomplex edge {eid!r} not in the base")
            vs.add(e.v0)
            vs.add(e.v1)
        if not vs:
            raise ExprError("empty subcomplex")
        return cls(tuple(sorted(vs)), tuple(sorted(es)))

    @classmethod
    def whole(cls, g: MultiGraph):
        return cls.of(g, g.vertices, [e.id for e in g.edges])

    def is_empty(self) -> bool:
        return not self.vertices

    def contains_point(self, p: GraphPoint) -> bool:
        if isinstance(p, Vertex):
            return p.v in set(self.vertices)
        return p.edge in set(self.edges)

    def union(self, other: "Subcomplex") -> "Subcomplex":
        return Subcomplex(tuple(sorted(set(self.vertices) | set(other.vertices))),
                          tuple(sorted(set(self.edges) | set(other.edges))))

    def intersect(self, other: "Subcomplex") -> "Subcomplex":
        return Subcomplex(tuple(sorted(set(self.vertices) & set(other.vertices))),
                          tuple(sorted(set(self.edges) & set(other.edges))))

    def components(self, g: MultiGraph):
        """Connected components, in order of their smallest vertex id."""
        vs = set(self.vertices)
        adj = defaultdict(set)
        for eid in self.edges:
            e = g.edge_by_id[eid]
            adj[e.v0].add(e.v1)
            adj[e.v1].add(e.v0)
        seen = set()
        comps = []
        for root in self.vertices:
            if root in seen:
                continue
            comp = {root}
            seen.add(root)
            stack = [root]
            while stack:
                u = stack.pop()
                for w in adj[u]:
                    if w not in seen:
                        seen.add(w)
                        comp.add(w)
                        stack.append(w)
            comp_edges = tuple(sorted(eid for eid in self.edges
                                      if g.edge_by_id[eid].v0 in comp))
            comps.append(Subcomplex(tuple(sorted(comp)), comp_edges))
        return tuple(comps)

    def as_graph(self, g: MultiGraph) -> MultiGraph:
        return subgraph(g, self.edges, self.vertices)


@dataclass(frozen=True)
class Attachment:
    """Finite attachment: glue a child space to the base, anchor-to-point."""

    at: GraphPoint
    child: "SpaceExpr"
    anchor: GraphPoint


@dataclass(frozen=True)
class SeqFamily:
    """Null-sequence family: shrinking copies of a pattern space attached at
    a sequence of points dense in the subcomplex (exactly at the points when
    the subcomplex is a finite vertex set), each copy glued at its anchor."""

    subcomplex: Subcomplex
    pattern: "SpaceExpr"
    anchor: GraphPoint


@dataclass(frozen=True)
class SelfWild:
    """Opaque subspace equal to its own wild set (every point is wild)."""


@dataclass(frozen=True)
class ZeroDimWild:
    """Opaque space with a non-empty zero-dimensional wild set contained in
    a dendrite."""


@dataclass(frozen=True)
class Node:
    base: MultiGraph
    fin: tuple = ()
    seq: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "fin", tuple(self.fin))
        object.__setattr__(self, "seq", tuple(self.seq))
        for att in self.fin:
            if not isinstance(att, Attachment):
                raise ExprError("fin entries must be Attachments")
            if not self.base.contains_point(att.at):
                raise ExprError(f"attachment point {att.at} not on the base")
            _check_anchor(att.child, att.anchor)
        for fam in self.seq:
            if not isinstance(fam, SeqFamily):
                raise ExprError("seq entries must be SeqFamilies")
            sc = fam.subcomplex
            for v in sc.vertices:
                if v not in self.base.degree:
                    raise ExprError(f"subcomplex vertex {v!r} not on the base")
            for eid in sc.edges:
                if eid not in self.base.edge_by_id:
                    raise ExprError(f"subcomplex edge {eid!r} not on the base")
            _check_anchor(fam.pattern, fam.anchor)


def _check_anchor(child, anchor):
    # anchors of atom children are kept verbatim but cannot be validated
    if isinstance(child, Node):
        if not child.base.contains_point(anchor):
            raise ExprError(f"anchor {anchor} not on the child's base")
    elif not isinstance(child, (SelfWild, ZeroDimWild)):
        raise ExprError(f"not a space expression: {child!r}")


SpaceExpr = Node | SelfWild | ZeroDimWild


def graph_expr(g: MultiGraph) -> Node:
    """A finite graph viewed as a space expression."""
    return Node(g, (), ())


def is_connected_expr(e: SpaceExpr) -> bool:
    if isinstance(e, (SelfWild, ZeroDimWild)):
        return True
    if e.base.n_components != 1:
        return False
    return (all(is_connected_expr(a.child) for a in e.fin)
            and all(is_connected_expr(f.pattern) for f in e.seq))


def contains_scc(e: SpaceExpr) -> bool:
    """Whether the space contains a simple closed curve (equivalently, for
    one-dimensional spaces, is not simply connected)."""
    if isinstance(e, (SelfWild, ZeroDimWild)):
        return True
    if betti1(e.base) > 0:
        return True
    return (any(contains_scc(a.child) for a in e.fin)
            or any(contains_scc(f.pattern) for f in e.seq))


def contains_atom(e: SpaceExpr) -> bool:
    if isinstance(e, (SelfWild, ZeroDimWild)):
        return True
    return (any(contains_atom(a.child) for a in e.fin)
            or any(contains_atom(f.pattern) for f in e.seq))


def _contains_selfwild(e: SpaceExpr) -> bool:
    if isinstance(e, SelfWild):
        return True
    if isinstance(e, ZeroDimWild):
        return False
    return (any(_contains_selfwild(a.child) for a in e.fin)
            or any(_contains_selfwild(f.pattern) for f in e.seq))


@dataclass(frozen=True)
class StabilityReport:
    stable: bool
    diagnostic: str = None

    def __bool__(self):
        return self.stable


def is_w_stable(e: SpaceExpr) -> StabilityReport:
    """Decide w-stability of an expression.

    A family whose pattern has a non-empty wild set is admissible only when
    that wild set is path-connected and contains the family's anchor;
    otherwise copies of the pattern's wild set accumulate on the subcomplex
    without touching it and local path-connectedness of the wild set fails.
    The zero-dimensional atom reports unstable with a pointer to its special
    case; the self-wild atom is vacuously stable (its rank is infinite).
    """
    if isinstance(e, SelfWild):
        return StabilityReport(True)
    if isinstance(e, ZeroDimWild):
        return StabilityReport(False, "handled by the zero-dimensional special case")
    if not isinstance(e, Node):
        raise ExprError(f"not a space expression: {e!r}")
    for i, att in enumerate(e.fin):
        sub = is_w_stable(att.child)
        if not sub:
            return StabilityReport(False, f"attachment {i}: {sub.diagnostic}")
    for i, fam in enumerate(e.seq):
        sub = is_w_stable(fam.pattern)
        if not sub:
            return StabilityReport(False, f"seq family {i}: {sub.diagnostic}")
        if not contains_scc(fam.pattern):
            continue
        # every non-empty iterated wild set of the pattern must be one
        # connected piece containing the anchor: copies of deeper wild sets
        # also have to reach the subcomplex through the gluing point
        own, foreign = _wild_pieces_split(fam.pattern)
        level = 1
        prev = None
        while own or foreign:
            if len(own) + len(foreign) > 1:
                return StabilityReport(
                    False, f"seq family {i}: wild set level {level} of the "
                           f"pattern is not path-connected "
                           f"({len(own) + len(foreign)} pieces)")
            if foreign:
                # the anchor is a point of the pattern's base; it cannot
                # certify a wild set sitting inside a finite attachment
                return StabilityReport(
                    False, f"seq family {i}: anchor {fam.anchor} does not lie "
                           f"in wild set level {level} of the pattern (it "
                           "sits inside a finite attachment)")
            piece = own[0]
            if not _point_in_piece(fam.anchor, piece):
                return StabilityReport(
                    False, f"seq family {i}: anchor {fam.anchor} does not lie "
                           f"in wild set level {level} of the pattern")
            if isinstance(piece, SelfWild) or piece == prev:
                break
            prev = piece
            own, foreign = _wild_pieces_split(piece)
            level += 1
    return StabilityReport(True)


def _point_in_piece(p: GraphPoint, piece: SpaceExpr) -> bool:
    if isinstance(piece, SelfWild):
        return True
    if isinstance(piece, ZeroDimWild):
        return False
    return piece.base.contains_point(p)


def _wild_pieces_split(e: SpaceExpr):
    """Wild-set pieces of a stable expression, separated into pieces living
    on subcomplexes of e's own base and pieces living inside finite
    attachments (a different identifier space)."""
    if isinstance(e, SelfWild):
        return (e,), ()
    contributions = []
    for fam in e.seq:
        if not contains_scc(fam.pattern):
            continue
        inner = _wild_pieces(fam.pattern)
        contributions.append((fam, inner[0] if inner else None))
    own = []
    if contributions:
        union = contributions[0][0].subcomplex
        for fam, _ in contributions[1:]:
            union = union.union(fam.subcomplex)
        for comp in union.components(e.base):
            fams = []
            for fam, wild_pattern in contributions:
                if wild_pattern is None:
                    continue
                meet = fam.subcomplex.intersect(comp)
                if meet.is_empty():
                    continue
                fams.append(SeqFamily(meet, wild_pattern, fam.anchor))
            own.append(Node(comp.as_graph(e.base), (), tuple(fams)))
    foreign = []
    for att in e.fin:
        foreign.extend(_wild_pieces(att.child))
    return tuple(own), tuple(foreign)


def _wild_pieces(e: SpaceExpr):
    """Pieces of the wild set of a stable expression (stability assumed)."""
    own, foreign = _wild_pieces_split(e)
    return own + foreign


def wild_set(e: SpaceExpr):
    """Wild set of a stable expression, as a finite disjoint union of pieces.

    Per family: a simply connected pattern contributes nothing; a pattern
    with a cycle but empty wild set makes the whole subcomplex wild; a
    pattern with a non-empty wild set additionally carries its own wild set
    down as a new family.  Contributions over the same base merge along the
    union of their subcomplexes; finite attachments contribute their own
    wild sets as separate pieces.  Finite graphs have empty wild set.
    """
    if isinstance(e, ZeroDimWild):
        raise ExprError("the zero-dimensional atom has no symbolic wild set")
    st = is_w_stable(e)
    if not st:
        raise UnstableExpressionError(st.diagnostic)
    return _wild_pieces(e)


def wild_tower(e: SpaceExpr):
    """Non-empty iterated wild sets of a stable, self-wild-free expression."""
    if isinstance(e, ZeroDimWild):
        raise ExprError("the zero-dimensional atom has no symbolic wild tower")
    st = is_w_stable(e)
    if not st:
        raise UnstableExpressionError(st.diagnostic)
    if _contains_selfwild(e):
        raise InfiniteRankError("self-wild subspaces give an infinite tower")
    levels = []
    level = (e,)
    while level:
        levels.append(level)
        level = tuple(p for piece in level for p in _wild_pieces(piece))
    return tuple(levels)


def wrk(e: SpaceExpr):
    """Wildness rank: the smallest n >= 1 with empty n-th iterated wild set.

    Infinite for any expression containing a self-wild subspace (its wild
    set persists inside every iterate); 2 for the zero-dimensional atom.
    """
    if isinstance(e, ZeroDimWild):
        return 2
    st = is_w_stable(e)
    if not st:
        raise UnstableExpressionError(st.diagnostic)
    if _contains_selfwild(e):
        return INF
    return len(wild_tower(e))


def _expr_b1(e: SpaceExpr):
    """Total first Betti number of an expression: INF once a family pattern
    contains a cycle (infinitely many copies), additive over attachments."""
    if isinstance(e, (SelfWild, ZeroDimWild)):
        return INF
    total = betti1(e.base)
    for att in e.fin:
        b = _expr_b1(att.child)
        if b is INF:
            return INF
        total += b
    for fam in e.seq:
        if contains_scc(fam.pattern):
            return INF
    return total


@dataclass(frozen=True)
class TowerLevel:
    """One non-empty iterated wild set: its symbolic pieces (a finite
    disjoint union; empty for the opaque zero-dimensional level, which has
    no expression), the piece count, and the total first Betti number."""

    pieces: tuple
    count: int
    b1: object  # int, or INF


@dataclass(frozen=True)
class WildProfile:
    """The wild tower of an expression: one level per non-empty iterated
    wild set, the rank, the total Betti number of the deepest level, and
    the resulting simple-closed-curve class (none / one / many)."""

    tower: tuple
    wrk: object  # int, or INF
    top_b1: object
    scc_class: str
    stable: bool


def profile(e: SpaceExpr) -> WildProfile:
    if isinstance(e, ZeroDimWild):
        tower = (TowerLevel((e,), 1, INF), TowerLevel((), 1, 0))
        return WildProfile(tower, 2, 0, "none", False)
    st = is_w_stable(e)
    if not st:
        raise UnstableExpressionError(st.diagnostic)
    if isinstance(e, SelfWild) or _contains_selfwild(e):
        return WildProfile((TowerLevel((e,), 1, INF),), INF, INF, "many", True)
    levels = wild_tower(e)
    summaries = tuple(TowerLevel(lv, len(lv), _level_b1(lv)) for lv in levels)
    top = summaries[-1].b1
    if top == 0:
        scc = "none"
    elif top == 1:
        scc = "one"
    else:
        scc = "many"
    return WildProfile(summaries, len(levels), top, scc, True)


def _level_b1(level):
    total = 0
    for piece in level:
        b = _expr_b1(piece)
        if b is INF:
            return INF
        total += b
    return total


def _require_connected_expr(e: SpaceExpr, op: str):
    if not is_connected_expr(e):
        raise ExprError(f"{op} requires a path-connected expression")


def cat(e: SpaceExpr):
    """LS-category from the wild tower: with finite rank n, n - 1 when the
    deepest level carries no cycle and n otherwise; infinite rank gives
    infinity."""
    _require_connected_expr(e, "cat")
    prof = profile(e)
    if prof.wrk is INF:
        return INF
    return prof.wrk - 1 if prof.top_b1 == 0 else prof.wrk


def tc(e: SpaceExpr):
    """Topological complexity from the wild tower: with finite rank n the
    value is 2n-2 / 2n-1 / 2n as the deepest level carries no / one / many
    simple closed curves; infinite rank gives infinity."""
    _require_connected_expr(e, "tc")
    prof = profile(e)
    if prof.wrk is INF:
        return INF
    n = prof.wrk
    if prof.scc_class == "none":
        return 2 * n - 2
    if prof.scc_class == "one":
        return 2 * n - 1
    return 2 * n


CERT_REASONS = frozenset({
    "contractible-pieces",
    "dendrite-pieces",
    "spanning-tree-pieces",
    "graph-minus-tree-pieces",
    "product-box",
    "circle-antidiagonal",
})


@dataclass(frozen=True)
class CertificateLevel:
    reason: str
    description: str

    def __post_init__(self):
        if self.reason not in CERT_REASONS:
            raise ExprError(f"unknown certificate reason {self.reason!r}")


@dataclass(frozen=True)
class Certificate:
    """Machine-readable record of a category or complexity filtration:
    ordered strata (smallest first), each with a reason label, and the
    declared length (= number of strata - 1)."""

    kind: str
    levels: tuple
    length: object

    def __post_init__(self):
        if self.kind not in ("cat", "tc"):
            raise ExprError("certificate kind must be 'cat' or 'tc'")
        if self.length != len(self.levels) - 1:
            raise ExprError("declared length must equal strata count - 1")


def _finite_profile(e: SpaceExpr, op: str) -> WildProfile:
    prof = profile(e)
    if prof.wrk is INF:
        raise InfiniteRankError(f"{op} requires finite wildness rank")
    return prof


def cat_certificate(e: SpaceExpr) -> Certificate:
    """Category filtration certificate from the wild tower.

    Levels run from the deepest stratum outward.  When the deepest wild
    level has cycles it is refined through spanning trees of its graph
    cores; otherwise it consists of dendrite pieces.  Each later difference
    is a separated union of contractible pieces peeled from the next tower
    level.  The declared length equals cat(e).
    """
    prof = _finite_profile(e, "cat_certificate")
    n = prof.wrk
    levels = []
    if prof.top_b1 == 0:
        levels.append(CertificateLevel(
            "dendrite-pieces",
            f"wild level {n - 1}: finite disjoint union of dendrite pieces, "
            "categorical in one stratum"))
    else:
        levels.append(CertificateLevel(
            "spanning-tree-pieces",
            f"spanning trees of the graph cores of wild level {n - 1}"))
        levels.append(CertificateLevel(
            "graph-minus-tree-pieces",
            f"wild level {n - 1} minus the spanning trees: separated open "
            "arcs"))
    for j in range(n - 2, -1, -1):
        levels.append(CertificateLevel(
            "contractible-pieces",
            f"attach the separated contractible pieces of wild level {j} "
            f"missing level {j + 1}"))
    return Certificate("cat", tuple(levels), cat(e))


def tc_certificate(e: SpaceExpr) -> Certificate:
    """Complexity filtration certificate: product strata of the category
    tower with the terminal stratum refined by the simple-closed-curve
    class of the deepest wild level.  The declared length equals tc(e).
    """
    prof = _finite_profile(e, "tc_certificate")
    n = prof.wrk
    levels = []
    if prof.scc_class == "none":
        levels.append(CertificateLevel(
            "dendrite-pieces",
            f"F_1 x F_1: products of the dendrite pieces of wild level {n - 1}"))
    elif prof.scc_class == "one":
        levels.append(CertificateLevel(
            "circle-antidiagonal",
            f"anti-diagonal of the unique circle core of wild level {n - 1}, "
            "one point pair per remaining component pair"))
        levels.append(CertificateLevel(
            "product-box", "F_1 x F_1 completing the circle plan"))
    else:
        levels.append(CertificateLevel(
            "spanning-tree-pieces",
            f"K0: products T x T of spanning trees of the graph cores of "
            f"wild level {n - 1}"))
        levels.append(CertificateLevel(
            "graph-minus-tree-pieces",
            "K1: G x T united with T x G, evacuating one off-tree coordinate"))
        levels.append(CertificateLevel(
            "product-box", "K2: G x G = F_1 x F_1"))
    for k in range(3, 2 * n + 1):
        levels.append(CertificateLevel(
            "product-box",
            f"H_{k}: union of F_i x F_j over i + j = {k}"))
    return Certificate("tc", tuple(levels), tc(e))


def _rename_graph(g: MultiGraph, prefix: str) -> MultiGraph:
    if not prefix:
        return g
    return build_graph([prefix + v for v in g.vertices],
                       [(prefix + e.id, prefix + e.v0, prefix + e.v1)
                        for e in g.edges])


def _rename_point(p: GraphPoint, prefix: str) -> GraphPoint:
    if not prefix:
        return p
    if isinstance(p, Vertex):
        return Vertex(prefix + p.v)
    return EdgeInterior(prefix + p.edge, p.t)


def _subdivide(g: MultiGraph, cuts):
    """Split edges at the given parameters; returns the new graph and a map
    from (edge, parameter) to the created vertex id."""
    vs = list(g.vertices)
    es = []
    locate = {}
    for e in g.edges:
        ts = cuts.get(e.id)
        if not ts:
            es.append(e)
            continue
        prev = e.v0
        for k, t in enumerate(sorted(set(ts)), 1):
            nv = f"{e.id}_p{k}"
            vs.append(nv)
            locate[(e.id, t)] = nv
            es.append(Edge(f"{e.id}_s{k - 1}", prev, nv))
            prev = nv
        es.append(Edge(f"{e.id}_s{len(set(ts))}", prev, e.v1))
    return build_graph(vs, es), locate


def _expand(e: Node, depth: int, prefix: str) -> MultiGraph:
    base = _rename_graph(e.base, prefix)
    attach = []
    for i, att in enumerate(e.fin):
        sub_prefix = f"{prefix}a{i}_"
        sub = _expand(att.child, depth, sub_prefix)
        attach.append((_rename_point(att.at, prefix), sub,
                       _rename_point(att.anchor, sub_prefix)))
    for i, fam in enumerate(e.seq):
        cells = ([("v", v) for v in fam.subcomplex.vertices]
                 + [("e", eid) for eid in fam.subcomplex.edges])
        assigned = [cells[c % len(cells)] for c in range(depth)]
        edge_total = Counter(ref for ref in assigned if ref[0] == "e")
        edge_seen = Counter()
        for c, ref in enumerate(assigned):
            sub_prefix = f"{prefix}s{i}c{c}_"
            sub = _expand(fam.pattern, depth, sub_prefix)
            anchor = _rename_point(fam.anchor, sub_prefix)
            if ref[0] == "v":
                host = Vertex(prefix + ref[1])
            else:
                edge_seen[ref] += 1
                j, m = edge_seen[ref], edge_total[ref]
                host = EdgeInterior(prefix + ref[1], Fraction(j, m + 1))
            attach.append((host, sub, anchor))
    cuts = defaultdict(list)
    for host, _, _ in attach:
        if isinstance(host, EdgeInterior):
            cuts[host.edge].append(host.t)
    base, locate = _subdivide(base, cuts)
    vs = list(base.vertices)
    es = list(base.edges)
    for host, sub, anchor in attach:
        host_v = host.v if isinstance(host, Vertex) else locate[(host.edge, host.t)]
        if isinstance(anchor, EdgeInterior):
            sub, sub_locate = _subdivide(sub, {anchor.edge: [anchor.t]})
            anchor_v = sub_locate[(anchor.edge, anchor.t)]
        else:
            anchor_v = anchor.v
        vs.extend(v for v in sub.vertices if v != anchor_v)
        rename = lambda v: host_v if v == anchor_v else v
        es.extend(Edge(ed.id, rename(ed.v0), rename(ed.v1)) for ed in sub.edges)
    return build_graph(vs, es)


def truncate(e: SpaceExpr, depth: int) -> MultiGraph:
    """Finite approximation: replace every null-sequence family by ``depth``
    explicit copies of the recursively truncated pattern, attached at
    deterministic points of the subcomplex (vertices first in id order, then
    evenly spaced rational parameters along edges); finite attachments are
    expanded exactly.  Depth 0 keeps the base skeleton and attachments only.
    """
    if contains_atom(e):
        raise ExprError("cannot truncate an expression with opaque atoms")
    if depth < 0:
        raise ExprError("depth must be a natural number")
    return _expand(e, depth, "")

"""The five Kf-increasing operations on cacti, with exact certificates.

Each operation builds the "before" and "after" graphs from explicit parts,
evaluates both Kirchhoff indices with the resistance engine, and records
which side conditions of the corresponding inequality held.  No operation
trusts the inequality it is named after: ``delta`` is always measured.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from .canon import canonical_certificate
from .closed_forms import (
    CactusClassSpec,
    op3_gain,
    op4_gain_lower_bound,
    op5_gain,
    op2_transmission_gap,
)
from .constructions import (
    RootedGraph,
    build_extremal_chain,
    build_g_star_star,
    build_gadget_g10,
    build_gadget_g11,
    build_path,
    join,
)
from .graph import (
    CYCLE,
    Graph,
    GraphError,
    block_cut_tree,
    components,
    induced_subgraph,
    is_cactus,
    require_connected,
)
from .resistance import kirchhoff_index, resistance_matrix, vertex_transmission

STRICT = "strict"
WEAK = "weak"


class OperationDeclined(GraphError):
    """The requested operation would not increase Kf or its parts are unusable."""


@dataclass
class OperationCertificate:
    op_id: str
    before: Graph
    after: Graph
    kf_before: Fraction
    kf_after: Fraction
    hypotheses: dict = field(default_factory=dict)
    claim: str = STRICT
    details: dict = field(default_factory=dict)

    @property
    def delta(self) -> Fraction:
        return self.kf_after - self.kf_before

    @property
    def hypotheses_hold(self) -> bool:
        return all(self.hypotheses.values())

    @property
    def claim_holds(self):
        """``None`` when a hypothesis failed (no claim); otherwise whether the inequality held."""
        if not self.hypotheses_hold:
            return None
        return self.delta > 0 if self.claim == STRICT else self.delta >= 0

    def to_dict(self) -> dict:
        from .formats import format_rational, to_graph6

        def enc(v):
            if isinstance(v, Fraction):
                return format_rational(v)
            if isinstance(v, (list, tuple)):
                return [enc(x) for x in v]
            return v

        return {
            "op": self.op_id,
            "before": to_graph6(self.before),
            "after": to_graph6(self.after),
            "kf_before": format_rational(self.kf_before),
            "kf_after": format_rational(self.kf_after),
            "delta": format_rational(self.delta),
            "hypotheses": dict(self.hypotheses),
            "claim": self.claim,
            "claim_holds": self.claim_holds,
            "details": {k: enc(v) for k, v in self.details.items()},
        }


def _certificate(op_id, before, after, hypotheses, claim=STRICT, details=None):
    return OperationCertificate(
        op_id=op_id,
        before=before,
        after=after,
        kf_before=kirchhoff_index(before),
        kf_after=kirchhoff_index(after),
        hypotheses=hypotheses,
        claim=claim,
        details=details or {},
    )


def longest_path_endpoints(g: Graph, matrix=None) -> list[tuple[int, int]]:
    """All unordered pairs at maximum resistance distance, sorted."""
    require_connected(g)
    if g.order == 1:
        return [(0, 0)]
    r = matrix if matrix is not None else resistance_matrix(g)
    top = max(r[i][j] for i in range(g.order) for j in range(i + 1, g.order))
    return [(i, j) for i in range(g.order) for j in range(i + 1, g.order) if r[i][j] == top]


def _is_longest_pair(g: Graph, a: int, b: int, matrix) -> bool:
    return (min(a, b), max(a, b)) in longest_path_endpoints(g, matrix) or (g.order == 1)


def _attach(base: RootedGraph, at, part: RootedGraph, root) -> RootedGraph:
    return join(base, at, RootedGraph(part.graph, {}), part.vertex(root))


# Operation I --------------------------------------------------------------

def operation_I(x: RootedGraph, y: RootedGraph, z: RootedGraph, part: int = 1,
                y_root="a", z_root="b", mirror: bool = True) -> OperationCertificate:
    """Relocate attachments on ``X`` towards the ends of a longest path.

    ``x`` carries roots ``u``, ``v``, ``x1``, ``x2``.  ``G3`` hangs ``Y`` at
    ``u`` and ``Z`` at ``v``; ``G4`` moves ``Z`` to ``x2``; ``G5`` further
    moves ``Y`` to ``x1``.  Part 1 certifies G3 -> G4, part 2 G4 -> G5.  When
    the hypotheses fail and ``mirror`` is set, the roles of ``x1`` and
    ``x2`` are swapped and tried once more.
    """
    if part not in (1, 2):
        raise ValueError("part must be 1 or 2")
    X = x.graph
    require_connected(X)
    u, v, x1, x2 = (x.vertex(k) for k in ("u", "v", "x1", "x2"))
    r = resistance_matrix(X)
    trans = [sum(row, Fraction(0)) for row in r]

    def hypotheses(a1, a2):
        h = {
            "x1_x2_longest_path": _is_longest_pair(X, a1, a2, r),
            "resistance_order": 0 <= r[a1][u] <= r[a1][v] <= r[a1][a2],
            "y_nontrivial": y.order > 1,
            "z_nontrivial": z.order > 1,
        }
        if part == 1:
            h["transmission_v_le_x2"] = trans[v] <= trans[a2]
            h["z_moves"] = v != a2
        else:
            h["transmission_u_le_x1"] = trans[u] <= trans[a1]
            h["y_moves"] = u != a1
        return h

    a1, a2 = x1, x2
    hyp = hypotheses(a1, a2)
    orientation = "direct"
    if mirror and not all(hyp.values()):
        alt = hypotheses(x2, x1)
        if all(alt.values()):
            a1, a2, hyp, orientation = x2, x1, alt, "mirrored"

    base = RootedGraph(X, {})

    def build(ya, zb):
        g = _attach(base, ya, y, y_root)
        return _attach(g, zb, z, z_root).graph

    g3 = build(u, v)
    g4 = build(u, a2)
    if part == 1:
        before, after = g3, g4
    else:
        before, after = g4, build(a1, a2)
    details = {
        "orientation": orientation,
        "kf_v": trans[v], "kf_x2": trans[a2], "kf_u": trans[u], "kf_x1": trans[a1],
        # the proof additionally relies on this quantity being positive
        "r_u_x2_minus_r_u_v": r[u][a2] - r[u][v],
    }
    return _certificate("I", before, after, hyp, STRICT, details)


# Operation II -------------------------------------------------------------

def _cyclomatic(g: Graph) -> int:
    return g.size - g.order + 1


def operation_II(x: RootedGraph, s: int, g1: RootedGraph, g1_root="u_1") -> OperationCertificate:
    """Turn the pendent path hanging at ``x`` into an internal path.

    ``G6`` hangs ``P_s`` at ``x`` and ``G1`` at ``u_2``.  ``G7`` moves ``G1``
    to the far end of the path; ``G8`` instead hangs the path at ``u_2`` and
    ``G1`` at its far end.  ``G7`` is used when Kf_x(X) >= Kf_{u_2}(X).
    """
    X = x.graph
    require_connected(X)
    if _cyclomatic(X) < 1:
        raise OperationDeclined("X must contain at least one cycle")
    if s < 2:
        raise OperationDeclined("the hung path needs at least 2 vertices")
    xv, u2 = x.vertex("x"), x.vertex("u_2")
    r = resistance_matrix(X)
    kf_x = sum(r[xv], Fraction(0))
    kf_u2 = sum(r[u2], Fraction(0))
    p = build_path(s)
    m = join(RootedGraph(X, {"x": xv, "u_2": u2}), "x", p, "r_1", rename={"r_1": None, f"r_{s}": "r_s", "end": None})
    g6 = _attach(m, "u_2", g1, g1_root).graph
    g7 = _attach(m, "r_s", g1, g1_root).graph
    nn = join(RootedGraph(X, {"u_2": u2}), "u_2", p, "r_1", rename={"r_1": None, f"r_{s}": "r_s", "end": None})
    g8 = _attach(nn, "r_s", g1, g1_root).graph
    use_g7 = kf_x >= kf_u2
    gap_formula = op2_transmission_gap(s, X.order, r[u2][xv], kf_x, kf_u2)
    gap_measured = vertex_transmission(m.graph, m["r_s"]) - vertex_transmission(m.graph, m["u_2"])
    hyp = {
        "x_has_cycle": True,
        "u2_x_longest_path": _is_longest_pair(X, u2, xv, r),
        "path_order_at_least_2": s >= 2,
        "g1_nontrivial": g1.order > 1,
    }
    details = {
        "target": "G7" if use_g7 else "G8",
        "kf_x": kf_x,
        "kf_u2": kf_u2,
        "transmission_gap_formula": gap_formula,
        "transmission_gap_measured": gap_measured,
        "kf_g7": kirchhoff_index(g7),
        "kf_g8": kirchhoff_index(g8),
    }
    return _certificate("II", g6, g7 if use_g7 else g8, hyp, STRICT, details)


# Operations III-V ---------------------------------------------------------

def operation_III(g1: RootedGraph, k: int, g1_root="u_1") -> OperationCertificate:
    """Replace a ``k``-cycle hanging at ``u_1`` by a triangle with a tail of the same order."""
    if k <= 3:
        raise OperationDeclined("Operation III needs a cycle longer than a triangle")
    require_connected(g1.graph)
    before = build_g_star_star(k, g1, g1_root).graph
    after = build_gadget_g11(k, g1, g1_root).graph
    cf = op3_gain(k, g1.order)
    cert = _certificate("III", before, after, {"k_gt_3": True}, STRICT, {"closed_form_delta": cf})
    cert.details["matches_closed_form"] = cert.delta == cf
    return cert


def operation_IV(g1: RootedGraph, g2: RootedGraph, k: int, g1_root="u_1", g2_root="v_1") -> OperationCertificate:
    """A ``k``-cycle carrying ``G1`` and ``G2`` at opposite vertices becomes
    a triangle with a tail, ``G1`` at the tail end and ``G2`` on the triangle."""
    if k <= 3:
        raise OperationDeclined("Operation IV needs a cycle longer than a triangle")
    gss = build_g_star_star(k, g1, g1_root)
    g11 = build_gadget_g11(k, g1, g1_root)
    before = _attach(gss, "x", g2, g2_root).graph
    after = _attach(g11, "u_2", g2, g2_root).graph
    gap = vertex_transmission(g11.graph, g11["u_2"]) - vertex_transmission(gss.graph, gss["x"])
    lb = op4_gain_lower_bound(k)
    cert = _certificate("IV", before, after, {"k_gt_3": True}, STRICT, {"transmission_gap": gap, "lower_bound": lb})
    cert.details["delta_exceeds_scaled_gap"] = cert.delta > (g2.order - 1) * gap
    cert.details["gap_at_least_lower_bound"] = gap >= lb
    cert.details["delta_exceeds_lower_bound"] = cert.delta > lb
    return cert


def operation_V(g1: RootedGraph, g2: RootedGraph, k: int, g1_root="u_1", g2_root="v_1") -> OperationCertificate:
    """Swap the graphs hanging at the tail end and at the triangle of the gadget.

    Before: ``G1`` at the tail end, ``G2`` at a degree-2 triangle vertex.
    After: the larger ``G2`` at the tail end, ``G1`` on the triangle.
    Declines when ``|G1| > |G2|``, where the swap would lower Kf.
    """
    if k <= 3:
        raise OperationDeclined("Operation V needs k > 3")
    if g1.order > g2.order:
        raise OperationDeclined("|G1| > |G2|: swap the roles of G1 and G2")
    g10 = build_gadget_g10(k)
    g13 = _attach(_attach(g10, "r_{k-2}", g1, g1_root), "u_2", g2, g2_root).graph
    g14 = _attach(_attach(g10, "r_{k-2}", g2, g2_root), "u_2", g1, g1_root).graph
    cf = op5_gain(k, g1.order, g2.order)
    cert = _certificate("V", g13, g14, {"g1_not_larger": True}, WEAK, {"closed_form_delta": cf})
    cert.details["matches_closed_form"] = cert.delta == cf
    cert.details["equality_case"] = g1.order == g2.order
    return cert


# Canonicalisation driver ---------------------------------------------------

class CanonicalizationStuck(GraphError):
    pass


def _rooted_piece(g: Graph, vertices, **roots) -> RootedGraph:
    sub, index = induced_subgraph(g, vertices)
    return RootedGraph(sub, {label: index[v] for label, v in roots.items()})


def _branches(g: Graph, v: int, inside=()):
    """Components of ``g - v`` not meeting ``inside``, each with ``v`` added back."""
    inside = set(inside)
    out = []
    for comp in components(g, [v]):
        if not inside.intersection(comp):
            out.append(sorted(comp + [v]))
    return out


def _reach(g: Graph, start: int, blocked) -> list[int]:
    """Vertices reachable from ``start`` avoiding ``blocked`` (``start`` included)."""
    blocked = set(blocked)
    seen = {start}
    stack = [start]
    while stack:
        a = stack.pop()
        for b in g.adjacency[a]:
            if b not in seen and b not in blocked:
                seen.add(b)
                stack.append(b)
    return sorted(seen)


def _moves_I(g: Graph, bct):
    for v in sorted(bct.cut_vertices):
        for comp in components(g, [v]):
            rest = sorted(set(range(g.order)) - set(comp))
            if len(rest) < 2:
                continue
            X, xi = induced_subgraph(g, rest)
            Z = _rooted_piece(g, comp + [v], b=v)
            ends = longest_path_endpoints(X)
            for a, b in ends[:1]:
                for x1, x2 in ((a, b), (b, a)):
                    if x2 == xi[v]:
                        continue
                    xr = RootedGraph(X, {"u": x1, "v": xi[v], "x1": x1, "x2": x2})
                    yield lambda xr=xr, Z=Z: operation_I(xr, RootedGraph(Graph(1, [()]), {"a": 0}), Z, 1, mirror=False)


def _pendent_paths(g: Graph):
    """(attachment vertex, path vertices from attachment to leaf) for each pendent path."""
    for leaf in range(g.order):
        if g.degree(leaf) != 1:
            continue
        path = [leaf]
        prev, cur = None, leaf
        while True:
            nxt = [w for w in g.adjacency[cur] if w != prev]
            if len(nxt) != 1:
                break
            prev, cur = cur, nxt[0]
            path.append(cur)
            if g.degree(cur) != 2:
                break
        if g.degree(path[-1]) >= 3:
            yield path[-1], list(reversed(path))


def _moves_II(g: Graph, bct):
    for x, path in _pendent_paths(g):
        body = sorted(set(range(g.order)) - set(path[1:]))
        M, mi = induced_subgraph(g, body)
        for u2 in range(M.order):
            if u2 == mi[x]:
                continue
            for comp in components(M, [u2]):
                if mi[x] in comp:
                    continue
                xs = sorted(set(range(M.order)) - set(comp))
                Xg, xi = induced_subgraph(M, xs)
                if _cyclomatic(Xg) < 1:
                    continue
                g1 = _rooted_piece(M, comp + [u2], u_1=u2)
                xr = RootedGraph(Xg, {"x": xi[mi[x]], "u_2": xi[u2]})
                yield lambda xr=xr, s=len(path), g1=g1: operation_II(xr, s, g1)


def _cycle_attachments(g: Graph, block):
    return [v for v in block.vertices if g.degree(v) > 2]


def _moves_III_IV(g: Graph, bct):
    for block in bct.blocks:
        if block.kind != CYCLE or block.length <= 3:
            continue
        k = block.length
        ring = block.vertices
        heavy = _cycle_attachments(g, block)
        others = set(ring)
        if len(heavy) == 1:
            w = heavy[0]
            g1 = _rooted_piece(g, _reach(g, w, others - {w}), u_1=w)
            yield lambda g1=g1, k=k: operation_III(g1, k)
        elif len(heavy) == 2:
            for w, y in (heavy, heavy[::-1]):
                i, j = ring.index(w), ring.index(y)
                d = min(abs(i - j), k - abs(i - j))
                if d != k // 2:
                    continue
                g1 = _rooted_piece(g, _reach(g, w, others - {w}), u_1=w)
                g2 = _rooted_piece(g, _reach(g, y, others - {y}), v_1=y)
                yield lambda g1=g1, g2=g2, k=k: operation_IV(g1, g2, k)


def _moves_V(g: Graph, bct):
    for block in bct.blocks:
        if block.kind != CYCLE or block.length != 3:
            continue
        tri = set(block.vertices)
        for c in block.vertices:
            outside = [w for w in g.adjacency[c] if w not in tri]
            if len(outside) != 1:
                continue
            path = [c]
            prev, cur = c, outside[0]
            while g.degree(cur) == 2 and cur not in tri:
                path.append(cur)
                nxt = [w for w in g.adjacency[cur] if w != prev][0]
                prev, cur = cur, nxt
            path.append(cur)
            r = cur
            if r in tri:
                continue
            k = 3 + len(path) - 1
            p, q = sorted(tri - {c})
            for u2, b in ((p, q), (q, p)):
                if g.degree(b) != 2:
                    continue
                gadget = tri | set(path)
                g1v = _reach(g, r, gadget - {r})
                g2v = _reach(g, u2, gadget - {u2})
                if len(g1v) > len(g2v):
                    continue
                g1 = _rooted_piece(g, g1v, u_1=r)
                g2 = _rooted_piece(g, g2v, v_1=u2)
                yield lambda g1=g1, g2=g2, k=k: operation_V(g1, g2, k)


PHASES = (("I", _moves_I), ("II", _moves_II), ("III/IV", _moves_III_IV), ("V", _moves_V))


def _best_move(g: Graph):
    bct = block_cut_tree(g)
    for _, gen in PHASES:
        best = None
        for make in gen(g, bct):
            try:
                cert = make()
            except OperationDeclined:
                continue
            if cert.delta <= 0:
                continue
            key = (cert.delta, canonical_certificate(cert.after))
            if best is None or key > best[0]:
                best = (key, cert)
        if best is not None:
            return best[1]
    return None


def canonicalize_to_extremal(g: Graph, max_steps: int = 1000):
    """Apply Kf-increasing operations until the graph is isomorphic to C_{n,t}.

    Phases are tried in order I, II, III/IV, V; within the first phase that
    offers a strictly improving move, the largest gain wins.  Returns the
    final graph and the list of certificates applied.
    """
    ok, t = is_cactus(g)
    if not ok:
        raise GraphError("input is not a cactus")
    n = g.order
    if n < 5 or t < 2:
        raise GraphError("canonicalisation needs n >= 5 and t >= 2")
    target = canonical_certificate(build_extremal_chain(CactusClassSpec(n, t)).graph)
    trace = []
    current = g
    while canonical_certificate(current) != target:
        if len(trace) >= max_steps:
            raise CanonicalizationStuck(f"no convergence within {max_steps} steps")
        cert = _best_move(current)
        if cert is None:
            raise CanonicalizationStuck("no operation increases Kf, yet the graph is not the extremal chain")
        trace.append(cert)
        current = cert.after
    return current, trace

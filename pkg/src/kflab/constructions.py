"""Builders for the named graphs, each returned with its distinguished vertices."""

from dataclasses import dataclass, field
from fractions import Fraction

from .closed_forms import CactusClassSpec, FormulaDomainError
from .graph import Graph, GraphError, coalesce, cycle_graph, path_graph, require_connected
from .resistance import kirchhoff_index, vertex_transmission


@dataclass(frozen=True)
class RootedGraph:
    graph: Graph
    roots: dict = field(default_factory=dict)

    def __post_init__(self):
        for label, v in self.roots.items():
            if not isinstance(v, int) or not 0 <= v < self.graph.order:
                raise GraphError(f"root {label!r} = {v!r} is not a vertex of the graph")

    def __getitem__(self, label):
        return self.roots[label]

    @property
    def order(self):
        return self.graph.order

    def vertex(self, root) -> int:
        """Accept either a role label or a raw vertex id."""
        if isinstance(root, str):
            return self.roots[root]
        self.graph.check_vertex(root)
        return root

    def with_roots(self, **roots) -> "RootedGraph":
        return RootedGraph(self.graph, {**self.roots, **roots})


def join(a: RootedGraph, a_root, b: RootedGraph, b_root, rename=None) -> RootedGraph:
    """Coalesce ``a_root`` of ``a`` with ``b_root`` of ``b``.

    Roots of ``a`` keep their labels.  Roots of ``b`` are carried over under
    ``rename[label]`` (dropped when mapped to ``None``); unmapped labels keep
    their name and must not collide with labels of ``a``.
    """
    rename = rename or {}
    x1 = a.vertex(a_root)
    x2 = b.vertex(b_root)
    g, merged, image = coalesce(a.graph, x1, b.graph, x2)
    roots = dict(a.roots)
    for label, v in b.roots.items():
        new = rename.get(label, label)
        if new is None:
            continue
        if new in roots and roots[new] != image[v]:
            raise GraphError(f"root label {new!r} collides while joining")
        roots[new] = image[v]
    return RootedGraph(g, roots)


def trivial() -> RootedGraph:
    """The single-vertex graph, the identity for coalescence."""
    return RootedGraph(Graph(1, [()]), {"root": 0})


def build_path(m: int) -> RootedGraph:
    if m < 1:
        raise GraphError("path order must be at least 1")
    return RootedGraph(path_graph(m), {"r_1": 0, f"r_{m}": m - 1, "end": m - 1})


def build_cycle(l: int) -> RootedGraph:
    g = cycle_graph(l)
    # vertex 0 and the smallest vertex at maximum resistance from it
    return RootedGraph(g, {"w": 0, "x": l // 2})


def build_star(m: int) -> RootedGraph:
    if m < 1:
        raise GraphError("star order must be at least 1")
    return RootedGraph(Graph.from_edges(m, [(0, i) for i in range(1, m)]), {"center": 0})


def build_triangle_chain(k: int) -> RootedGraph:
    """Q_k: ``k`` triangles, consecutive ones sharing a single vertex.

    Triangle ``i`` (1-based) is on vertices ``2i-2, 2i-1, 2i``.  Root ``u``
    is vertex 0, a degree-2 vertex of the first terminal triangle, and
    ``v_end`` is vertex ``2k`` in the last one.
    """
    if k < 0:
        raise GraphError("k must be non-negative")
    if k == 0:
        return RootedGraph(Graph(1, [()]), {"u": 0, "v_end": 0})
    edges = []
    for i in range(1, k + 1):
        a, b, c = 2 * i - 2, 2 * i - 1, 2 * i
        edges += [(a, b), (b, c), (a, c)]
    return RootedGraph(Graph.from_edges(2 * k + 1, edges), {"u": 0, "v_end": 2 * k})


def build_F(k: int, s: int) -> RootedGraph:
    """(F, u) = (Q_k, u) + (P_s, r_1), with root ``r_s`` at the far path end."""
    q = build_triangle_chain(k)
    p = build_path(s)
    return join(q, "u", p, "r_1", rename={f"r_{s}": "r_s", "end": None}).with_roots(r_1=q["u"])


def build_extremal_chain(spec: CactusClassSpec) -> RootedGraph:
    """C_{n,t} = Q_k -- P_s -- Q_{t-k} with k = floor(t/2), s = n - 2t."""
    if not isinstance(spec, CactusClassSpec):
        spec = CactusClassSpec(*spec)
    k, s = spec.k, spec.s
    f = build_F(k, s)
    q2 = build_triangle_chain(spec.t - k)
    out = join(f, "r_s", q2, "u", rename={"u": "v", "v_end": None})
    return RootedGraph(out.graph, {"u": out["u"], "v": out["v"], "r_1": out["r_1"], "r_s": out["r_s"]})


def build_minimal_star(spec: CactusClassSpec) -> RootedGraph:
    """G^0(n, t): t triangles and n - 2t - 1 pendant edges sharing one centre."""
    if not isinstance(spec, CactusClassSpec):
        spec = CactusClassSpec(*spec)
    edges = []
    nxt = 1
    for _ in range(spec.t):
        a, b = nxt, nxt + 1
        edges += [(0, a), (0, b), (a, b)]
        nxt += 2
    while nxt < spec.n:
        edges.append((0, nxt))
        nxt += 1
    return RootedGraph(Graph.from_edges(spec.n, edges), {"center": 0})


def build_gadget_g10(k: int) -> RootedGraph:
    """A triangle with a path hanging from one corner, ``k`` vertices in total.

    Vertices 0, 1, 2 form the triangle; the path is 0, 3, 4, ..., k-1.
    Roots: ``u_2`` (degree-2 triangle vertex), ``a`` (the other degree-2
    triangle vertex), ``r_1`` (triangle corner carrying the path) and
    ``r_{k-2}`` (free path end).
    """
    if k <= 3:
        raise FormulaDomainError("gadget needs k > 3")
    edges = [(0, 1), (1, 2), (0, 2)]
    prev = 0
    for v in range(3, k):
        edges.append((prev, v))
        prev = v
    return RootedGraph(Graph.from_edges(k, edges), {"u_2": 1, "a": 2, "r_1": 0, "r_{k-2}": k - 1})


def build_gadget_g11(k: int, g1: RootedGraph, root="u_1") -> RootedGraph:
    """(G_11, u) = (G_1, u_1) + (G_10, r_{k-2})."""
    g10 = build_gadget_g10(k)
    out = join(RootedGraph(g1.graph, {"u": g1.vertex(root)}), "u", g10, "r_{k-2}", rename={"r_{k-2}": None})
    return out


def build_g_star_star(k: int, g1: RootedGraph, root="u_1") -> RootedGraph:
    """(G**, u) = (G_1, u_1) + (C_k, w); root ``x`` is the cycle vertex farthest from ``w``."""
    if k <= 3:
        raise FormulaDomainError("cycle length must exceed 3")
    c = build_cycle(k)
    return join(RootedGraph(g1.graph, {"u": g1.vertex(root)}), "u", c, "w", rename={"w": None})


BUILDERS = {
    "path": (build_path, 1),
    "cycle": (build_cycle, 1),
    "star": (build_star, 1),
    "qchain": (build_triangle_chain, 1),
    "cnt": (lambda n, t: build_extremal_chain(CactusClassSpec(n, t)), 2),
    "g0": (lambda n, t: build_minimal_star(CactusClassSpec(n, t)), 2),
    "g10": (build_gadget_g10, 1),
}


def build_named(name: str, *params: int) -> RootedGraph:
    try:
        fn, arity = BUILDERS[name]
    except KeyError:
        raise GraphError(f"unknown construction {name!r}; choose from {', '.join(BUILDERS)}") from None
    if len(params) != arity:
        raise GraphError(f"{name} takes {arity} integer parameter(s), got {len(params)}")
    return fn(*params)


def compose_kf(g1: RootedGraph, x1, g2: RootedGraph, x2) -> Fraction:
    """Kf of the coalescence at ``x1``/``x2`` from the parts alone, without building it."""
    a, b = g1.graph, g2.graph
    require_connected(a)
    require_connected(b)
    v1, v2 = g1.vertex(x1), g2.vertex(x2)
    n1, n2 = a.order - 1, b.order - 1
    return (kirchhoff_index(a) + kirchhoff_index(b)
            + n1 * vertex_transmission(b, v2) + n2 * vertex_transmission(a, v1))

"""Simple undirected graphs on dense vertex ids, plus cactus structure queries."""

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence


class GraphError(ValueError):
    """Malformed graph input or an operation undefined for the given graph."""


class DisconnectedGraphError(GraphError):
    pass


class Graph:
    """Immutable simple graph on vertices ``0..n-1``.

    ``adjacency[v]`` is a sorted tuple of the neighbours of ``v``.
    """

    __slots__ = ("order", "adjacency", "_edges")

    def __init__(self, order: int, adjacency: Sequence[Iterable[int]]):
        if order < 1:
            raise GraphError("a graph needs at least one vertex")
        if len(adjacency) != order:
            raise GraphError(f"expected {order} adjacency rows, got {len(adjacency)}")
        adj = []
        for v, row in enumerate(adjacency):
            row = tuple(sorted(row))
            if len(set(row)) != len(row):
                raise GraphError(f"multi-edge at vertex {v}")
            for w in row:
                if not 0 <= w < order:
                    raise GraphError(f"neighbour {w} of {v} out of range")
                if w == v:
                    raise GraphError(f"self-loop at vertex {v}")
            adj.append(row)
        for v, row in enumerate(adj):
            for w in row:
                if v not in adj[w]:
                    raise GraphError(f"asymmetric adjacency between {v} and {w}")
        self.order = order
        self.adjacency = tuple(adj)
        self._edges = None

    @classmethod
    def from_edges(cls, order: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [set() for _ in range(order)]
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < order and 0 <= v < order):
                raise GraphError(f"edge ({u}, {v}) out of range for order {order}")
            if v in rows[u]:
                raise GraphError(f"duplicate edge ({u}, {v})")
            rows[u].add(v)
            rows[v].add(u)
        return cls(order, rows)

    def __len__(self):
        return self.order

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.order == other.order and self.adjacency == other.adjacency

    def __hash__(self):
        return hash((self.order, self.adjacency))

    def __repr__(self):
        return f"Graph(order={self.order}, edges={list(self.edges())})"

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def edges(self) -> tuple[tuple[int, int], ...]:
        """Edges as sorted ``(u, v)`` pairs with ``u < v``, in lexicographic order."""
        if self._edges is None:
            self._edges = tuple((u, v) for u in range(self.order) for v in self.adjacency[u] if u < v)
        return self._edges

    @property
    def size(self) -> int:
        return len(self.edges())

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
        if sorted(perm) != list(range(self.order)):
            raise GraphError("relabelling must be a permutation of 0..n-1")
        return Graph.from_edges(self.order, ((perm[u], perm[v]) for u, v in self.edges()))

    def check_vertex(self, *vs: int) -> None:
        for v in vs:
            if not isinstance(v, int) or not 0 <= v < self.order:
                raise GraphError(f"vertex {v!r} is not a valid id for a graph of order {self.order}")


def bfs_distances(g: Graph, source: int) -> list:
    """Hop distances from ``source``; unreachable vertices get ``None``."""
    dist = [None] * g.order
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for w in g.adjacency[v]:
            if dist[w] is None:
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist


def is_connected(g: Graph) -> bool:
    return None not in bfs_distances(g, 0)


def require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise DisconnectedGraphError("graph is disconnected")


def shortest_path_distance(g: Graph, u: int, v: int) -> int:
    g.check_vertex(u, v)
    dist = bfs_distances(g, u)
    if None in dist:
        raise DisconnectedGraphError("graph is disconnected")
    return dist[v]


def components(g: Graph, removed: Iterable[int] = ()) -> list[list[int]]:
    """Connected components of ``g`` with the vertices in ``removed`` deleted."""
    removed = set(removed)
    seen = set(removed)
    comps = []
    for s in range(g.order):
        if s in seen:
            continue
        seen.add(s)
        comp = [s]
        stack = [s]
        while stack:
            v = stack.pop()
            for w in g.adjacency[v]:
                if w not in seen:
                    seen.add(w)
                    comp.append(w)
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


EDGE = "edge"
CYCLE = "cycle"
OTHER = "other"


@dataclass(frozen=True)
class Block:
    """A biconnected component.

    ``vertices`` is in cyclic order for cycle blocks and sorted otherwise.
    """

    kind: str
    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]

    @property
    def length(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class BlockCutTree:
    blocks: tuple[Block, ...]
    cut_vertices: frozenset
    # (block index, cut vertex) incidences
    tree_edges: tuple[tuple[int, int], ...]

    def blocks_at(self, v: int) -> list[int]:
        return [i for i, b in enumerate(self.blocks) if v in b.vertices]

    @property
    def cycle_count(self) -> int:
        return sum(1 for b in self.blocks if b.kind == CYCLE)

    @property
    def is_cactus(self) -> bool:
        return all(b.kind != OTHER for b in self.blocks)


def _cycle_order(vertices: Iterable[int], edges) -> tuple[int, ...]:
    nbrs = {v: [] for v in vertices}
    for a, b in edges:
        nbrs[a].append(b)
        nbrs[b].append(a)
    start = min(nbrs)
    order = [start]
    prev, cur = None, start
    # walk towards the smaller neighbour first so the order is deterministic
    nxt = min(nbrs[start])
    while nxt != start:
        order.append(nxt)
        prev, cur = cur, nxt
        a, b = nbrs[cur]
        nxt = b if a == prev else a
    return tuple(order)


def _classify(vertices, edges) -> Block:
    vs = sorted(vertices)
    es = tuple(sorted(edges))
    if len(es) == 1:
        return Block(EDGE, tuple(vs), es)
    if len(es) == len(vs) and all(sum(1 for e in es if v in e) == 2 for v in vs):
        return Block(CYCLE, _cycle_order(vs, es), es)
    return Block(OTHER, tuple(vs), es)


def block_cut_tree(g: Graph) -> BlockCutTree:
    """Biconnected components via an iterative lowpoint depth-first search."""
    require_connected(g)
    n = g.order
    if n == 1:
        return BlockCutTree((), frozenset(), ())
    disc = [-1] * n
    low = [0] * n
    timer = 0
    edge_stack = []
    raw_blocks = []
    cuts = set()

    disc[0] = low[0] = timer
    timer += 1
    root_children = 0
    stack = [(0, -1, iter(g.adjacency[0]))]
    while stack:
        v, parent, it = stack[-1]
        advanced = False
        for w in it:
            if disc[w] == -1:
                edge_stack.append((min(v, w), max(v, w)))
                disc[w] = low[w] = timer
                timer += 1
                stack.append((w, v, iter(g.adjacency[w])))
                advanced = True
                break
            if w != parent and disc[w] < disc[v]:
                edge_stack.append((min(v, w), max(v, w)))
                low[v] = min(low[v], disc[w])
        if advanced:
            continue
        stack.pop()
        if parent == -1:
            continue
        low[parent] = min(low[parent], low[v])
        if low[v] >= disc[parent]:
            if parent == 0:
                root_children += 1
            else:
                cuts.add(parent)
            key = (min(parent, v), max(parent, v))
            block_edges = []
            while True:
                e = edge_stack.pop()
                block_edges.append(e)
                if e == key:
                    break
            verts = {x for e in block_edges for x in e}
            raw_blocks.append((verts, block_edges))
    if root_children > 1:
        cuts.add(0)

    blocks = sorted((_classify(vs, es) for vs, es in raw_blocks), key=lambda b: (min(b.vertices), b.edges))
    tree_edges = tuple((i, c) for i, b in enumerate(blocks) for c in sorted(cuts) if c in b.vertices)
    return BlockCutTree(tuple(blocks), frozenset(cuts), tree_edges)


def is_cactus(g: Graph) -> tuple[bool, int]:
    """Return ``(True, t)`` for a cactus with ``t`` cycles, else ``(False, 0)``."""
    if not is_connected(g):
        return False, 0
    bct = block_cut_tree(g)
    if not bct.is_cactus:
        return False, 0
    return True, bct.cycle_count


def coalesce(g1: Graph, x1: int, g2: Graph, x2: int) -> tuple[Graph, int, list[int]]:
    """Identify ``x1`` of ``g1`` with ``x2`` of ``g2``.

    Vertices of ``g1`` keep their ids; the remaining vertices of ``g2`` are
    appended in increasing order.  Returns the new graph, the id of the
    merged vertex (``x1``) and the map from ``g2`` ids to new ids.
    """
    g1.check_vertex(x1)
    g2.check_vertex(x2)
    image = [0] * g2.order
    nxt = g1.order
    for v in range(g2.order):
        if v == x2:
            image[v] = x1
        else:
            image[v] = nxt
            nxt += 1
    edges = list(g1.edges()) + [(image[a], image[b]) for a, b in g2.edges()]
    return Graph.from_edges(nxt, edges), x1, image


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, dict]:
    """Subgraph on ``vertices`` relabelled densely in increasing id order.

    Returns the subgraph and the map old id -> new id.
    """
    vs = sorted(set(vertices))
    index = {v: i for i, v in enumerate(vs)}
    edges = [(index[a], index[b]) for a, b in g.edges() if a in index and b in index]
    return Graph.from_edges(len(vs), edges), index


def path_graph(m: int) -> Graph:
    return Graph.from_edges(m, [(i, i + 1) for i in range(m - 1)])


def cycle_graph(m: int) -> Graph:
    if m < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return Graph.from_edges(m, [(i, (i + 1) % m) for i in range(m)])

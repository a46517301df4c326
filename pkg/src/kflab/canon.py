"""Canonical labelling by partition refinement and individualisation.

The search tree is the usual one: refine an ordered vertex partition to an
equitable one, individualise each vertex of the first non-singleton cell in
turn, and recurse.  Every discrete leaf gives a relabelling; the canonical
form is the lexicographically smallest relabelled edge list over all leaves.
Automorphisms found at leaves prune sibling subtrees (orbit pruning) and let
the search abandon subtrees that are images of ones already explored.
"""

import os

from .formats import to_graph6
from .graph import Graph, GraphError

DEFAULT_CANON_LIMIT = 16


class CanonicalizationLimitError(GraphError):
    pass


def _refine(g: Graph, colors: list[int]) -> list[int]:
    ncolors = len(set(colors))
    adj = g.adjacency
    while True:
        sigs = [(colors[v], tuple(sorted(colors[w] for w in adj[v]))) for v in range(g.order)]
        ranks = {s: i for i, s in enumerate(sorted(set(sigs)))}
        colors = [ranks[s] for s in sigs]
        if len(ranks) == ncolors:
            return colors
        ncolors = len(ranks)


def _individualize(colors: list[int], v: int) -> list[int]:
    keyed = [(c, 0 if x == v else 1) for x, c in enumerate(colors)]
    ranks = {k: i for i, k in enumerate(sorted(set(keyed)))}
    return [ranks[k] for k in keyed]


def _target_cell(colors: list[int]):
    cells = {}
    for v, c in enumerate(colors):
        cells.setdefault(c, []).append(v)
    for c in sorted(cells):
        if len(cells[c]) > 1:
            return cells[c]
    return None


def _form(g: Graph, colors: list[int]) -> tuple:
    return tuple(sorted((min(colors[u], colors[v]), max(colors[u], colors[v])) for u, v in g.edges()))


class _Jump(Exception):
    def __init__(self, level):
        self.level = level


class _Search:
    def __init__(self, g: Graph):
        self.g = g
        self.first = None  # (path, form, labelling)
        self.best = None
        self.generators = []

    def _orbit_roots(self, path):
        """Union-find over the automorphisms found so far that fix ``path`` pointwise."""
        n = self.g.order
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for gamma in self.generators:
            if any(gamma[p] != p for p in path):
                continue
            for x in range(n):
                a, b = find(x), find(gamma[x])
                if a != b:
                    parent[max(a, b)] = min(a, b)
        return find

    def _automorphism(self, labelling, other):
        # maps a vertex to the vertex holding the same position in ``other``
        inverse = [0] * len(other)
        for v, pos in enumerate(other):
            inverse[pos] = v
        return [inverse[labelling[v]] for v in range(len(labelling))]

    def leaf(self, path, colors):
        form = _form(self.g, colors)
        if self.first is None:
            self.first = self.best = (path, form, colors)
            return
        for ref in (self.first, self.best):
            if form == ref[1]:
                self.generators.append(self._automorphism(colors, ref[2]))
                common = 0
                while common < len(path) and common < len(ref[0]) and path[common] == ref[0][common]:
                    common += 1
                raise _Jump(common)
        if form < self.best[1]:
            self.best = (path, form, colors)

    def run(self, path, colors):
        cell = _target_cell(colors)
        if cell is None:
            self.leaf(path, colors)
            return
        explored = []
        for v in cell:
            if explored:
                find = self._orbit_roots(path)
                if any(find(v) == find(w) for w in explored):
                    continue
            explored.append(v)
            try:
                self.run(path + [v], _refine(self.g, _individualize(colors, v)))
            except _Jump as jump:
                if jump.level < len(path):
                    raise
                # the subtree under ``v`` is an automorphic image of one already seen


def canonical_labelling(g: Graph, limit: int = None) -> list[int]:
    """Permutation ``perm`` such that ``g.relabel(perm)`` is the canonical form."""
    if limit is None:
        limit = int(os.environ.get("KFLAB_CANON_LIMIT", DEFAULT_CANON_LIMIT))
    if g.order > limit:
        raise CanonicalizationLimitError(
            f"order {g.order} exceeds the canonicalisation limit {limit}; "
            "raise the limit explicitly if the exponential worst case is acceptable"
        )
    search = _Search(g)
    search.run([], _refine(g, [0] * g.order))
    return search.best[2]


def canonical_form(g: Graph, limit: int = None) -> Graph:
    return g.relabel(canonical_labelling(g, limit))


def canonical_certificate(g: Graph, limit: int = None) -> bytes:
    """Isomorphism-class key: the graph6 encoding of the canonical form."""
    return to_graph6(canonical_form(g, limit)).encode("ascii")


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.order != h.order or g.size != h.size:
        return False
    return canonical_certificate(g) == canonical_certificate(h)

"""Exact effective resistances with unit resistors on every edge.

Two independent routes are provided.  The Laplacian route works for any
connected graph and solves the grounded Laplacian system over the rationals.
The cactus route sums closed-form block contributions along the block-cut
tree and is only valid when every block is an edge or a cycle.
"""

from fractions import Fraction

from .graph import (
    CYCLE,
    EDGE,
    BlockCutTree,
    Graph,
    GraphError,
    block_cut_tree,
    require_connected,
)


class NotACactusError(GraphError):
    pass


def grounded_laplacian(g: Graph) -> list[list[Fraction]]:
    """Laplacian with the row and column of vertex ``n - 1`` removed."""
    m = g.order - 1
    rows = [[Fraction(0)] * m for _ in range(m)]
    for v in range(m):
        rows[v][v] = Fraction(g.degree(v))
        for w in g.adjacency[v]:
            if w < m:
                rows[v][w] = Fraction(-1)
    return rows


class LaplacianFactor:
    """PLU factorisation of the grounded Laplacian over the rationals.

    Pivots are chosen by largest absolute value in the column.  Vertex
    ``n - 1`` is the ground and has potential zero in every solve.
    """

    def __init__(self, g: Graph):
        require_connected(g)
        self.order = g.order
        m = g.order - 1
        a = grounded_laplacian(g)
        perm = list(range(m))
        for col in range(m):
            piv = max(range(col, m), key=lambda r: abs(a[r][col]))
            if a[piv][col] == 0:
                raise GraphError("grounded Laplacian is singular")
            if piv != col:
                a[col], a[piv] = a[piv], a[col]
                perm[col], perm[piv] = perm[piv], perm[col]
            pivot_row = a[col]
            p = pivot_row[col]
            for r in range(col + 1, m):
                row = a[r]
                if row[col] == 0:
                    continue
                f = row[col] / p
                row[col] = f
                for c in range(col + 1, m):
                    if pivot_row[c]:
                        row[c] -= f * pivot_row[c]
        self._lu = a
        self._perm = perm

    def solve(self, rhs: list) -> list[Fraction]:
        """Potentials at all ``n`` vertices (ground last) for injected currents ``rhs``."""
        m = self.order - 1
        lu = self._lu
        y = [Fraction(rhs[self._perm[i]]) for i in range(m)]
        for i in range(m):
            row = lu[i]
            s = y[i]
            for j in range(i):
                if row[j]:
                    s -= row[j] * y[j]
            y[i] = s
        x = [Fraction(0)] * m
        for i in range(m - 1, -1, -1):
            row = lu[i]
            s = y[i]
            for j in range(i + 1, m):
                if row[j]:
                    s -= row[j] * x[j]
            x[i] = s / row[i]
        return x + [Fraction(0)]

    def resistance(self, u: int, v: int) -> Fraction:
        if u == v:
            return Fraction(0)
        rhs = [0] * (self.order - 1)
        if u < self.order - 1:
            rhs[u] += 1
        if v < self.order - 1:
            rhs[v] -= 1
        x = self.solve(rhs)
        return x[u] - x[v]

    def inverse_columns(self) -> list[list[Fraction]]:
        """Columns of the inverse grounded Laplacian, padded with the ground."""
        m = self.order - 1
        cols = []
        for s in range(m):
            e = [0] * m
            e[s] = 1
            cols.append(self.solve(e))
        return cols


def effective_resistance_laplacian(g: Graph, u: int, v: int) -> Fraction:
    g.check_vertex(u, v)
    factor = LaplacianFactor(g)
    return factor.resistance(u, v)


def _cycle_resistance(length: int, d: int) -> Fraction:
    return Fraction(d * (length - d), length)


def _block_resistances(bct: BlockCutTree):
    """For each block, a function giving the resistance between two of its vertices."""
    out = []
    for b in bct.blocks:
        if b.kind == EDGE:
            out.append(None)
        elif b.kind == CYCLE:
            out.append({v: i for i, v in enumerate(b.vertices)})
        else:
            raise NotACactusError("graph is not a cactus; use effective_resistance_laplacian")
    return out


def _cactus_transmissions(g: Graph, bct: BlockCutTree, source: int) -> list[Fraction]:
    positions = _block_resistances(bct)
    vertex_blocks = [[] for _ in range(g.order)]
    for i, b in enumerate(bct.blocks):
        for v in b.vertices:
            vertex_blocks[v].append(i)
    dist = [None] * g.order
    dist[source] = Fraction(0)
    used = [False] * len(bct.blocks)
    stack = [source]
    while stack:
        x = stack.pop()
        for bi in vertex_blocks[x]:
            if used[bi]:
                continue
            used[bi] = True
            b = bct.blocks[bi]
            pos = positions[bi]
            for y in b.vertices:
                if y == x:
                    continue
                if pos is None:
                    r = Fraction(1)
                else:
                    d = abs(pos[x] - pos[y])
                    r = _cycle_resistance(b.length, d)
                dist[y] = dist[x] + r
                stack.append(y)
    return dist


def effective_resistance_cactus(g: Graph, u: int, v: int, bct: BlockCutTree = None) -> Fraction:
    """Resistance in a cactus by summing block contributions along the block path.

    An edge block contributes 1; a cycle of length ``l`` between vertices at
    cycle distance ``d`` contributes ``d (l - d) / l``.
    """
    g.check_vertex(u, v)
    if bct is None:
        bct = block_cut_tree(g)
    if not bct.is_cactus:
        raise NotACactusError("graph is not a cactus; use effective_resistance_laplacian")
    return _cactus_transmissions(g, bct, u)[v]


def resistance_matrix(g: Graph, method: str = "auto") -> list[list[Fraction]]:
    """Full symmetric resistance table.

    ``method`` is ``"auto"`` (cactus route when possible), ``"cactus"`` or
    ``"laplacian"``.
    """
    require_connected(g)
    n = g.order
    if method not in ("auto", "cactus", "laplacian"):
        raise ValueError(f"unknown method {method!r}")
    if method != "laplacian":
        bct = block_cut_tree(g)
        if bct.is_cactus:
            return [_cactus_transmissions(g, bct, s) for s in range(n)]
        if method == "cactus":
            raise NotACactusError("graph is not a cactus; use the laplacian method")
    if n == 1:
        return [[Fraction(0)]]
    cols = LaplacianFactor(g).inverse_columns()
    # inverse grounded Laplacian entries; ground row/column are zero
    diag = [cols[i][i] for i in range(n - 1)] + [Fraction(0)]

    def inv(i, j):
        if i == n - 1 or j == n - 1:
            return Fraction(0)
        return cols[j][i]

    out = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            r = diag[i] + diag[j] - 2 * inv(i, j)
            out[i][j] = out[j][i] = r
    return out


def kirchhoff_index(g: Graph, method: str = "auto") -> Fraction:
    r = resistance_matrix(g, method)
    return sum((r[i][j] for i in range(g.order) for j in range(i + 1, g.order)), Fraction(0))


def vertex_transmission(g: Graph, x: int, method: str = "auto") -> Fraction:
    g.check_vertex(x)
    require_connected(g)
    if method != "laplacian":
        bct = block_cut_tree(g)
        if bct.is_cactus:
            return sum(_cactus_transmissions(g, bct, x), Fraction(0))
        if method == "cactus":
            raise NotACactusError("graph is not a cactus; use the laplacian method")
    factor = LaplacianFactor(g)
    return sum((factor.resistance(x, y) for y in range(g.order)), Fraction(0))


def foster_sum(g: Graph, method: str = "auto") -> Fraction:
    """Sum of resistances over the edges; equals ``n - 1`` for connected graphs."""
    r = resistance_matrix(g, method)
    return sum((r[u][v] for u, v in g.edges()), Fraction(0))

"""Text formats: edge lists, graph6, and exact rational strings."""

from fractions import Fraction

from .graph import Graph, GraphError


class ParseError(GraphError):
    pass


def format_rational(q) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(s: str) -> Fraction:
    return Fraction(s)


def approx_suffix(q) -> str:
    """Display-only float approximation, clearly marked."""
    return f"{format_rational(q)} (approx {float(q):.6g})"


def to_edge_list(g: Graph) -> str:
    lines = [f"{g.order} {g.size}"]
    lines += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def from_edge_list(text: str) -> Graph:
    rows = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not rows:
        raise ParseError("empty edge list")
    try:
        n, m = (int(x) for x in rows[0])
    except ValueError as exc:
        raise ParseError(f"bad header {' '.join(rows[0])!r}; expected 'n m'") from exc
    if len(rows) - 1 != m:
        raise ParseError(f"header announces {m} edges but {len(rows) - 1} follow")
    edges = []
    for row in rows[1:]:
        if len(row) != 2:
            raise ParseError(f"bad edge line {' '.join(row)!r}")
        try:
            edges.append((int(row[0]), int(row[1])))
        except ValueError as exc:
            raise ParseError(f"bad edge line {' '.join(row)!r}") from exc
    try:
        return Graph.from_edges(n, edges)
    except GraphError as exc:
        raise ParseError(str(exc)) from exc


def _encode_n(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    raise GraphError("graph6 orders above 258047 are not supported")


def to_graph6(g: Graph) -> str:
    n = g.order
    bits = []
    for j in range(1, n):
        row = g.adjacency[j]
        for i in range(j):
            bits.append(1 if i in row else 0)
    bits += [0] * (-len(bits) % 6)
    body = []
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        body.append(chr(val + 63))
    return _encode_n(n) + "".join(body)


def from_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise ParseError("empty graph6 string")
    if any(not 63 <= ord(c) <= 126 for c in s):
        raise ParseError("graph6 characters must lie in the range 63..126")
    if s[0] == "~":
        if len(s) > 1 and s[1] == "~":
            raise ParseError("graph6 orders above 258047 are not supported")
        if len(s) < 4:
            raise ParseError("truncated graph6 order field")
        n = 0
        for c in s[1:4]:
            n = (n << 6) | (ord(c) - 63)
        body = s[4:]
    else:
        n = ord(s[0]) - 63
        body = s[1:]
    need = n * (n - 1) // 2
    if len(body) != (need + 5) // 6:
        raise ParseError(f"graph6 body length {len(body)} does not match order {n}")
    bits = []
    for c in body:
        val = ord(c) - 63
        bits += [(val >> s_) & 1 for s_ in range(5, -1, -1)]
    if any(bits[need:]):
        raise ParseError("graph6 padding bits must be zero")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    try:
        return Graph.from_edges(n, edges)
    except GraphError as exc:
        raise ParseError(str(exc)) from exc


def read_graph(text: str) -> Graph:
    """Parse either format: a first line of two integers means an edge list."""
    first = next((ln for ln in text.splitlines() if ln.strip()), "")
    if len(first.split()) == 2 and all(t.lstrip("-").isdigit() for t in first.split()):
        return from_edge_list(text)
    return from_graph6(first)


def read_graph6_lines(text: str) -> list[Graph]:
    return [from_graph6(ln) for ln in text.splitlines() if ln.strip()]

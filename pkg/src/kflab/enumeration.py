"""Exhaustive generation of Cat(n; t) up to isomorphism, and extremal scans.

Every cactus has a leaf block, so every member of Cat(n; t) arises from a
smaller cactus by gluing one edge or one cycle at a single vertex.  Growing
from K_1 and deduplicating each intermediate layer by canonical certificate
therefore reaches every isomorphism class exactly once.
"""

import os
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from .canon import DEFAULT_CANON_LIMIT, canonical_certificate, canonical_form
from .closed_forms import CactusClassSpec
from .constructions import build_extremal_chain, build_minimal_star
from .graph import Graph, GraphError
from .resistance import kirchhoff_index

DEFAULT_MAX_N = 12


class EnumerationLimitError(GraphError):
    pass


def max_order() -> int:
    """Enumeration cap, overridable through ``KFLAB_MAX_N``."""
    raw = os.environ.get("KFLAB_MAX_N")
    if raw is None:
        return DEFAULT_MAX_N
    try:
        value = int(raw)
    except ValueError:
        raise EnumerationLimitError(f"KFLAB_MAX_N must be an integer, got {raw!r}") from None
    if not 1 <= value <= DEFAULT_CANON_LIMIT:
        raise EnumerationLimitError(f"KFLAB_MAX_N must lie in 1..{DEFAULT_CANON_LIMIT}")
    return value


def _as_spec(spec) -> CactusClassSpec:
    return spec if isinstance(spec, CactusClassSpec) else CactusClassSpec(*spec)


def _glue_edge(g: Graph, x: int) -> Graph:
    return Graph.from_edges(g.order + 1, list(g.edges()) + [(x, g.order)])


def _glue_cycle(g: Graph, x: int, length: int) -> Graph:
    n = g.order
    ring = [x] + list(range(n, n + length - 1))
    edges = list(g.edges()) + [(ring[i], ring[(i + 1) % length]) for i in range(length)]
    return Graph.from_edges(n + length - 1, edges)


def enumerate_cacti(spec, limit: int = None) -> list[Graph]:
    """One canonical representative per isomorphism class of Cat(n; t), sorted by certificate."""
    spec = _as_spec(spec)
    cap = max_order() if limit is None else limit
    if spec.n > cap:
        raise EnumerationLimitError(f"n = {spec.n} exceeds the enumeration cap {cap} (set KFLAB_MAX_N to raise it)")
    n, t = spec.n, spec.t

    def viable(v, c):
        return v <= n and c <= t and n - v >= 2 * (t - c)

    layers = {(1, 0): {canonical_certificate(Graph(1, [()])): Graph(1, [()])}}
    for v in range(1, n + 1):
        for c in range(0, t + 1):
            layer = layers.get((v, c))
            if not layer or (v, c) == (n, t):
                continue
            for cert in sorted(layer):
                g = layer[cert]
                for x in range(g.order):
                    if viable(v + 1, c):
                        h = canonical_form(_glue_edge(g, x))
                        layers.setdefault((v + 1, c), {}).setdefault(canonical_certificate(h), h)
                    for length in range(3, n - v + 2):
                        if not viable(v + length - 1, c + 1):
                            continue
                        h = canonical_form(_glue_cycle(g, x, length))
                        layers.setdefault((v + length - 1, c + 1), {}).setdefault(canonical_certificate(h), h)
            del layers[(v, c)]
    final = layers.get((n, t), {})
    return [final[c] for c in sorted(final)]


def random_cactus(n: int, t: int, seed: int) -> Graph:
    """A random member of Cat(n; t), deterministic per ``seed``.

    Blocks are drawn and glued at uniformly chosen existing vertices, so the
    distribution is uniform over construction choices, NOT over isomorphism
    classes.
    """
    spec = CactusClassSpec(n, t)
    rng = random.Random(seed)
    lengths = [3] * spec.t
    spare = n - 1 - 2 * spec.t
    edges_blocks = 0
    for _ in range(spare):
        if lengths and rng.random() < 0.35:
            lengths[rng.randrange(len(lengths))] += 1
        else:
            edges_blocks += 1
    blocks = lengths + [2] * edges_blocks
    rng.shuffle(blocks)
    g = Graph(1, [()])
    for size in blocks:
        x = rng.randrange(g.order)
        g = _glue_edge(g, x) if size == 2 else _glue_cycle(g, x, size)
    perm = list(range(g.order))
    rng.shuffle(perm)
    return g.relabel(perm)


def _kf_task(g6: str) -> Fraction:
    from .formats import from_graph6

    return kirchhoff_index(from_graph6(g6))


def evaluate_kf(graphs: list[Graph], jobs: int = 1) -> list[Fraction]:
    """Kirchhoff indices in input order; ``jobs > 1`` uses a process pool."""
    if jobs <= 1 or len(graphs) < 2:
        return [kirchhoff_index(g) for g in graphs]
    from .formats import to_graph6

    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_kf_task, [to_graph6(g) for g in graphs], chunksize=max(1, len(graphs) // (4 * jobs))))


@dataclass
class EnumerationReport:
    spec: CactusClassSpec
    class_count: int
    max_kf: Fraction
    min_kf: Fraction
    argmax: list = field(default_factory=list)
    argmin: list = field(default_factory=list)
    wall_time: float = 0.0
    chain_certificate: bytes = b""
    star_certificate: bytes = b""

    @property
    def degenerate(self) -> bool:
        """True when the class has a single member, so max and min coincide."""
        return self.max_kf == self.min_kf

    @property
    def max_is_extremal_chain(self) -> bool:
        return self.argmax == [self.chain_certificate]

    @property
    def min_is_minimal_star(self) -> bool:
        return self.argmin == [self.star_certificate]

    def to_dict(self) -> dict:
        from .formats import format_rational

        return {
            "n": self.spec.n,
            "t": self.spec.t,
            "class_count": self.class_count,
            "max_kf": format_rational(self.max_kf),
            "min_kf": format_rational(self.min_kf),
            "argmax": [c.hex() for c in self.argmax],
            "argmin": [c.hex() for c in self.argmin],
            "extremal_chain": self.chain_certificate.hex(),
            "minimal_star": self.star_certificate.hex(),
            "max_is_extremal_chain": self.max_is_extremal_chain,
            "min_is_minimal_star": self.min_is_minimal_star,
            "degenerate": self.degenerate,
        }


def extremal_scan(spec, jobs: int = 1, graphs: list = None) -> EnumerationReport:
    spec = _as_spec(spec)
    start = time.perf_counter()
    if graphs is None:
        graphs = enumerate_cacti(spec)
    kfs = evaluate_kf(graphs, jobs)
    certs = [canonical_certificate(g) for g in graphs]
    hi, lo = max(kfs), min(kfs)
    return EnumerationReport(
        spec=spec,
        class_count=len(graphs),
        max_kf=hi,
        min_kf=lo,
        argmax=sorted(c for c, k in zip(certs, kfs) if k == hi),
        argmin=sorted(c for c, k in zip(certs, kfs) if k == lo),
        wall_time=time.perf_counter() - start,
        chain_certificate=canonical_certificate(build_extremal_chain(spec).graph),
        star_certificate=canonical_certificate(build_minimal_star(spec).graph),
    )

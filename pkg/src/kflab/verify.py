"""Sweeps and randomized suites that check formulas and lemmas against the engine."""

import random
from dataclasses import dataclass, field
from fractions import Fraction

from . import closed_forms as cf
from .closed_forms import CactusClassSpec
from .constructions import (
    RootedGraph,
    build_cycle,
    build_extremal_chain,
    build_F,
    build_gadget_g10,
    build_path,
    build_triangle_chain,
    compose_kf,
)
from .enumeration import extremal_scan, random_cactus
from .formats import format_rational, to_graph6
from .graph import Graph, coalesce, components
from .resistance import LaplacianFactor, kirchhoff_index, resistance_matrix, vertex_transmission
from .transformations import (
    longest_path_endpoints,
    operation_I,
    operation_II,
    operation_III,
    operation_IV,
    operation_V,
)

LEMMAS = ("2.1", "2.2", "2.3", "2.3.1", "2.3.2", "2.4", "2.6", "2.7", "2.8")


@dataclass
class FormulaRow:
    formula: str
    params: str
    closed_form: Fraction
    oracle: Fraction

    @property
    def equal(self) -> bool:
        return self.closed_form == self.oracle


def verify_formulas(kmax: int = 8, smax: int = 8, nmax: int = 14) -> list[FormulaRow]:
    rows = []

    def add(name, params, closed, oracle):
        rows.append(FormulaRow(name, params, closed, oracle))

    for m in range(1, nmax + 1):
        add("kf_path", f"m={m}", cf.kf_path(m), kirchhoff_index(build_path(m).graph))
        add("kf_path_end_transmission", f"m={m}", cf.kf_path_end_transmission(m),
            vertex_transmission(build_path(m).graph, m - 1))
    for l in range(3, nmax + 1):
        c = build_cycle(l).graph
        add("kf_cycle", f"l={l}", cf.kf_cycle(l), kirchhoff_index(c))
        add("kf_cycle_transmission", f"l={l}", cf.kf_cycle_transmission(l), vertex_transmission(c, 0))
    for k in range(0, kmax + 1):
        q = build_triangle_chain(k)
        add("kf_triangle_chain", f"k={k}", cf.kf_triangle_chain(k), kirchhoff_index(q.graph))
        add("kf_triangle_chain_transmission", f"k={k}", cf.kf_triangle_chain_transmission(k),
            vertex_transmission(q.graph, q["u"]))
        for s in range(1, smax + 1):
            f = build_F(k, s)
            kf, tr = cf.kf_F_and_transmission(k, s)
            add("kf_F", f"k={k};s={s}", kf, kirchhoff_index(f.graph))
            add("kf_F_transmission", f"k={k};s={s}", tr, vertex_transmission(f.graph, f["r_s"]))
    for k in range(4, max(kmax, 4) + 1):
        g = build_gadget_g10(k)
        kf, tail, tri = cf.kf_gadget_g10(k)
        add("kf_g10", f"k={k}", kf, kirchhoff_index(g.graph))
        add("kf_g10_tail_transmission", f"k={k}", tail, vertex_transmission(g.graph, g["r_{k-2}"]))
        add("kf_g10_triangle_transmission", f"k={k}", tri, vertex_transmission(g.graph, g["u_2"]))
        measured_gap = vertex_transmission(g.graph, g["u_2"]) - vertex_transmission(build_cycle(k).graph, 0)
        add("op4_gain_lower_bound", f"k={k}", cf.op4_gain_lower_bound(k), measured_gap)
        for m1 in range(1, 6):
            g1 = RootedGraph(build_path(m1).graph, {"u_1": 0})
            add("op3_gain", f"k={k};g1={m1}", cf.op3_gain(k, m1), operation_III(g1, k).delta)
            for m2 in range(m1, 6):
                g2 = RootedGraph(build_path(m2).graph, {"v_1": 0})
                add("op5_gain", f"k={k};g1={m1};g2={m2}", cf.op5_gain(k, m1, m2), operation_V(g1, g2, k).delta)
    for n in range(1, nmax + 1):
        for t in range(0, (n - 1) // 2 + 1):
            spec = CactusClassSpec(n, t)
            add("kf_extremal_chain", f"n={n};t={t}", cf.kf_extremal_chain(spec),
                kirchhoff_index(build_extremal_chain(spec).graph))
    return rows


# randomized lemma suites ---------------------------------------------------

@dataclass
class LemmaReport:
    lemma: str
    seed: int
    trials: int = 0
    failures: list = field(default_factory=list)
    equality_cases: int = 0
    skipped: int = 0
    records: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.trials > 0 and not self.failures

    def to_dict(self) -> dict:
        return {
            "lemma": self.lemma,
            "seed": self.seed,
            "trials": self.trials,
            "failures": len(self.failures),
            "equality_cases": self.equality_cases,
            "skipped": self.skipped,
            "passed": self.passed,
            "records": self.records,
            "failing_instances": self.failures,
        }


def _random_t(rng, n):
    return rng.randint(0, (n - 1) // 2)


def random_rooted(rng, nmin=1, nmax=6, label="root", min_cycles=0) -> RootedGraph:
    n = rng.randint(nmin, nmax)
    hi = (n - 1) // 2
    t = rng.randint(min(min_cycles, hi), hi)
    g = random_cactus(n, t, rng.getrandbits(64))
    return RootedGraph(g, {label: rng.randrange(n)})


def _record(cert) -> dict:
    return cert.to_dict()


def _suite_2_1(rng, trials, report):
    while report.trials < trials:
        n = rng.randint(3, 25)
        g = random_cactus(n, _random_t(rng, n), rng.getrandbits(64))
        cuts = [x for x in range(n) if len(components(g, [x])) > 1]
        if not cuts:
            report.skipped += 1
            continue
        x = rng.choice(cuts)
        comps = components(g, [x])
        ca, cb = rng.sample(comps, 2)
        a, b = rng.choice(ca), rng.choice(cb)
        factor = LaplacianFactor(g)
        lhs = factor.resistance(a, b)
        rhs = factor.resistance(a, x) + factor.resistance(x, b)
        report.trials += 1
        rec = {"graph": to_graph6(g), "a": a, "b": b, "x": x,
               "r_ab": format_rational(lhs), "r_ax_plus_r_xb": format_rational(rhs)}
        report.records.append(rec)
        if lhs != rhs:
            report.failures.append(rec)


def _suite_2_2(rng, trials, report):
    while report.trials < trials:
        g1 = random_rooted(rng, 1, 9, "x")
        g2 = random_rooted(rng, 1, 9, "x")
        predicted = compose_kf(g1, "x", g2, "x")
        g, _, _ = coalesce(g1.graph, g1["x"], g2.graph, g2["x"])
        measured = kirchhoff_index(g, "laplacian")
        report.trials += 1
        rec = {"g1": to_graph6(g1.graph), "x1": g1["x"], "g2": to_graph6(g2.graph), "x2": g2["x"],
               "composed": format_rational(predicted), "measured": format_rational(measured)}
        report.records.append(rec)
        if predicted != measured:
            report.failures.append(rec)


def _suite_2_3(rng, trials, report, part, max_attempts=200000):
    attempts = 0
    while report.trials < trials and attempts < max_attempts:
        attempts += 1
        nx_ = rng.randint(3, 10)
        X = random_cactus(nx_, _random_t(rng, nx_), rng.getrandbits(64))
        r = resistance_matrix(X)
        x1, x2 = rng.choice(longest_path_endpoints(X, r))
        if rng.random() < 0.5:
            x1, x2 = x2, x1
        pairs = [(u, v) for u in range(nx_) for v in range(nx_) if r[x1][u] <= r[x1][v]]
        u, v = rng.choice(pairs)
        y = random_rooted(rng, 2, 6, "a")
        z = random_rooted(rng, 2, 6, "b")
        xr = RootedGraph(X, {"u": u, "v": v, "x1": x1, "x2": x2})
        cert = operation_I(xr, y, z, part=part, mirror=False)
        if not cert.hypotheses_hold:
            report.skipped += 1
            continue
        report.trials += 1
        report.records.append(_record(cert))
        if not cert.claim_holds:
            report.failures.append(_record(cert))


def _suite_2_4(rng, trials, report):
    while report.trials < trials:
        X = random_rooted(rng, 3, 9, "x", min_cycles=1).graph
        if X.size < X.order:
            report.skipped += 1
            continue
        r = resistance_matrix(X)
        a, b = rng.choice(longest_path_endpoints(X, r))
        if rng.random() < 0.5:
            a, b = b, a
        s = rng.randint(2, 5)
        g1 = random_rooted(rng, 2, 6, "u_1")
        cert = operation_II(RootedGraph(X, {"u_2": a, "x": b}), s, g1)
        report.trials += 1
        rec = _record(cert)
        report.records.append(rec)
        gap_ok = cert.details["transmission_gap_formula"] == cert.details["transmission_gap_measured"]
        if not cert.claim_holds or not gap_ok:
            report.failures.append(rec)


def _suite_2_6(rng, trials, report):
    while report.trials < trials:
        k = rng.randint(4, 10)
        g1 = random_rooted(rng, 1, 7, "u_1")
        cert = operation_III(g1, k)
        report.trials += 1
        rec = _record(cert)
        report.records.append(rec)
        if not cert.claim_holds or not cert.details["matches_closed_form"]:
            report.failures.append(rec)


def _suite_2_7(rng, trials, report):
    while report.trials < trials:
        k = rng.randint(4, 10)
        g1 = random_rooted(rng, 1, 7, "u_1")
        g2 = random_rooted(rng, 1, 7, "v_1")
        cert = operation_IV(g1, g2, k)
        report.trials += 1
        rec = _record(cert)
        report.records.append(rec)
        chain = (cert.details["delta_exceeds_scaled_gap"] and cert.details["gap_at_least_lower_bound"]
                 and cert.details["delta_exceeds_lower_bound"])
        if not cert.claim_holds or not chain:
            report.failures.append(rec)


def _suite_2_8(rng, trials, report, equality_every=5):
    while report.trials < trials:
        k = rng.randint(4, 10)
        g1 = random_rooted(rng, 1, 7, "u_1")
        if report.trials % equality_every == 0:
            n2 = g1.order
        else:
            n2 = rng.randint(g1.order, 8)
        t2 = rng.randint(0, (n2 - 1) // 2)
        g2 = RootedGraph(random_cactus(n2, t2, rng.getrandbits(64)), {"v_1": rng.randrange(n2)})
        cert = operation_V(g1, g2, k)
        report.trials += 1
        rec = _record(cert)
        report.records.append(rec)
        ok = cert.claim_holds and cert.details["matches_closed_form"]
        if g1.order == g2.order:
            report.equality_cases += 1
            ok = ok and cert.delta == 0
        else:
            ok = ok and cert.delta > 0
        if not ok:
            report.failures.append(rec)


def lemma_suite(lemma: str, trials: int = 200, seed: int = 0) -> LemmaReport:
    """Run ``trials`` random instances of one lemma; ``2.3`` runs both parts."""
    if lemma not in LEMMAS:
        raise ValueError(f"unknown lemma {lemma!r}; choose from {', '.join(LEMMAS)}")
    rng = random.Random(seed)
    report = LemmaReport(lemma, seed)
    if lemma == "2.3":
        for part in (1, 2):
            sub = lemma_suite(f"2.3.{part}", trials, seed)
            report.trials += sub.trials
            report.skipped += sub.skipped
            report.failures += sub.failures
            report.records += sub.records
        return report
    runner = {
        "2.1": _suite_2_1,
        "2.2": _suite_2_2,
        "2.3.1": lambda r, n, rep: _suite_2_3(r, n, rep, 1),
        "2.3.2": lambda r, n, rep: _suite_2_3(r, n, rep, 2),
        "2.4": _suite_2_4,
        "2.6": _suite_2_6,
        "2.7": _suite_2_7,
        "2.8": _suite_2_8,
    }[lemma]
    runner(rng, trials, report)
    return report


def theorem_scan(nmin: int = 5, nmax: int = 9, jobs: int = 1, tmin: int = 2) -> list:
    reports = []
    for n in range(nmin, nmax + 1):
        for t in range(tmin, (n - 1) // 2 + 1):
            reports.append(extremal_scan(CactusClassSpec(n, t), jobs=jobs))
    return reports

"""Command-line front end: ``kflab {compute,build,enumerate,verify}``.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 semantic input error (disconnected graph, out-of-range class, caps).
"""

import argparse
import csv
import io
import json
import logging
import sys
from pathlib import Path

from .canon import CanonicalizationLimitError
from .closed_forms import CactusClassSpec, FormulaDomainError
from .constructions import build_named
from .enumeration import EnumerationLimitError, enumerate_cacti, extremal_scan
from .formats import (
    ParseError,
    approx_suffix,
    format_rational,
    read_graph,
    to_edge_list,
    to_graph6,
)
from .graph import DisconnectedGraphError, GraphError
from .resistance import (
    LaplacianFactor,
    NotACactusError,
    effective_resistance_cactus,
    kirchhoff_index,
    resistance_matrix,
    vertex_transmission,
)
from .verify import LEMMAS, lemma_suite, theorem_scan, verify_formulas

log = logging.getLogger("kflab")

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_SEMANTIC = 0, 1, 2, 3
DEFAULT_SEED = 0


class UsageError(Exception):
    pass


def _write(text: str, path):
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc


def _value(q, approx):
    return approx_suffix(q) if approx else format_rational(q)


def cmd_compute(args) -> int:
    g = read_graph(_read_input(args.graph))
    method = "laplacian" if args.oracle else "auto"
    results = []
    if args.resistance:
        u, v = args.resistance
        g.check_vertex(u, v)
        if args.oracle:
            r = LaplacianFactor(g).resistance(u, v)
        else:
            try:
                r = effective_resistance_cactus(g, u, v)
            except NotACactusError:
                r = LaplacianFactor(g).resistance(u, v)
        results.append(("resistance", r))
    if args.transmission is not None:
        results.append(("transmission", vertex_transmission(g, args.transmission, method)))
    if args.matrix:
        results.append(("matrix", resistance_matrix(g, method)))
    if args.kf or not results:
        results.insert(0, ("kf", kirchhoff_index(g, method)))

    if args.format == "json":
        out = {}
        for name, val in results:
            if name == "matrix":
                out[name] = [[format_rational(x) for x in row] for row in val]
            else:
                out[name] = format_rational(val)
                if args.approx:
                    out[name + "_approx"] = float(val)
        _write(json.dumps(out, indent=2, sort_keys=True) + "\n", None)
        return EXIT_OK
    lines = []
    for name, val in results:
        if name == "matrix":
            lines += [" ".join(_value(x, args.approx) for x in row) for row in val]
        else:
            lines.append(_value(val, args.approx))
    _write("\n".join(lines) + "\n", None)
    return EXIT_OK


def cmd_build(args) -> int:
    try:
        rg = build_named(args.name, *args.params)
    except (GraphError, FormulaDomainError, TypeError) as exc:
        raise UsageError(str(exc)) from exc
    text = to_graph6(rg.graph) + "\n" if args.format == "g6" else to_edge_list(rg.graph)
    _write(text, args.output)
    roots = json.dumps(dict(sorted(rg.roots.items())), indent=2) + "\n"
    roots_path = args.roots
    if roots_path is None and args.output not in (None, "-"):
        roots_path = str(args.output) + ".roots.json"
    if roots_path is not None:
        _write(roots, roots_path)
    return EXIT_OK


def cmd_enumerate(args) -> int:
    spec = CactusClassSpec(args.n, args.t)
    graphs = enumerate_cacti(spec)
    if args.emit:
        _write("".join(to_graph6(g) + "\n" for g in graphs), args.emit)
    report = extremal_scan(spec, jobs=args.jobs, graphs=graphs)
    log.info("enumerated %d classes in %.2fs", report.class_count, report.wall_time)
    _write(json.dumps(report.to_dict(), indent=2) + "\n", args.report)
    return EXIT_OK


def _verify_formulas(args) -> int:
    rows = verify_formulas(args.kmax, args.smax, args.nmax)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["formula", "parameters", "closed_form", "oracle", "equal"])
    for r in rows:
        w.writerow([r.formula, r.params, format_rational(r.closed_form), format_rational(r.oracle),
                    "yes" if r.equal else "no"])
    _write(buf.getvalue(), args.output)
    bad = [r for r in rows if not r.equal]
    for r in bad:
        sys.stderr.write(f"MISMATCH {r.formula} {r.params}: closed form {format_rational(r.closed_form)}"
                         f" != oracle {format_rational(r.oracle)}\n")
    return EXIT_FAIL if bad else EXIT_OK


def _verify_lemma(args) -> int:
    report = lemma_suite(args.lemma, args.trials, args.seed)
    _write(json.dumps(report.to_dict(), indent=2) + "\n", args.output)
    sys.stderr.write(f"lemma {report.lemma}: {report.trials} instances, {len(report.failures)} violations,"
                     f" {report.equality_cases} equality cases -> {'PASS' if report.passed else 'FAIL'}\n")
    if not report.passed:
        sys.stderr.write(json.dumps(report.failures[:1], indent=2) + "\n")
        return EXIT_FAIL
    return EXIT_OK


def _verify_scan(args, which) -> int:
    reports = theorem_scan(args.nmin, args.nmax, jobs=args.jobs)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["n", "t", "class_count", "max_kf", "min_kf", "max_is_extremal_chain",
                "min_is_minimal_star", "degenerate"])
    failed = []
    for r in reports:
        d = r.to_dict()
        w.writerow([d["n"], d["t"], d["class_count"], d["max_kf"], d["min_kf"],
                    d["max_is_extremal_chain"], d["min_is_minimal_star"], d["degenerate"]])
        ok = r.max_is_extremal_chain if which == "theorem" else (r.min_is_minimal_star or r.degenerate)
        if not ok:
            failed.append(d)
    _write(buf.getvalue(), args.output)
    for d in failed:
        sys.stderr.write(f"FAIL {which} at n={d['n']} t={d['t']}: " + json.dumps(d) + "\n")
    return EXIT_FAIL if failed else EXIT_OK


def cmd_verify(args) -> int:
    if args.suite == "formulas":
        return _verify_formulas(args)
    if args.suite == "lemma":
        return _verify_lemma(args)
    return _verify_scan(args, args.suite)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="kflab", description="Exact resistance distances and Kirchhoff indices of cacti.")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", help="resistances, transmissions and Kf of one graph")
    c.add_argument("graph", help="edge-list or graph6 file, '-' for stdin")
    c.add_argument("--kf", action="store_true")
    c.add_argument("--resistance", nargs=2, type=int, metavar=("U", "V"))
    c.add_argument("--transmission", type=int, metavar="X")
    c.add_argument("--matrix", action="store_true")
    c.add_argument("--oracle", action="store_true", help="force the Laplacian route")
    c.add_argument("--approx", action="store_true", help="append a float approximation (display only)")
    c.add_argument("--format", choices=("text", "json"), default="text")
    c.set_defaults(func=cmd_compute)

    b = sub.add_parser("build", help="emit a named construction")
    b.add_argument("name", choices=("path", "cycle", "star", "qchain", "cnt", "g0", "g10"))
    b.add_argument("params", nargs="+", type=int)
    b.add_argument("--format", choices=("edgelist", "g6"), default="edgelist")
    b.add_argument("--output", "-o")
    b.add_argument("--roots", help="path for the JSON role-label sidecar")
    b.set_defaults(func=cmd_build)

    e = sub.add_parser("enumerate", help="all of Cat(n;t) up to isomorphism, with the extremal report")
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--t", type=int, required=True)
    e.add_argument("--emit", help="write the class representatives as graph6 lines")
    e.add_argument("--report", help="write the JSON report here instead of stdout")
    e.add_argument("--jobs", type=int, default=1)
    e.set_defaults(func=cmd_enumerate)

    v = sub.add_parser("verify", help="check formulas, lemmas or the extremal theorem")
    vs = v.add_subparsers(dest="suite", required=True)
    f = vs.add_parser("formulas")
    f.add_argument("--kmax", type=int, default=8)
    f.add_argument("--smax", type=int, default=8)
    f.add_argument("--nmax", type=int, default=14)
    f.add_argument("--output", "-o")
    lm = vs.add_parser("lemma")
    lm.add_argument("lemma", choices=LEMMAS)
    lm.add_argument("--trials", type=int, default=200)
    lm.add_argument("--seed", type=int, default=DEFAULT_SEED)
    lm.add_argument("--output", "-o")
    for name in ("theorem", "proposition"):
        t = vs.add_parser(name)
        t.add_argument("--nmin", type=int, default=5)
        t.add_argument("--nmax", type=int, default=9)
        t.add_argument("--jobs", type=int, default=1)
        t.add_argument("--output", "-o")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    try:
        return args.func(args)
    except (ParseError, UsageError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except (DisconnectedGraphError, FormulaDomainError, EnumerationLimitError,
            CanonicalizationLimitError, GraphError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_SEMANTIC


if __name__ == "__main__":
    sys.exit(main())

"""Command line: ``mindist {analyze,migliore,verify,betti,dgamma}``.

Exit codes: 0 all checks pass, 2 a property check failed, 3 bad input,
4 a degree or resampling cap was hit.
"""
from __future__ import annotations

import argparse
import sys

from .errors import ConsistencyError, InputError, ResourceCapError
from .field import DEFAULT_PRIME, QQ, PrimeField
from .groebner import DEFAULT_DEGREE_CEILING, buchberger_moeller
from .io import read_points
from .points import generalized_distance_witness, is_nondegenerate
from .report import FAULTS, analyze, dump_json, migliore_batch, verify_suite
from .resolution import betti_table, minimal_resolution, render_betti

EXIT_OK = 0
EXIT_CHECK_FAILED = 2
EXIT_INPUT = 3
EXIT_CAP = 4


def _field(name):
    return QQ if name == "q" else PrimeField(DEFAULT_PRIME)


def _emit(doc, path):
    text = dump_json(doc)
    if path == "-":
        sys.stdout.write(text)
    elif path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _field_note(args):
    if args.field == "fp":
        print(f"note: working over GF({DEFAULT_PRIME}); results are heuristic cross-checks", file=sys.stderr)


def cmd_analyze(args) -> int:
    _field_note(args)
    pts = read_points(args.points, _field(args.field))
    rep = analyze(pts, max_a=args.max_a, seed=args.seed, max_degree=args.max_degree,
                  timings=args.timings, fault=args.inject_fault)
    d = rep.data
    out = sys.stdout if args.json != "-" else sys.stderr
    print(f"seed {args.seed}  field {d['field']}  n = {d['n']}  m = {d['m']}", file=out)
    print(f"hyp = {d['hyp']}  d = {d['d']}  A_n = {d['AN']}  reg = {d['regularity']}  tight = {d['tight']}", file=out)
    print(f"resolution: {d['resolution']}", file=out)
    print(f"socle degrees: {d['socle_degrees']} (Artinian route: {d['socle_degrees_oracle']})", file=out)
    print(f"separator degrees: {d['separator_degrees']}  delta = {d['delta_gamma']}", file=out)
    gd = ", ".join(f"d_{a} = {v['value']}" for a, v in d["generalized_distances"].items())
    if gd:
        print(f"generalized distances: {gd}", file=out)
    if args.betti:
        print(rep.betti_text, file=out)
    for name, ok in sorted(rep.checks.items()):
        print(f"  {'pass' if ok else 'FAIL'}  {name}", file=out)
    _emit(rep.to_dict(), args.json)
    if not rep.ok:
        print(f"failed checks: {', '.join(rep.failed())}", file=sys.stderr)
        return EXIT_CHECK_FAILED
    return EXIT_OK


def cmd_migliore(args) -> int:
    doc = migliore_batch(args.n, args.alpha, args.beta, seed=args.seed, count=args.count,
                         fixture=args.fixture, max_a=args.max_a, max_degree=args.max_degree)
    out = sys.stdout if args.json != "-" else sys.stderr
    print(f"seed {args.seed}  n = {args.n}  alpha = {args.alpha}  beta = {args.beta}  s = {doc['s']}  "
          f"predicted {doc['predicted']}", file=out)
    for r in doc["runs"]:
        holds = {True: "holds", False: "VIOLATED", None: "no prediction"}[r["prediction_holds"]]
        print(f"  [{r['index']}] hyp = {r['hyp']}  d = {r['d']}  A_n = {r['AN']}  {r['measured']}  "
              f"A_n - beta = {r['AN_minus_beta']}  ({holds})", file=out)
    _emit(doc, args.json)
    return EXIT_OK if doc["all_ok"] else EXIT_CHECK_FAILED


def cmd_verify(args) -> int:
    ns = tuple(int(x) for x in args.n.split(","))
    doc = verify_suite(count=args.count, seed=args.seed, ns=ns, m_range=(args.m_min, args.m_max),
                       bound=args.bound, max_a=args.max_a, fixtures=not args.no_fixtures,
                       fault=args.inject_fault)
    out = sys.stdout if args.json != "-" else sys.stderr
    print(f"seed {args.seed}  random configurations: {args.count}  fixtures: {len(doc['fixtures'])}", file=out)
    for name, v in doc["by_property"].items():
        print(f"  {'pass' if not v['fail'] else 'FAIL'}  {name}: {v['pass']} passed, {v['fail']} failed", file=out)
    _emit(doc, args.json)
    return EXIT_OK if doc["all_ok"] else EXIT_CHECK_FAILED


def cmd_betti(args) -> int:
    _field_note(args)
    pts = read_points(args.points, _field(args.field))
    G = buchberger_moeller(pts, max_degree=args.max_degree)
    table = betti_table(minimal_resolution(G))
    sys.stdout.write(render_betti(table))
    _emit({"report_version": 1, "kind": "betti", "betti": table.as_rows(),
           "input_digest": pts.digest()}, args.json)
    return EXIT_OK


def cmd_dgamma(args) -> int:
    _field_note(args)
    pts = read_points(args.points, _field(args.field))
    values = {}
    for a in range(1, args.max_a + 1):
        v, removed = generalized_distance_witness(pts, a)
        values[str(a)] = {"value": v, "removed": list(removed)}
        print(f"d_{a} = {v}  (remove points {list(removed)})")
    _emit({"report_version": 1, "kind": "dgamma", "generalized_distances": values,
           "nondegenerate": is_nondegenerate(pts), "input_digest": pts.digest()}, args.json)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="random seed (default 0)")
    common.add_argument("--field", choices=("q", "fp"), default="q",
                        help="q: exact rationals; fp: a large prime field (heuristic)")
    common.add_argument("--json", metavar="PATH", help="write the JSON report here ('-' for stdout)")
    common.add_argument("--max-degree", type=int, default=DEFAULT_DEGREE_CEILING,
                        help="degree ceiling for the vanishing ideal computation")

    p = argparse.ArgumentParser(prog="mindist", description=(
        "Minimum distance of projective point sets against the minimal socle degree "
        "of their coordinate ring."))
    sub = p.add_subparsers(dest="verb", required=True)

    a = sub.add_parser("analyze", parents=[common], help="full analysis of a point file")
    a.add_argument("points")
    a.add_argument("--max-a", type=int, default=2, help="largest degree for generalized distances")
    a.add_argument("--betti", action="store_true", help="print the Betti diagram")
    a.add_argument("--timings", action="store_true", help="include timings in the JSON report")
    a.add_argument("--inject-fault", choices=FAULTS, help=argparse.SUPPRESS)
    a.set_defaults(func=cmd_analyze)

    m = sub.add_parser("migliore", parents=[common], help="hyperplane-plus-line configurations")
    m.add_argument("--n", type=int, required=True)
    m.add_argument("--alpha", type=int, required=True)
    m.add_argument("--beta", type=int, required=True)
    m.add_argument("--count", type=int, default=1)
    m.add_argument("--fixture", action="store_true", help="use the stored 6 + 3 set in P^3")
    m.add_argument("--max-a", type=int, default=1)
    m.set_defaults(func=cmd_migliore)

    v = sub.add_parser("verify", parents=[common], help="property suite on random sets and fixtures")
    v.add_argument("--count", type=int, default=50)
    v.add_argument("--n", default="2,3", help="comma-separated ambient dimensions")
    v.add_argument("--m-min", type=int, default=4)
    v.add_argument("--m-max", type=int, default=10)
    v.add_argument("--bound", type=int, default=9, help="coordinates lie in [-bound, bound]")
    v.add_argument("--max-a", type=int, default=3)
    v.add_argument("--no-fixtures", action="store_true")
    v.add_argument("--inject-fault", choices=FAULTS, help=argparse.SUPPRESS)
    v.set_defaults(func=cmd_verify)

    b = sub.add_parser("betti", parents=[common], help="Betti diagram of a point file")
    b.add_argument("points")
    b.set_defaults(func=cmd_betti)

    g = sub.add_parser("dgamma", parents=[common], help="generalized distances d_a")
    g.add_argument("points")
    g.add_argument("--max-a", type=int, default=2)
    g.set_defaults(func=cmd_dgamma)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ResourceCapError as exc:
        print(f"resource cap: {exc}", file=sys.stderr)
        return EXIT_CAP
    except ConsistencyError as exc:
        print(f"internal check failed: {exc}", file=sys.stderr)
        return EXIT_CHECK_FAILED


if __name__ == "__main__":
    sys.exit(main())

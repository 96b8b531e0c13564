"""Command-line front end.

Subcommands: ``info``, ``plan``, ``verify``, ``certify``, ``truncate``,
``cuplength``.  Machine-readable output goes to stdout as one JSON document
per invocation with a fixed, order-stable key set; a human-readable summary
goes to stderr.  Exit status: 0 success, 2 parse/usage error, 3 unstable
expression, 4 infinite rank, 5 verification failure.
"""

import argparse
import json
import sys
from fractions import Fraction

from .graphs import GraphError, betti1, tc_graph
from .cohomology import zero_divisor_cuplength
from .planner import (PlanError, plan_graph, execute, verify_plan,
                      corrupt_plan_swap_endpoints, DEFAULT_DELTA, DEFAULT_EPS)
from .spacefile import (ParseError, SpaceFile, parse_spacefile, print_spacefile,
                        parse_point)
from .wild import (INF, ExprError, UnstableExpressionError, InfiniteRankError,
                   profile, cat, tc, cat_certificate, tc_certificate, truncate)

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_UNSTABLE = 3
EXIT_INFINITE = 4
EXIT_VERIFY = 5


def _load(path: str) -> SpaceFile:
    try:
        with open(path, "r", encoding="ascii") as fh:
            return parse_spacefile(fh.read())
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}")
    except UnicodeDecodeError:
        raise ParseError(f"cannot read {path}: space files are ASCII")


def _num(value):
    return "inf" if value is INF else value


def _tower_doc(prof):
    return [{"pieces": lv.count, "betti1": _num(lv.b1)} for lv in prof.tower]


def _report(expr):
    prof = profile(expr)
    return {
        "wrk": _num(prof.wrk),
        "cat": _num(cat(expr)),
        "tc": _num(tc(expr)),
        "stable": prof.stable,
        "scc_class": prof.scc_class,
        "tower": _tower_doc(prof),
    }


def _emit(doc, summary):
    sys.stdout.write(json.dumps(doc, separators=(",", ":")) + "\n")
    if summary:
        sys.stderr.write(summary + "\n")


def _target_graph(sf: SpaceFile, name):
    if name is not None:
        return sf.get_graph(name)
    return sf.main_graph()


def _cert_doc(c):
    return {
        "kind": c.kind,
        "length": _num(c.length),
        "levels": [{"reason": lv.reason, "description": lv.description}
                   for lv in c.levels],
    }


def _write_dot(path: str, g, highlight=()):
    lines = [f"graph wildcat {{"]
    for v in g.vertices:
        lines.append(f'  "{v}";')
    marked = set(highlight)
    for e in g.edges:
        attr = f' [label="{e.id}"'
        if e.id in marked:
            attr += ", color=red, penwidth=2"
        attr += "];"
        lines.append(f'  "{e.v0}" -- "{e.v1}"{attr}')
    lines.append("}")
    with open(path, "w", encoding="ascii") as fh:
        fh.write("\n".join(lines) + "\n")


def cmd_info(args) -> int:
    sf = _load(args.file)
    doc = _report(sf.main_expr())
    _emit(doc, f"wrk={doc['wrk']} cat={doc['cat']} tc={doc['tc']} "
               f"scc_class={doc['scc_class']}")
    return EXIT_OK


def cmd_plan(args) -> int:
    sf = _load(args.file)
    g = _target_graph(sf, args.graph)
    src = parse_point(getattr(args, "from"))
    dst = parse_point(args.to)
    plan = plan_graph(g)
    j, path = execute(plan, src, dst)
    doc = {
        "stratum": j,
        "strata_count": len(plan.strata),
        "length": f"{path.length.numerator}/{path.length.denominator}",
        "path": [{"edge": s.edge,
                  "from": f"{s.a.numerator}/{s.a.denominator}",
                  "to": f"{s.b.numerator}/{s.b.denominator}"}
                 for s in path.steps],
    }
    _emit(doc, f"stratum {j}, {len(path.steps)} steps, length {path.length}")
    if args.dot:
        _write_dot(args.dot, g, highlight=[s.edge for s in path.steps])
    return EXIT_OK


def cmd_verify(args) -> int:
    sf = _load(args.file)
    g = _target_graph(sf, args.graph)
    plan = plan_graph(g)
    if args.corrupt:
        plan = corrupt_plan_swap_endpoints(plan)
    report = verify_plan(plan, g, samples=args.samples, delta=args.delta,
                         eps=args.eps, seed=args.seed)
    doc = _report_graph(g)
    doc["verification"] = {
        "passed": report.passed,
        "strata": report.strata_count,
        "expected_strata": report.expected_strata,
        "samples": report.samples,
        "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail,
                    "witness": c.witness} for c in report.checks],
    }
    _emit(doc, ("verification passed" if report.passed else "verification FAILED")
          + f" ({report.strata_count} strata)")
    return EXIT_OK if report.passed else EXIT_VERIFY


def _report_graph(g):
    from .wild import graph_expr
    return _report(graph_expr(g))


def cmd_certify(args) -> int:
    sf = _load(args.file)
    expr = sf.main_expr()
    doc = _report(expr)
    doc["certificates"] = {
        "cat": _cert_doc(cat_certificate(expr)),
        "tc": _cert_doc(tc_certificate(expr)),
    }
    _emit(doc, f"cat certificate length {doc['certificates']['cat']['length']}, "
               f"tc certificate length {doc['certificates']['tc']['length']}")
    return EXIT_OK


def cmd_truncate(args) -> int:
    sf = _load(args.file)
    g = truncate(sf.main_expr(), args.depth)
    out = SpaceFile({"truncated": g}, {}, "truncated")
    text = print_spacefile(out)
    if args.output:
        with open(args.output, "w", encoding="ascii") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    sys.stderr.write(f"truncated at depth {args.depth}: "
                     f"{len(g.vertices)} vertices, {len(g.edges)} edges, "
                     f"betti1 {betti1(g)}\n")
    if args.dot:
        _write_dot(args.dot, g)
    return EXIT_OK


def cmd_cuplength(args) -> int:
    sf = _load(args.file)
    g = _target_graph(sf, args.graph)
    doc = {"betti1": betti1(g), "cuplength": zero_divisor_cuplength(g)}
    _emit(doc, f"betti1={doc['betti1']} zero-divisor cup-length={doc['cuplength']} "
               f"(tc_graph={tc_graph(g)})")
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wildcat",
        description="Category, topological complexity, wildness rank, and "
                    "motion plans for graphs and one-dimensional wild spaces.")
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("info", help="invariants of the main definition")
    p.add_argument("file")
    p.set_defaults(fn=cmd_info)

    p = subs.add_parser("plan", help="answer one motion-plan query on a graph")
    p.add_argument("file")
    p.add_argument("--graph", default=None, help="named graph (default: main)")
    p.add_argument("--from", required=True, help="'vertex ID' or 'edge ID NUM/DEN'")
    p.add_argument("--to", required=True, help="'vertex ID' or 'edge ID NUM/DEN'")
    p.add_argument("--dot", default=None, metavar="PATH",
                   help="also write the graph in DOT format")
    p.set_defaults(fn=cmd_plan)

    p = subs.add_parser("verify", help="verify the stratified plan of a graph")
    p.add_argument("file")
    p.add_argument("--graph", default=None)
    p.add_argument("--samples", type=int, default=2000)
    p.add_argument("--delta", type=Fraction, default=DEFAULT_DELTA)
    p.add_argument("--eps", type=Fraction, default=DEFAULT_EPS)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--corrupt", action="store_true",
                   help="negative control: corrupt the plan before verifying")
    p.set_defaults(fn=cmd_verify)

    p = subs.add_parser("certify", help="emit cat and tc filtration certificates")
    p.add_argument("file")
    p.set_defaults(fn=cmd_certify)

    p = subs.add_parser("truncate", help="finite graph approximation of the main expression")
    p.add_argument("file")
    p.add_argument("--depth", type=int, required=True)
    p.add_argument("-o", "--output", default=None)
    p.add_argument("--dot", default=None, metavar="PATH")
    p.set_defaults(fn=cmd_truncate)

    p = subs.add_parser("cuplength", help="zero-divisor cup-length of a graph")
    p.add_argument("file")
    p.add_argument("--graph", default=None)
    p.set_defaults(fn=cmd_cuplength)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except ParseError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_PARSE
    except UnstableExpressionError as exc:
        sys.stderr.write(f"error: unstable expression: {exc}\n")
        return EXIT_UNSTABLE
    except InfiniteRankError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INFINITE
    except (GraphError, PlanError, ExprError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_PARSE


if __name__ == "__main__":
    raise SystemExit(main())

"""Command-line interface.

Subcommands: count (closed-form orbit counts), lattice (solution-lattice
basis and admissible classes), lyndon (fixed-content Lyndon word counting
and listing), enumerate (brute-force orbit listing), verify (formula vs.
enumeration sweep) and graph (Graphviz DOT export).

Exit codes are stable: 0 success, 1 verification mismatch, 2 parameter
error, 3 disconnected graph, 4 budget exceeded. Counts inside JSON are
decimal strings so consumers are not limited to 53-bit integers.
"""

from __future__ import annotations

import argparse
import json
import sys

from .counting import (
    OrbitCountReport,
    count_orbits_lk,
    count_orbits_lk_unreduced,
)
from .errors import (
    BudgetExceeded,
    DisconnectedGraph,
    NotLatticePoint,
    RejectedParameters,
)
from .graph import CirculantGraph, dot_graph
from .lattice import basis, bcounts_for_length, lattice_points, skipped_windings
from .oracle import enumerate_orbits, verify_range
from .words import count_lyndon, list_lyndon, to_step_string


def _graph_from(args: argparse.Namespace) -> CirculantGraph:
    return CirculantGraph(args.n, args.a, args.b)


def _print_report_plain(report: OrbitCountReport, indent: str = "") -> None:
    head = f"l={report.l} k={report.k} omega={report.omega} count={report.count}"
    print(indent + head)
    for t in report.terms:
        q = f"q={t.q} " if t.q is not None else ""
        print(f"{indent}  {q}m={t.m} mu={t.mu:+d} binomial={t.binomial}")


def _cmd_count(args: argparse.Namespace) -> int:
    G = _graph_from(args)
    G.require_connected()
    l = args.length
    counter = count_orbits_lk_unreduced if args.method == "unreduced" else count_orbits_lk
    if args.bcount is not None:
        report = counter(G, l, args.bcount)
        if args.format == "json":
            print(json.dumps(report.to_json_dict()))
        else:
            print(f"C_{G.n}({G.a},{G.b}) length {l} b-count {args.bcount} "
                  f"method {args.method}")
            _print_report_plain(report)
        return 0
    classes = bcounts_for_length(G, l)
    reports = [counter(G, c.l, c.k) for c in classes]
    total = sum(r.count for r in reports)
    if args.format == "json":
        obj: dict = {
            "n": G.n, "a": G.a, "b": G.b, "l": l,
            "method": args.method, "total": str(total),
        }
        if args.show_skipped:
            obj["skipped_omegas"] = skipped_windings(G, l)
        obj["classes"] = [r.to_json_dict() for r in reports]
        print(json.dumps(obj))
    else:
        print(f"C_{G.n}({G.a},{G.b}) length {l} method {args.method}")
        for r in reports:
            _print_report_plain(r, indent="  ")
        if args.show_skipped:
            skipped = ", ".join(str(w) for w in skipped_windings(G, l)) or "none"
            print(f"  skipped omegas: {skipped}")
        print(f"total {total}")
    return 0


def _cmd_lattice(args: argparse.Namespace) -> int:
    G = _graph_from(args)
    B = basis(G)
    points = lattice_points(G, args.lmax)
    if args.format == "csv":
        print("l,k,omega")
        for c in points:
            print(f"{c.l},{c.k},{c.omega}")
    else:
        obj = {
            "n": G.n, "a": G.a, "b": G.b,
            "basis": {
                "a_prime": B.a_prime, "d_prime": B.d_prime,
                "l0": B.l0, "k0": B.k0,
                "matrix_numerators": [list(row) for row in B.matrix_numerators()],
                "denominator": B.n,
            },
            "points": [{"l": c.l, "k": c.k, "omega": c.omega} for c in points],
        }
        print(json.dumps(obj))
    return 0


def _parse_steps_context(value: str) -> CirculantGraph:
    parts = value.split(",")
    if len(parts) != 3:
        raise ValueError(f"--steps wants n,a,b (three integers), got {value!r}")
    n, a, b = (int(p) for p in parts)
    return CirculantGraph(n, a, b)


def _cmd_lyndon(args: argparse.Namespace) -> int:
    if args.action == "count":
        print(count_lyndon(args.length, args.bcount))
        return 0
    words = list_lyndon(args.length, args.bcount)
    if args.steps is not None:
        G = _parse_steps_context(args.steps)
        words = [to_step_string(w, G.a, G.b) for w in words]
    for w in words:
        print(w)
    return 0


def _cmd_enumerate(args: argparse.Namespace) -> int:
    G = _graph_from(args)
    orbits = enumerate_orbits(G, args.length, k=args.bcount, budget=args.budget)
    primitive = sum(1 for o in orbits if o.is_primitive())
    shown = [o for o in orbits if o.is_primitive()] if args.primitive_only else orbits
    for o in shown:
        print(json.dumps(o.to_json_dict(G)))
    print(json.dumps({
        "orbits": len(orbits),
        "primitive": primitive,
        "nonprimitive": len(orbits) - primitive,
    }))
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    report = verify_range(args.nmax, args.lmax, budget=args.budget)
    print(json.dumps(report))
    return 0 if report["passed"] else 1


def _cmd_graph(args: argparse.Namespace) -> int:
    steps = [int(p) for p in args.steps.split(",") if p != ""]
    sys.stdout.write(dot_graph(args.n, steps))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="circorbits",
        description="Exact primitive periodic orbit counts on two-step circulant digraphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_graph_flags(p: argparse.ArgumentParser) -> None:
        p.add_argument("--n", type=int, required=True, help="number of vertices")
        p.add_argument("--a", type=int, required=True, help="smaller step size")
        p.add_argument("--b", type=int, required=True, help="larger step size")

    p = sub.add_parser("count", help="count primitive periodic orbits of a given length")
    add_graph_flags(p)
    p.add_argument("--length", type=int, required=True, help="orbit length (number of bonds)")
    p.add_argument("--bcount", type=int, default=None, help="restrict to this b-count")
    p.add_argument("--method", choices=["reduced", "unreduced"], default="reduced")
    p.add_argument("--show-skipped", action="store_true",
                   help="also list in-range winding numbers with no integer b-count")
    p.add_argument("--format", choices=["json", "plain"], default="json")
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("lattice", help="solution-lattice basis and admissible (l,k,omega) classes")
    add_graph_flags(p)
    p.add_argument("--lmax", type=int, required=True, help="largest length to list")
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.set_defaults(func=_cmd_lattice)

    p = sub.add_parser("lyndon", help="count or list Lyndon words of fixed length and b-count")
    p.add_argument("action", choices=["count", "list"])
    p.add_argument("--length", type=int, required=True)
    p.add_argument("--bcount", type=int, required=True)
    p.add_argument("--steps", default=None,
                   help="n,a,b graph context: list words in step notation")
    p.set_defaults(func=_cmd_lyndon)

    p = sub.add_parser("enumerate", help="brute-force orbit enumeration (JSON lines)")
    add_graph_flags(p)
    p.add_argument("--length", type=int, required=True)
    p.add_argument("--bcount", type=int, default=None)
    p.add_argument("--primitive-only", action="store_true")
    p.add_argument("--budget", type=int, default=None,
                   help="candidate-presentation budget (default CIRCORBITS_BUDGET or 2^28)")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("verify", help="sweep formulas against enumeration; exit 1 on mismatch")
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--lmax", type=int, required=True)
    p.add_argument("--budget", type=int, default=None)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("graph", help="emit a circulant digraph as Graphviz DOT")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--steps", required=True, help="comma-separated step sizes, e.g. 1,4")
    p.add_argument("--format", choices=["dot"], default="dot")
    p.set_defaults(func=_cmd_graph)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except DisconnectedGraph as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (RejectedParameters, NotLatticePoint, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def run() -> None:
    sys.exit(main())

"""Command-line interface: build matrices, run verification suites, query
the apartment, enumerate subgroups, emit reports.

Exit codes: 0 all requested checks pass, 1 a check failed (or an enumeration
hit its cap), 2 usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import apartment, generators
from .closure import ClosureCapExceeded
from .gf5 import MatrixFormatError, format_matrix, parse_matrix
from .report import reports_to_json
from .verifier import SUITE_NAMES, Session


def write_matrix(m, path):
    Path(path).write_text(format_matrix(m))


def read_matrix(path):
    return parse_matrix(Path(path).read_text())


def _line_slug(line):
    return f"{line.frm}{line.to}"


def cmd_build(args):
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    bundle = generators.GeneratorBundle()
    named = {
        "alpha": bundle.alpha,
        "beta": bundle.beta,
        "gamma": bundle.gamma,
        "eta": bundle.eta,
        "f": bundle.f,
        "xi": bundle.xi,
    }
    for name, mat in named.items():
        write_matrix(mat, out / f"{name}.mat")
    for line, mat in bundle.roots.items():
        write_matrix(mat, out / f"root_{_line_slug(line)}.mat")
    print(f"wrote {len(named) + len(bundle.roots)} matrices to {out}")
    return 0


def cmd_verify(args):
    session = Session()
    reports = session.run(args.suite, all_lines=args.all_lines)
    for rep in reports:
        print(rep.summary())
        for c in rep.failures():
            print(f"    FAIL {c['name']}: {c['witness']}")
    if args.json:
        Path(args.json).write_text(reports_to_json(reports))
    return 0 if all(r.passed for r in reports) else 1


def cmd_apartment(args):
    if args.what == "graph":
        print(json.dumps(apartment.graph_data(), indent=2))
        return 0
    if not args.line:
        print("a line argument like '(1a,2b)' is required", file=sys.stderr)
        return 2
    line = apartment.parse_line(args.line)
    cfg = apartment.configuration(line)
    if args.what == "star":
        names = [str(cfg.star_lines[i]) for i in range(1, 7)]
    elif args.what == "hexagon":
        names = [str(cfg.star_lines[i]) for i in range(1, 7)]
        names += [str(cfg.hex_lines[i]) for i in range(1, 7)]
    else:
        names = [str(ln) for ln in cfg.quartet]
    print(", ".join(names))
    return 0


def cmd_enumerate(args):
    session = Session()
    try:
        closure = session.enumerate_group(args.group, cap=args.cap)
    except ClosureCapExceeded as exc:
        print(f"cap {exc.cap} exceeded: at least {exc.partial_count} elements", file=sys.stderr)
        return 1
    print(closure.order)
    return 0


def cmd_report(args):
    session = Session()
    reports = session.run("all", all_lines=args.all_lines)
    Path(args.out).write_text(reports_to_json(reports))
    for rep in reports:
        print(rep.summary())
    print(f"report written to {args.out}")
    return 0 if all(r.passed for r in reports) else 1


def build_parser():
    parser = argparse.ArgumentParser(
        prog="lyons111",
        description="Construct and verify the 111-dimensional mod-5 representation "
        "of the sporadic Lyons group.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="write all base and root matrices")
    p.add_argument("--out", required=True, help="output directory")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--suite", default="all", choices=("all",) + SUITE_NAMES)
    p.add_argument("--all-lines", action="store_true", help="run the relation battery at every line")
    p.add_argument("--json", help="write the JSON report here")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("apartment", help="print configurations or the incidence graph")
    p.add_argument("what", choices=("star", "hexagon", "quartet", "graph"))
    p.add_argument("line", nargs="?", help="oriented line like '(1a,2b)'")
    p.set_defaults(func=cmd_apartment)

    p = sub.add_parser("enumerate", help="enumerate a named subgroup")
    p.add_argument("--group", required=True, choices=("K", "T", "N", "quartet", "sl2", "S", "sl3star"))
    p.add_argument("--cap", type=int, default=500_000)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("report", help="run everything and write the JSON report")
    p.add_argument("--out", required=True)
    p.add_argument("--all-lines", action="store_true")
    p.set_defaults(func=cmd_report)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, MatrixFormatError) as exc:
        print(str(exc), file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end: ``hlattice <group> <command> ...``.

Every command writes one artifact (CSV with a header row, or one JSON
document) to standard output or ``--output``. Exit codes: 0 success,
1 domain error, 2 usage error, 3 a search or scan found no solution.

Negative coordinates must be attached with ``=`` so they are not taken for
options, e.g. ``prachar line --second=-11,7 --limit 40``.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import goldbach2, goldbach3, intervals, prachar, twins
from .errors import HLatticeError, NoSolution
from .hcore import HMember

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE, EXIT_NO_SOLUTION = 0, 1, 2, 3


class Artifact:
    """A table (header + rows) and/or a JSON document produced by a command."""

    def __init__(self, header=None, rows=(), document=None, exit_code=EXIT_OK):
        self.header = header
        self.rows = list(rows)
        self.document = document
        self.exit_code = exit_code

    def render(self, fmt: str) -> str:
        if fmt == "json":
            doc = self.document
            if doc is None:
                doc = [dict(zip(self.header, row)) for row in self.rows]
            return json.dumps(doc, indent=2) + "\n"
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(self.header)
        writer.writerows(self.rows)
        return buf.getvalue()


def _int_pair(text: str) -> tuple[int, int]:
    try:
        x, y = (int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected X,Y integers, got {text!r}") from None
    return x, y


def _bool(flag: bool) -> int:
    return int(bool(flag))


# -- commands ---------------------------------------------------------------


def cmd_classify(args) -> Artifact:
    m = HMember.of(args.x)
    row = (m.value, m.traeger, m.branch.symbol, m.member_class.value)
    return Artifact(("value", "traeger", "branch", "class"), [row])


def cmd_intervals(args) -> Artifact:
    table = intervals.interval_table(args.p_max, group_by_gap=args.group_by_gap)
    return Artifact(intervals.IntervalCounts.CSV_HEADER, [r.as_row() for r in table])


CENSUS_HEADER = ("e", "quadrant", "A", "p_first", "v_first", "p_second", "v_second", "pp", "pv", "vp", "vv", "identity_ok")


def cmd_g2_census(args) -> Artifact:
    quadrants = [args.quadrant] if args.quadrant else goldbach2.compatible_quadrants(args.e)
    rows = []
    for q in quadrants:
        c = goldbach2.pair_census(goldbach2.rhombus_side(args.e, q))
        rows.append(
            (args.e, q, c.A, c.p_first, c.v_first, c.p_second, c.v_second,
             c.n_pp, c.n_pv, c.n_vp, c.n_vv, _bool(goldbach2.census_identity_check(c)))
        )
    return Artifact(CENSUS_HEADER, rows)


def cmd_g2_solve(args) -> Artifact:
    ec = goldbach2.classify_even(args.e)
    sols = goldbach2.goldbach_solutions(args.e)
    doc = {"e": args.e, "residue": ec.residue, "solutions": [list(s) for s in sols], "count": len(sols)}
    return Artifact(("p", "q"), sols, doc)


def cmd_g2_scan(args) -> Artifact:
    scan = goldbach2.scan_goldbach(args.lo, args.hi, jobs=args.jobs)
    rows = zip(scan.evens.tolist(), scan.counts.tolist(), scan.identity_ok.astype(int).tolist())
    code = EXIT_NO_SOLUTION if scan.no_solution else EXIT_OK
    return Artifact(("e", "count", "identity_ok"), rows, scan.summary(), code)


def cmd_twins_list(args) -> Artifact:
    pairs = twins.twin_pairs(args.limit)
    return Artifact(("s", "minus_value", "plus_value"), [(t.traeger, t.minus_value, t.plus_value) for t in pairs])


TWIN_CENSUS_HEADER = ("p", "L", "v_minus", "p_minus", "v_plus", "p_plus", "vv", "pv", "vp", "pp")


def _twin_census_row(p, c):
    return (p, c.A, c.v_first, c.p_first, c.v_second, c.p_second, c.n_vv, c.n_pv, c.n_vp, c.n_pp)


def cmd_twins_census(args) -> Artifact:
    return Artifact(TWIN_CENSUS_HEADER, [_twin_census_row(args.p, twins.diagonal_census(args.p))])


def cmd_twins_streichung(args) -> Artifact:
    trace = twins.streichung(args.p)
    rows = []
    for step, listing in enumerate(trace.steps, start=1):
        for index, r in enumerate(listing, start=1):
            rows.append((step, r.pair_type.value, r.row, index, r.minus_value))
    doc = {
        "p": trace.p,
        "original": dict(zip(TWIN_CENSUS_HEADER, _twin_census_row(trace.p, trace.original))),
        "removed_vv": trace.removed_vv,
        "removed_mixed": trace.removed_mixed,
        "removed_mixed_type": trace.removed_mixed_type.value if trace.removed_mixed_type else None,
        "remaining": trace.census.counts,
        "remaining_rows": len(trace.after_mixed),
    }
    return Artifact(("step", "type", "row", "index", "value"), rows, doc)


def cmd_twins_general(args) -> Artifact:
    return Artifact(("a", "b"), twins.generalized_twins(args.offset, args.limit))


def cmd_prachar_points(args) -> Artifact:
    rows = [(x, y, _bool(prachar.both_prime(x, y))) for x, y in prachar.ppt_lattice_points(args.limit)]
    return Artifact(("x", "y", "prime_pair"), rows)


def cmd_prachar_line(args) -> Artifact:
    line = prachar.line_through(args.second, anchor=args.anchor)
    sols = prachar.line_solutions(line, args.limit)
    doc = dict(line.descriptor(), solutions=[list(s) for s in sols])
    return Artifact(("x", "y"), sols, doc)


def _signs(signs) -> str:
    return "".join("+" if s > 0 else "-" for s in signs)


def cmd_g3_layer(args) -> Artifact:
    layer = goldbach3.octahedron_layer(args.s)
    rows = [(layer.s, cube, _signs(signs), rest, 6 * layer.s + rest) for signs, cube, rest in layer.subcube_signs]
    doc = {
        "s": layer.s,
        "odd_numbers": list(layer.odd_numbers),
        "subcubes": [{"subcube": c, "signs": list(sg), "rest_sum": r} for sg, c, r in layer.subcube_signs],
    }
    return Artifact(("s", "subcube", "signs", "rest_sum", "value"), rows, doc)


def cmd_g3_solve(args) -> Artifact:
    sols = goldbach3.triple_solutions(args.n, layer=args.layer)
    rows = [(*s.components, *s.traegers, s.subcube) for s in sols]
    doc = {
        "n": args.n,
        "layer": args.layer,
        "ordered_count": len(sols),
        "unordered_count": goldbach3.orbit_count(sols),
        "solutions": [
            {"components": list(s.components), "traegers": list(s.traegers), "subcube": s.subcube}
            for s in sols
        ],
    }
    return Artifact(("x", "y", "z", "s_x", "s_y", "s_z", "subcube"), rows, doc)


def cmd_g3_scan(args) -> Artifact:
    scan = goldbach3.scan_3gh(args.lo, args.hi, jobs=args.jobs)
    code = EXIT_NO_SOLUTION if scan.no_solution else EXIT_OK
    return Artifact(goldbach3.TripleScan.CSV_HEADER, scan.rows(), scan.summary(), code)


# -- parser -----------------------------------------------------------------


def _jobs(text: str) -> int:
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError("--jobs must be at least 1")
    return n


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--output", "-o", help="write to this file instead of standard output")

    parser = argparse.ArgumentParser(prog="hlattice", description="Prime lattice toolkit on H = 6s±1.")
    groups = parser.add_subparsers(dest="group", required=True)

    p = groups.add_parser("classify", parents=[common], help="coordinates and class of one member")
    p.add_argument("x", type=int)
    p.set_defaults(func=cmd_classify)

    p = groups.add_parser("intervals", parents=[common], help="prime/multiple counts per p² interval")
    p.add_argument("--p-max", type=int, required=True)
    p.add_argument("--group-by-gap", action="store_true")
    p.set_defaults(func=cmd_intervals)

    g2 = groups.add_parser("goldbach2", help="binary Goldbach rhombus sides").add_subparsers(dest="command", required=True)
    p = g2.add_parser("census", parents=[common])
    p.add_argument("e", type=int)
    p.add_argument("--quadrant", type=int, choices=(1, 2, 3, 4))
    p.set_defaults(func=cmd_g2_census)
    p = g2.add_parser("solve", parents=[common])
    p.add_argument("e", type=int)
    p.set_defaults(func=cmd_g2_solve)
    p = g2.add_parser("scan", parents=[common])
    p.add_argument("lo", type=int)
    p.add_argument("hi", type=int)
    p.add_argument("--jobs", type=_jobs)
    p.set_defaults(func=cmd_g2_scan)

    tw = groups.add_parser("twins", help="twin diagonal and overhang removal").add_subparsers(dest="command", required=True)
    p = tw.add_parser("list", parents=[common])
    p.add_argument("--limit", type=int, required=True)
    p.set_defaults(func=cmd_twins_list)
    p = tw.add_parser("census", parents=[common])
    p.add_argument("p", type=int)
    p.set_defaults(func=cmd_twins_census)
    p = tw.add_parser("streichung", parents=[common])
    p.add_argument("p", type=int)
    p.set_defaults(func=cmd_twins_streichung)
    p = tw.add_parser("general", parents=[common])
    p.add_argument("--offset", type=int, required=True)
    p.add_argument("--limit", type=int, required=True)
    p.set_defaults(func=cmd_twins_general)

    pr = groups.add_parser("prachar", help="prime pairs on lattice lines").add_subparsers(dest="command", required=True)
    p = pr.add_parser("points", parents=[common])
    p.add_argument("--limit", type=int, required=True)
    p.set_defaults(func=cmd_prachar_points)
    p = pr.add_parser("line", parents=[common])
    p.add_argument("--second", type=_int_pair, required=True, metavar="X,Y")
    p.add_argument("--anchor", type=_int_pair, default=prachar.ORIGIN, metavar="X,Y")
    p.add_argument("--limit", type=int, required=True)
    p.set_defaults(func=cmd_prachar_line)

    g3 = groups.add_parser("goldbach3", help="three-prime sums on octahedron layers").add_subparsers(dest="command", required=True)
    p = g3.add_parser("layer", parents=[common])
    p.add_argument("s", type=int)
    p.set_defaults(func=cmd_g3_layer)
    p = g3.add_parser("solve", parents=[common])
    p.add_argument("n", type=int)
    p.add_argument("--layer", type=int, help="keep only points whose trägers sum to this value")
    p.set_defaults(func=cmd_g3_solve)
    p = g3.add_parser("scan", parents=[common])
    p.add_argument("lo", type=int)
    p.add_argument("hi", type=int)
    p.add_argument("--jobs", type=_jobs)
    p.set_defaults(func=cmd_g3_scan)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        artifact = args.func(args)
    except NoSolution as exc:
        print(f"hlattice: no solution: {exc}", file=sys.stderr)
        return EXIT_NO_SOLUTION
    except (HLatticeError, ValueError) as exc:
        print(f"hlattice: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    text = artifact.render(args.format)
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return artifact.exit_code


def main(argv=None) -> None:
    sys.exit(run(argv))

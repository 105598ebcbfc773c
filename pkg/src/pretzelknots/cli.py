"""Command line: ``analyze``, ``sweep``, ``chart`` and ``verify-paper``.

Exit codes: 0 success, 1 usage error, 2 internal error, 3 verification
mismatch.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import traceback

from .classify import analyze, chart_class, sweep_rows
from .freefactor import Budget
from .knots import PretzelKnot, boundary_generators, parse_knot

EXIT_OK, EXIT_USAGE, EXIT_INTERNAL, EXIT_MISMATCH = 0, 1, 2, 3
QR_CAP = 200


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _positive(name):
    def conv(s):
        v = int(s)
        if v < 0 or (name == "candidate cap" and v == 0):
            raise argparse.ArgumentTypeError(f"{name} must be positive")
        return v
    return conv


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--nielsen-radius", type=_positive("radius"), default=3)
    common.add_argument("--subst-max", type=_positive("substitution exponent"), default=2)
    common.add_argument("--candidate-cap", type=_positive("candidate cap"), default=10**6)
    common.add_argument("--primitivity-rank", type=_positive("primitivity rank"), default=3,
                        help="largest support on which primitivity is decided")
    common.add_argument("--jobs", type=_positive("jobs"), default=1)

    p = _Parser(prog="pretzelknots", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    a = sub.add_parser("analyze", parents=[common], help="full report for one knot")
    a.add_argument("spec", nargs="?", help='e.g. "P(-5,7,9)" or "P(3,-3,3,-3,7)"')
    a.add_argument("--family", nargs=2, type=int, metavar=("K", "R"),
                   help="P(3,-3,...,3,-3,2R+1) with K copies of (3,-3)")
    a.add_argument("--format", choices=["json", "text"], default="json")
    a.add_argument("--dot", action="store_true",
                   help="print the folded graph of the H-side Schreier basis in DOT format")

    for name, fmts, default in (("sweep", ["csv", "json", "markdown", "text"], "csv"),
                                ("chart", ["markdown", "csv", "json"], "markdown")):
        s = sub.add_parser(name, parents=[common], help=f"{name} over P(2p+1, 2q+1, 2r+1)")
        s.add_argument("--p", type=int, required=True, dest="p")
        s.add_argument("--qmax", type=int, required=True)
        s.add_argument("--rmax", type=int, required=True)
        s.add_argument("--format", choices=fmts, default=default)

    v = sub.add_parser("verify-paper", parents=[common], help="regression against bundled verdicts")
    v.add_argument("--only", help="run one fixture group")
    v.add_argument("--fixtures", help="alternative fixture file")
    v.add_argument("--format", choices=["text", "json"], default="text")
    return p


def _budget(args) -> Budget:
    return Budget(nielsen_radius=args.nielsen_radius, subst_max=args.subst_max,
                  candidate_cap=args.candidate_cap, primitivity_rank=args.primitivity_rank)


def _text_report(d: dict) -> str:
    if "declined" in d:
        return f"{d['knot']}: analysis declined: {d['declined']}"
    lines = [f"{d['knot']}  N = {d['N']}  Delta = {d['alexander']}  index = {d['index']}"]
    for side in ("ffp_H", "ffp_K"):
        v = d[side]
        if v:
            lines.append(f"  {side}: {v['outcome']}  {json.dumps(v['witness'])}")
    for key in ("ffp", "rtfn", "biorder"):
        val = d["ffp_overall"] if key == "ffp" else d[key]
        lines.append(f"  {key}: {val}  ({d[key + '_reason']})")
    lines.append(f"  sigma2_lo: {d['sigma2_lo']}")
    return "\n".join(lines)


def cmd_analyze(args, out):
    if (args.spec is None) == (args.family is None):
        raise UsageError("give exactly one of SPEC or --family K R")
    try:
        J = PretzelKnot.alternating_family(*args.family) if args.family else parse_knot(args.spec)
    except ValueError as e:
        raise UsageError(str(e)) from None
    if args.dot:
        from .schreier import from_generators
        from .stallings import from_generators as fold

        X, H, _ = boundary_generators(J)
        sys_ = from_generators(X, H)
        out.write(fold(X, list(sys_.definitions)).to_dot() + "\n")
        return EXIT_OK
    rep = analyze(J, _budget(args)).to_json()
    out.write((json.dumps(rep, indent=2) if args.format == "json" else _text_report(rep)) + "\n")
    return EXIT_OK


def _check_range(args):
    if args.qmax > QR_CAP or args.rmax > QR_CAP:
        raise UsageError(f"qmax and rmax are capped at {QR_CAP}")
    if args.qmax < 1 or args.rmax < 1:
        raise UsageError("qmax and rmax must be at least 1")
    if args.p in (0, -1):
        raise UsageError("p = 0 or -1 gives a two-bridge knot")


def cmd_sweep(args, out):
    _check_range(args)
    rows = sweep_rows(args.p, args.qmax, args.rmax, _budget(args), args.jobs)
    cols = ["knot", "q", "r", "N", "ffp", "rtfn", "biorder", "sigma2_lo"]
    table = [[rep.knot.name, q, r, rep.N, rep.ffp_overall.value, rep.rtfn.value,
              rep.biorder.value, rep.sigma2_lo.value] for q, r, rep in rows]
    if args.format == "json":
        out.write(json.dumps([rep.to_json(timing=False) for _, _, rep in rows], indent=1) + "\n")
    elif args.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(cols)
        w.writerows(table)
    elif args.format == "markdown":
        out.write("| " + " | ".join(cols) + " |\n|" + "---|" * len(cols) + "\n")
        for row in table:
            out.write("| " + " | ".join(str(x) for x in row) + " |\n")
    else:
        for row in table:
            out.write("  ".join(str(x) for x in row) + "\n")
    return EXIT_OK


TAGS = {"satisfies": "S", "fails": "F", "trivial-Δ": "T", "unknown": "?"}


def cmd_chart(args, out):
    _check_range(args)
    rows = [(q, r, rep.N, chart_class(rep)) for q, r, rep in
            sweep_rows(args.p, args.qmax, args.rmax, _budget(args), args.jobs)]
    if args.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["q", "r", "N", "ffp_class"])
        w.writerows(rows)
    elif args.format == "json":
        out.write(json.dumps([dict(q=q, r=r, N=n, ffp_class=c) for q, r, n, c in rows], indent=1) + "\n")
    else:
        cell = {(q, r): f"{n} {TAGS[c]}" for q, r, n, c in rows}
        qs = range(1, args.qmax + 1)
        out.write(f"P({2 * args.p + 1}, 2q+1, 2r+1): N and free factor class "
                  "(S satisfies, F fails, T trivial Delta, ? unknown)\n\n")
        out.write("| r \\ q | " + " | ".join(str(q) for q in qs) + " |\n")
        out.write("|---|" + "---|" * len(qs) + "\n")
        for r in range(1, args.rmax + 1):
            out.write(f"| {r} | " + " | ".join(cell.get((q, r), "") for q in qs) + " |\n")
    return EXIT_OK


def cmd_verify(args, out):
    from .verify import run

    try:
        n, bad = run(args.only, _budget(args), args.jobs, args.fixtures)
    except FileNotFoundError as e:
        raise UsageError(f"fixture file missing: {e.filename}") from None
    except KeyError as e:
        raise UsageError(e.args[0]) from None
    if args.format == "json":
        out.write(json.dumps({"cases": n, "mismatches": [str(b) for b in bad]}, indent=1) + "\n")
    else:
        for b in bad:
            out.write(f"MISMATCH {b}\n")
        scope = f" in group {args.only}" if args.only else ""
        out.write(f"{n - len({(b.knot, b.source) for b in bad})}/{n} cases pass{scope}\n")
    return EXIT_MISMATCH if bad else EXIT_OK


COMMANDS = {"analyze": cmd_analyze, "sweep": cmd_sweep, "chart": cmd_chart, "verify-paper": cmd_verify}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args, out)
    except UsageError as e:
        print(f"pretzelknots: {e}", file=sys.stderr)
        return EXIT_USAGE
    except Exception:
        traceback.print_exc()
        return EXIT_INTERNAL


def run_capture(argv) -> tuple[int, str]:
    buf = io.StringIO()
    try:
        code = main(argv, buf)
    except SystemExit as e:
        code = e.code
    return code, buf.getvalue()


if __name__ == "__main__":
    sys.exit(main())

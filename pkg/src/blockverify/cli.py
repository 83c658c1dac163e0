"""Command-line front end: ``blockverify {check,tree,tame,product,power}``.

Exit status: 0 when every conjectured or proven inequality holds (documented
counterexamples excepted), 2 when something failed that could be a
counterexample, 1 on usage or data errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path
from typing import Sequence, TextIO

from .brauer_tree import BrauerTree, InvalidTreeError, cartan_from_tree, is_star, tree_suite
from .checkers import Assessment, CheckSuiteReport, Skip, assess, passed, run_suite
from .model import BlockRecord, InconsistentDataError
from .products import PrimeMismatchError, block_product, tensor_power
from .records import CorpusEntry, DataError, corpus_dir, corpus_paths, dumps_record, load_entry, parse_entry
from .spectral import DEFAULT_TOLERANCE
from .tame import (
    FAMILIES,
    FAMILY_IDS,
    SweepReport,
    TameFamilySpec,
    UnknownFamilyError,
    defect_orders,
    sweep,
    tame_trace_check,
)

EXIT_OK, EXIT_DATA, EXIT_FAIL = 0, 1, 2


def _rational(text: str) -> Fraction:
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None
    if value <= 0:
        raise argparse.ArgumentTypeError("tolerance must be positive")
    return value


def _defect_max(text: str) -> int:
    try:
        if "^" in text:
            base, exp = text.split("^")
            return int(base) ** int(exp)
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer or 2^n: {text!r}") from None


def _degrees(text: str) -> tuple[int, ...]:
    try:
        out = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers: {text!r}") from None
    if not out or any(x <= 0 for x in out):
        raise argparse.ArgumentTypeError("degrees must be positive integers")
    return out


def _resolve(path: str) -> Path:
    p = Path(path)
    if p.exists():
        return p
    for candidate in (corpus_dir() / p.name, corpus_dir() / f"{p.name}.json"):
        if candidate.exists():
            return candidate
    return p


def _read_entry(path: str, stdin: TextIO) -> CorpusEntry:
    if path == "-":
        return parse_entry(stdin.read(), "<stdin>")
    return load_entry(_resolve(path))


# -- rendering ---------------------------------------------------------------


def _status(v, p: int) -> str:
    if "undecided at tolerance" in v.notes:
        return "UNDECIDED"
    return "PASS" if passed(v, p) else "FAIL"


def render_text(report: CheckSuiteReport, p: int) -> str:
    lines = [f"== {report.record}"]
    for v in report.verdicts:
        rel = "=" if v.equality else ("<=" if v.holds else ">")
        lines.append(f"  {_status(v, p):9s} {v.check_id}: {v.lhs} {rel} {v.rhs}")
        lines.extend(f"            {n}" for n in v.notes)
    for s in report.skipped:
        lines.append(f"  {'SKIP':9s} {s.check_id}: {s.reason}")
    return "\n".join(lines)


def _emit(reports: list[CheckSuiteReport], ps: list[int], fmt: str, out: TextIO) -> None:
    if fmt == "json":
        payload = [r.to_dict() for r in reports]
        json.dump(payload[0] if len(payload) == 1 else payload, out, indent=2)
        out.write("\n")
    else:
        out.write("\n\n".join(render_text(r, p) for r, p in zip(reports, ps)) + "\n")


def _exit_for(assessments: Sequence[Assessment]) -> int:
    return EXIT_OK if all(a.ok for a in assessments) else EXIT_FAIL


# -- check -----------------------------------------------------------------


def _tame_report(spec: TameFamilySpec, include_speculative: bool) -> CheckSuiteReport:
    if spec.speculative and not include_speculative:
        return CheckSuiteReport(
            spec.label(),
            (),
            (Skip("tame", "speculative family (occurrence in blocks is open); use --include-speculative"),),
        )
    return CheckSuiteReport(spec.label(), tuple(tame_trace_check(spec)))


def report_for(entry: CorpusEntry, tolerance=DEFAULT_TOLERANCE, include_speculative: bool = False) -> tuple[CheckSuiteReport, int]:
    """The raw suite report for a parsed entry, and the prime used to read it."""
    rec = entry.record
    if isinstance(rec, BrauerTree):
        report = tree_suite(rec, entry.brauer_degrees, name=entry.name)
        return report, entry.p or 0
    if isinstance(rec, TameFamilySpec):
        return _tame_report(rec, include_speculative), 2
    report = run_suite(rec, tolerance)
    return report, rec.p


def cmd_check(args, stdin: TextIO, out: TextIO, err: TextIO) -> int:
    paths = list(args.paths)
    if args.corpus:
        paths += [str(p) for p in corpus_paths()]
    if not paths:
        err.write("check: no input files (give paths, '-' for stdin, or --corpus)\n")
        return EXIT_DATA
    reports, ps, assessments = [], [], []
    data_error = False
    for path in paths:
        try:
            entry = _read_entry(path, stdin)
            report, p = report_for(entry, args.tolerance, args.include_speculative)
        except DataError as exc:
            for line in exc.diagnostics:
                err.write(line + "\n")
            data_error = True
            continue
        except InconsistentDataError as exc:
            err.write(f"{path}: {exc}\n")
            data_error = True
            continue
        a = assess(report, p, entry.expected)
        reports.append(a.report)
        ps.append(p)
        assessments.append(a)
    if reports:
        _emit(reports, ps, args.report, out)
    if data_error:
        return EXIT_DATA
    return _exit_for(assessments)


# -- tree --------------------------------------------------------------------


def cmd_tree(args, stdin: TextIO, out: TextIO, err: TextIO) -> int:
    degrees = args.degrees
    name = "brauer tree"
    p = None
    try:
        if args.star is not None:
            if args.file is not None:
                err.write("tree: give a tree file or --star, not both\n")
                return EXIT_DATA
            e, m = args.star
            tree = BrauerTree.star(e, m)
            name = f"star e={e} m={m}"
        elif args.file is not None:
            entry = _read_entry(args.file, stdin)
            if not isinstance(entry.record, BrauerTree):
                err.write(f"tree: {args.file} is not a Brauer tree record\n")
                return EXIT_DATA
            tree, name, p = entry.record, entry.name, entry.p
            degrees = degrees or entry.brauer_degrees
        else:
            err.write("tree: need a tree file or --star E M\n")
            return EXIT_DATA
        if degrees is not None and len(degrees) != tree.e:
            err.write(f"tree: {len(degrees)} degrees given for {tree.e} edges\n")
            return EXIT_DATA
    except (InvalidTreeError, ValueError) as exc:
        for line in getattr(exc, "diagnostics", [str(exc)]):
            err.write(f"tree: {line}\n")
        return EXIT_DATA
    report = tree_suite(tree, degrees, name=name)
    a = assess(report, p or 0)
    c = cartan_from_tree(tree)
    if args.report == "json":
        payload = a.report.to_dict()
        payload["cartan"] = c.to_lists()
        payload["defect_group_order"] = tree.defect_group_order
        payload["is_star"] = is_star(tree)
        json.dump(payload, out, indent=2)
        out.write("\n")
    else:
        out.write(f"e = {tree.e}, m = {tree.multiplicity}, |D| = em+1 = {tree.defect_group_order}\n")
        out.write(f"star with exceptional centre: {'yes' if is_star(tree) else 'no'}\n")
        out.write("Cartan matrix:\n")
        for row in c.rows:
            out.write("  " + " ".join(f"{x:3d}" for x in row) + "\n")
        for note in tree.notes:
            out.write(f"note: {note}\n")
        out.write(render_text(a.report, p or 0) + "\n")
    return _exit_for([a])


# -- tame --------------------------------------------------------------------


def _render_sweep(report: SweepReport) -> str:
    head = f"{'family':<11} {'|D|':>5} {'params':<10} {'tr C':>6} {'bound':>7} {'margin':>7} {'l|D|':>6}  PD  SNF  status"
    lines = [head, "-" * len(head)]
    for row in report.rows:
        params = ",".join(f"{k}={v}" for k, v in sorted(row.spec.parameters.items()))
        status = "ok" if not row.failures else "FAIL " + ",".join(row.failures)
        if not row.divisors_divide_defect:
            status += "  (an elementary divisor does not divide |D|)"
        if row.discrepancies:
            status += "  (sharper stated bound exceeded: " + "; ".join(
                f"{v.lhs} > {v.rhs}" for v in row.discrepancies) + ")"
        lines.append(
            f"{row.spec.family_id:<11} {row.spec.defect_group_order:>5} {params:<10} {row.trace:>6} "
            f"{str(row.bound):>7} {str(row.margin):>7} {row.verdicts[1].rhs!s:>6}  "
            f"{'yes' if row.positive_definite else 'NO':>3} {'ok' if row.snf_ok else 'BAD':>4}  {status}"
        )
    lines.append(f"{len(report.rows)} parameter points, {len(report.failures)} failures")
    return "\n".join(lines)


def cmd_tame(args, stdin: TextIO, out: TextIO, err: TextIO) -> int:
    fam = args.family.upper()
    if fam == "ALL":
        ids = [f for f in FAMILY_IDS if args.include_speculative or not FAMILIES[f].speculative]
    elif fam in FAMILIES:
        ids = [fam]
    else:
        err.write(f"tame: unknown family {args.family!r}; expected ALL or one of {', '.join(FAMILY_IDS)}\n")
        return EXIT_DATA
    orders = defect_orders(args.defect_max)
    rows = []
    try:
        for fid in ids:
            rows.extend(sweep(fid, orders).rows)
    except (UnknownFamilyError, ValueError) as exc:
        err.write(f"tame: {exc}\n")
        return EXIT_DATA
    report = SweepReport(tuple(rows))
    if args.report == "json":
        json.dump(
            [
                {
                    "spec": row.spec.label(),
                    "family": row.spec.family_id,
                    "defect_group_order": row.spec.defect_group_order,
                    "parameters": dict(row.spec.parameters),
                    "speculative": row.spec.speculative,
                    "cartan": row.cartan.to_lists(),
                    "positive_definite": row.positive_definite,
                    "determinant": row.determinant,
                    "elementary_divisors": list(row.elementary_divisors),
                    "verdicts": [v.to_dict() for v in row.verdicts],
                    "failures": row.failures,
                    "divisors_divide_defect": row.divisors_divide_defect,
                }
                for row in report.rows
            ],
            out,
            indent=2,
        )
        out.write("\n")
    else:
        out.write(_render_sweep(report) + "\n")
    return EXIT_OK if not report.failures else EXIT_FAIL


# -- product / power -------------------------------------------------------------


def _block_entry(path: str, stdin: TextIO, err: TextIO):
    entry = _read_entry(path, stdin)
    if not isinstance(entry.record, BlockRecord):
        raise DataError([f"{path}: not a block record"])
    return entry.record


def cmd_product(args, stdin: TextIO, out: TextIO, err: TextIO) -> int:
    try:
        b1 = _block_entry(args.file1, stdin, err)
        b2 = _block_entry(args.file2, stdin, err)
        out.write(dumps_record(block_product(b1, b2)))
    except DataError as exc:
        err.write("\n".join(exc.diagnostics) + "\n")
        return EXIT_DATA
    except PrimeMismatchError as exc:
        err.write(f"product: {exc}\n")
        return EXIT_DATA
    return EXIT_OK


def cmd_power(args, stdin: TextIO, out: TextIO, err: TextIO) -> int:
    if args.n < 1:
        err.write("power: n must be >= 1\n")
        return EXIT_DATA
    try:
        b = _block_entry(args.file, stdin, err)
    except DataError as exc:
        err.write("\n".join(exc.diagnostics) + "\n")
        return EXIT_DATA
    out.write(dumps_record(tensor_power(b, args.n)))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="blockverify", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def report_flag(p):
        p.add_argument("--report", choices=("text", "json"), default="text")

    p = sub.add_parser("check", help="run the inequality suite on JSON records")
    p.add_argument("paths", nargs="*", help="record files; '-' reads stdin")
    p.add_argument("--corpus", action="store_true", help="also check every bundled corpus entry")
    report_flag(p)
    p.add_argument("--tolerance", type=_rational, default=DEFAULT_TOLERANCE, help="enclosure width for rho(C), e.g. 1/1000000")
    p.add_argument("--include-speculative", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("tree", help="Cartan matrix and checks of a Brauer tree")
    p.add_argument("file", nargs="?")
    p.add_argument("--star", nargs=2, type=int, metavar=("E", "M"))
    p.add_argument("--degrees", type=_degrees, help="Brauer degrees, e.g. 1,1,1")
    report_flag(p)
    p.set_defaults(func=cmd_tree)

    p = sub.add_parser("tame", help="sweep Erdmann's tame Cartan families")
    p.add_argument("family", help="family id or ALL")
    p.add_argument("--defect-max", type=_defect_max, default=64, help="largest |D|, e.g. 4096 or 2^12")
    p.add_argument("--include-speculative", action="store_true")
    report_flag(p)
    p.set_defaults(func=cmd_tame)

    p = sub.add_parser("product", help="direct product of two blocks, as JSON")
    p.add_argument("file1")
    p.add_argument("file2")
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("power", help="n-fold direct power of a block, as JSON")
    p.add_argument("file")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_power)
    return parser


def main(argv: Sequence[str] | None = None, stdin: TextIO | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    stdin = stdin or sys.stdin
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_DATA if exc.code else EXIT_OK
    return args.func(args, stdin, out, err)


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end: ``springer2col <subcommand>``.

Exit codes: 0 success, 1 verification failure, 2 input error.
"""

from __future__ import annotations

import argparse
import io
import json
import logging
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .certificates import membership_chain
from .criterion import (
    ComponentReport,
    classify,
    is_member,
    s_table_of_component,
    s_table_of_rowstandard,
    tangent_dimension,
)
from .errors import Springer2ColError
from .records import dump_csv, dump_json, report_to_record
from .tableaux import (
    StandardTableau,
    TwoColumnShape,
    enumerate_standard,
    parse_shape,
    parse_tableau,
    shapes_up_to,
)
from .verify import RunConfig, run_verification, seeds_from_env

EXIT_OK, EXIT_FAILED, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


@dataclass(frozen=True)
class SurveyRow:
    r: int
    s: int
    standard_count: int
    singular_count: int
    nonsingular_count: int

    @property
    def n(self) -> int:
        return self.r + self.s


def _standard(shape: TwoColumnShape, literal: str, what: str) -> StandardTableau:
    t = parse_tableau(shape, literal)
    if not isinstance(t, StandardTableau):
        raise InputError(f"{what} {literal!r} is not standard: columns must increase top to bottom")
    return t


def _classify_literal(args: tuple[int, int, str]) -> ComponentReport:
    r, s, literal = args
    return classify(parse_tableau(TwoColumnShape(r, s), literal).as_standard())


def classify_many(tableaux: list[StandardTableau], jobs: int = 1) -> list[ComponentReport]:
    """Classify in a worker pool; results come back in input order."""
    if jobs <= 1 or len(tableaux) < 64:
        return [classify(t) for t in tableaux]
    tasks = [(t.shape.r, t.shape.s, t.literal()) for t in tableaux]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_classify_literal, tasks, chunksize=32))


def survey(shapes: list[TwoColumnShape], jobs: int = 1) -> list[SurveyRow]:
    rows = []
    for shape in shapes:
        reports = classify_many(enumerate_standard(shape), jobs)
        sing = sum(rep.singular for rep in reports)
        rows.append(SurveyRow(shape.r, shape.s, len(reports), sing, len(reports) - sing))
    return rows


def _emit(text: str):
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _pairs(pairs) -> str:
    return " ".join(f"{i}-{j}" for i, j in pairs) or "-"


def _render_report(report: ComponentReport, fmt: str) -> str:
    rec = report_to_record(report, witnesses=True)
    if fmt == "json":
        return json.dumps(rec, indent=2)
    if fmt == "csv":
        buf = io.StringIO()
        dump_csv([rec], buf)
        return buf.getvalue()
    tan = tangent_dimension(report.tableau, report)
    lines = [
        f"shape           {report.shape}",
        f"tableau         {report.tableau.literal()}",
        f"fixed points    {report.fixed_point_count}",
        f"threshold       {report.threshold}",
        f"component dim   {report.component_dim}",
        f"tangent dim     {report.tangent_dim}",
        f"verdict         {'singular' if report.singular else 'nonsingular'}",
        f"member pairs    {_pairs(report.member_switch_pairs)}",
        f"relations       {len(tan.orthogonal_relations)} (tangent dim + relations = {tan.dim + len(tan.orthogonal_relations)})",
    ]
    return "\n".join(lines)


def cmd_classify(args) -> int:
    shape = parse_shape(args.shape)
    t = _standard(shape, args.tableau, "tableau")
    _emit(_render_report(classify(t), args.format))
    return EXIT_OK


def cmd_membership(args) -> int:
    shape = parse_shape(args.shape)
    t = _standard(shape, args.tableau, "tableau")
    tp = parse_tableau(shape, args.tprime)
    verdict = is_member(t, tp)
    rec = {
        "shape": {"r": shape.r, "s": shape.s},
        "tableau": t.literal(),
        "tprime": tp.literal(),
        "member": verdict.member,
    }
    if not verdict.member:
        i, j = verdict.witness
        rec["witness"] = {
            "window": [i, j],
            "tprime_count": s_table_of_rowstandard(tp)[i, j],
            "component_count": s_table_of_component(t)[i, j],
        }
    elif args.certificate:
        rec["certificate"] = membership_chain(t, tp).to_record()
    if args.format == "json":
        _emit(json.dumps(rec, indent=2))
        return EXIT_OK
    lines = [f"{tp.literal()} on component of {t.literal()}: {'member' if verdict.member else 'not a member'}"]
    if "witness" in rec:
        w = rec["witness"]
        lines.append(
            f"witness window {tuple(w['window'])}: count {w['tprime_count']} > component count {w['component_count']}"
        )
    if "certificate" in rec:
        steps = rec["certificate"]["steps"]
        lines.append(f"certificate: {len(steps)} step(s), goal {rec['certificate']['goal']}")
        for st in steps:
            lines.append(f"  {st['kind']:<7} switch {st['switched'][0]}<->{st['switched'][1]}: {st['from']} -> {st['to']}")
    _emit("\n".join(lines))
    return EXIT_OK


def _render_survey(rows: list[SurveyRow], fmt: str) -> str:
    fields = ("r", "s", "standard_count", "singular_count", "nonsingular_count")
    if fmt == "json":
        return json.dumps([{k: getattr(row, k) for k in fields} for row in rows], indent=2)
    if fmt == "csv":
        return "\n".join([",".join(fields)] + [",".join(str(getattr(row, k)) for k in fields) for row in rows])
    lines = [f"{'n':>3} {'r':>3} {'s':>3} {'standard':>9} {'singular':>9} {'nonsingular':>12}"]
    for row in rows:
        lines.append(
            f"{row.n:>3} {row.r:>3} {row.s:>3} {row.standard_count:>9} {row.singular_count:>9} {row.nonsingular_count:>12}"
        )
    return "\n".join(lines)


def cmd_enumerate(args) -> int:
    shape = parse_shape(args.shape)
    reports = classify_many(enumerate_standard(shape), args.jobs)
    if args.format == "text":
        lines = [
            f"{rep.tableau.literal():<24} count {rep.fixed_point_count:>3}  {'singular' if rep.singular else 'nonsingular'}"
            for rep in reports
        ]
        sing = sum(rep.singular for rep in reports)
        lines.append(_render_survey([SurveyRow(shape.r, shape.s, len(reports), sing, len(reports) - sing)], "text"))
        _emit("\n".join(lines))
    else:
        _write_records([report_to_record(rep) for rep in reports], args.format, sys.stdout)
    return EXIT_OK


def cmd_survey(args) -> int:
    if args.max_n < 1:
        raise InputError("--max-n must be at least 1")
    _emit(_render_survey(survey(shapes_up_to(args.max_n), args.jobs), args.format))
    return EXIT_OK


def cmd_verify(args) -> int:
    seeds = tuple(int(x) for x in args.seeds.split(",")) if args.seeds else seeds_from_env()
    config = RunConfig(max_n=args.max_n, seeds=seeds, retries=args.retries)
    s_table = None
    if args.inject_fault == "s-table":
        s_table = _corrupted_s_table
    results = run_verification(config, s_table=s_table)
    ok = all(res.passed for res in results)
    if args.format == "json":
        _emit(json.dumps({
            "config": {"max_n": config.max_n, "seeds": list(config.seeds), "retries": config.retries},
            "passed": ok,
            "checks": [
                {"name": res.name, "anchor": res.anchor, "passed": res.passed, "cases": res.cases, "failures": res.failures}
                for res in results
            ],
        }, indent=2))
    else:
        _emit(f"verify max_n={config.max_n} seeds={','.join(map(str, config.seeds))} retries={config.retries}")
        for res in results:
            _emit(res.line())
        _emit("all checks passed" if ok else "FAILED: " + ", ".join(r.anchor for r in results if not r.passed))
    return EXIT_OK if ok else EXIT_FAILED


def _corrupted_s_table(tp):
    """Window counts with the full window off by one; test hook for the failure path."""
    table = s_table_of_rowstandard(tp)
    n = tp.shape.n
    values = [list(row) for row in table.values]
    if n >= 1:
        values[0][n] += 1
    return type(table)(table.shape, tuple(tuple(row) for row in values))


def _write_records(records, fmt, fp):
    if fmt == "csv":
        dump_csv(records, fp)
    else:
        dump_json(records, fp)


def cmd_export(args) -> int:
    if args.shape:
        shapes = [parse_shape(x) for x in args.shape]
    elif args.max_n is not None:
        shapes = shapes_up_to(args.max_n, args.min_n)
    else:
        raise InputError("export needs --shape or --max-n")
    fmt = args.format
    if fmt is None:
        fmt = "csv" if args.output and args.output.endswith(".csv") else "json"
    tableaux = [t for shape in shapes for t in enumerate_standard(shape)]
    records = [report_to_record(rep, witnesses=args.witnesses) for rep in classify_many(tableaux, args.jobs)]
    if args.output in (None, "-"):
        _write_records(records, fmt, sys.stdout)
    else:
        try:
            with open(args.output, "w", encoding="utf-8", newline="") as fp:
                _write_records(records, fmt, fp)
        except OSError as exc:
            print(f"error: cannot write {args.output}: {exc.strerror or exc}", file=sys.stderr)
            return EXIT_INPUT
        print(f"wrote {len(records)} records to {args.output}", file=sys.stderr)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    default_jobs = os.cpu_count() or 1
    p = argparse.ArgumentParser(
        prog="springer2col",
        description="Singular components of two-column Springer fibers.",
    )
    p.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("classify", help="singularity report for one standard tableau")
    c.add_argument("--shape", required=True, help="column lengths r,s")
    c.add_argument("--tableau", required=True, help='rows separated by ";", e.g. "1,3;2,5;4;6"')
    c.add_argument("--format", choices=("text", "json", "csv"), default="text")
    c.set_defaults(func=cmd_classify)

    m = sub.add_parser("membership", help="does the fixed flag of T' lie on the component of T")
    m.add_argument("--shape", required=True)
    m.add_argument("--tableau", required=True, help="standard tableau T")
    m.add_argument("--tprime", required=True, help="row-standard tableau T'")
    m.add_argument("--certificate", action="store_true", help="print a membership chain for members")
    m.add_argument("--format", choices=("text", "json"), default="text")
    m.set_defaults(func=cmd_membership)

    e = sub.add_parser("enumerate", help="classify every standard tableau of one shape")
    e.add_argument("--shape", required=True)
    e.add_argument("--format", choices=("text", "json", "csv"), default="text")
    e.add_argument("--jobs", type=int, default=default_jobs)
    e.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("survey", help="singular counts for every shape up to a size")
    s.add_argument("--max-n", type=int, required=True)
    s.add_argument("--format", choices=("text", "json", "csv"), default="text")
    s.add_argument("--jobs", type=int, default=default_jobs)
    s.set_defaults(func=cmd_survey)

    v = sub.add_parser("verify", help="cross-check every formula against exact linear algebra")
    v.add_argument("--max-n", type=int, default=7)
    v.add_argument("--seeds", help="comma-separated seeds (default: $SPRINGER2COL_SEEDS or 1,2,3)")
    v.add_argument("--retries", type=int, default=8)
    v.add_argument("--format", choices=("text", "json"), default="text")
    v.add_argument("--inject-fault", choices=("s-table",), help=argparse.SUPPRESS)
    v.set_defaults(func=cmd_verify)

    x = sub.add_parser("export", help="write component reports as JSON or CSV")
    x.add_argument("--shape", action="append", help="r,s (repeatable)")
    x.add_argument("--max-n", type=int)
    x.add_argument("--min-n", type=int, default=1)
    x.add_argument("--format", choices=("json", "csv"))
    x.add_argument("--output", "-o", help="file path, '-' for stdout")
    x.add_argument("--witnesses", action="store_true", help="include witness windows for non-member probes")
    x.add_argument("--jobs", type=int, default=default_jobs)
    x.set_defaults(func=cmd_export)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    try:
        return args.func(args)
    except (Springer2ColError, InputError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())

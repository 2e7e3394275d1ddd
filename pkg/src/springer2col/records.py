"""JSON / CSV records for component reports, and re-validation on load."""

from __future__ import annotations

import csv
import io
import json
from pathlib import Path

from .criterion import ComponentReport, classify
from .errors import ValidityError
from .tableaux import StandardTableau, make_shape, parse_tableau

__all__ = [
    "CSV_FIELDS",
    "report_to_record",
    "record_to_csv_row",
    "csv_row_to_record",
    "revalidate_record",
    "dump_json",
    "dump_csv",
    "load_records",
]

CSV_FIELDS = (
    "r",
    "s",
    "tableau",
    "fixed_point_count",
    "threshold",
    "component_dim",
    "tangent_dim",
    "singular",
    "member_pairs",
)


def report_to_record(report: ComponentReport, witnesses: bool = False) -> dict:
    shape = report.shape
    rec = {
        "shape": {"r": shape.r, "s": shape.s},
        "tableau": report.tableau.literal(),
        "fixed_point_count": report.fixed_point_count,
        "threshold": report.threshold,
        "component_dim": report.component_dim,
        "tangent_dim": report.tangent_dim,
        "singular": report.singular,
        "member_pairs": [list(p) for p in report.member_switch_pairs],
    }
    if witnesses:
        rec["witnesses"] = [
            {"pair": list(pair), "window": list(v.witness)}
            for pair, v in report.probe_verdicts.items()
            if not v.member
        ]
    return rec


def record_to_csv_row(rec: dict) -> dict:
    return {
        "r": rec["shape"]["r"],
        "s": rec["shape"]["s"],
        "tableau": rec["tableau"],
        "fixed_point_count": rec["fixed_point_count"],
        "threshold": rec["threshold"],
        "component_dim": rec["component_dim"],
        "tangent_dim": rec["tangent_dim"],
        "singular": "true" if rec["singular"] else "false",
        "member_pairs": ";".join(f"{i}-{j}" for i, j in rec["member_pairs"]),
    }


def csv_row_to_record(row: dict) -> dict:
    try:
        pairs = [
            [int(x) for x in tok.split("-")]
            for tok in row["member_pairs"].split(";") if tok
        ]
        return {
            "shape": {"r": int(row["r"]), "s": int(row["s"])},
            "tableau": row["tableau"],
            "fixed_point_count": int(row["fixed_point_count"]),
            "threshold": int(row["threshold"]),
            "component_dim": int(row["component_dim"]),
            "tangent_dim": int(row["tangent_dim"]),
            "singular": {"true": True, "false": False}[row["singular"]],
            "member_pairs": pairs,
        }
    except (KeyError, ValueError) as exc:
        raise ValidityError(f"malformed CSV record {row!r}: {exc}") from exc


def revalidate_record(rec: dict) -> ComponentReport:
    """Recompute the report for the record's tableau and compare every field."""
    shape = make_shape(rec["shape"]["r"], rec["shape"]["s"])
    t = parse_tableau(shape, rec["tableau"])
    if not isinstance(t, StandardTableau):
        raise ValidityError(f"record tableau {rec['tableau']} is not standard")
    report = classify(t)
    fresh = report_to_record(report)
    for key in ("fixed_point_count", "threshold", "component_dim", "tangent_dim", "singular", "member_pairs"):
        if fresh[key] != rec[key]:
            raise ValidityError(f"record {rec['tableau']}: field {key} is {rec[key]!r}, recomputed {fresh[key]!r}")
    return report


def dump_json(records: list[dict], fp) -> None:
    json.dump(records, fp, indent=2)
    fp.write("\n")


def dump_csv(records: list[dict], fp) -> None:
    writer = csv.DictWriter(fp, fieldnames=CSV_FIELDS, lineterminator="\n")
    writer.writeheader()
    for rec in records:
        writer.writerow(record_to_csv_row(rec))


def load_records(path: str | Path) -> list[dict]:
    path = Path(path)
    text = path.read_text(encoding="utf-8")
    if path.suffix == ".csv":
        return [csv_row_to_record(row) for row in csv.DictReader(io.StringIO(text))]
    return json.loads(text)

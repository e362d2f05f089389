"""
Serialization of reports and records to stdout.

JSON keys follow a fixed order and floats carry 12 significant digits;
non-finite floats become null. CSV goes through the csv module so any
standard reader can load it back.
"""

import csv
import json
import math
from typing import IO, Any, Dict, Iterable, List, Sequence

from cli.schemas import OutputFormat
from extremal.models import VerificationReport

REPORT_FIELDS = ("check_id", "params", "verdict", "margin", "tolerance", "witnesses", "notes")


def format_float(value: float) -> Any:
    if not math.isfinite(value):
        return None
    return float(f"{value:.12g}")


def clean(value: Any) -> Any:
    """Recursively round floats and turn tuples into lists."""
    if isinstance(value, bool) or value is None or isinstance(value, (int, str)):
        return value
    if isinstance(value, float):
        return format_float(value)
    if isinstance(value, dict):
        return {str(k): clean(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [clean(v) for v in value]
    if hasattr(value, "item"):  # numpy scalars
        return clean(value.item())
    return str(value)


def report_to_dict(report: VerificationReport) -> Dict[str, Any]:
    data: Dict[str, Any] = {
        "check_id": report.check_id,
        "params": report.params,
        "verdict": report.verdict.value,
        "margin": report.margin,
        "tolerance": report.tolerance,
        "witnesses": [
            {"label": w.label, "graph6": w.graph6, "values": w.values} for w in report.witnesses
        ],
        "notes": report.notes,
    }
    if report.csv_columns is not None:
        data["table"] = {"columns": report.csv_columns, "rows": report.csv_rows}
    return clean(data)


def write_json(record: Dict[str, Any], stream: IO[str]) -> None:
    stream.write(json.dumps(clean(record), ensure_ascii=True, allow_nan=False))
    stream.write("\n")


def _csv_cell(value: Any) -> Any:
    if value is None:
        return ""
    if isinstance(value, float):
        cleaned = format_float(value)
        return "" if cleaned is None else repr(cleaned)
    return value


def write_csv(columns: Sequence[str], rows: Iterable[Sequence[Any]], stream: IO[str]) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_csv_cell(v) for v in row])


def _text_lines(report: VerificationReport) -> List[str]:
    margin = "n/a" if report.margin is None else f"{report.margin:.12g}"
    lines = [
        f"{report.check_id}: {report.verdict.value} "
        f"(margin {margin}, tolerance {report.tolerance:.12g})"
    ]
    for witness in report.witnesses:
        values = " ".join(f"{k}={clean(v)}" for k, v in witness.values.items())
        graph = f" {witness.graph6}" if witness.graph6 else ""
        lines.append(f"  witness: {witness.label}{graph} {values}".rstrip())
    lines.extend(f"  note: {note}" for note in report.notes)
    return lines


def emit_report(report: VerificationReport, fmt: OutputFormat, stream: IO[str]) -> None:
    """Write one report in the requested format."""
    if fmt is OutputFormat.JSON:
        write_json(report_to_dict(report), stream)
    elif fmt is OutputFormat.CSV:
        if report.csv_columns is not None:
            write_csv(report.csv_columns, report.csv_rows, stream)
        else:
            write_csv(
                ["check_id", "verdict", "margin"],
                [[report.check_id, report.verdict.value, report.margin]],
                stream,
            )
    elif fmt is OutputFormat.GRAPH6:
        for witness in report.witnesses:
            if witness.graph6:
                stream.write(witness.graph6 + "\n")
    else:
        stream.write("\n".join(_text_lines(report)) + "\n")

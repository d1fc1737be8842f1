"""Benchmark CSV output/input and the aligned text table."""

import csv
import io
import math
from pathlib import Path
from typing import Iterable, TextIO

from app.bench.runner import BenchRecord
from app.utils.errors import CsvFormatError
from app.utils.logger import logger

CSV_HEADER = (
    "system",
    "backend",
    "fused",
    "N",
    "steps",
    "median_s",
    "min_s",
    "max_s",
    "bytes",
    "gbps",
    "peak_frac",
    "passes",
)


def _fmt(value: float) -> str:
    return f"{value:.17g}"


def record_row(record: BenchRecord) -> list[str]:
    return [
        record.system,
        record.backend,
        "true" if record.fused else "false",
        str(record.n),
        str(record.steps),
        _fmt(record.median_seconds),
        _fmt(record.min_seconds),
        _fmt(record.max_seconds),
        str(record.bytes_moved),
        _fmt(record.gbps),
        _fmt(record.peak_frac),
        str(record.pass_count),
    ]


def write_csv(records: Iterable[BenchRecord], dest: TextIO) -> int:
    """Write the header plus one line per successful record; returns the line count."""
    writer = csv.writer(dest, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    written = 0
    for record in records:
        if record.failed:
            logger.warning(f"skipping failed {record.system}/{record.backend} N={record.n}")
            continue
        writer.writerow(record_row(record))
        written += 1
    return written


def records_to_csv(records: Iterable[BenchRecord]) -> str:
    buffer = io.StringIO()
    write_csv(records, buffer)
    return buffer.getvalue()


def _parse_bool(text: str) -> bool:
    lowered = text.strip().lower()
    if lowered in ("true", "1"):
        return True
    if lowered in ("false", "0"):
        return False
    raise ValueError(f"expected true/false, got {text!r}")


def _parse_row(row: list[str]) -> BenchRecord:
    values = dict(zip(CSV_HEADER, row))
    median = float(values["median_s"])
    return BenchRecord(
        system=values["system"],
        backend=values["backend"],
        fused=_parse_bool(values["fused"]),
        n=int(values["N"]),
        steps=int(values["steps"]),
        median_seconds=median,
        min_seconds=float(values["min_s"]),
        max_seconds=float(values["max_s"]),
        bytes_moved=int(values["bytes"]),
        gbps=float(values["gbps"]),
        peak_frac=float(values["peak_frac"]),
        pass_count=int(values["passes"]),
        times=[median],
    )


def read_csv(source: str | Path | TextIO) -> list[BenchRecord]:
    """Parse a bench CSV. Errors name the offending 1-based line."""
    text = Path(source).read_text() if isinstance(source, (str, Path)) else source.read()
    rows = csv.reader(io.StringIO(text))

    header = next(rows, None)
    if header is None:
        raise CsvFormatError("empty file, expected a header", line=1)
    if tuple(h.strip() for h in header) != CSV_HEADER:
        raise CsvFormatError(f"expected header {','.join(CSV_HEADER)}", line=1)

    records = []
    for row in rows:
        line = rows.line_num
        if not row or all(not cell.strip() for cell in row):
            continue
        if len(row) != len(CSV_HEADER):
            raise CsvFormatError(f"expected {len(CSV_HEADER)} fields, got {len(row)}", line=line)
        try:
            records.append(_parse_row(row))
        except ValueError as e:
            raise CsvFormatError(str(e), line=line) from e
    return records


def render_table(records: Iterable[BenchRecord]) -> str:
    """Systems as column groups (time, GB/s, % peak), backends as rows, at each
    system's largest size."""
    records = [r for r in records if not r.failed]
    if not records:
        return "(no results)\n"

    systems = list(dict.fromkeys(r.system for r in records))
    backends = list(dict.fromkeys(r.backend for r in records))
    largest = {s: max(r.n for r in records if r.system == s) for s in systems}
    cell = {(r.system, r.backend): r for r in records if r.n == largest[r.system]}

    group_cols = ("time [s]", "GB/s", "% peak")
    header_1 = [""] + [f"{s} (N={largest[s]})" for s in systems]
    header_2 = ["backend"] + [c for _ in systems for c in group_cols]

    def fmt_pct(frac: float) -> str:
        return "-" if math.isnan(frac) else f"{100 * frac:.0f}"

    body = []
    for backend in backends:
        line = [backend]
        for system in systems:
            r = cell.get((system, backend))
            if r is None:
                line += ["-", "-", "-"]
            else:
                line += [f"{r.median_seconds:.4g}", f"{r.gbps:.3g}", fmt_pct(r.peak_frac)]
        body.append(line)

    widths = [max(len(row[0]) for row in [header_2] + body)]
    widths += [max(len(row[i]) for row in [header_2] + body) for i in range(1, len(header_2))]

    # group titles span their three columns
    group_widths = [sum(widths[1 + 3 * g : 4 + 3 * g]) + 4 for g in range(len(systems))]
    for g, title in enumerate(header_1[1:]):
        if len(title) > group_widths[g]:
            widths[3 + 3 * g] += len(title) - group_widths[g]
            group_widths[g] = len(title)

    def align(row: list[str]) -> str:
        cells = [c.rjust(w) if i else c.ljust(w) for i, (c, w) in enumerate(zip(row, widths))]
        return "  ".join(cells)

    titles = [t.center(w) for t, w in zip(header_1[1:], group_widths)]
    rule = "  ".join("-" * w for w in widths)
    lines = ["  ".join([" " * widths[0]] + titles), align(header_2), rule]
    lines += [align(row) for row in body]
    return "\n".join(line.rstrip() for line in lines) + "\n"

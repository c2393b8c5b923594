"""Deterministic CSV writing and the matching reader."""
import csv
import dataclasses
import io
import math

from .errors import ParseError

UNLIMITED_TOKEN = "Unlimited"


def format_value(value):
    """Text for one cell: fixed 6-decimal floats with trailing zeros trimmed."""
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        if math.isinf(value) and value > 0:
            return UNLIMITED_TOKEN
        if not math.isfinite(value):
            raise ValueError(f"cannot write {value!r} to CSV")
        text = f"{value:.6f}".rstrip("0").rstrip(".")
        return "0" if text in ("-0", "") else text
    return str(value)


def parse_value(text):
    """Inverse of ``format_value`` for numbers; other text is returned as is."""
    if text == "":
        return None
    if text == UNLIMITED_TOKEN:
        return math.inf
    try:
        return int(text)
    except ValueError:
        pass
    try:
        return float(text)
    except ValueError:
        return text


def rows_from_dataclasses(items):
    return [dataclasses.asdict(x) for x in items]


def to_csv_text(columns, rows):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([format_value(row.get(c)) for c in columns])
    return buf.getvalue()


def write_table(path, columns, rows):
    with open(path, "w", newline="", encoding="utf-8") as f:
        f.write(to_csv_text(columns, rows))


def read_table(path):
    """Return (columns, rows) with numeric cells parsed back to numbers."""
    with open(path, newline="", encoding="utf-8") as f:
        reader = csv.reader(f)
        columns = next(reader, None)
        if columns is None:
            raise ParseError("empty CSV file", path, 1)
        rows = []
        for cells in reader:
            if len(cells) != len(columns):
                raise ParseError(f"expected {len(columns)} fields, got {len(cells)}",
                                 path, reader.line_num)
            rows.append({c: parse_value(v) for c, v in zip(columns, cells)})
    return columns, rows

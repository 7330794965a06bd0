"""Numeric-table ingestion, discretization into binary contexts, and
context file-format conversion."""

import csv
import io
import math
import sys
from dataclasses import dataclass

from galmine.context import BinaryContext, parse_cxt, parse_tab, write_cxt, write_tab
from galmine.errors import ConstraintError, ParseError

CONTEXT_FORMATS = ("tab", "cxt")


@dataclass(frozen=True)
class NumericTable:
    """A rectangular table of finite decimal values with named columns."""

    column_names: tuple[str, ...]
    rows: tuple[tuple[float, ...], ...]
    object_labels: tuple[str, ...]

    def __post_init__(self):
        if len(set(self.column_names)) != len(self.column_names):
            raise ConstraintError("column names must be distinct")
        coerced = []
        for row in self.rows:
            if len(row) != len(self.column_names):
                raise ConstraintError("table must be rectangular")
            values = tuple(float(v) for v in row)
            if not all(math.isfinite(v) for v in values):
                raise ConstraintError("table values must be finite")
            coerced.append(values)
        object.__setattr__(self, "rows", tuple(coerced))


@dataclass(frozen=True)
class BinningSpec:
    """Discretization recipe: strategy is ``width`` (equal-width) or
    ``freq`` (equal-frequency), bin_count >= 1."""

    strategy: str = "width"
    bin_count: int = 2

    def __post_init__(self):
        if self.strategy not in ("width", "freq"):
            raise ConstraintError(f"binning strategy must be 'width' or 'freq', got {self.strategy!r}")
        if self.bin_count < 1:
            raise ConstraintError(f"bin_count must be >= 1, got {self.bin_count}")


def parse_csv(text: str, has_label_column: bool = False) -> NumericTable:
    """Parse comma-separated numeric data with a header line.

    With ``has_label_column`` the first column supplies object labels;
    otherwise labels are generated as o1, o2, ...  Non-numeric cells and
    ragged rows raise ParseError with their position."""
    reader = csv.reader(io.StringIO(text))
    try:
        header = next(reader)
    except StopIteration:
        raise ParseError("CSV input is empty") from None
    if has_label_column:
        if not header:
            raise ParseError("CSV header lacks a label column")
        columns = tuple(header[1:])
    else:
        columns = tuple(header)
    rows = []
    labels = []
    for rownum, record in enumerate(reader, start=1):
        if not record:
            continue
        if has_label_column:
            label, cells = record[0], record[1:]
        else:
            label, cells = f"o{rownum}", record
        if len(cells) != len(columns):
            raise ParseError(f"row {rownum} has {len(cells)} data cells, expected {len(columns)}")
        values = []
        for cell, name in zip(cells, columns):
            try:
                value = float(cell)
            except ValueError:
                raise ParseError(f"non-numeric value {cell!r} at row {rownum}, column {name}") from None
            if not math.isfinite(value):
                raise ParseError(f"non-finite value {cell!r} at row {rownum}, column {name}")
            values.append(value)
        rows.append(tuple(values))
        labels.append(label)
    return NumericTable(column_names=columns, rows=tuple(rows), object_labels=tuple(labels))


def _fmt(value: float) -> str:
    return repr(value)


def _bin_edges_width(values, bins):
    lo, hi = min(values), max(values)
    if lo == hi:
        return [lo, hi], True
    width = (hi - lo) / bins
    edges = [lo + k * width for k in range(bins)] + [hi]
    return edges, False


def _column_bins(values, spec: BinningSpec):
    """Per-value bin index plus (lo, hi) boundaries per bin.

    Equal-width partitions [min, max] into equal-length intervals, each
    half-open except the last.  Equal-frequency cuts at the
    ceil(k*n/bins)-th order statistics; a value equal to a cut belongs
    to the lowest bin whose cut reaches it."""
    n = len(values)
    if spec.strategy == "width":
        edges, constant = _bin_edges_width(values, spec.bin_count)
        if constant:
            return [0] * n, [(edges[0], edges[1])]
        bins = spec.bin_count
        lo, hi = edges[0], edges[-1]
        width = (hi - lo) / bins
        assignment = [min(int((v - lo) / width), bins - 1) for v in values]
        boundaries = [(edges[k], edges[k + 1]) for k in range(bins)]
        return assignment, boundaries
    ordered = sorted(values)
    cuts = [ordered[math.ceil(k * n / spec.bin_count) - 1] for k in range(1, spec.bin_count + 1)]
    assignment = []
    for v in values:
        for k, cut in enumerate(cuts):
            if v <= cut:
                assignment.append(k)
                break
    boundaries = []
    lo = ordered[0]
    for cut in cuts:
        boundaries.append((lo, cut))
        lo = cut
    return assignment, boundaries


def discretize(table: NumericTable, spec: BinningSpec) -> BinaryContext:
    """Turn every numeric column into interval attributes.

    Each column contributes at most bin_count attributes named
    ``col[lo;hi)`` (the last one ``[lo;hi]``); every object receives
    exactly one attribute per column.  Bins that end up empty are
    dropped."""
    if not table.rows:
        raise ConstraintError("cannot discretize an empty table")
    attr_labels: list[str] = []
    ctx_rows = [set() for _ in table.rows]
    for col, name in enumerate(table.column_names):
        values = [row[col] for row in table.rows]
        assignment, boundaries = _column_bins(values, spec)
        occupied = sorted(set(assignment))
        remap = {}
        for k in occupied:
            lo, hi = boundaries[k]
            bracket = "]" if k == occupied[-1] else ")"
            remap[k] = len(attr_labels)
            attr_labels.append(f"{name}[{_fmt(lo)};{_fmt(hi)}{bracket}")
        for i, k in enumerate(assignment):
            ctx_rows[i].add(remap[k])
    return BinaryContext(table.object_labels, attr_labels, ctx_rows)


def parse_context(text: str, fmt: str) -> BinaryContext:
    if fmt == "tab":
        return parse_tab(text)
    if fmt == "cxt":
        return parse_cxt(text)
    raise ConstraintError(f"unknown context format {fmt!r}, expected one of {CONTEXT_FORMATS}")


def write_context(ctx: BinaryContext, fmt: str) -> str:
    if fmt == "tab":
        return write_tab(ctx)
    if fmt == "cxt":
        return write_cxt(ctx)
    raise ConstraintError(f"unknown context format {fmt!r}, expected one of {CONTEXT_FORMATS}")


def convert(path: str, in_format: str, out_format: str) -> str:
    """Read a context file (``-`` for standard input), reparse and emit
    in the target format.  Same-format conversion canonicalizes."""
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    return write_context(parse_context(text, in_format), out_format)

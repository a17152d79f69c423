"""Dataset loading: dense CSV and sparse LIBSVM-style text.

CSV is a minimal RFC-4180 subset (no quoting), one row per line with a
configurable single-character delimiter. LIBSVM lines look like
`label idx:val idx:val ...` with whitespace separation; feature indices
are 1-based on disk and 0-based in memory, the label token is always
dropped, and missing entries are 0.

Entries equal to exactly 0.0 count as zero for nnz; there is no epsilon
thresholding. Non-numeric fields are a hard error rather than silently
dropped.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import EmptyFile, ParseError, RaggedRows


@dataclass(frozen=True)
class IngestOptions:
    format: str = "csv"
    skip_header: bool = False
    drop_columns: tuple[int, ...] = ()
    delimiter: str = ","


def load(path, opts: IngestOptions) -> tuple[np.ndarray, int]:
    """Parse `path` into an n x d float64 matrix plus its nonzero count.

    drop_columns removes columns of the parsed matrix (for CSV these are
    file columns, e.g. a label column)."""
    text = Path(path).read_text()
    if opts.format == "csv":
        matrix = _parse_csv(text, opts)
    elif opts.format == "libsvm":
        matrix = _parse_libsvm(text)
    else:
        raise ValueError(f"unknown format {opts.format!r}")
    if opts.drop_columns:
        bad = [c for c in opts.drop_columns if not 0 <= c < matrix.shape[1]]
        if bad:
            raise ValueError(f"drop_columns {bad} out of range for {matrix.shape[1]} columns")
        keep = [c for c in range(matrix.shape[1]) if c not in set(opts.drop_columns)]
        matrix = matrix[:, keep]
    return matrix, int(np.count_nonzero(matrix))


def _parse_csv(text: str, opts: IngestOptions) -> np.ndarray:
    lines = text.splitlines()
    if opts.skip_header and lines:
        lines = lines[1:]
    rows = []
    width = None
    for lineno, line in enumerate(lines, start=1 + opts.skip_header):
        if not line.strip():
            continue
        fields = line.split(opts.delimiter)
        if width is None:
            width = len(fields)
        elif len(fields) != width:
            raise RaggedRows(f"line {lineno} has {len(fields)} fields, expected {width}")
        row = []
        for col, tok in enumerate(fields):
            try:
                row.append(float(tok))
            except ValueError:
                raise ParseError(f"non-numeric field {tok!r}", lineno, col) from None
        rows.append(row)
    if not rows:
        raise EmptyFile("no data rows")
    return np.asarray(rows, dtype=np.float64)


def _parse_libsvm(text: str) -> np.ndarray:
    entries = []  # (row, col, value)
    n_rows = 0
    max_col = -1
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        tokens = line.split()
        for col, tok in enumerate(tokens[1:], start=1):  # tokens[0] is the label
            if ":" not in tok:
                raise ParseError(f"expected idx:val, got {tok!r}", lineno, col)
            idx_str, _, val_str = tok.partition(":")
            try:
                idx = int(idx_str)
                val = float(val_str)
            except ValueError:
                raise ParseError(f"bad idx:val pair {tok!r}", lineno, col) from None
            if idx < 1:
                raise ParseError(f"feature indices are 1-based, got {idx}", lineno, col)
            entries.append((n_rows, idx - 1, val))
            max_col = max(max_col, idx - 1)
        n_rows += 1
    if n_rows == 0:
        raise EmptyFile("no data rows")
    matrix = np.zeros((n_rows, max_col + 1), dtype=np.float64)
    for r, c, v in entries:
        matrix[r, c] = v
    return matrix


def write_csv(path, matrix, delimiter: str = ",") -> None:
    """Write a matrix in the same minimal CSV dialect `load` reads."""
    arr = np.asarray(matrix, dtype=np.float64)
    with open(path, "w") as fh:
        for row in arr:
            fh.write(delimiter.join(repr(float(v)) for v in row))
            fh.write("\n")


def write_libsvm(path, matrix, labels=None) -> None:
    """Write a matrix in LIBSVM form, omitting zero entries.

    Note the width round-trips only if some row touches the last column."""
    arr = np.asarray(matrix, dtype=np.float64)
    if labels is None:
        labels = np.zeros(arr.shape[0], dtype=np.int64)
    with open(path, "w") as fh:
        for label, row in zip(labels, arr):
            parts = [str(label)]
            parts += [f"{j + 1}:{v!r}" for j, v in enumerate(map(float, row)) if v != 0.0]
            fh.write(" ".join(parts))
            fh.write("\n")

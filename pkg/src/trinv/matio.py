"""Plain-text matrix I/O.

Tridiagonal format (one matrix per file)::

    tridiag <n>
    <n-1 sub-diagonal entries>     (empty line when n = 1)
    <n diagonal entries>
    <n-1 super-diagonal entries>   (empty line when n = 1)

Tokens are whitespace-separated decimals or rationals like ``1/83`` (the
rational form divides in doubles, so a stored ``1/83`` reads back as the
correctly rounded quotient).  Writing uses shortest round-trip decimal
formatting, so ``read_matrix(write_matrix(A))`` is bit-exact.

Dense matrices are plain CSV, row-major, shortest round-trip decimals.
"""

import numpy as np

from .core import DenseMatrix, TridiagonalMatrix, make_tridiagonal

__all__ = [
    "parse_number",
    "read_matrix",
    "write_matrix",
    "read_dense",
    "write_dense",
]


def parse_number(token: str) -> float:
    """A decimal or ``p/q`` rational token as a double."""
    tok = token.strip()
    if "/" in tok:
        num_text, _, den_text = tok.partition("/")
        num = float(num_text)
        den = float(den_text)
        if den == 0.0:
            raise ValueError(f"rational token {token!r} has zero denominator")
        return num / den
    return float(tok)


def _parse_line(line, lineno, expected, what):
    tokens = line.split()
    if len(tokens) != expected:
        raise ValueError(
            f"line {lineno}: expected {expected} {what} entries, got {len(tokens)}"
        )
    values = np.empty(expected)
    for i, tok in enumerate(tokens):
        try:
            values[i] = parse_number(tok)
        except ValueError as exc:
            raise ValueError(f"line {lineno}: bad number {tok!r} ({exc})") from None
    return values


def read_matrix(path) -> TridiagonalMatrix:
    """Read a tridiagonal matrix; errors carry the 1-based line number."""
    with open(path, "r", encoding="utf-8") as fh:
        lines = fh.read().splitlines()
    if not lines:
        raise ValueError("line 1: empty file, expected 'tridiag <n>' header")
    header = lines[0].split()
    if len(header) != 2 or header[0] != "tridiag":
        raise ValueError(f"line 1: expected header 'tridiag <n>', got {lines[0]!r}")
    try:
        n = int(header[1])
    except ValueError:
        raise ValueError(f"line 1: order {header[1]!r} is not an integer") from None
    if n < 1:
        raise ValueError(f"line 1: order must be >= 1, got {n}")
    if len(lines) < 4:
        raise ValueError(f"line {len(lines) + 1}: file ends before the four bands")
    sub = _parse_line(lines[1], 2, n - 1, "sub-diagonal")
    diag = _parse_line(lines[2], 3, n, "diagonal")
    sup = _parse_line(lines[3], 4, n - 1, "super-diagonal")
    return make_tridiagonal(sub, diag, sup)


def _format_values(values) -> str:
    return " ".join(repr(float(v)) for v in values)


def write_matrix(path, A: TridiagonalMatrix) -> None:
    """Write the four-line tridiagonal format with round-trip precision."""
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(f"tridiag {A.n}\n")
        fh.write(_format_values(A.lower) + "\n")
        fh.write(_format_values(A.diag) + "\n")
        fh.write(_format_values(A.upper) + "\n")


def read_dense(path) -> DenseMatrix:
    """Read a dense CSV matrix; errors carry the 1-based line number."""
    rows = []
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh.read().splitlines(), start=1):
            if not line.strip():
                continue
            tokens = [t.strip() for t in line.split(",")]
            try:
                rows.append([parse_number(t) for t in tokens])
            except ValueError as exc:
                raise ValueError(f"line {lineno}: {exc}") from None
    if not rows:
        raise ValueError("line 1: empty file, expected CSV rows")
    width = len(rows[0])
    for i, row in enumerate(rows, start=1):
        if len(row) != width:
            raise ValueError(f"line {i}: expected {width} columns, got {len(row)}")
    return DenseMatrix(np.array(rows))


def write_dense(path, X) -> None:
    """Write a dense matrix as CSV with round-trip precision."""
    E = X.entries if isinstance(X, DenseMatrix) else np.asarray(X, dtype=np.float64)
    with open(path, "w", encoding="utf-8") as fh:
        for row in E:
            fh.write(",".join(repr(float(v)) for v in row) + "\n")

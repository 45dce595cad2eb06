# ginv/store.py
"""Matrix text format.

    # optional comment lines
    n            (or "n m" for a rectangular matrix)
    a11 a12 ... a1m
    ...

Entries are integers, ``p/q`` fractions (positive q) or finite decimals with an
optional exponent of at most 1000 in absolute value. The writer emits
lowest-terms ``p`` or ``p/q`` separated by single spaces.
"""
import sys
from typing import Iterable, List, Optional, Sequence, Tuple

from ginv.errors import MatrixFormatError
from ginv.linalg import RMatrix, parse_rational


def _content_lines(text: str) -> List[Tuple[int, str]]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        out.append((lineno, line))
    return out


def parse_matrix(text: str) -> RMatrix:
    lines = _content_lines(text)
    if not lines:
        raise MatrixFormatError("no matrix header")
    lineno, header = lines[0]
    dims = header.split()
    try:
        if len(dims) not in (1, 2):
            raise ValueError(header)
        n_rows = int(dims[0])
        n_cols = int(dims[1]) if len(dims) == 2 else n_rows
    except ValueError:
        raise MatrixFormatError(f"line {lineno}: header must be 'n' or 'n m', got {header!r}")
    if n_rows < 1 or n_cols < 1:
        raise MatrixFormatError(f"line {lineno}: dimensions must be positive")

    body = lines[1:]
    if len(body) != n_rows:
        raise MatrixFormatError(f"expected {n_rows} rows, found {len(body)}")
    rows = []
    for lineno, line in body:
        tokens = line.split()
        if len(tokens) != n_cols:
            raise MatrixFormatError(f"line {lineno}: expected {n_cols} entries, found {len(tokens)}")
        try:
            rows.append([parse_rational(t) for t in tokens])
        except MatrixFormatError as e:
            raise MatrixFormatError(f"line {lineno}: {e}")
    return RMatrix(rows)


def load_matrix(path: str) -> RMatrix:
    """Read a matrix file; ``-`` reads standard input."""
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, "r", encoding="utf-8") as f:
                text = f.read()
    except UnicodeDecodeError as e:
        raise MatrixFormatError(f"{path} is not valid UTF-8: {e}") from e
    return parse_matrix(text)


def format_matrix(m: RMatrix, comments: Optional[Iterable[str]] = None) -> str:
    lines = [f"# {c}" for c in (comments or [])]
    lines.append(str(m.n_rows) if m.is_square else f"{m.n_rows} {m.n_cols}")
    lines.extend(" ".join(row) for row in m.to_strings())
    return "\n".join(lines) + "\n"


def save_matrix(path: str, m: RMatrix, comments: Optional[Sequence[str]] = None) -> None:
    with open(path, "w", encoding="utf-8") as f:
        f.write(format_matrix(m, comments))

"""Matrix text format: one row per line, whitespace- or comma-separated.

Blank lines and lines starting with '#' are ignored.  Dimensions are
inferred; every data row must have the same number of entries.  Exact
mode accepts integer tokens only; a fractional entry is a parse error,
never silently rescaled.
"""

from __future__ import annotations

from .errors import MatrixParseError
from .linalg import EXACT, Matrix


def parse_matrix(text, kind: str = EXACT) -> Matrix:
    """Parse matrix text (str or bytes) into a Matrix of the given kind."""
    if isinstance(text, (bytes, bytearray)):
        text = text.decode("utf-8")
    rows = []
    width = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.replace(",", " ").split()
        row = []
        for tok in tokens:
            try:
                row.append(int(tok) if kind == EXACT else float(tok))
            except ValueError:
                wanted = "an integer" if kind == EXACT else "a number"
                raise MatrixParseError(
                    f"line {lineno}: {tok!r} is not {wanted}", line=lineno) from None
        if width is None:
            width = len(row)
        elif len(row) != width:
            raise MatrixParseError(
                f"line {lineno}: row has {len(row)} entries, expected {width}",
                line=lineno)
        rows.append(row)
    if not rows:
        raise MatrixParseError("no matrix rows found in input")
    return Matrix(rows, kind=kind)


def load_matrix(path, kind: str = EXACT) -> Matrix:
    """Read and parse a matrix file.  I/O errors propagate as OSError."""
    with open(path, "rb") as fh:
        return parse_matrix(fh.read(), kind)


def format_value(value, mode: str) -> str:
    """Render a determinant: full decimal for exact, 17 significant digits for float."""
    if mode == EXACT:
        return str(value)
    return f"{value:.17g}"


def result_fields(result, workers: int, elapsed_ms: float) -> dict:
    """The documented JSON payload for a computed determinant.

    Exact values are decimal strings so consumers never round them;
    float values are JSON numbers.
    """
    value = str(result.value) if result.mode == EXACT else result.value
    return {
        "value": value,
        "terms": result.term_count,
        "mode": result.mode,
        "workers": workers,
        "elapsed_ms": elapsed_ms,
    }

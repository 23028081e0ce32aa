"""Line-based text formats.

Matrices (``MATFQ v1``)::

    MATFQ v1
    q 2
    rows 2
    cols 7
    1 0 0 0 0 0 0
    0 1 0 0 0 0 0

Codes (``PSC v1``)::

    PSC v1
    q 2
    k 2
    n 7
    p 1 1 1
    pp 1 1 0 1

Polynomials are written c_0 c_1 ... c_m and must be monic.
"""

from __future__ import annotations

from pathlib import Path

import numpy as np

from .code import Code, build_code


class FormatError(ValueError):
    """Malformed file contents."""


def parse_poly(tokens) -> list[int]:
    if isinstance(tokens, str):
        tokens = tokens.split()
    try:
        coeffs = [int(t) for t in tokens]
    except ValueError as exc:
        raise FormatError(f"polynomial coefficients must be integers: {tokens}") from exc
    if not coeffs or coeffs[-1] != 1:
        raise FormatError(f"polynomial {coeffs} is not monic (leading coefficient c_m must be 1)")
    return coeffs


def format_matrix(q: int, M: np.ndarray) -> str:
    lines = ["MATFQ v1", f"q {q}", f"rows {M.shape[0]}", f"cols {M.shape[1]}"]
    lines += [" ".join(str(int(v)) for v in row) for row in M]
    return "\n".join(lines) + "\n"


def _header(lines: list[str], pos: int, key: str) -> int:
    try:
        name, value = lines[pos].split()
        if name != key:
            raise ValueError
        return int(value)
    except (IndexError, ValueError) as exc:
        raise FormatError(f"line {pos + 1}: expected '{key} <int>'") from exc


def parse_matrix(text: str) -> tuple[int, np.ndarray]:
    lines = [ln.strip() for ln in text.strip().splitlines()]
    if not lines or lines[0] != "MATFQ v1":
        raise FormatError("missing 'MATFQ v1' header")
    q = _header(lines, 1, "q")
    rows = _header(lines, 2, "rows")
    cols = _header(lines, 3, "cols")
    body = lines[4:]
    if len(body) != rows:
        raise FormatError(f"expected {rows} matrix rows, found {len(body)}")
    try:
        M = np.array([[int(v) for v in ln.split()] for ln in body], dtype=np.int64).reshape(rows, cols)
    except ValueError as exc:
        raise FormatError("matrix rows must hold exactly 'cols' integers") from exc
    if any(len(ln.split()) != cols for ln in body):
        raise FormatError("matrix rows must hold exactly 'cols' integers")
    if M.size and (M.min() < 0 or M.max() >= q):
        raise FormatError(f"matrix entries must lie in 0..{q - 1}")
    return q, M


def format_code(code: Code) -> str:
    return "\n".join([
        "PSC v1",
        f"q {code.q}",
        f"k {code.k}",
        f"n {code.n}",
        "p " + " ".join(map(str, code.p)),
        "pp " + " ".join(map(str, code.pp)),
    ]) + "\n"


def parse_code(text: str) -> Code:
    """Parse a PSC v1 file.  Bad syntax raises FormatError; bad parameters ValueError."""
    lines = [ln.strip() for ln in text.strip().splitlines()]
    if not lines or lines[0] != "PSC v1" or len(lines) != 6:
        raise FormatError("expected a 6-line 'PSC v1' code file")
    q = _header(lines, 1, "q")
    k = _header(lines, 2, "k")
    n = _header(lines, 3, "n")
    polys = {}
    for pos, key in ((4, "p"), (5, "pp")):
        parts = lines[pos].split()
        if not parts or parts[0] != key:
            raise FormatError(f"line {pos + 1}: expected '{key} <c_0 ... c_m>'")
        polys[key] = parse_poly(parts[1:])
    return build_code(q, k, n, polys["p"], polys["pp"])


def read_text(path: str | Path) -> str:
    return Path(path).read_text(encoding="utf-8")


def write_text(path: str | Path, text: str) -> None:
    Path(path).write_text(text, encoding="utf-8")

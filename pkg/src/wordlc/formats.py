"""Line-oriented text formats for sequences, maps and matrix polynomials.

All three formats ignore blank lines and anything after a ``#``.

Sequence file::

    seq <p> <n> <M> [period <N>]
    <n integers>            # V_0, component 0 first
    ...                     # M lines in total

Map file::

    map affine | map table
    field <p>
    dim <n>
    affine: n lines of n integers (rows of A), then one line of n integers (b)
    table:  p^n lines; line k holds F(decode(k))

Matrix-polynomial file::

    mpoly <p> <n> <deg>
    (deg + 1) blocks of n lines with n integers, ascending degree

The zero matrix polynomial is written with ``deg`` 0 and a zero block.
"""

from __future__ import annotations

import logging
from pathlib import Path

import numpy as np

from .dynamics import MapSpec
from .errors import FormatError, InsufficientData
from .field import check_modulus
from .matpoly import MatrixPoly
from .sequence import VectorSequence

log = logging.getLogger(__name__)


def _lines(text: str) -> list[list[str]]:
    out = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append(line.split())
    return out


def _ints(tokens: list[str], count: int, what: str) -> list[int]:
    if len(tokens) != count:
        raise FormatError(f"{what}: expected {count} integers, got {len(tokens)}")
    try:
        return [int(t, 10) for t in tokens]
    except ValueError:
        raise FormatError(f"{what}: non-integer entry in {' '.join(tokens)!r}") from None


def _modulus(tok: str) -> int:
    try:
        return check_modulus(int(tok))
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def _count(tok: str, what: str, minimum: int = 0) -> int:
    try:
        k = int(tok)
    except ValueError:
        raise FormatError(f"{what} must be an integer, got {tok!r}") from None
    if k < minimum:
        raise FormatError(f"{what} must be >= {minimum}")
    return k


def _read(source) -> str:
    if isinstance(source, Path):
        return source.read_text()
    return source


# -- sequences --------------------------------------------------------------


def parse_sequence(text: str, check_period: bool = True) -> VectorSequence:
    rows = _lines(text)
    if not rows or rows[0][0] != "seq":
        raise FormatError("sequence file must start with 'seq'")
    head = rows[0]
    if len(head) not in (4, 6):
        raise FormatError("header is 'seq <p> <n> <M> [period <N>]'")
    p = _modulus(head[1])
    n = _count(head[2], "n", 1)
    M = _count(head[3], "M")
    period = None
    if len(head) == 6:
        if head[4] != "period":
            raise FormatError(f"unexpected header token {head[4]!r}")
        period = _count(head[5], "period", 1)
    body = rows[1:]
    if len(body) != M:
        raise FormatError(f"header says {M} terms, file has {len(body)}")
    data = [_ints(r, n, f"term {i}") for i, r in enumerate(body)]
    arr = np.array(data, dtype=np.int64).reshape(M, n)
    if arr.size and (arr.min() < 0 or arr.max() >= p):
        raise FormatError(f"sequence entries must lie in [0, {p})")
    try:
        return VectorSequence(arr, p, period, check=check_period)
    except (ValueError, InsufficientData) as exc:
        raise FormatError(str(exc)) from None


def format_sequence(v: VectorSequence) -> str:
    head = f"seq {v.p} {v.n} {len(v)}"
    if v.period is not None:
        head += f" period {v.period}"
    lines = [head] + [" ".join(str(int(a)) for a in row) for row in v.terms]
    return "\n".join(lines) + "\n"


def read_sequence(path, check_period: bool = True) -> VectorSequence:
    return parse_sequence(_read(Path(path)), check_period)


def write_sequence(path, v: VectorSequence) -> None:
    Path(path).write_text(format_sequence(v))


# -- maps -------------------------------------------------------------------


def parse_map(text: str) -> MapSpec:
    rows = _lines(text)
    if len(rows) < 3:
        raise FormatError("map file needs 'map', 'field' and 'dim' lines")
    if rows[0][0] != "map" or len(rows[0]) != 2 or rows[0][1] not in ("affine", "table"):
        raise FormatError("first line must be 'map affine' or 'map table'")
    kind = rows[0][1]
    if rows[1][0] != "field" or len(rows[1]) != 2:
        raise FormatError("second line must be 'field <p>'")
    p = _modulus(rows[1][1])
    if rows[2][0] != "dim" or len(rows[2]) != 2:
        raise FormatError("third line must be 'dim <n>'")
    n = _count(rows[2][1], "dim", 1)
    body = rows[3:]
    expected = n + 1 if kind == "affine" else p**n
    if len(body) != expected:
        raise FormatError(f"{kind} map body needs {expected} lines, got {len(body)}")
    data = np.array([_ints(r, n, f"line {i + 4}") for i, r in enumerate(body)], dtype=np.int64)
    if data.min() < 0 or data.max() >= p:
        log.warning("map entries outside [0, %d) reduced mod %d", p, p)
        data %= p
    if kind == "affine":
        return MapSpec.affine(data[:n], data[n], p)
    return MapSpec.from_table(data, p, n)


def format_map(f: MapSpec) -> str:
    lines = [f"map {f.kind}", f"field {f.p}", f"dim {f.n}"]
    rows = np.vstack([f.matrix, f.offset]) if f.kind == "affine" else f.table
    lines += [" ".join(str(int(a)) for a in row) for row in rows]
    return "\n".join(lines) + "\n"


def read_map(path) -> MapSpec:
    return parse_map(_read(Path(path)))


def write_map(path, f: MapSpec) -> None:
    Path(path).write_text(format_map(f))


# -- matrix polynomials -----------------------------------------------------


def parse_mpoly(text: str) -> MatrixPoly:
    rows = _lines(text)
    if not rows or rows[0][0] != "mpoly" or len(rows[0]) != 4:
        raise FormatError("header is 'mpoly <p> <n> <deg>'")
    p = _modulus(rows[0][1])
    n = _count(rows[0][2], "n", 1)
    deg = _count(rows[0][3], "deg")
    body = rows[1:]
    if len(body) != (deg + 1) * n:
        raise FormatError(f"expected {(deg + 1) * n} coefficient lines, got {len(body)}")
    data = np.array([_ints(r, n, f"line {i + 2}") for i, r in enumerate(body)], dtype=np.int64)
    if data.min() < 0 or data.max() >= p:
        raise FormatError(f"coefficients must lie in [0, {p})")
    blocks = [data[k * n : (k + 1) * n] for k in range(deg + 1)]
    return MatrixPoly(blocks, p, n)


def format_mpoly(P: MatrixPoly) -> str:
    blocks = list(P.coeffs) or [np.zeros((P.n, P.n), dtype=np.int64)]
    lines = [f"mpoly {P.p} {P.n} {len(blocks) - 1}"]
    for b in blocks:
        lines += [" ".join(str(int(a)) for a in row) for row in b]
    return "\n".join(lines) + "\n"


def read_mpoly(path) -> MatrixPoly:
    return parse_mpoly(_read(Path(path)))


def write_mpoly(path, P: MatrixPoly) -> None:
    Path(path).write_text(format_mpoly(P))

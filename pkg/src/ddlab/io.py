"""Plain-text file formats: config CSV, squared-distance matrix CSV, curve CSV.

A config file starts with ``k=<int>,c=<int>``, then one ``P1,<rational>``
line per axis parameter and one ``P2,<rational>,...`` line (k coordinates)
per point. A matrix file starts with ``n=<int>,m=<int>`` followed by n rows
of m comma-separated rationals. Rationals are written ``n`` or ``n/d``
with d > 0. Everything is UTF-8; loaders sniff the header to tell the two
formats apart.
"""

from __future__ import annotations

import io as _io
from pathlib import Path
from typing import TextIO, Union

from .configs import SqDistMatrix
from .errors import FormatError
from .exact import Config, Point, format_rational, parse_rational
from .reduction import HyperbolaFamily

Source = Union[Config, SqDistMatrix]


def _parse_header_pair(line: str, key_a: str, key_b: str) -> tuple[int, int]:
    parts = line.strip().split(",")
    if len(parts) != 2:
        raise FormatError(f"bad header line: {line!r}")
    values = {}
    for part, key in zip(parts, (key_a, key_b)):
        if not part.startswith(key + "="):
            raise FormatError(f"expected {key}=<int> in header, got {part!r}")
        try:
            values[key] = int(part[len(key) + 1 :])
        except ValueError as exc:
            raise FormatError(f"bad integer in header: {part!r}") from exc
    return values[key_a], values[key_b]


def write_config(cfg: Config, stream: TextIO) -> None:
    stream.write(f"k={cfg.k},c={cfg.c}\n")
    for v in cfg.p1_params:
        stream.write(f"P1,{format_rational(v)}\n")
    for p in cfg.p2_points:
        coords = ",".join(format_rational(v) for v in p.coords)
        stream.write(f"P2,{coords}\n")


def read_config(stream: TextIO) -> Config:
    lines = [ln.strip() for ln in stream if ln.strip()]
    if not lines:
        raise FormatError("empty config file")
    k, c = _parse_header_pair(lines[0], "k", "c")
    p1 = []
    p2 = []
    for ln in lines[1:]:
        parts = ln.split(",")
        if parts[0] == "P1":
            if len(parts) != 2:
                raise FormatError(f"P1 line needs one rational: {ln!r}")
            p1.append(parse_rational(parts[1]))
        elif parts[0] == "P2":
            if len(parts) != k + 1:
                raise FormatError(f"P2 line needs {k} rationals: {ln!r}")
            p2.append(tuple(parse_rational(v) for v in parts[1:]))
        else:
            raise FormatError(f"unknown line tag: {parts[0]!r}")
    try:
        return Config.of(k=k, c=c, p1_params=p1, p2_points=p2)
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def write_matrix(mat: SqDistMatrix, stream: TextIO) -> None:
    stream.write(f"n={mat.n},m={mat.m}\n")
    for row in mat.entries:
        stream.write(",".join(format_rational(v) for v in row) + "\n")


def read_matrix(stream: TextIO) -> SqDistMatrix:
    lines = [ln.strip() for ln in stream if ln.strip()]
    if not lines:
        raise FormatError("empty matrix file")
    n, m = _parse_header_pair(lines[0], "n", "m")
    if len(lines) - 1 != n:
        raise FormatError(f"expected {n} rows, got {len(lines) - 1}")
    rows = []
    for ln in lines[1:]:
        parts = ln.split(",")
        if len(parts) != m:
            raise FormatError(f"expected {m} entries per row: {ln!r}")
        rows.append(tuple(parse_rational(v) for v in parts))
    try:
        return SqDistMatrix(n=n, m=m, entries=tuple(rows), provenance="file")
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def write_gamma_csv(family: HyperbolaFamily, stream: TextIO) -> None:
    """One curve per row: source pair indices and the three coefficients."""
    stream.write("p_idx,q_idx,alpha,beta,gamma\n")
    for h in family.curves:
        stream.write(
            f"{h.src[0]},{h.src[1]},"
            f"{format_rational(h.alpha)},{format_rational(h.beta)},{format_rational(h.gamma)}\n"
        )


def load_source(path: str | Path) -> Source:
    """Read a config or matrix file, telling them apart by the header."""
    text = Path(path).read_text(encoding="utf-8")
    head = text.lstrip().split("\n", 1)[0]
    if head.startswith("k="):
        return read_config(_io.StringIO(text))
    if head.startswith("n="):
        return read_matrix(_io.StringIO(text))
    raise FormatError(f"unrecognized header: {head!r}")


def save_source(src: Source, path: str | Path) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        if isinstance(src, SqDistMatrix):
            write_matrix(src, fh)
        else:
            write_config(src, fh)

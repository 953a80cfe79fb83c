"""Exact rational primitives for collinear-vs-arbitrary distance experiments.

The reference line is always the x1-axis. A configuration keeps the
collinear set as bare axis parameters (their x1 coordinates) and the other
set as k-dimensional points, with every coordinate a reduced Fraction, so
all predicates downstream are exact. Distances are only ever handled
squared: two distances are equal iff their squares are, and squares stay
rational, so no square root is ever taken.

Rational literals in files and on the command line are written ``n`` or
``n/d`` with ASCII decimal digits, a positive denominator, and an optional
leading minus sign.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import FormatError

Rational = Union[int, Fraction]

_RATIONAL_RE = re.compile(r"^-?[0-9]+(/[0-9]+)?$")


def parse_rational(text: str) -> Fraction:
    """Parse ``n`` or ``n/d`` (d > 0) into a reduced Fraction."""
    if not _RATIONAL_RE.match(text):
        raise FormatError(f"bad rational literal: {text!r}")
    if "/" in text:
        num, den = text.split("/")
        if int(den) == 0:
            raise FormatError(f"zero denominator: {text!r}")
        return Fraction(int(num), int(den))
    return Fraction(int(text))


def format_rational(value: Rational) -> str:
    """Format a rational as ``n`` or ``n/d`` with d > 0, round-tripping parse_rational."""
    f = Fraction(value)
    if f.denominator == 1:
        return str(f.numerator)
    return f"{f.numerator}/{f.denominator}"


def _frac(value: Rational | str) -> Fraction:
    if isinstance(value, str):
        return parse_rational(value)
    return Fraction(value)


@dataclass(frozen=True)
class Point:
    """A point of the second set, k >= 2 rational coordinates.

    The first coordinate is the position along the reference axis; the
    remaining coordinates are transverse.
    """

    coords: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if len(self.coords) < 2:
            raise ValueError("a point needs at least 2 coordinates")
        object.__setattr__(self, "coords", tuple(Fraction(v) for v in self.coords))

    @classmethod
    def of(cls, *coords: Rational | str) -> "Point":
        return cls(tuple(_frac(v) for v in coords))

    @property
    def k(self) -> int:
        return len(self.coords)

    @property
    def axis_coord(self) -> Fraction:
        return self.coords[0]


def rho_sq(p: Point) -> Fraction:
    """Squared distance from p to the reference axis: sum of squares of coords 2..k."""
    total = Fraction(0)
    for v in p.coords[1:]:
        total += v * v
    return total


def sq_dist(a_param: Rational | str, p: Point) -> Fraction:
    """Exact squared distance between axis point (a, 0, ..., 0) and p."""
    a = _frac(a_param)
    d = a - p.coords[0]
    return d * d + rho_sq(p)


@dataclass(frozen=True)
class Config:
    """An experiment input: n collinear points against m arbitrary points.

    p1_params are the axis coordinates of the collinear set, strictly
    increasing. c is the declared multiplicity budget: the config is meant
    to put at most c points of the second set on any hyperplane orthogonal
    to the axis and at most c on any cylinder around it (checked by
    validate_constraints, not by the constructor).
    """

    k: int
    c: int
    p1_params: tuple[Fraction, ...]
    p2_points: tuple[Point, ...]

    def __post_init__(self) -> None:
        if self.k < 2:
            raise ValueError("k must be at least 2")
        if self.c < 1:
            raise ValueError("c must be at least 1")
        params = tuple(Fraction(v) for v in self.p1_params)
        for prev, nxt in zip(params, params[1:]):
            if not prev < nxt:
                raise ValueError("p1_params must be strictly increasing")
        object.__setattr__(self, "p1_params", params)
        pts = tuple(self.p2_points)
        for p in pts:
            if p.k != self.k:
                raise ValueError(f"point {p} does not have k={self.k} coordinates")
        object.__setattr__(self, "p2_points", pts)

    @classmethod
    def of(
        cls,
        k: int,
        c: int,
        p1_params: Iterable[Rational | str],
        p2_points: Iterable[Sequence[Rational | str]],
    ) -> "Config":
        """Build a Config from plain ints / literals; sorts the axis parameters."""
        params = sorted(_frac(v) for v in p1_params)
        pts = tuple(Point(tuple(_frac(v) for v in row)) for row in p2_points)
        return cls(k=k, c=c, p1_params=tuple(params), p2_points=pts)

    @property
    def n(self) -> int:
        return len(self.p1_params)

    @property
    def m(self) -> int:
        return len(self.p2_points)


@dataclass(frozen=True)
class Violation:
    """One multiplicity overflow: which condition, at which value, which points."""

    condition: str  # "p1" or "rho_sq"
    value: Fraction
    indices: tuple[int, ...]


@dataclass(frozen=True)
class ValidationReport:
    c: int
    violations: tuple[Violation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def validate_constraints(cfg: Config, c: int | None = None) -> ValidationReport:
    """Check the two multiplicity conditions on the second set.

    Condition 1: no axis value t is shared by more than c points (p1 = t).
    Condition 2: no squared axis distance t is shared by more than c points
    (rho_sq = t); cylinders around the axis are keyed by rho_sq since rho is
    nonnegative. c defaults to the config's own declared budget.
    """
    bound = cfg.c if c is None else c
    by_axis: dict[Fraction, list[int]] = {}
    by_rho: dict[Fraction, list[int]] = {}
    for idx, p in enumerate(cfg.p2_points):
        by_axis.setdefault(p.coords[0], []).append(idx)
        by_rho.setdefault(rho_sq(p), []).append(idx)
    violations: list[Violation] = []
    for value, idxs in by_axis.items():
        if len(idxs) > bound:
            violations.append(Violation("p1", value, tuple(idxs)))
    for value, idxs in by_rho.items():
        if len(idxs) > bound:
            violations.append(Violation("rho_sq", value, tuple(idxs)))
    return ValidationReport(c=bound, violations=tuple(violations))

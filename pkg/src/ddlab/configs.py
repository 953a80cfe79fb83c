"""Configuration construction: pruning, extremal families, random generation.

Pruning thins the second point set until the c = 1 multiplicity conditions
hold: afterwards no two surviving points share an axis coordinate and no two
share a squared axis distance, which is what the curve-family reduction
needs. The greedy scans are deterministic, so pruning the same config twice
gives the same result, and pruning an already-pruned config keeps every
point.

The extremal generators build the two classical few-distance families: all
points on one cylinder around the axis (max(n, m) distinct squared
distances) and the analytic matrix with entry i + j (n + m - 1 distinct
values). They witness that the multiplicity conditions cannot be dropped.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    EmptyResultError,
    GenerationExhaustedError,
    InvalidCountError,
)
from .exact import Config, Point, Rational, _frac, rho_sq, sq_dist


class Side(enum.Enum):
    UPPER = "upper"
    NOT_APPLICABLE = "n/a"


@dataclass(frozen=True)
class PrunedConfig:
    """Result of a pruning pass: which points of base survived, and on which side.

    kept_indices index into base.p2_points in scan order. For the planar
    prune the surviving points are reported on the upper halfplane: a kept
    point that lay below the axis stands for its mirror image, which is at
    the same distance from every axis point.
    """

    base: Config
    kept_indices: tuple[int, ...]
    side: Side

    def to_config(self) -> Config:
        """Materialize the surviving points as a fresh c = 1 config."""
        pts = []
        for idx in self.kept_indices:
            p = self.base.p2_points[idx]
            if self.side is Side.UPPER and p.coords[1] < 0:
                p = Point((p.coords[0], -p.coords[1]))
            pts.append(p)
        return Config(k=self.base.k, c=1, p1_params=self.base.p1_params, p2_points=tuple(pts))


def prune_planar(cfg: Config) -> PrunedConfig:
    """Greedy planar prune: one halfplane, then distinct x and distinct y.

    Points exactly on the axis are dropped first. The halfplane holding at
    least half of the remaining points is reflected up, and a scan in
    ascending (x, y) order keeps a point whenever it shares neither
    coordinate with a point kept earlier. For an input satisfying the
    multiplicity conditions at its declared c, at least
    floor(m / (2(2c-1))) points survive.
    """
    if cfg.k != 2:
        raise ValueError("planar prune needs k = 2")
    above = []
    below = []
    for idx, p in enumerate(cfg.p2_points):
        y = p.coords[1]
        if y > 0:
            above.append(idx)
        elif y < 0:
            below.append(idx)
    if not above and not below:
        raise EmptyResultError("no point lies off the axis")
    chosen = above if len(above) >= len(below) else below
    candidates = []
    for idx in chosen:
        p = cfg.p2_points[idx]
        candidates.append((p.coords[0], abs(p.coords[1]), idx))
    candidates.sort()
    kept: list[int] = []
    seen_x: set[Fraction] = set()
    seen_y: set[Fraction] = set()
    for x, y, idx in candidates:
        if x in seen_x or y in seen_y:
            continue
        kept.append(idx)
        seen_x.add(x)
        seen_y.add(y)
    return PrunedConfig(base=cfg, kept_indices=tuple(kept), side=Side.UPPER)


def prune_general(cfg: Config) -> PrunedConfig:
    """Greedy prune in any dimension: distinct axis coordinate, distinct rho_sq.

    Scans points in lexicographic coordinate order and keeps one whenever
    neither its axis coordinate nor its squared axis distance appeared on an
    earlier kept point. For an input satisfying the multiplicity conditions
    at its declared c, at least floor(m / (2c-1)) points survive.
    """
    if cfg.m == 0:
        raise EmptyResultError("second point set is empty")
    order = sorted(range(cfg.m), key=lambda idx: cfg.p2_points[idx].coords)
    kept: list[int] = []
    seen_axis: set[Fraction] = set()
    seen_rho: set[Fraction] = set()
    for idx in order:
        p = cfg.p2_points[idx]
        r = rho_sq(p)
        if p.coords[0] in seen_axis or r in seen_rho:
            continue
        kept.append(idx)
        seen_axis.add(p.coords[0])
        seen_rho.add(r)
    return PrunedConfig(base=cfg, kept_indices=tuple(kept), side=Side.NOT_APPLICABLE)


@dataclass(frozen=True)
class SqDistMatrix:
    """An n x m table of exact squared distances, with its construction noted.

    provenance is "config" for tables computed from a coordinate Config,
    the construction name for analytic families, and "file" after loading.
    """

    n: int
    m: int
    entries: tuple[tuple[Fraction, ...], ...]
    provenance: str

    def __post_init__(self) -> None:
        if len(self.entries) != self.n:
            raise ValueError("row count does not match n")
        rows = []
        for row in self.entries:
            if len(row) != self.m:
                raise ValueError("column count does not match m")
            vals = tuple(v if type(v) is Fraction else Fraction(v) for v in row)
            for v in vals:
                if v < 0:
                    raise ValueError("squared distances cannot be negative")
            rows.append(vals)
        object.__setattr__(self, "entries", tuple(rows))

    @classmethod
    def from_config(cls, cfg: Config) -> "SqDistMatrix":
        rows = tuple(
            tuple(sq_dist(a, p) for p in cfg.p2_points) for a in cfg.p1_params
        )
        return cls(n=cfg.n, m=cfg.m, entries=rows, provenance="config")


def gen_cylinder_extremal(n: int, m: int, h: Rational | str = 1) -> Config:
    """All of P2 on one cylinder: axis points 0..n-1 against (j, h) for j < m.

    Every squared distance is (i - j)^2 + h^2, so exactly max(n, m) distinct
    values occur. The config deliberately piles all m points onto a single
    cylinder around the axis, hence declares c = m.
    """
    if n < 1 or m < 1:
        raise InvalidCountError("n and m must be positive")
    offset = _frac(h)
    if offset == 0:
        raise ValueError("cylinder offset must be nonzero")
    params = tuple(Fraction(i) for i in range(n))
    pts = tuple(Point((Fraction(j), offset)) for j in range(m))
    return Config(k=2, c=m, p1_params=params, p2_points=pts)


def gen_orthogonal_extremal(n: int, m: int) -> SqDistMatrix:
    """Analytic squared-distance table with entry i + j (1-based indices).

    The values range over 2 .. n + m, i.e. exactly n + m - 1 distinct
    squared distances, matching the grid-against-orthogonal-line picture.
    """
    if n < 1 or m < 1:
        raise InvalidCountError("n and m must be positive")
    vals = [Fraction(s) for s in range(n + m + 1)]
    rows = tuple(
        tuple(vals[i + j] for j in range(1, m + 1)) for i in range(1, n + 1)
    )
    return SqDistMatrix(n=n, m=m, entries=rows, provenance="orthogonal")


def gen_random(n: int, m: int, k: int, seed: int, coord_range: int) -> Config:
    """Random integer config resampled until the c = 1 conditions hold.

    Axis parameters are n distinct integers from 0..coord_range; each P2
    point draws k integer coordinates from -coord_range..coord_range and is
    redrawn while it repeats an axis coordinate or a squared axis distance
    already in use. The draw budget is 100*m point attempts. Uses Python's
    Mersenne Twister, so one seed gives one config; frozen fixtures, not
    seeds, are what tests should rely on across implementations.
    """
    if n < 1 or m < 1:
        raise InvalidCountError("n and m must be positive")
    if k < 2:
        raise ValueError("k must be at least 2")
    if coord_range < n + m:
        raise ValueError("coord_range must be at least n + m")
    rng = random.Random(seed)
    params = tuple(sorted(Fraction(v) for v in rng.sample(range(coord_range + 1), n)))
    budget = 100 * m
    used_axis: set[Fraction] = set()
    used_rho: set[Fraction] = set()
    pts: list[Point] = []
    while len(pts) < m:
        if budget <= 0:
            raise GenerationExhaustedError(
                f"could not place {m} points within {100 * m} attempts"
            )
        budget -= 1
        coords = tuple(
            Fraction(rng.randint(-coord_range, coord_range)) for _ in range(k)
        )
        p = Point(coords)
        r = rho_sq(p)
        if coords[0] in used_axis or r in used_rho:
            continue
        used_axis.add(coords[0])
        used_rho.add(r)
        pts.append(p)
    return Config(k=k, c=1, p1_params=params, p2_points=tuple(pts))


def translate_along_axis(cfg: Config, delta: Rational | str) -> Config:
    """Shift the whole configuration along the reference axis by delta."""
    d = _frac(delta)
    params = tuple(v + d for v in cfg.p1_params)
    pts = tuple(Point((p.coords[0] + d,) + p.coords[1:]) for p in cfg.p2_points)
    return Config(k=cfg.k, c=cfg.c, p1_params=params, p2_points=pts)

"""Distance classes and exact distance-energy accounting.

A distance class collects every (P1 index, P2 index) pair realizing one
squared distance; the classes partition all n*m pairs. The energy Q counts
ordered pairs of distinct pairs inside a class, split into Q0 (both pairs
use the same P2 point) and Q1 (different P2 points). All counts are exact
integers. Because an axis point at a given distance from p has at most one
mirror partner on the axis, Q0 never exceeds n*m, on any input whatsoever.

check_chain verifies the Cauchy-Schwarz link between the distinct count x
and the energy: x * Q >= (nm - x)^2 exactly, and when x <= nm/2 also
4 * x * Q >= m^2 * n^2.

Counting runs on plain Python ints whenever every coordinate is an integer;
int and Fraction values that are equal also hash equal, so the grouping is
identical to the all-Fraction computation.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .configs import SqDistMatrix
from .exact import Config, rho_sq

Source = Union[Config, SqDistMatrix]


def _column_tables(src: Source) -> tuple[int, int, list, list, list]:
    """Per-source tables: (n, m, axis params, P2 axis coords, P2 rho_sq).

    For a matrix the last two lists are empty and entries are used directly.
    Values come back as plain ints when the whole source is integral.
    """
    if isinstance(src, SqDistMatrix):
        return src.n, src.m, [], [], []
    params: list = list(src.p1_params)
    firsts: list = [p.coords[0] for p in src.p2_points]
    rhos: list = [rho_sq(p) for p in src.p2_points]
    if all(v.denominator == 1 for v in params) and all(
        v.denominator == 1 for v in firsts + rhos
    ):
        params = [v.numerator for v in params]
        firsts = [v.numerator for v in firsts]
        rhos = [v.numerator for v in rhos]
    return src.n, src.m, params, firsts, rhos


def _matrix_rows(src: SqDistMatrix) -> list:
    """Entry rows with integral values demoted to int, for cheap hashing.

    int and Fraction hash and compare equal, so grouping keys are unchanged.
    """
    return [
        [v.numerator if v.denominator == 1 else v for v in row]
        for row in src.entries
    ]


@dataclass
class DistanceClasses:
    """Map from each squared distance to the list of (i, j) pairs realizing it.

    Keys are exact rationals (ints on integral inputs); pair lists keep the
    first-seen order, scanning i-major.
    """

    n: int
    m: int
    classes: dict

    @property
    def distinct_count(self) -> int:
        return len(self.classes)


@dataclass(frozen=True)
class EnergyReport:
    n: int
    m: int
    distinct_count: int
    energy: int
    energy_same_point: int
    energy_cross: int
    class_histogram: tuple[tuple[int, int], ...]  # (class size, how many classes)

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "x": self.distinct_count,
            "Q": self.energy,
            "Q0": self.energy_same_point,
            "Q1": self.energy_cross,
            "histogram": [[size, count] for size, count in self.class_histogram],
        }


@dataclass(frozen=True)
class ChainReport:
    """Exact verdicts for the energy inequality chain at one (n, m, x, Q).

    cauchy_ok: x * Q >= (nm - x)^2, with the exact slack attached.
    x_le_half: whether x <= nm / 2.
    lower_ok: whether 4 * x * Q >= m^2 * n^2; None when x > nm/2 (the bound
    is not claimed there) or when Q = 0 (then x = nm, every pair realizes a
    fresh distance and the ratio form is vacuous).
    """

    n: int
    m: int
    distinct_count: int
    energy: int
    cauchy_ok: bool
    slack: int
    x_le_half: bool
    lower_ok: bool | None
    vacuous: bool


def distance_classes(src: Source) -> DistanceClasses:
    """Group all n*m (P1 index, P2 index) pairs by exact squared distance."""
    n, m, params, firsts, rhos = _column_tables(src)
    classes: dict = {}
    if isinstance(src, SqDistMatrix):
        for i, row in enumerate(_matrix_rows(src)):
            for j, d in enumerate(row):
                classes.setdefault(d, []).append((i, j))
    else:
        for i, a in enumerate(params):
            for j in range(m):
                t = a - firsts[j]
                d = t * t + rhos[j]
                classes.setdefault(d, []).append((i, j))
    return DistanceClasses(n=n, m=m, classes=classes)


def energy(classes: DistanceClasses) -> EnergyReport:
    """Exact ordered-quadruple energy of a class partition, split by column reuse."""
    q = 0
    q0 = 0
    hist: Counter = Counter()
    for pairs in classes.classes.values():
        e = len(pairs)
        hist[e] += 1
        if e < 2:
            continue
        q += e * (e - 1)
        per_col: dict = {}
        for _, j in pairs:
            per_col[j] = per_col.get(j, 0) + 1
        for cnt in per_col.values():
            if cnt >= 2:
                q0 += cnt * (cnt - 1)
    q1 = q - q0
    return EnergyReport(
        n=classes.n,
        m=classes.m,
        distinct_count=len(classes.classes),
        energy=q,
        energy_same_point=q0,
        energy_cross=q1,
        class_histogram=tuple(sorted(hist.items())),
    )


def energy_report(src: Source) -> EnergyReport:
    """EnergyReport straight from a source, without materializing pair lists.

    Streams one column at a time: the global size table yields x, Q and the
    histogram, the per-column table yields Q0. Agrees exactly with
    energy(distance_classes(src)); this route just keeps memory flat on
    large inputs.
    """
    n, m, params, firsts, rhos = _column_tables(src)
    sizes: dict = {}
    q0 = 0
    if isinstance(src, SqDistMatrix):
        rows = _matrix_rows(src)
        for j in range(m):
            col: dict = {}
            for i in range(n):
                d = rows[i][j]
                sizes[d] = sizes.get(d, 0) + 1
                col[d] = col.get(d, 0) + 1
            for cnt in col.values():
                if cnt >= 2:
                    q0 += cnt * (cnt - 1)
    else:
        for j in range(m):
            f = firsts[j]
            r = rhos[j]
            col = {}
            for a in params:
                t = a - f
                d = t * t + r
                sizes[d] = sizes.get(d, 0) + 1
                col[d] = col.get(d, 0) + 1
            for cnt in col.values():
                if cnt >= 2:
                    q0 += cnt * (cnt - 1)
    q = 0
    hist: Counter = Counter()
    for e in sizes.values():
        hist[e] += 1
        if e >= 2:
            q += e * (e - 1)
    return EnergyReport(
        n=n,
        m=m,
        distinct_count=len(sizes),
        energy=q,
        energy_same_point=q0,
        energy_cross=q - q0,
        class_histogram=tuple(sorted(hist.items())),
    )


def check_chain(report: EnergyReport, n: int, m: int) -> ChainReport:
    """Verify the exact inequality chain tying x to Q for an n x m source."""
    if report.n != n or report.m != m:
        raise ValueError("report does not describe an n x m source")
    x = report.distinct_count
    q = report.energy
    nm = n * m
    slack = x * q - (nm - x) ** 2
    cauchy_ok = slack >= 0
    x_le_half = 2 * x <= nm
    vacuous = q == 0
    lower_ok: bool | None = None
    if x_le_half and not vacuous:
        lower_ok = 4 * x * q >= m * m * n * n
    return ChainReport(
        n=n,
        m=m,
        distinct_count=x,
        energy=q,
        cauchy_ok=cauchy_ok,
        slack=slack,
        x_le_half=x_le_half,
        lower_ok=lower_ok,
        vacuous=vacuous,
    )

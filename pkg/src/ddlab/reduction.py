"""Curve-family reduction: cross-column energy as point-curve incidences.

Each ordered pair (p, q) of distinct P2 points defines the curve

    (x + alpha)^2 - (y + beta)^2 + gamma = 0,

with alpha = -p1, beta = -q1 and gamma = rho_sq(p) - rho_sq(q). A grid
point (s, t) built from two axis parameters lies on the curve exactly when
sq_dist(s, p) = sq_dist(t, q), so the cross-column quadruples of the energy
module and the incidences between the n^2 grid and the m(m-1) curves are
two counts of the same set. gamma never vanishes for a config whose
squared axis distances are pairwise distinct; a vanishing gamma would
degenerate the curve into a pair of lines and is rejected.

Subtracting two curve equations cancels the quadratic part, leaving a line,
so two distinct curves of the family meet in at most two points: the family
behaves like pseudo-parabolas. Intersection counting is exact, via the sign
of a rational discriminant; intersection points are materialized only when
their coordinates are rational.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

from .energy import distance_classes, energy
from .errors import (
    BijectionViolationError,
    DegenerateHyperbolaError,
    DuplicateCurveError,
    IdenticalCurvesError,
    NotIncidentError,
    WrongSignError,
)
from .exact import Config, Rational, _frac, rho_sq


@dataclass(frozen=True)
class Hyperbola:
    """One curve (x + alpha)^2 - (y + beta)^2 + gamma = 0 with its source pair."""

    alpha: Fraction
    beta: Fraction
    gamma: Fraction
    src: tuple[int, int]

    def __post_init__(self) -> None:
        object.__setattr__(self, "alpha", Fraction(self.alpha))
        object.__setattr__(self, "beta", Fraction(self.beta))
        object.__setattr__(self, "gamma", Fraction(self.gamma))
        if self.gamma == 0:
            raise DegenerateHyperbolaError(*self.src)

    def evaluate(self, s: Rational | str, t: Rational | str) -> Fraction:
        u = _frac(s) + self.alpha
        v = _frac(t) + self.beta
        return u * u - v * v + self.gamma

    def contains(self, s: Rational | str, t: Rational | str) -> bool:
        return self.evaluate(s, t) == 0


@dataclass(frozen=True)
class ParamGrid:
    """The n^2 grid of ordered axis-parameter pairs, stored implicitly."""

    params: tuple[Fraction, ...]

    @classmethod
    def from_config(cls, cfg: Config) -> "ParamGrid":
        return cls(params=cfg.p1_params)

    @property
    def n(self) -> int:
        return len(self.params)

    @property
    def size(self) -> int:
        return len(self.params) ** 2


@dataclass(frozen=True)
class HyperbolaFamily:
    """All m(m-1) ordered-pair curves of a config, in (p, q) index order."""

    m: int
    curves: tuple[Hyperbola, ...]

    @property
    def positive_count(self) -> int:
        return sum(1 for h in self.curves if h.gamma > 0)

    @property
    def negative_count(self) -> int:
        return sum(1 for h in self.curves if h.gamma < 0)


def build_family(cfg: Config) -> HyperbolaFamily:
    """Build every ordered-pair curve of a coordinate config.

    Needs m >= 2 and pairwise distinct squared axis distances; a repeated
    rho_sq surfaces as the degenerate curve of the offending pair. The
    result always holds m(m-1) pairwise distinct curves, half of them with
    gamma > 0, since swapping the pair flips gamma's sign.
    """
    if not isinstance(cfg, Config):
        raise TypeError("curve building needs a coordinate Config, not a matrix")
    m = cfg.m
    if m < 2:
        raise ValueError("need at least two P2 points")
    rhos = [rho_sq(p) for p in cfg.p2_points]
    curves: list[Hyperbola] = []
    seen: set[tuple[Fraction, Fraction, Fraction]] = set()
    for i in range(m):
        for j in range(m):
            if i == j:
                continue
            alpha = -cfg.p2_points[i].coords[0]
            beta = -cfg.p2_points[j].coords[0]
            gamma = rhos[i] - rhos[j]
            if gamma == 0:
                raise DegenerateHyperbolaError(i, j)
            triple = (alpha, beta, gamma)
            if triple in seen:
                raise DuplicateCurveError(f"pair ({i}, {j}) repeats {triple}")
            seen.add(triple)
            curves.append(Hyperbola(alpha=alpha, beta=beta, gamma=gamma, src=(i, j)))
    return HyperbolaFamily(m=m, curves=tuple(curves))


@dataclass(frozen=True)
class IncidenceReport:
    total: int
    positive_total: int
    negative_total: int
    per_curve: tuple[int, ...]

    def to_json_dict(self) -> dict:
        return {
            "total": self.total,
            "per_sign": {"pos": self.positive_total, "neg": self.negative_total},
            "per_curve": list(self.per_curve),
        }


def incidences(grid: ParamGrid, family: HyperbolaFamily, mode: str = "hash") -> IncidenceReport:
    """Count grid points on each curve, exactly.

    mode "naive" evaluates every curve at every grid point. mode "hash"
    groups curves sharing beta, keys the grid rows by (t + beta)^2 once per
    group, and probes (s + alpha)^2 + gamma, which counts the same
    incidences in O(n m^2) probes. Both modes agree exactly.
    """
    params = grid.params
    per_curve = [0] * len(family.curves)
    if mode == "naive":
        for pos, h in enumerate(family.curves):
            cnt = 0
            for s in params:
                for t in params:
                    if h.contains(s, t):
                        cnt += 1
            per_curve[pos] = cnt
    elif mode == "hash":
        by_beta: dict[Fraction, list[int]] = {}
        for pos, h in enumerate(family.curves):
            by_beta.setdefault(h.beta, []).append(pos)
        for beta, members in by_beta.items():
            table: dict[Fraction, int] = {}
            for t in params:
                v = t + beta
                key = v * v
                table[key] = table.get(key, 0) + 1
            for pos in members:
                h = family.curves[pos]
                cnt = 0
                for s in params:
                    u = s + h.alpha
                    cnt += table.get(u * u + h.gamma, 0)
                per_curve[pos] = cnt
    else:
        raise ValueError(f"unknown mode {mode!r}")
    pos_total = sum(
        c for c, h in zip(per_curve, family.curves) if h.gamma > 0
    )
    neg_total = sum(
        c for c, h in zip(per_curve, family.curves) if h.gamma < 0
    )
    return IncidenceReport(
        total=sum(per_curve),
        positive_total=pos_total,
        negative_total=neg_total,
        per_curve=tuple(per_curve),
    )


@dataclass(frozen=True)
class AuditEntry:
    """One matched pair: quadruple indices (a, p, b, q) and the grid point on h_pq."""

    quadruple: tuple[int, int, int, int]
    point: tuple[Fraction, Fraction]
    curve_src: tuple[int, int]


@dataclass(frozen=True)
class BijectionReport:
    energy_cross: int
    incidence_total: int
    audit: tuple[AuditEntry, ...] | None


def verify_bijection(cfg: Config, audit: bool = False) -> BijectionReport:
    """Check that cross-column energy equals the grid-curve incidence count.

    The two sides are computed by unrelated code paths (distance hashing vs
    curve-equation evaluation); disagreement means an implementation bug and
    raises, with a counterexample when the sizes allow one to be found.
    With audit=True the explicit quadruple-to-incidence pairing is returned.
    """
    classes = distance_classes(cfg)
    rep = energy(classes)
    family = build_family(cfg)
    grid = ParamGrid.from_config(cfg)
    inc = incidences(grid, family, mode="hash")
    entries: tuple[AuditEntry, ...] | None = None
    if audit or rep.energy_cross != inc.total:
        collected: list[AuditEntry] = []
        curve_at = {h.src: h for h in family.curves}
        for pairs in classes.classes.values():
            if len(pairs) < 2:
                continue
            for i, j in pairs:
                for k, l in pairs:
                    if j == l:
                        continue
                    point = (cfg.p1_params[i], cfg.p1_params[k])
                    h = curve_at[(j, l)]
                    if not h.contains(*point):
                        raise BijectionViolationError(
                            f"quadruple ({i}, {j}, {k}, {l}) maps to grid point "
                            f"{point} off curve {h.src}"
                        )
                    collected.append(
                        AuditEntry(quadruple=(i, j, k, l), point=point, curve_src=(j, l))
                    )
        if rep.energy_cross != inc.total:
            raise BijectionViolationError(
                f"cross-column energy {rep.energy_cross} != incidence total "
                f"{inc.total} (audited {len(collected)} quadruples)"
            )
        if audit:
            entries = tuple(collected)
    return BijectionReport(
        energy_cross=rep.energy_cross, incidence_total=inc.total, audit=entries
    )


class Branch(enum.Enum):
    TOP = "top"
    BOTTOM = "bottom"
    LEFT = "left"
    RIGHT = "right"


def classify_branch(s: Rational | str, t: Rational | str, h: Hyperbola) -> Branch:
    """Which branch of a gamma > 0 curve carries the incident point (s, t).

    For gamma > 0 the curve is two graphs over the s-axis: TOP where
    t > -beta, BOTTOM where t < -beta; t = -beta cannot host an incidence.
    Raises for points off the curve and for gamma < 0 (see classify_side).
    """
    sv = _frac(s)
    tv = _frac(t)
    if h.evaluate(sv, tv) != 0:
        raise NotIncidentError(f"({sv}, {tv}) is not on the curve")
    if h.gamma < 0:
        raise WrongSignError("gamma < 0 curves split left/right, use classify_side")
    return Branch.TOP if tv > -h.beta else Branch.BOTTOM


def classify_side(s: Rational | str, t: Rational | str, h: Hyperbola) -> Branch:
    """Symmetric split for gamma < 0 curves: LEFT/RIGHT of s = -alpha."""
    sv = _frac(s)
    tv = _frac(t)
    if h.evaluate(sv, tv) != 0:
        raise NotIncidentError(f"({sv}, {tv}) is not on the curve")
    if h.gamma > 0:
        raise WrongSignError("gamma > 0 curves split top/bottom, use classify_branch")
    return Branch.RIGHT if sv > -h.alpha else Branch.LEFT


def _rational_sqrt(value: Fraction) -> Fraction | None:
    """Exact square root when value is the square of a rational, else None."""
    if value < 0:
        return None
    num = value.numerator
    den = value.denominator
    rn = math.isqrt(num)
    rd = math.isqrt(den)
    if rn * rn == num and rd * rd == den:
        return Fraction(rn, rd)
    return None


@dataclass(frozen=True)
class IntersectionResult:
    """Real intersection count (0, 1 or 2) plus the rational points, if any.

    points lists only intersections with rational coordinates; a count of 2
    with empty points means both crossings have irrational coordinates.
    """

    count: int
    points: tuple[tuple[Fraction, Fraction], ...]


def intersection_count(h1: Hyperbola, h2: Hyperbola) -> IntersectionResult:
    """Exact number of common points of two distinct family curves.

    The difference of the two equations is linear (the radical line); if its
    coefficients all vanish apart from the constant, the curves differ only
    in gamma and never meet. Otherwise the line is substituted back and the
    discriminant sign counts the crossings: always at most two.
    """
    if (h1.alpha, h1.beta, h1.gamma) == (h2.alpha, h2.beta, h2.gamma):
        raise IdenticalCurvesError("needs two distinct curves")
    la = 2 * (h1.alpha - h2.alpha)
    lb = -2 * (h1.beta - h2.beta)
    lc = (
        h1.alpha * h1.alpha
        - h2.alpha * h2.alpha
        - h1.beta * h1.beta
        + h2.beta * h2.beta
        + h1.gamma
        - h2.gamma
    )
    if la == 0 and lb == 0:
        # same (alpha, beta), different gamma: the "radical line" is the
        # contradiction 0 = lc with lc != 0, so the curves are disjoint
        return IntersectionResult(count=0, points=())
    points: list[tuple[Fraction, Fraction]] = []
    if lb != 0:
        # y = slope * x + inter on the line; substitute into h1
        slope = -la / lb
        inter = -lc / lb
        # (x + alpha1)^2 - (slope * x + inter + beta1)^2 + gamma1 = 0
        w = inter + h1.beta
        qa = 1 - slope * slope
        qb = 2 * (h1.alpha - slope * w)
        qc = h1.alpha * h1.alpha - w * w + h1.gamma
        if qa == 0:
            if qb == 0:
                # the radical line would lie inside h1, impossible for gamma != 0
                raise AssertionError("radical line cannot be contained in a curve")
            x = -qc / qb
            points.append((x, slope * x + inter))
            count = 1
        else:
            disc = qb * qb - 4 * qa * qc
            if disc < 0:
                count = 0
            elif disc == 0:
                x = -qb / (2 * qa)
                points.append((x, slope * x + inter))
                count = 1
            else:
                count = 2
                root = _rational_sqrt(disc)
                if root is not None:
                    for sign in (-1, 1):
                        x = (-qb + sign * root) / (2 * qa)
                        points.append((x, slope * x + inter))
    else:
        # vertical radical line x = x0
        x0 = -lc / la
        u = x0 + h1.alpha
        rhs = u * u + h1.gamma  # (y + beta1)^2 must equal this
        if rhs < 0:
            count = 0
        elif rhs == 0:
            count = 1
            points.append((x0, -h1.beta))
        else:
            count = 2
            root = _rational_sqrt(rhs)
            if root is not None:
                points.append((x0, -h1.beta - root))
                points.append((x0, -h1.beta + root))
    if count > 2:
        raise AssertionError("a curve pair cannot meet more than twice")
    for pt in points:
        if not (h1.contains(*pt) and h2.contains(*pt)):
            raise AssertionError(f"computed point {pt} fails the curve equations")
    return IntersectionResult(count=count, points=tuple(sorted(points)))

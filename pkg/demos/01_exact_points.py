"""
Exact coordinates, configurations, and constraint checks
========================================================

Everything downstream runs on exact rationals. This script builds a small
configuration by hand, prints a few squared distances, and shows what the
multiplicity conditions accept and reject.
"""

from fractions import Fraction

from ddlab import (
    Config,
    Point,
    format_rational,
    parse_rational,
    rho_sq,
    sq_dist,
    validate_constraints,
)

# Rational literals round-trip through the same format the CSV files use.
for text in ("7", "-3/4", "22/7"):
    value = parse_rational(text)
    print(f"{text!r} -> {value} -> {format_rational(value)!r}")

# A point needs at least two coordinates; the first one lies on the axis.
p = Point.of("1/2", 2, -1)
print("\npoint:", p.coords)
print("axis coordinate:", p.axis_coord)
print("squared distance to the axis:", rho_sq(p))

# Squared distance from an axis position a to a point, no square roots taken.
a = Fraction(3)
print(f"sq_dist({a}, p) =", sq_dist(a, p))

# A configuration is a sorted list of axis positions plus a point set.
cfg = Config.of(
    k=3,
    c=1,
    p1_params=[0, 1, "5/2"],
    p2_points=[(0, 1, 1), (2, 2, 0), (1, 0, 3)],
)
print("\nconfig: n =", cfg.n, " m =", cfg.m, " k =", cfg.k, " c =", cfg.c)

# Both multiplicity conditions hold here at c = 1.
report = validate_constraints(cfg)
print("valid at c = 1:", report.ok)

# Stack two points at the same axis coordinate and the check names them.
bad = Config.of(k=3, c=1, p1_params=[0, 1], p2_points=[(2, 1, 0), (2, 0, 1)])
report = validate_constraints(bad)
print("\nstacked config valid at c = 1:", report.ok)
for v in report.violations:
    print(f"  condition {v.condition}: value {v.value} shared by points {v.indices}")

# The same configuration is fine once c = 2 is declared.
print("valid at c = 2:", validate_constraints(bad, 2).ok)

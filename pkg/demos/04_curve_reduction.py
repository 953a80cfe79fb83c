"""
From repeated distances to curve-grid incidences
================================================

Every cross-column repeat pairs two axis positions (s, t) with two points
(p, q) such that sq_dist(s, p) = sq_dist(t, q). For a fixed ordered pair
(p, q) the solutions (s, t) sweep out one hyperbola, so Q1 equals the number
of incidences between the n^2 grid of axis pairs and m(m-1) curves.
"""

from ddlab import (
    Branch,
    Config,
    ParamGrid,
    build_family,
    classify_branch,
    classify_side,
    energy_report,
    incidences,
    intersection_count,
    oracle_incidences,
    verify_bijection,
)

cfg = Config.of(k=2, c=1, p1_params=[0, 2], p2_points=[(0, 1), (1, 2)])

# One curve per ordered point pair, in the three-number form
# (x + alpha)^2 - (y + beta)^2 + gamma = 0, gamma never zero.
fam = build_family(cfg)
print("curves (alpha, beta, gamma):")
for h in fam.curves:
    print(f"  pair {h.src}: ({h.alpha}, {h.beta}, {h.gamma})")
print("positive gammas:", fam.positive_count, " negative:", fam.negative_count)

# Count grid points on curves, by hash join and by the quadratic scan.
grid = ParamGrid.from_config(cfg)
rep = incidences(grid, fam, mode="hash")
print("\nincidences:", rep.total, " per curve:", rep.per_curve)
assert rep.total == incidences(grid, fam, mode="naive").total
assert rep.total == oracle_incidences(grid, fam)

# The count is exactly Q1, and the audit pairs every quadruple with its
# witnessing grid point and curve.
print("Q1 =", energy_report(cfg).energy_cross)
audit = verify_bijection(cfg, audit=True)
for entry in audit.audit:
    s, t = entry.point
    print(f"  quadruple {entry.quadruple} -> grid point ({s}, {t}) on curve {entry.curve_src}")

# gamma > 0 splits a curve into top and bottom branches, gamma < 0 into
# left and right; each branch is the graph of a function.
entry = audit.audit[0]
h = next(c for c in fam.curves if c.src == entry.curve_src)
s, t = entry.point
name = (classify_branch(s, t, h) if h.gamma > 0 else classify_side(s, t, h)).value
print("\ncurve", h.src, "has gamma =", h.gamma)
print(f"grid point ({s}, {t}) sits on its {name} branch")

# Any two distinct curves meet in at most two points, certified by the sign
# of an exact discriminant along the radical line.
a, b = fam.curves[0], fam.curves[1]
result = intersection_count(a, b)
crossings = [f"({x}, {y})" for x, y in result.points]
print("\ncurves", a.src, "and", b.src, "meet in", result.count, "points:", crossings)
print("branch names available:", [br.value for br in Branch])

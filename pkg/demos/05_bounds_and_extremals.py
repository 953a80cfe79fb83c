"""
Lower-bound evaluators and the configurations that pin them down
================================================================

The guaranteed number of distinct distances grows with n and m through four
regimes, each with its own leading term. Two explicit families show the
linear regime is real: all points on one cylinder around the axis, or all
points on an orthogonal flat, give only max(n, m) or n + m - 1 distinct
values no matter how large the sets are.
"""

from ddlab import (
    distinct_lower_bound,
    energy_report,
    energy_upper_expr,
    gen_cylinder_extremal,
    gen_orthogonal_extremal,
    incidence_upper_bound,
    regime,
)

# The four regimes partition the (n, m) plane by m against sqrt(n), a
# log-damped power of n, and n^3.
for n, m in ((100, 5), (100, 40), (100, 5000), (100, 10**7)):
    print(f"n={n:>4} m={m:>8}: regime {regime(n, m).value}")

# Each report carries all four candidate terms plus the piecewise value.
rep = distinct_lower_bound(100, 5)
print("\nbound terms at n=100, m=5:")
print("  m^2                 =", rep.term_m_sq)
print("  n^(2/3) m^(2/3)     =", rep.term_two_thirds)
print("  log-damped term     =", rep.term_log)
print("  n^2                 =", rep.term_n_sq)
print("  min of terms        =", rep.min_value)
print("  piecewise (regime)  =", rep.piecewise_value)

# Companion evaluators: incidence ceilings and the energy ceiling.
print("\nincidence_upper_bound(9, 16) =", incidence_upper_bound(9, 16))
print("energy_upper_expr(20, 30)    =", energy_upper_expr(20, 30))

# The cylinder family: every distance is (i - j)^2 + h^2, so the count stays
# at max(n, m) while the general-position bound keeps growing.
for n, m in ((16, 16), (32, 8), (8, 32)):
    x = energy_report(gen_cylinder_extremal(n, m)).distinct_count
    print(f"\ncylinder n={n} m={m}: distinct = {x} = max(n, m); "
          f"bound for unconstrained sets = {distinct_lower_bound(n, m).min_value:.1f}")

# The orthogonal-flat family realizes n + m - 1 distinct values.
for n, m in ((16, 16), (40, 25)):
    x = energy_report(gen_orthogonal_extremal(n, m)).distinct_count
    print(f"orthogonal n={n} m={m}: distinct = {x} = n + m - 1")

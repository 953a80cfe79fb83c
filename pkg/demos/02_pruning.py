"""
Pruning clash-heavy point sets down to multiplicity one
=======================================================

A configuration that is only valid at some c > 1 can always be thinned to a
c = 1 subset of guaranteed size: m // (2(2c-1)) of the points survive in the
plane, m // (2c-1) in any dimension. The pruned output is stable, pruning it
again keeps everything.
"""

from ddlab import Config, prune_general, prune_planar, validate_constraints

# Six planar points, three stacked on one vertical line and two mirrored
# across the axis, so both conditions clash at c = 1 but hold at c = 3.
cfg = Config.of(
    k=2,
    c=3,
    p1_params=[0, 1, 2],
    p2_points=[(4, 1), (4, 2), (4, 3), (5, -2), (6, 1), (7, -4)],
)
print("valid at c = 1:", validate_constraints(cfg, 1).ok)
print("valid at c = 3:", validate_constraints(cfg, 3).ok)

# Planar pruning reflects everything into one halfplane first, then keeps a
# point only when both its axis coordinate and its height are new.
pruned = prune_planar(cfg)
print("\nplanar prune kept indices:", pruned.kept_indices)
print("halfplane used:", pruned.side.value)
out = pruned.to_config()
print("kept points:", [tuple(map(str, p.coords)) for p in out.p2_points])
print("guaranteed floor:", cfg.m // (2 * (2 * cfg.c - 1)), " actual:", out.m)
print("pruned output valid at c = 1:", validate_constraints(out, 1).ok)

# Pruning the pruned configuration changes nothing.
again = prune_planar(out)
print("second prune keeps all:", again.kept_indices == tuple(range(out.m)))

# The general rule works in any dimension, one pass in lexicographic order.
cfg3 = Config.of(
    k=3,
    c=2,
    p1_params=[0, 2],
    p2_points=[(1, 1, 0), (1, 0, 1), (3, 2, 0), (4, 2, 2), (5, 0, 2)],
)
pruned3 = prune_general(cfg3)
print("\ngeneral prune kept indices:", pruned3.kept_indices)
print("guaranteed floor:", cfg3.m // (2 * cfg3.c - 1), " actual:", len(pruned3.kept_indices))

"""Pruning, extremal families, random generation, matrix construction."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ddlab import (
    Config,
    EmptyResultError,
    GenerationExhaustedError,
    InvalidCountError,
    Point,
    Side,
    SqDistMatrix,
    gen_cylinder_extremal,
    gen_orthogonal_extremal,
    gen_random,
    prune_general,
    prune_planar,
    sq_dist,
    translate_along_axis,
    validate_constraints,
)
from conftest import clustered_config, small_random_config


class TestPrunePlanar:
    def test_two_sided_example(self):
        cfg = Config.of(2, 1, [0], [(0, 1), (1, 2), (2, -1)])
        pruned = prune_planar(cfg)
        assert pruned.kept_indices == (0, 1)
        assert pruned.side is Side.UPPER

    def test_budget_two_example(self):
        cfg = Config.of(2, 2, [0], [(0, 1), (0, 2), (1, 1), (1, 3), (2, 5), (3, 6)])
        pruned = prune_planar(cfg)
        assert pruned.kept_indices == (0, 3, 4, 5)
        kept = pruned.to_config()
        assert validate_constraints(kept, c=1).ok

    def test_reflects_lower_majority(self):
        cfg = Config.of(2, 1, [0], [(0, -1), (1, -2), (2, 1)])
        pruned = prune_planar(cfg)
        assert pruned.kept_indices == (0, 1)
        kept = pruned.to_config()
        assert all(p.coords[1] > 0 for p in kept.p2_points)
        # mirror images keep their distance to every axis point
        for idx, p in zip(pruned.kept_indices, kept.p2_points):
            for a in cfg.p1_params:
                assert sq_dist(a, p) == sq_dist(a, cfg.p2_points[idx])

    def test_axis_points_dropped_first(self):
        cfg = Config.of(2, 1, [0], [(0, 0), (3, 0), (1, 2)])
        pruned = prune_planar(cfg)
        assert pruned.kept_indices == (2,)

    def test_all_on_axis_is_empty(self):
        cfg = Config.of(2, 2, [0], [(0, 0), (3, 0)])
        with pytest.raises(EmptyResultError):
            prune_planar(cfg)

    def test_needs_k2(self):
        cfg = Config.of(3, 1, [0], [(0, 1, 1)])
        with pytest.raises(ValueError):
            prune_planar(cfg)


class TestPruneGeneral:
    def test_three_dim_example(self):
        cfg = Config.of(3, 1, [0], [(0, 1, 0), (1, 0, 1), (2, 1, 1)])
        pruned = prune_general(cfg)
        assert pruned.kept_indices == (0, 2)
        assert pruned.side is Side.NOT_APPLICABLE

    def test_empty_raises(self):
        cfg = Config.of(2, 1, [0], [])
        with pytest.raises(EmptyResultError):
            prune_general(cfg)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6), st.integers(1, 3))
def test_prune_properties(seed, c):
    rng = random.Random(seed)
    n = rng.randint(1, 6)
    m = rng.randint(1, 14)
    k = rng.choice((2, 2, 3, 4))
    cfg = clustered_config(seed, n=n, m=m, k=k, c=c)
    assert validate_constraints(cfg).ok

    pruned = prune_general(cfg)
    kept = pruned.to_config()
    assert validate_constraints(kept, c=1).ok
    assert len(pruned.kept_indices) >= m // (2 * c - 1)
    again = prune_general(kept)
    assert len(again.kept_indices) == kept.m

    if k == 2:
        off_axis = [p for p in cfg.p2_points if p.coords[1] != 0]
        if off_axis:
            planar = prune_planar(cfg)
            pkept = planar.to_config()
            assert validate_constraints(pkept, c=1).ok
            assert all(p.coords[1] > 0 for p in pkept.p2_points)
            assert len(planar.kept_indices) >= m // (2 * (2 * c - 1))
            once_more = prune_planar(pkept)
            assert len(once_more.kept_indices) == pkept.m


class TestCylinder:
    def test_structure(self):
        cfg = gen_cylinder_extremal(3, 4, h=2)
        assert cfg.k == 2 and cfg.c == 4
        assert cfg.p1_params == (0, 1, 2)
        assert [p.coords for p in cfg.p2_points] == [
            (0, 2), (1, 2), (2, 2), (3, 2)
        ]

    @pytest.mark.parametrize("n,m", [(1, 1), (2, 5), (5, 2), (7, 7), (12, 3)])
    def test_distinct_count(self, n, m):
        cfg = gen_cylinder_extremal(n, m)
        values = {sq_dist(a, p) for a in cfg.p1_params for p in cfg.p2_points}
        assert len(values) == max(n, m)

    def test_rational_offset(self):
        cfg = gen_cylinder_extremal(2, 2, h="3/2")
        assert cfg.p2_points[0].coords[1] == Fraction(3, 2)

    def test_rejects_bad_args(self):
        with pytest.raises(InvalidCountError):
            gen_cylinder_extremal(0, 3)
        with pytest.raises(ValueError):
            gen_cylinder_extremal(2, 2, h=0)


class TestOrthogonal:
    def test_entries(self):
        mat = gen_orthogonal_extremal(2, 3)
        assert mat.provenance == "orthogonal"
        assert mat.entries == ((2, 3, 4), (3, 4, 5))

    @pytest.mark.parametrize("n,m", [(1, 1), (4, 9), (9, 4), (10, 10)])
    def test_distinct_count(self, n, m):
        mat = gen_orthogonal_extremal(n, m)
        values = {v for row in mat.entries for v in row}
        assert values == {Fraction(d) for d in range(2, n + m + 1)}

    def test_rejects_zero(self):
        with pytest.raises(InvalidCountError):
            gen_orthogonal_extremal(3, 0)


class TestSqDistMatrix:
    def test_from_config_matches_sq_dist(self):
        cfg = small_random_config(7)
        mat = SqDistMatrix.from_config(cfg)
        assert mat.provenance == "config"
        for i, a in enumerate(cfg.p1_params):
            for j, p in enumerate(cfg.p2_points):
                assert mat.entries[i][j] == sq_dist(a, p)

    def test_shape_and_sign_checks(self):
        with pytest.raises(ValueError):
            SqDistMatrix(n=2, m=1, entries=((Fraction(1),),), provenance="file")
        with pytest.raises(ValueError):
            SqDistMatrix(n=1, m=1, entries=((Fraction(-1),),), provenance="file")


class TestGenRandom:
    def test_deterministic(self):
        a = gen_random(n=4, m=6, k=3, seed=99, coord_range=50)
        b = gen_random(n=4, m=6, k=3, seed=99, coord_range=50)
        assert a == b

    def test_seed_changes_output(self):
        a = gen_random(n=4, m=6, k=3, seed=1, coord_range=50)
        b = gen_random(n=4, m=6, k=3, seed=2, coord_range=50)
        assert a != b

    def test_c1_valid(self):
        for seed in range(12):
            cfg = gen_random(n=5, m=9, k=2 + seed % 3, seed=seed, coord_range=60)
            assert cfg.n == 5 and cfg.m == 9
            assert validate_constraints(cfg, c=1).ok

    def test_preconditions(self):
        with pytest.raises(InvalidCountError):
            gen_random(n=0, m=3, k=2, seed=0, coord_range=10)
        with pytest.raises(ValueError):
            gen_random(n=3, m=3, k=2, seed=0, coord_range=5)
        with pytest.raises(ValueError):
            gen_random(n=3, m=3, k=1, seed=0, coord_range=10)

    def test_exhaustion_surfaces(self, monkeypatch):
        class StuckRandom(random.Random):
            def randint(self, a, b):
                return 1

        monkeypatch.setattr("ddlab.configs.random.Random", StuckRandom)
        with pytest.raises(GenerationExhaustedError):
            gen_random(n=1, m=3, k=2, seed=0, coord_range=20)


def test_translate_along_axis():
    cfg = Config.of(2, 1, [0, 2], [(0, 1), (1, 2)])
    moved = translate_along_axis(cfg, "1/2")
    assert moved.p1_params == (Fraction(1, 2), Fraction(5, 2))
    assert moved.p2_points[1].coords == (Fraction(3, 2), Fraction(2))

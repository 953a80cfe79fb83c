"""Guards and independence of the brute-force oracles."""

from __future__ import annotations

from fractions import Fraction

import pytest

from ddlab import (
    Config,
    ParamGrid,
    SqDistMatrix,
    TooLargeError,
    build_family,
    gen_random,
    oracle_incidences,
    oracle_quadruples,
)


def test_quadruple_oracle_on_tiny_config():
    cfg = Config.of(2, 1, [0, 2], [(0, 1), (1, 2)])
    assert oracle_quadruples(cfg) == (6, 2, 4)


def test_quadruple_oracle_guard():
    mat = SqDistMatrix(
        n=2001,
        m=1,
        entries=tuple((Fraction(i),) for i in range(2001)),
        provenance="file",
    )
    with pytest.raises(TooLargeError):
        oracle_quadruples(mat)


def test_incidence_oracle_guard():
    cfg = gen_random(n=2, m=33, k=2, seed=0, coord_range=200)
    family = build_family(cfg)
    big_grid = ParamGrid(params=tuple(Fraction(i) for i in range(100)))
    assert big_grid.size ** 1 * len(family.curves) > 10_000_000 // 1  # sanity on sizes
    with pytest.raises(TooLargeError):
        oracle_incidences(big_grid, family)


def test_oracle_accepts_matrix():
    cfg = gen_random(n=4, m=5, k=3, seed=3, coord_range=80)
    assert oracle_quadruples(SqDistMatrix.from_config(cfg)) == oracle_quadruples(cfg)

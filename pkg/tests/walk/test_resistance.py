import numpy as np
from hypothesis import given, settings
from hypothesis.strategies import integers
from pytest import approx, raises

from fastperc.coupling import CouplingField
from fastperc.errors import Disconnected
from fastperc.kernel import power_law
from fastperc.sampler import box, sample_box, union_configs
from fastperc.walk import effective_resistance, effective_resistance_dense, resistance_growth

from ..fixtures import full_grid, path_config, square_config


def test_series_and_parallel():
    assert effective_resistance(path_config(3), (0,), [(3,)]) == approx(3.0)
    assert effective_resistance(square_config(), (0, 0), [(1, 1)]) == approx(1.0)
    assert effective_resistance_dense(square_config(), (0, 0), [(1, 1)]) == approx(1.0)


def test_neighbours_only():
    cfg = full_grid(2, 1)
    assert effective_resistance(cfg, (0, 0), cfg.region.boundary_mask()) == approx(0.25)


def test_disconnected():
    with raises(Disconnected):
        effective_resistance(path_config(4), (0,), [(-2,)])
    with raises(ValueError):
        effective_resistance(path_config(4), (0,), [(0,)])


def grid_with_long_edges(seed):
    grid = full_grid(2, 4)
    extra = sample_box(power_law(2, 1.0, 3.5), 1.0, box(2, 4), CouplingField(seed))
    return grid, union_configs(grid, extra)


@given(integers(min_value=0, max_value=2 ** 32))
@settings(deadline=None, max_examples=10)
def test_cg_matches_the_direct_solve(seed):
    _, cfg = grid_with_long_edges(seed)
    boundary = cfg.region.boundary_mask()
    sparse = effective_resistance(cfg, (0, 0), boundary, tol=1e-12)
    dense = effective_resistance_dense(cfg, (0, 0), boundary)
    assert sparse == approx(dense, rel=1e-6)


@given(integers(min_value=0, max_value=2 ** 32))
@settings(deadline=None, max_examples=10)
def test_extra_edges_never_raise_resistance(seed):
    grid, cfg = grid_with_long_edges(seed)
    boundary = grid.region.boundary_mask()
    more = effective_resistance_dense(cfg, (0, 0), boundary)
    assert more <= effective_resistance_dense(grid, (0, 0), boundary) + 1e-12


def test_growth_is_nondecreasing():
    rows = resistance_growth(full_grid(2, 5), (0, 0), [1, 2, 3, 4, 5])
    values = [value for _, value in rows]
    assert values[0] == approx(0.25)
    assert all(a <= b + 1e-9 for a, b in zip(values, values[1:]))
    assert [n for n, _ in rows] == [1, 2, 3, 4, 5]


def test_growth_reports_unreached_radii():
    rows = resistance_growth(path_config(2), (0,), [1, 2, 3])
    assert rows[0] == (1, approx(1.0))
    assert rows[1] == (2, approx(2.0))
    assert rows[2] == (3, None)
    assert np.isfinite(rows[1][1])


if __name__ == '__main__':
    import pytest
    pytest.main([__file__])

import math

from pytest import approx, raises

from fastperc.errors import NoCrossing
from fastperc.estimators import (
    BetaBracket, Estimate, StrictComparison, betac_bracket, continuity_probe, estimate,
    locality_sweep, pc_bracket,
)
from fastperc.kernel import (
    galton_watson_bound, nearest_neighbor, power_law, short_edge_function, tabulated,
)

from ..fixtures import forced_open


def bracket(low, high):
    return BetaBracket(low, high, 'boundary_crossing_half', (2, 3, 4), 0.1)


def test_bracket_record():
    b = bracket(1.0, 1.5)
    assert b.midpoint == 1.25 and b.width == 0.5
    assert b.contains(1.5) and not b.contains(0.9)


def test_strict_comparison():
    apart = StrictComparison(bracket(1.0, 1.2), bracket(0.5, 0.7))
    assert apart.gap == approx(0.5)
    assert apart.separated
    assert not StrictComparison(bracket(1.0, 1.2), bracket(0.95, 1.15)).separated


def test_estimate_record():
    est = estimate([0.0, 1.0, 1.0, 0.0], 3, 'mc')
    assert est.value == 0.5
    assert est.sd == approx(math.sqrt(1 / 3))
    low, high = est.interval(2.0)
    assert high - low == approx(4 * est.stderr)
    assert est.to_mapping()['seed'] == 3
    assert Estimate(1.0, 0.0, 1, None, 'exact').interval() == (1.0, 1.0)


def test_zero_kernel_never_crosses():
    with raises(NoCrossing):
        betac_bracket(tabulated(2, {}), (2, 3, 4), replicates=4)


def test_argument_checks():
    k = nearest_neighbor(2, 1.0)
    with raises(ValueError):
        betac_bracket(k, (2, 4), replicates=4)
    with raises(ValueError):
        betac_bracket(k, (2, 4, 3), replicates=4)
    with raises(ValueError):
        betac_bracket(k, (2, 3, 4), tol=0.0, replicates=4)
    with raises(ValueError):
        betac_bracket(k, (2, 3, 4), criterion='median', replicates=4)
    with raises(ValueError):
        locality_sweep(k, [4, 2], (2, 3, 4), replicates=4)


def test_truncation_past_the_box_gives_the_same_bracket():
    # The largest box B_4 of the line has diameter 8.
    k = power_law(1, 1.0, 3.0)
    (_, far), (_, plain) = locality_sweep(k, [100.0], (2, 3, 4), tol=0.05, replicates=16,
                                          seed=3)
    assert (far.low, far.high) == (plain.low, plain.high)
    assert far.gw_bound > plain.gw_bound


def test_locality_midpoints_decrease_towards_the_untruncated_one():
    k = power_law(1, 1.0, 3.0)
    tol = 0.02
    rows = locality_sweep(k, [2.0, 16.0], (2, 3, 4), tol=tol, replicates=32, seed=5)
    assert [N for N, _ in rows] == [2.0, 16.0, math.inf]
    mids = [b.midpoint for _, b in rows]
    for wide, narrow in zip(mids, mids[1:]):
        assert narrow <= wide + tol
    mid_inf = mids[-1]
    assert mids[1] - mid_inf < mids[0] - mid_inf


def test_nearest_neighbour_bracket():
    k = nearest_neighbor(2, 1.0)
    b = betac_bracket(k, (2, 3, 4), tol=0.1, replicates=16, seed=1)
    assert b.low >= galton_watson_bound(k) == approx(0.25)
    assert b.width <= 0.1
    assert set(b.curves) == {2, 3, 4}
    betas = [beta for beta, _ in b.curves[4]]
    assert betas == sorted(betas)
    values = [value for _, value in b.curves[4]]
    assert values == sorted(values)


def test_bracket_is_reproducible():
    k = nearest_neighbor(2, 1.0)
    first = betac_bracket(k, (2, 3, 4), tol=0.2, replicates=8, seed=3)
    second = betac_bracket(k, (2, 3, 4), tol=0.2, replicates=8, seed=3)
    assert (first.low, first.high) == (second.low, second.high)


def test_density_knee_criterion():
    b = betac_bracket(forced_open(2), (1, 2, 3), criterion='density_knee', tol=1e-4,
                      replicates=4)
    assert b.criterion == 'density_knee'
    assert b.low >= b.gw_bound
    assert b.width <= 1e-4


def test_pc_bracket_nearest_neighbour_line():
    sf = short_edge_function(1, 0.5)
    b = pc_bracket(sf, (2, 3, 4), tol=0.05, replicates=16, seed=2)
    assert 0.0 <= b.low <= b.high <= 1.0
    assert b.width <= 0.05


def test_continuity_probe_without_long_edges():
    rows = continuity_probe(forced_open(2), 1.0, [1.5, 3.0], 3, 4, seed=0)
    assert [r.N for r in rows] == [1.5, 3.0, math.inf]
    assert all(r.l1 == 0.0 and r.difference == 0.0 for r in rows)


if __name__ == '__main__':
    import pytest
    pytest.main([__file__])

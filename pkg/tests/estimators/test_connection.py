from pytest import approx, raises

from fastperc.estimators import (
    beta_model, boundary_connection_prob, giant_cluster_profile, replicate_statistic,
    theta_density,
)
from fastperc.kernel import power_law
from fastperc.sampler import box

from ..fixtures import forced_open


def test_forced_open_lattice():
    k = forced_open(2)
    assert boundary_connection_prob(k, 1.0, 3, 4, seed=0).value == 1.0
    assert theta_density(k, 1.0, 3, 4, seed=0).value == 1.0


def test_empty_lattice():
    k = forced_open(2)
    assert boundary_connection_prob(k, 0.0, 3, 4, seed=0).value == 0.0
    est = theta_density(k, 0.0, 3, 4, seed=0)
    assert est.value == approx(1 / 49)
    assert est.stderr == 0.0


def test_radius_checked():
    with raises(ValueError):
        theta_density(forced_open(1), 1.0, 0, 4, seed=0)
    with raises(ValueError):
        boundary_connection_prob(forced_open(1), 1.0, 0, 4, seed=0)


def test_estimates_are_monotone_in_beta_on_shared_seeds():
    k = power_law(2, 1.0, 3.5)
    low = theta_density(k, 0.3, 5, 40, seed=9)
    high = theta_density(k, 0.9, 5, 40, seed=9)
    assert low.value <= high.value
    low = boundary_connection_prob(k, 0.3, 5, 40, seed=9)
    high = boundary_connection_prob(k, 0.9, 5, 40, seed=9)
    assert low.value <= high.value


def test_workers_do_not_change_the_estimate():
    k = power_law(2, 1.0, 3.5)
    one = theta_density(k, 0.6, 4, 12, seed=2)
    four = theta_density(k, 0.6, 4, 12, seed=2, workers=4)
    assert one == four


def test_replicate_statistic():
    draw = beta_model(forced_open(1), 1.0)
    est = replicate_statistic(draw, box(1, 3), lambda cfg: cfg.n_edges, 3, 1, 'edges')
    assert est.value == 6.0
    assert est.replicates == 3 and est.method == 'edges'


def test_giant_cluster_profile():
    rows = giant_cluster_profile(forced_open(2), 1.0, [1, 2], 2, seed=0)
    assert [n for n, _ in rows] == [1, 2]
    assert all(est.value == 1.0 for _, est in rows)


if __name__ == '__main__':
    import pytest
    pytest.main([__file__])

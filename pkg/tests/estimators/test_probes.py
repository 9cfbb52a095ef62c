from pytest import approx

from fastperc.estimators import aizenman_probe, finite_detour_probe, long_distance_probe
from fastperc.kernel import inverse_square

from ..fixtures import forced_open


def test_long_distance_on_the_grid():
    # corner to corner of B_3 takes 12 hops
    k = forced_open(2)
    assert long_distance_probe(k, 1.0, 3, 3.0, 2, seed=0).value == 1.0
    assert long_distance_probe(k, 1.0, 3, 4.0, 2, seed=0).value == 0.0
    assert long_distance_probe(k, 0.0, 3, 0.5, 2, seed=0).value == 0.0


def test_finite_detour():
    k = forced_open(2)
    assert finite_detour_probe(k, 1.0, 4, 2, seed=0).value == 0.0
    assert finite_detour_probe(k, 1.0, 2, 2, seed=0, inner_exponent=1.0).value == 1.0
    est = finite_detour_probe(k, 0.0, 2, 2, seed=0, inner_exponent=1.0)
    assert est.value == 0.0 and est.method == 'mc-finite-detour'


def test_aizenman_product_is_built_from_the_density_at_the_bracket():
    row = aizenman_probe(1.5, (2, 3, 4), replicates=8, seed=1, tol=0.1)
    assert row.gamma == 1.5
    assert row.sf == inverse_square(0.5, 1.5)
    assert 0.0 <= row.bracket.low <= row.bracket.high <= 1.0
    assert row.bracket.width <= 0.1
    # the largest cluster holds at least one of the 9 sites of B_4
    assert row.density.value == approx(1.0, abs=8 / 9)
    assert row.product == approx(row.density.value ** 2 * 1.5)


if __name__ == '__main__':
    import pytest
    pytest.main([__file__])

import numpy as np
from hypothesis import given, settings
from hypothesis.strategies import floats
from pytest import approx, raises

from fastperc.errors import SourceOutsideSet, TooLarge
from fastperc.estimators import (
    MAX_ORACLE_VERTICES, connect_probability, connection_probabilities,
    exact_connect_oracle, exact_hit_probability,
)
from fastperc.kernel import nearest_neighbor, open_probability, power_law


def test_series_path():
    k = nearest_neighbor(1, 1.0)
    p = exact_connect_oracle(k, np.log(2), [(0,), (1,), (2,)], (0,), (2,))
    assert p == approx(0.25)


@given(floats(min_value=0.0, max_value=5.0))
@settings(deadline=None, max_examples=25)
def test_triangle(beta):
    k = power_law(1, 1.0, 3.0)
    near = open_probability(k, beta, (1,))
    far = open_probability(k, beta, (2,))
    expected = far + (1 - far) * near * near
    V = [(2,), (0,), (1,)]
    assert exact_connect_oracle(k, beta, V, (0,), (2,)) == approx(expected, abs=1e-12)


def test_profile_is_ordered_lexicographically():
    k = power_law(2, 1.0, 4.0)
    pts, profile, hit = connection_probabilities(k, 1.0, [(1, 0), (0, 0), (0, 1)], (0, 0))
    assert pts.tolist() == [[0, 0], [0, 1], [1, 0]]
    assert profile[0] == 1.0
    assert profile[1] == approx(profile[2])
    assert hit == 0.0


def test_hit_probability():
    k = power_law(2, 1.0, 4.0)
    V = [(0, 0), (1, 0), (0, 1), (1, 1)]
    assert exact_hit_probability(k, 0.7, V, (0, 0), [(0, 0)]) == 1.0
    either = exact_hit_probability(k, 0.7, V, (0, 0), [(1, 0), (0, 1)])
    one = exact_connect_oracle(k, 0.7, V, (0, 0), (1, 0))
    assert one < either < 1.0


def test_limits():
    k = nearest_neighbor(1, 1.0)
    with raises(TooLarge):
        exact_connect_oracle(k, 1.0, [(i,) for i in range(MAX_ORACLE_VERTICES + 1)],
                             (0,), (1,))
    with raises(SourceOutsideSet):
        exact_connect_oracle(k, 1.0, [(0,), (1,)], (0,), (5,))


def test_monte_carlo_agrees_with_enumeration():
    k = power_law(2, 1.0, 3.5)
    V = [(0, 0), (1, 0), (0, 1), (1, 1)]
    replicates = 2000
    exact = exact_connect_oracle(k, 0.6, V, (0, 0), (1, 1))
    mc = connect_probability(k, 0.6, V, (0, 0), [(1, 1)], replicates, seed=11)
    sigma = np.sqrt(exact * (1 - exact) / replicates)
    assert mc.value == approx(exact, abs=4 * sigma)
    assert mc.method == 'mc-connect'


def test_monte_carlo_respects_holes_in_V():
    k = nearest_neighbor(1, 1.0)
    mc = connect_probability(k, 5.0, [(0,), (2,)], (0,), [(2,)], 20, seed=3)
    assert mc.value == 0.0


if __name__ == '__main__':
    import pytest
    pytest.main([__file__])

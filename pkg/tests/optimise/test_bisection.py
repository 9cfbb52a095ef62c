from hypothesis import given
from hypothesis.strategies import floats
from pytest import approx

from fastperc.optimise import bracket_level


def step(x):
    return 1.0 if x >= 0.3 else 0.0


def test_basic_sanity():
    (low, high), probes = bracket_level(step, 0.0, 1.0, 0.5, 1e-3)
    assert low < 0.3 <= high
    assert high - low <= 1e-3
    assert probes[0] == (0.5, 1.0)
    assert len(probes) == 10


def test_already_tight():
    assert bracket_level(step, 0.2, 0.25, 0.5, 0.1) == ((0.2, 0.25), [])


@given(floats(min_value=0.0, max_value=10.0), floats(min_value=1e-6, max_value=1.0))
def test_bracket_holds_the_crossing(target, tol):
    (low, high), probes = bracket_level(lambda x: x, 0.0, 10.0, target, tol)
    assert high - low <= tol
    assert low <= target <= high
    assert all(value == approx(x) for x, value in probes)


if __name__ == '__main__':
    import pytest
    pytest.main([__file__])

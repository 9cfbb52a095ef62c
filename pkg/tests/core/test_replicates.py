from hypothesis import given
from hypothesis.strategies import floats, lists
from pytest import approx, raises

from fastperc.core.replicates import map_replicates, mean_stderr
from fastperc.coupling import replicate_seed


def test_seeds_follow_the_base_seed():
    seen = map_replicates(lambda i, s: (i, s), 5, seed=42)
    assert seen == [(i, replicate_seed(42, i)) for i in range(5)]


def test_threads_keep_the_order():
    def run(index, seed):
        return index * 10

    assert map_replicates(run, 50, seed=1, workers=4) == [i * 10 for i in range(50)]
    assert map_replicates(run, 50, seed=1, workers=1) == [i * 10 for i in range(50)]


def test_replicates_must_be_positive():
    with raises(ValueError):
        map_replicates(lambda i, s: i, 0, seed=1)


@given(lists(floats(min_value=-1e6, max_value=1e6), min_size=2, max_size=50))
def test_mean_stderr(values):
    mean, stderr = mean_stderr(values)
    assert mean == approx(sum(values) / len(values), abs=1e-6)
    assert stderr >= 0.0


def test_single_value_has_no_error():
    assert mean_stderr([3.5]) == (3.5, 0.0)
    assert mean_stderr([True, True]) == (1.0, 0.0)


if __name__ == '__main__':
    import pytest
    pytest.main([__file__])

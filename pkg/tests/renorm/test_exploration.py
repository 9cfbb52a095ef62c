import numpy as np
from pytest import raises

from fastperc.errors import GeometryInfeasible, SplitInvalid
from fastperc.kernel import nearest_neighbor, power_law
from fastperc.renorm import (
    beta_split, directed_exploration, exploration_survival, steering_rectangle, verify_path,
)
from fastperc.renorm.exploration import PHASE_STREAMS, check_geometry
from fastperc.sampler import Rectangle

from ..fixtures import FORCED_WEIGHT


def all_open():
    return nearest_neighbor(2, FORCED_WEIGHT)


def test_beta_split():
    assert beta_split(2.0, beta_tilde=1.0) == (1.0, 0.5)
    assert beta_split(0.0) == (0.0, 0.0)
    with raises(SplitInvalid):
        beta_split(1.0, 0.5, 0.5)
    with raises(SplitInvalid):
        beta_split(1.0, 1.5)


def test_geometry_checks():
    with raises(GeometryInfeasible):
        check_geometry(nearest_neighbor(1, 1.0), 2, 0, None)
    with raises(GeometryInfeasible):
        check_geometry(all_open(), 2, 3, None)
    with raises(GeometryInfeasible):
        check_geometry(all_open(), 2, 1, 29.0)
    check_geometry(all_open(), 2, 1, 28.0)


def test_steering_rectangle():
    rect = steering_rectangle((1, 2), 2, 2, 3)
    assert rect == Rectangle((10, 26, -6), (22, 54, 6))


def test_all_open_grows_one_block_per_level():
    result = directed_exploration(all_open(), 1.0, 1, 0, None, 3, seed=5)
    sizes = [len(A) for A in result.state.active]
    assert sizes == [1, 2, 3, 4]
    assert result.survival_depth == 3
    assert result.state.active[3] == [(0, 3), (1, 2), (2, 1), (3, 0)]
    assert [row.active for row in result.trace] == sizes
    assert result.verified
    assert tuple(result.path[0]) == (0, 0)
    assert tuple(result.path[-1]) == result.state.pads[(0, 3)]


def test_pads_sit_in_their_blocks():
    result = directed_exploration(all_open(), 1.0, 1, 0, None, 2, seed=5)
    for u, pad in result.state.pads.items():
        center = 8 * np.array(u)
        assert np.abs(np.array(pad) - center).max() <= 1


def test_streams_are_read_only_in_their_phases():
    result = directed_exploration(all_open(), 1.0, 2, 1, None, 2, seed=1)
    access = result.state.access
    assert access
    for record in access:
        assert record.stream in PHASE_STREAMS[record.phase]
    assert {r.stream for r in access if r.phase == 'origin'} == {0}
    assert {r.stream for r in access if r.phase == 'step1'} == {0, 1}
    assert {r.stream for r in access if r.phase == 'step2'} == {0, 2}


def test_edges_stay_within_reach():
    result = directed_exploration(power_law(2, 1.0, 5.0), 2.0, 1, 0, 14.0, 2, seed=3)
    for record in result.state.access:
        assert max(b - a for a, b in zip(record.rectangle.lo, record.rectangle.hi)) <= 14


def test_empty_origin_pad():
    result = directed_exploration(all_open(), 0.0, 2, 1, None, 3, seed=0)
    assert result.survival_depth == -1
    assert result.path is None and not result.verified


def test_no_sprinkling_stops_at_the_origin():
    result = directed_exploration(all_open(), 0.0, 1, 0, None, 3, seed=0)
    assert result.survival_depth == 0
    assert len(result.state.active) == 2
    assert result.verified
    assert result.state.dead == {(1, 0), (0, 1)}


def test_verify_path_rejects_closed_steps():
    k = all_open()
    rates = {0: 0.75, 1: 0.125, 2: 0.125}
    assert verify_path([(0, 0), (1, 0), (1, 1)], k, 1, 0, 3, rates)
    assert not verify_path([(0, 0), (2, 0)], k, 1, 0, 3, rates)
    assert not verify_path([(1, 0), (2, 0)], k, 1, 0, 3, rates)
    assert not verify_path([(0, 0), (1, 0)], k, 1, 0, 3, {0: 0.0, 1: 0.0, 2: 0.0})


def test_exploration_survival():
    est = exploration_survival(all_open(), 1.0, 1, 0, None, 2, replicates=2, seed=0)
    assert est.value == 1.0
    assert exploration_survival(all_open(), 0.0, 1, 0, None, 1, 2, seed=0).value == 0.0


if __name__ == '__main__':
    import pytest
    pytest.main([__file__])

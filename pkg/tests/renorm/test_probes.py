from pytest import raises

from fastperc.errors import GeometryInfeasible
from fastperc.renorm import annulus_pad_probe, depth_no_pad_probe

from ..fixtures import forced_open


def test_annulus_on_the_open_grid():
    est = annulus_pad_probe(forced_open(2), 1.0, 6, 1, 1.0, 2, seed=0)
    assert est.value == 1.0
    assert est.method == 'mc-annulus-pad'


def test_annulus_geometry():
    k = forced_open(2)
    with raises(GeometryInfeasible):
        annulus_pad_probe(k, 1.0, 6, 1, 0.0, 2, seed=0)
    with raises(GeometryInfeasible):
        annulus_pad_probe(k, 1.0, 6, 1, 1.5, 2, seed=0)
    with raises(GeometryInfeasible):
        annulus_pad_probe(k, 1.0, 6, 2, 1.0, 2, seed=0)


def test_depth_no_pad_on_the_open_grid():
    result = depth_no_pad_probe(forced_open(2), 1.0, float('inf'), 1, 4, 2, seed=0)
    assert result.event.value == 0.0
    assert result.box_found.value == 1.0
    assert result.explored_boxes.value > 0
    assert result.box_side == 2


def test_depth_no_pad_without_edges():
    result = depth_no_pad_probe(forced_open(2), 0.0, 3, 1, 4, 2, seed=0)
    assert result.event.value == 0.0
    assert result.explored_boxes.value == 1.0


def test_depth_no_pad_arguments():
    with raises(GeometryInfeasible):
        depth_no_pad_probe(forced_open(2), 1.0, 1, 1, 4, 2, seed=0)
    with raises(ValueError):
        depth_no_pad_probe(forced_open(2), 1.0, 3, 1, 0, 2, seed=0)


if __name__ == '__main__':
    import pytest
    pytest.main([__file__])

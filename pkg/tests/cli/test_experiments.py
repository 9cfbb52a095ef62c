import numpy as np
from pytest import approx, raises

from fastperc.cli import REGISTRY, parse_config
from fastperc.errors import ConfigParse
from fastperc.estimators import phi_value
from fastperc.kernel import nearest_neighbor, short_edge_gap
from fastperc.sampler import load


OPEN_GRID = """
[experiment]
name = {name}
replicates = 2

[kernel]
family = nearest_neighbor
dimension = 2
weight = 1000.0

[model]
beta = 1.0
"""


def open_grid(name, extra='', **overrides):
    return parse_config(OPEN_GRID.format(name=name) + extra, overrides)


def run(cfg):
    return REGISTRY[cfg.name](cfg)


def test_every_experiment_is_registered_with_a_header():
    for name, func in REGISTRY.items():
        assert func.header
        assert func.streams


def test_sample_writes_loadable_configurations(tmp_path):
    cfg = open_grid('sample', '[geometry]\nradii = 2\n[estimator]\nwrite_configs = yes\n',
                    out_dir=str(tmp_path))
    rows, summary = run(cfg)
    assert summary == {'configurations': 2}
    assert [row[:4] for row in rows] == [(2, 0, 40, 1), (2, 1, 40, 1)]
    written = load(str(tmp_path / 'configs' / 'sample_n2_r0.txt'))
    assert written.n_edges == 40


def test_giant_on_the_open_grid():
    rows, summary = run(open_grid('giant', '[geometry]\nradii = 2, 3\n'))
    assert [row[:3] for row in rows] == [(2, 1.0, 0.0), (3, 1.0, 0.0)]
    assert summary['densities'] == [1.0, 1.0]


def test_phi_row_matches_the_estimator():
    cfg = parse_config('[experiment]\nname = phi\n'
                       '[kernel]\nfamily = nearest_neighbor\ndimension = 1\nweight = 1.0\n'
                       '[model]\nbeta = 0.3\n[estimator]\nset = 0 / 1\n')
    rows, summary = run(cfg)
    expected = phi_value(nearest_neighbor(1, 1.0), 0.3, ((0,), (1,)))
    (size, mode, value, upper, certified, _), = rows
    assert (size, mode) == (2, 'exact')
    assert value == approx(expected.value)
    assert upper == approx(expected.upper)
    assert certified == int(expected.certified)
    assert summary['certified'] == expected.certified


def test_walk_on_the_open_grid():
    rows, summary = run(open_grid('walk', '[geometry]\nradii = 2, 3\n'
                                          '[estimator]\nhorizon = 20\n'))
    kinds = [row[0] for row in rows]
    assert kinds == ['resistance', 'resistance', 'return']
    assert rows[0][2] > 0
    # resistance to ever larger boundaries cannot shrink
    assert rows[1][2] >= rows[0][2]
    assert rows[2][1] == 20
    assert 0.0 <= rows[2][2] <= 1.0
    assert set(summary['resistance']) == {'2', '3'}


def test_renorm_on_the_open_grid():
    rows, summary = run(open_grid('renorm', '[estimator]\nn = 1\nm = 0\ndepth = 2\n'))
    assert [row[:2] for row in rows] == [(0, 1), (1, 2), (2, 3)]
    assert summary['survival_depth'] == 2
    assert summary['verified']
    assert summary['survival']['value'] == 1.0


def test_depthpad_on_the_open_grid():
    rows, summary = run(open_grid('depthpad', '[estimator]\ndepths = 4\n'))
    (k, value, stderr, opened, found, side), = rows
    assert (k, value, found, side) == (4, 0.0, 1.0, 2)
    assert opened > 0
    assert summary == {'decreasing': True}


def test_counterexample_needs_the_pf_model():
    with raises(ConfigParse):
        run(open_grid('counterexample1d'))


COUNTEREXAMPLE = """
[experiment]
name = counterexample1d
replicates = 4
seed = 2

[model]
kind = pf
p = 0.6
near = 2:0.1
near_radius = 2
gamma = 1.2

[geometry]
radii = 2, 3, 4

[estimator]
gamma = 1.5
truncations = 2, 3
tol = 0.1
aizenman = yes
"""


def test_counterexample_rows_bracket_each_truncation():
    cfg = parse_config(COUNTEREXAMPLE)
    rows, summary = run(cfg)
    assert [row[:2] for row in rows] == [('f_n', 2), ('f_n', 3), ('f', '')]
    for _, _, low, high, midpoint, _ in rows:
        assert 0.0 <= low <= high <= 1.0
        assert high - low <= 0.1
        assert midpoint == approx((low + high) / 2)
    # f = 1.2 / x^2 past the table, so f_n differs from it by 0.3 / x^2 beyond n
    assert rows[0][5] == approx(short_edge_gap(cfg.sf, 1.5, 2))
    assert rows[0][5] > rows[1][5] > 0.0
    assert rows[2][5] == ''
    assert summary['gamma'] == 1.5
    assert 0.0 <= summary['aizenman_product'] <= 1.5


def test_shape_mu_rows_on_the_open_grid():
    rows, summary = run(open_grid('shape', '[geometry]\nradii = 2\n'
                                           '[estimator]\ndirections = 1,0\n'))
    (kind, direction, n, _, value, stderr, violations), = rows
    assert (kind, direction, n) == ('mu', '1 0', 2)
    assert value == approx(1.0)
    assert violations == 0
    assert summary['mu']['1 0'] == approx(1.0)
    assert np.isfinite(stderr)


if __name__ == '__main__':
    import pytest
    pytest.main([__file__])

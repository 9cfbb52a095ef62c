"""
Named experiments run by the command line.

Each experiment takes an ExperimentConfig and returns (rows, summary):
rows match the fixed `header` registered with it and the summary is a
plain mapping written next to the CSV as JSON.

========================  ==================================================
experiment                CSV columns after the provenance columns
========================  ==================================================
sample                    n, replicate, n_edges, max_length, cutoff, miss_bound
theta                     n, value, stderr
betac                     n, parameter, statistic
locality                  variant, N, low, high, midpoint
phi                       size, mode, value, upper, certified, stderr
distance                  probe, n, value, stderr
shape                     kind, direction, n, replicate, value, stderr, violations
giant                     n, value, stderr, sd
walk                      kind, n, value, stderr, count
renorm                    level, active, blocks_sampled, edges_drawn
dsb                       rho, depth, width, mc, stderr, exact
depthpad                  k, value, stderr, boxes_opened, box_found, box_side
counterexample1d          variant, n, low, high, midpoint, gap
========================  ==================================================
"""
import logging
import math
import os

import numpy as np

from fastperc.cluster.clusters import components, largest_cluster
from fastperc.core.replicates import map_replicates, mean_stderr
from fastperc.coupling.field import OMEGA, OMEGA_PRIME, OMEGA_SECOND, CouplingField
from fastperc.errors import ConfigParse, Disconnected, EmptyProxy
from fastperc.estimators.betac import (
    aizenman_probe, betac_bracket, compare_strict_inequality, locality_sweep, pc_bracket,
)
from fastperc.estimators.connection import (
    beta_model, density_statistic, pf_model, replicate_statistic,
)
from fastperc.estimators.phi import phi_value
from fastperc.estimators.probes import finite_detour_probe, long_distance_probe
from fastperc.kernel.short_edge import gamma_from_theta, make_counterexample_1d, short_edge_gap
from fastperc.metric.proxy import chemical_ball, enlarged_box, hat_point, make_proxy
from fastperc.metric.shape import default_directions, mu_sequence, mu_table, shape_check
from fastperc.renorm.directed import (
    DIRECTED_STREAM, directed_model, directed_survival, transfer_matrix_survival,
)
from fastperc.renorm.exploration import directed_exploration, exploration_survival
from fastperc.renorm.probes import annulus_pad_probe, depth_no_pad_probe
from fastperc.sampler.box import box
from fastperc.sampler.text import dump
from fastperc.walk.random_walk import WALK_STREAM, walk_stats
from fastperc.walk.resistance import resistance_growth


logger = logging.getLogger(__name__)

REGISTRY = {}


def experiment(name, header, streams=(OMEGA,)):
    def register(func):
        func.header = tuple(header)
        func.streams = tuple(streams)
        REGISTRY[name] = func
        return func
    return register


def _beta(cfg):
    if cfg.beta is None:
        raise ConfigParse('experiment {} needs [model] beta'.format(cfg.name))
    return cfg.beta


def _kernel(cfg):
    if cfg.kernel is None:
        raise ConfigParse('experiment {} needs a [kernel] section'.format(cfg.name))
    return cfg.kernel


def _draw(cfg):
    if cfg.model == 'pf':
        return pf_model(cfg.sf, cfg.miss_budget)
    return beta_model(_kernel(cfg), _beta(cfg), cfg.miss_budget)


def _radii(cfg, default):
    return tuple(cfg.radii) or tuple(default)


def _direction_text(v):
    return ' '.join(str(int(c)) for c in v)


@experiment('sample', ('n', 'replicate', 'n_edges', 'max_length', 'cutoff', 'miss_bound'))
def run_sample(cfg):
    draw = _draw(cfg)
    write = cfg.option('write_configs', False)
    if write:
        os.makedirs(os.path.join(cfg.out_dir, 'configs'), exist_ok=True)
    rows = []
    for n in _radii(cfg, (4,)):
        region = box(cfg.dimension, n)

        def run(index, rseed):
            return draw(region, CouplingField(rseed))

        for i, sample in enumerate(map_replicates(run, cfg.replicates, cfg.seed, cfg.workers)):
            lengths = sample.edge_lengths()
            rows.append((n, i, sample.n_edges, int(lengths.max()) if len(lengths) else 0,
                         sample.provenance.cutoff, sample.provenance.miss_bound))
            if write:
                dump(sample, os.path.join(cfg.out_dir, 'configs',
                                          '{}_n{}_r{}.txt'.format(cfg.name, n, i)))
    return rows, {'configurations': len(rows)}


@experiment('theta', ('n', 'value', 'stderr'))
def run_theta(cfg):
    draw = _draw(cfg)
    rows = []
    for n in _radii(cfg, (8, 16)):
        region, density = density_statistic(n, cfg.dimension)
        est = replicate_statistic(draw, region, density, cfg.replicates, cfg.seed,
                                  'mc-density', cfg.workers)
        rows.append((n, est.value, est.stderr))
    return rows, {'largest_radius_density': rows[-1][1]}


@experiment('betac', ('n', 'parameter', 'statistic'))
def run_betac(cfg):
    radii = _radii(cfg, (8, 16, 32))
    options = dict(criterion=cfg.option('criterion', 'boundary_crossing_half'),
                   replicates=cfg.replicates, seed=cfg.seed, workers=cfg.workers,
                   miss_budget=cfg.miss_budget)
    if 'knee_level' in cfg.estimator:
        options['knee_level'] = cfg.option('knee_level')
    if cfg.model == 'pf':
        bracket = pc_bracket(cfg.sf, radii, tol=cfg.option('tol', 0.02), **options)
    else:
        bracket = betac_bracket(_kernel(cfg), radii, tol=cfg.option('tol', 0.05), **options)
    rows = [(n, x, value) for n in bracket.radii for x, value in bracket.curves[n]]
    return rows, {'low': bracket.low, 'high': bracket.high, 'midpoint': bracket.midpoint,
                  'gw_bound': bracket.gw_bound, 'criterion': bracket.criterion}


@experiment('locality', ('variant', 'N', 'low', 'high', 'midpoint'))
def run_locality(cfg):
    k = _kernel(cfg)
    radii = _radii(cfg, (8, 16, 32))
    criterion = cfg.option('criterion', 'boundary_crossing_half')
    tol = cfg.option('tol', 0.05)
    sweep = locality_sweep(k, cfg.option('truncations', (2.0, 4.0, 8.0)), radii, criterion,
                           tol, cfg.replicates, cfg.seed, cfg.workers, cfg.miss_budget)
    rows = [('full' if math.isinf(N) else 'truncated', N, b.low, b.high, b.midpoint)
            for N, b in sweep]
    summary = {'midpoints': [row[4] for row in rows]}
    if 'nn_bonus' in cfg.estimator:
        comparison = compare_strict_inequality(k, radii, cfg.option('nn_bonus'), criterion,
                                               tol, cfg.replicates, cfg.seed, cfg.workers,
                                               cfg.miss_budget)
        b = comparison.perturbed
        rows.append(('perturbed', math.inf, b.low, b.high, b.midpoint))
        summary.update(gap=comparison.gap, separated=comparison.separated)
    return rows, summary


@experiment('phi', ('size', 'mode', 'value', 'upper', 'certified', 'stderr'))
def run_phi(cfg):
    k = _kernel(cfg)
    points = cfg.option('set', ((0,) * k.dimension,))
    mode = cfg.option('mode', 'exact')
    value = phi_value(k, _beta(cfg), points, mode, cfg.replicates, cfg.seed, cfg.workers,
                      cfg.miss_budget)
    row = (len(points), mode, value.value, value.upper, int(value.certified), value.stderr)
    return [row], {'certified': value.certified, 'value': value.value}


@experiment('distance', ('probe', 'n', 'value', 'stderr'))
def run_distance(cfg):
    k, beta = _kernel(cfg), _beta(cfg)
    factor = cfg.option('factor', 8.0)
    rows = []
    for n in _radii(cfg, (8, 16)):
        est = long_distance_probe(k, beta, n, factor, cfg.replicates, cfg.seed, cfg.workers,
                                  cfg.miss_budget)
        rows.append(('long_distance', n, est.value, est.stderr))
    if 'detour_n' in cfg.estimator:
        n = cfg.option('detour_n')
        est = finite_detour_probe(k, beta, n, cfg.replicates, cfg.seed,
                                  cfg.option('inner_exponent', 1.0 / 16),
                                  cfg.option('reach'), cfg.workers, cfg.miss_budget)
        rows.append(('finite_detour', n, est.value, est.stderr))
    return rows, {'factor': factor}


def _shape_magnitudes(cfg, mu, t, eps, rule):
    k, beta = _kernel(cfg), _beta(cfg)
    d = k.dimension
    working = 2 * int(math.ceil(t * mu.extent)) + 1
    origin = np.zeros(d, dtype=np.int64)

    def run(index, rseed):
        sample = beta_model(k, beta, cfg.miss_budget)(enlarged_box(d, working),
                                                     CouplingField(rseed))
        proxy = make_proxy(sample, rule, working=box(d, working))
        if proxy.empty:
            return None
        ball = sample.region.coords(chemical_ball(sample, proxy, origin, t))
        return shape_check(ball, t, mu, eps)

    return map_replicates(run, cfg.replicates, cfg.seed, cfg.workers)


@experiment('shape', ('kind', 'direction', 'n', 'replicate', 'value', 'stderr', 'violations'))
def run_shape(cfg):
    k, beta = _kernel(cfg), _beta(cfg)
    rule = cfg.option('rule', 'largest')
    directions = cfg.option('directions') or tuple(default_directions(k.dimension))
    rows, entries = [], {}
    for v in directions:
        seq = mu_sequence(k, beta, v, _radii(cfg, (4, 8)), cfg.replicates, cfg.seed, rule,
                          cfg.miss_budget, cfg.workers)
        entries[tuple(v)] = seq
        rows.extend(('mu', _direction_text(v), r.n, '', r.mean, r.stderr, r.violations)
                    for r in seq)
    mu = mu_table(entries, k.dimension)
    eps = cfg.option('eps', 0.25)
    passed = {}
    for t in cfg.option('times', ()):
        reports = _shape_magnitudes(cfg, mu, t, eps, rule)
        for i, report in enumerate(reports):
            if report is not None:
                rows.append(('shape', '', t, i, report.magnitude, '', int(not report.passed)))
        passed[str(t)] = sum(1 for r in reports if r is not None and r.passed)
    return rows, {'mu': {_direction_text(v): value for v, value in zip(mu.directions, mu.values)},
                  'shape_passed': passed}


@experiment('giant', ('n', 'value', 'stderr', 'sd'))
def run_giant(cfg):
    draw = _draw(cfg)
    rows = []
    for n in _radii(cfg, (16, 32)):
        region = box(cfg.dimension, n)

        def run(index, rseed):
            return largest_cluster(components(draw(region, CouplingField(rseed))))[0] \
                / region.volume

        value, stderr = mean_stderr(map_replicates(run, cfg.replicates, cfg.seed, cfg.workers))
        rows.append((n, value, stderr, stderr * math.sqrt(cfg.replicates)))
        logger.info('n=%d: |K_max|/|B_n| %.4f', n, value)
    return rows, {'densities': [row[1] for row in rows]}


@experiment('walk', ('kind', 'n', 'value', 'stderr', 'count'), (OMEGA, WALK_STREAM))
def run_walk(cfg):
    draw = _draw(cfg)
    radii = _radii(cfg, (4, 8))
    horizon = cfg.option('horizon', 1000)
    tol = cfg.option('tol', 1e-8)
    d = cfg.dimension
    region = box(d, max(radii))

    def run(index, rseed):
        sample = draw(region, CouplingField(rseed))
        proxy = make_proxy(sample, 'largest')
        try:
            center = hat_point(sample, proxy, np.zeros(d))
        except EmptyProxy:
            return None
        growth = resistance_growth(sample, center, radii, tol)
        return growth, walk_stats(sample, center, horizon, rseed).returns > 0

    results = [r for r in map_replicates(run, cfg.replicates, cfg.seed, cfg.workers)
               if r is not None]
    rows = []
    for j, n in enumerate(radii):
        values = [growth[j][1] for growth, _ in results if growth[j][1] is not None]
        if not values:
            raise Disconnected('no replicate reached distance {}'.format(n))
        mean, stderr = mean_stderr(values)
        rows.append(('resistance', n, mean, stderr, len(values)))
    returns = [float(r) for _, r in results if r is not None]
    if returns:
        mean, stderr = mean_stderr(returns)
        rows.append(('return', horizon, mean, stderr, len(returns)))
    return rows, {'resistance': {str(row[1]): row[2] for row in rows if row[0] == 'resistance'}}


@experiment('renorm', ('level', 'active', 'blocks_sampled', 'edges_drawn'),
            (OMEGA, OMEGA_PRIME, OMEGA_SECOND))
def run_renorm(cfg):
    k, beta = _kernel(cfg), _beta(cfg)
    n, m = cfg.option('n', 4), cfg.option('m', 1)
    N, depth = cfg.option('N'), cfg.option('depth', 5)
    split = dict(beta_tilde=cfg.option('beta_tilde'), eta=cfg.option('eta'))
    result = directed_exploration(k, beta, n, m, N, depth, cfg.seed,
                                  miss_budget=cfg.miss_budget, **split)
    rows = [(r.level, r.active, r.blocks_sampled, r.edges_drawn) for r in result.trace]
    survival = exploration_survival(k, beta, n, m, N, depth, cfg.replicates, cfg.seed,
                                    workers=cfg.workers, miss_budget=cfg.miss_budget, **split)
    summary = {'survival_depth': result.survival_depth, 'verified': result.verified,
               'survival': survival.to_mapping()}
    if 'delta' in cfg.estimator:
        summary['annulus'] = annulus_pad_probe(
            k, beta, n, m, cfg.option('delta'), cfg.replicates, cfg.seed, cfg.workers,
            cfg.miss_budget).to_mapping()
    return rows, summary


@experiment('dsb', ('rho', 'depth', 'width', 'mc', 'stderr', 'exact'), (DIRECTED_STREAM,))
def run_dsb(cfg):
    depth = cfg.option('depth', 20)
    width = cfg.option('width', 4)
    rows = []
    for rho in cfg.option('rho', (0.6, 0.9, 0.99)):
        model = directed_model(rho, horizon=depth)
        mc = directed_survival(model, depth, cfg.replicates, cfg.seed, width, cfg.workers)
        exact = transfer_matrix_survival(model, depth, width)
        rows.append((rho, depth, width, mc.value, mc.stderr, exact))
    agree = all(abs(r[3] - r[5]) <= 4 * r[4] + 1e-12 for r in rows)
    return rows, {'within_4_sigma': agree}


@experiment('depthpad', ('k', 'value', 'stderr', 'boxes_opened', 'box_found', 'box_side'))
def run_depthpad(cfg):
    k, beta = _kernel(cfg), _beta(cfg)
    r, N = cfg.option('r', math.inf), cfg.option('N', 1.0)
    rows = []
    for depth in cfg.option('depths', (16, 64)):
        est = depth_no_pad_probe(k, beta, r, N, depth, cfg.replicates, cfg.seed,
                                 cfg.option('reach'), cfg.workers, cfg.miss_budget)
        rows.append((depth, est.event.value, est.event.stderr, est.explored_boxes.value,
                     est.box_found.value, est.box_side))
    values = [row[1] for row in rows]
    return rows, {'decreasing': all(b < a for a, b in zip(values, values[1:]))}


@experiment('counterexample1d', ('variant', 'n', 'low', 'high', 'midpoint', 'gap'))
def run_counterexample1d(cfg):
    if cfg.model != 'pf' or cfg.sf.dimension != 1:
        raise ConfigParse('counterexample1d needs a one-dimensional [model] kind = pf')
    sf = cfg.sf
    gamma = cfg.option('gamma')
    if gamma is None:
        gamma = gamma_from_theta(cfg.option('theta', 0.0))
    radii = _radii(cfg, (16, 32, 64))
    tol = cfg.option('tol', 0.02)

    def bracket(f):
        return pc_bracket(f, radii, tol=tol, replicates=cfg.replicates, seed=cfg.seed,
                          workers=cfg.workers, miss_budget=cfg.miss_budget)

    rows = []
    for n in cfg.option('truncations', (2, 4, 8)):
        b = bracket(make_counterexample_1d(sf, gamma, n))
        rows.append(('f_n', n, b.low, b.high, b.midpoint, short_edge_gap(sf, gamma, n)))
    b = bracket(sf)
    rows.append(('f', '', b.low, b.high, b.midpoint, ''))
    summary = {'gamma': gamma}
    if cfg.option('aizenman', False):
        row = aizenman_probe(gamma, radii, cfg.replicates, cfg.seed, tol, cfg.workers,
                             cfg.miss_budget)
        summary['aizenman_product'] = row.product
    return rows, summary


if __name__ == '__main__':
    import pytest
    pytest.main([__file__])

"""
Finite-size brackets for beta_c (and p_c of the (p, f) model), and
the sweeps built on them: locality under truncation, the strict
inequality for J-bar, continuity of theta and the one-dimensional
discontinuity probe.
"""
import logging
from dataclasses import dataclass, replace
from typing import Optional

from fastperc.errors import NoCrossing
from fastperc.estimators.connection import (
    beta_model, crossing_statistic, density_statistic, pf_model,
    replicate_statistic, theta_density,
)
from fastperc.estimators.records import BetaBracket, Estimate
from fastperc.kernel.kernel import perturbed_nn, truncate
from fastperc.kernel.short_edge import inverse_square
from fastperc.kernel.sums import galton_watson_bound, l1_distance
from fastperc.optimise.bisection import bracket_level
from fastperc.sampler.sample import DEFAULT_MISS_BUDGET


logger = logging.getLogger(__name__)

CRITERIA = ('boundary_crossing_half', 'density_knee')

DEFAULT_KNEE_LEVEL = 0.25

# The search for the crossing starts at GRID_START and doubles or
# halves at most MAX_DOUBLINGS times.
GRID_START = 1.0
MAX_DOUBLINGS = 40


def _criterion(criterion, knee_level):
    if criterion == 'boundary_crossing_half':
        return crossing_statistic, 0.5
    if criterion == 'density_knee':
        return density_statistic, knee_level
    raise ValueError('unknown criterion {!r}; expected one of {}'.format(criterion, CRITERIA))


def _check_radii(radii):
    radii = tuple(int(n) for n in radii)
    if len(radii) < 3 or any(b <= a for a, b in zip(radii, radii[1:])) or radii[0] < 1:
        raise ValueError('need at least three increasing positive radii')
    return radii


class _CriterionCurve:
    """
    Memoised criterion statistic at (parameter, radius).
    """

    def __init__(self, model_at, dimension, criterion, knee_level, replicates, seed, workers):
        self.factory, self.level = _criterion(criterion, knee_level)
        self.model_at = model_at
        self.dimension = dimension
        self.criterion = criterion
        self.replicates = replicates
        self.seed = seed
        self.workers = workers
        self.cache = {}

    def __call__(self, x, n):
        key = (float(x), int(n))
        if key not in self.cache:
            region, statistic = self.factory(n, self.dimension)
            self.cache[key] = replicate_statistic(
                self.model_at(x), region, statistic, self.replicates, self.seed,
                self.criterion, self.workers,
            ).value
        return self.cache[key]

    def curves(self, radii):
        probed = sorted({x for x, _ in self.cache})
        return {n: tuple((x, self(x, n)) for x in probed) for n in radii}


def _bracket(curve, radii, low, high, tol, gw_bound):
    top = radii[-1]
    (low, high), probes = bracket_level(lambda x: curve(x, top), low, high, curve.level, tol)
    logger.info('%s bracket [%.6g, %.6g] after %d probes', curve.criterion, low, high,
                len(probes))
    if high <= gw_bound:
        logger.warning('criterion already met at the Galton-Watson bound %.6g', gw_bound)
    low, high = max(low, gw_bound), max(high, gw_bound)
    return BetaBracket(low, high, curve.criterion, radii, gw_bound, curve.curves(radii),
                       curve.replicates, curve.seed)


def _dyadic_start(met):
    # Consecutive powers of two around the crossing; the grid is the
    # same for every kernel.
    high = GRID_START
    if met(high):
        for _ in range(MAX_DOUBLINGS):
            if not met(high / 2):
                return high / 2, high
            high /= 2
        return 0.0, high
    for _ in range(MAX_DOUBLINGS):
        if met(2 * high):
            return high, 2 * high
        high *= 2
    return None


def betac_bracket(k, radii, criterion='boundary_crossing_half', tol=0.05, replicates=64,
                  seed=0, workers=1, miss_budget=DEFAULT_MISS_BUDGET,
                  knee_level=DEFAULT_KNEE_LEVEL):
    """
    Bisection in beta for the point where the criterion statistic at
    the largest radius reaches its level (1/2 for boundary crossing,
    `knee_level` for the largest-cluster density). Every probe reuses
    the same coupling fields and lies on a dyadic grid that does not
    depend on `k`, so kernels giving the same configurations give the
    same bracket. The reported bracket never goes below the
    Galton-Watson bound.
    """
    radii = _check_radii(radii)
    if tol <= 0:
        raise ValueError('tol must be positive')
    gw = galton_watson_bound(k)
    if gw == float('inf'):
        raise NoCrossing('the kernel is identically zero')
    curve = _CriterionCurve(lambda b: beta_model(k, b, miss_budget), k.dimension,
                            criterion, knee_level, replicates, seed, workers)
    top = radii[-1]
    start = _dyadic_start(lambda b: curve(b, top) >= curve.level)
    if start is None:
        raise NoCrossing('criterion {} never reached {} up to beta={:.6g}'.format(
            criterion, curve.level, GRID_START * 2 ** MAX_DOUBLINGS))
    return _bracket(curve, radii, start[0], start[1], tol, gw)


def pc_bracket(sf, radii, criterion='boundary_crossing_half', tol=0.02, replicates=64,
               seed=0, workers=1, miss_budget=DEFAULT_MISS_BUDGET,
               knee_level=DEFAULT_KNEE_LEVEL):
    """
    The same bisection over the nearest-neighbour probability p of
    the (p, f) model, f held fixed.
    """
    radii = _check_radii(radii)
    curve = _CriterionCurve(lambda p: pf_model(replace(sf, nn_probability=p), miss_budget),
                            sf.dimension, criterion, knee_level, replicates, seed, workers)
    top = radii[-1]
    if curve(1.0, top) < curve.level:
        raise NoCrossing('criterion {} not reached even at p = 1'.format(criterion))
    if curve(0.0, top) >= curve.level:
        return BetaBracket(0.0, 0.0, criterion, radii, 0.0, curve.curves(radii), replicates, seed)
    return _bracket(curve, radii, 0.0, 1.0, tol, 0.0)


def locality_sweep(k, N_list, radii, criterion='boundary_crossing_half', tol=0.05,
                   replicates=64, seed=0, workers=1, miss_budget=DEFAULT_MISS_BUDGET):
    """
    betac_bracket of truncate(k, N) for each N on shared seeds, then of
    k itself (reported with N = inf).
    """
    N_list = [float(N) for N in N_list]
    if any(b <= a for a, b in zip(N_list, N_list[1:])):
        raise ValueError('truncation radii must increase')
    out = []
    for N in N_list + [float('inf')]:
        kernel = k if N == float('inf') else truncate(k, N)
        bracket = betac_bracket(kernel, radii, criterion, tol, replicates, seed, workers,
                                miss_budget)
        logger.info('N=%g: bracket [%.4f, %.4f]', N, bracket.low, bracket.high)
        out.append((N, bracket))
    return out


@dataclass(frozen=True)
class StrictComparison:
    plain: BetaBracket
    perturbed: BetaBracket

    @property
    def gap(self):
        return self.plain.midpoint - self.perturbed.midpoint

    @property
    def separated(self):
        """
        J-bar's midpoint lies below J's by more than the two
        half-widths together.
        """
        return self.gap > (self.plain.width + self.perturbed.width) / 2


def compare_strict_inequality(k, radii, nn_bonus=1.0, criterion='boundary_crossing_half',
                              tol=0.05, replicates=64, seed=0, workers=1,
                              miss_budget=DEFAULT_MISS_BUDGET):
    """
    Brackets for J and J-bar (J plus `nn_bonus` on nearest
    neighbours) on the same seeds.
    """
    plain = betac_bracket(k, radii, criterion, tol, replicates, seed, workers, miss_budget)
    bumped = betac_bracket(perturbed_nn(k, nn_bonus), radii, criterion, tol, replicates,
                           seed, workers, miss_budget)
    return StrictComparison(plain, bumped)


@dataclass(frozen=True)
class ContinuityRow:
    N: float
    l1: float
    density: Estimate
    difference: float


def continuity_probe(k, beta, N_list, n, replicates, seed, workers=1,
                     miss_budget=DEFAULT_MISS_BUDGET):
    """
    theta_density of truncate(k, N) against that of k along `N_list`,
    with the L1 distance between the kernels.
    """
    reference = theta_density(k, beta, n, replicates, seed, workers, miss_budget)
    rows = []
    for N in N_list:
        kN = truncate(k, N)
        est = theta_density(kN, beta, n, replicates, seed, workers, miss_budget)
        rows.append(ContinuityRow(float(N), l1_distance(k, kN), est,
                                  abs(est.value - reference.value)))
    rows.append(ContinuityRow(float('inf'), 0.0, reference, 0.0))
    return rows


@dataclass(frozen=True)
class AizenmanRow:
    gamma: float
    bracket: BetaBracket
    density: Estimate
    product: float
    sf: Optional[object] = None


def aizenman_probe(gamma, radii, replicates, seed, tol=0.02, workers=1,
                   miss_budget=DEFAULT_MISS_BUDGET, sf=None):
    """
    For the one-dimensional gamma / x^2 model (or `sf`), the
    estimated p_c, the largest-cluster density there at the largest
    radius and theta^2 * gamma. Qualitative only.
    """
    sf = inverse_square(0.5, gamma) if sf is None else sf
    bracket = pc_bracket(sf, radii, 'boundary_crossing_half', tol, replicates, seed,
                         workers, miss_budget)
    at = replace(sf, nn_probability=bracket.high)
    n = bracket.radii[-1]
    region, density = density_statistic(n, 1)
    est = replicate_statistic(pf_model(at, miss_budget), region, density, replicates,
                              seed, 'mc-density', workers)
    return AizenmanRow(float(gamma), bracket, est, est.value ** 2 * gamma, sf)


if __name__ == '__main__':
    import pytest
    pytest.main([__file__])

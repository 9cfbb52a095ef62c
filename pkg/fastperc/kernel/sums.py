"""
Lattice sums over Z^d minus the origin.

Sums run shell by shell in the infinity norm. Once past the kernel's
support radius they stop at the first shell contributing less than
`SHELL_TOL`, or at a dimension dependent radius cap, and add the
remainder of the pure power-law tail. That remainder is exact: the
Hurwitz zeta function in d = 1, and in higher dimensions the full
lattice sum (an Epstein zeta function) less the sum over the cube
already covered.
"""
import logging
from functools import lru_cache

import numpy as np
from scipy.special import exp1, gamma as gamma_fn, gammaincc, zeta

from fastperc.errors import DimensionMismatch, DivergentTail
from fastperc.kernel.kernel import kernel_values
from fastperc.utilities.lattice import shell_points, sq_norm


logger = logging.getLogger(__name__)

SHELL_TOL = 1e-15

# Beyond these shells the power-law remainder is used.
MAX_SHELL_RADIUS = {1: 1 << 20, 2: 1024, 3: 96}
_DEFAULT_MAX_SHELL_RADIUS = 24
_CHUNK_1D = 1 << 14

# Terms of the theta splitting decay like exp(-pi |x|^2); shells past
# this radius are below double precision.
_THETA_SHELLS = 4


def max_shell_radius(dimension):
    return MAX_SHELL_RADIUS.get(dimension, _DEFAULT_MAX_SHELL_RADIUS)


def upper_gamma(a, x):
    """
    The upper incomplete gamma function for any real `a` and x > 0.

    >>> round(float(upper_gamma(1.0, 2.0)), 12) == round(np.exp(-2.0), 12)
    True
    """
    if a > 0:
        return gamma_fn(a) * gammaincc(a, x)
    if a == 0:
        return exp1(x)
    return (upper_gamma(a + 1.0, x) - x ** a * np.exp(-x)) / a


@lru_cache(maxsize=None)
def epstein_zeta(dimension, exponent):
    """
    Sum of |x|^-s over x in Z^d minus the origin.

    Splitting the theta-function integral at t = 1 turns both halves
    into rapidly converging sums of incomplete gamma functions, over
    the lattice and over its dual (Z^d again).

    >>> round(epstein_zeta(2, 4.0), 10)
    6.0268120397
    """
    if exponent <= dimension:
        raise DivergentTail('exponent must exceed the dimension')
    d, s = dimension, float(exponent)
    if d == 1:
        return 2.0 * float(zeta(s))
    z = np.pi * np.concatenate([sq_norm(shell_points(d, r)).astype(np.float64)
                                for r in range(1, _THETA_SHELLS + 1)])
    direct = z ** (-0.5 * s) * upper_gamma(0.5 * s, z)
    dual = z ** (0.5 * (s - d)) * upper_gamma(0.5 * (d - s), z)
    inner = np.sum(direct) + np.sum(dual) + 2.0 / (s - d) - 2.0 / s
    return float(np.pi ** (0.5 * s) / gamma_fn(0.5 * s) * inner)


@lru_cache(maxsize=None)
def _cube_power_sum(dimension, exponent, r):
    # Sum of |x|^-s over 0 < |x|_inf <= r.
    total = 0.0
    for shell in range(1, r + 1):
        sq = sq_norm(shell_points(dimension, shell)).astype(np.float64)
        total += float(np.sum(sq ** (-0.5 * exponent)))
    return total


def power_remainder(dimension, prefactor, exponent, r):
    """
    Sum of prefactor * |x|^-exponent over |x|_inf > r.

    >>> round(power_remainder(1, 1.0, 2.0, 0), 12) == round(np.pi ** 2 / 3, 12)
    True
    """
    if dimension == 1:
        return 2.0 * prefactor * float(zeta(exponent, r + 1))
    rest = epstein_zeta(dimension, exponent) - _cube_power_sum(dimension, exponent, r)
    return prefactor * max(rest, 0.0)


def remainder(k, r):
    """
    Sum of J(x) over |x|_inf > r, for r at or beyond `k.support_radius`.
    """
    if k.family in ('nearest_neighbor', 'tabulated'):
        return 0.0
    if k.family == 'power_law':
        return power_remainder(k.dimension, k.prefactor, k.exponent, r)
    if k.family == 'perturbed_nn':
        return remainder(k.base, r)
    if r >= k.radius:
        return 0.0
    return remainder(k.base, r) - tail_mass(k.base, k.radius)


def lattice_sum(term, dimension, support, tail=None, start=1):
    """
    Sums ``term(points)`` over all shells r >= `start`.

    `support` is the radius up to which every shell is summed; past it
    the loop ends at the first negligible shell or at the radius cap,
    and ``tail(r)`` (the sum over |x|_inf > r) is added.

    >>> lattice_sum(lambda p: np.where(np.abs(p).max(axis=1) == 1, 1.0, 0.0), 2, 1)
    8.0
    """
    cap = max_shell_radius(dimension)
    total = 0.0
    r = start
    last = start - 1
    while r <= cap:
        if dimension == 1:
            stop = min(r + _CHUNK_1D, cap + 1)
            radii = np.arange(r, stop, dtype=np.int64)
            pts = np.concatenate([-radii, radii]).reshape(-1, 1)
            vals = term(pts)
            shells = vals[:len(radii)] + vals[len(radii):]
        else:
            radii = [r]
            shells = [float(np.sum(term(shell_points(dimension, r))))]
        done = False
        for radius, value in zip(radii, shells):
            total += value
            last = int(radius)
            if radius > support and value < SHELL_TOL:
                done = True
                break
        if done:
            break
        r = last + 1
    if last >= cap:
        logger.debug('lattice sum reached the radius cap %d', cap)
    if tail is not None:
        total += tail(last)
    return total


def _check_tail(k):
    power = k.power_tail
    if power is not None and power[1] <= k.dimension:
        raise DivergentTail('kernel tail is not summable')


def tail_mass(k, R):
    """
    Sum of J(x) over Euclidean |x| > R.

    >>> from fastperc.kernel.kernel import power_law, truncate
    >>> round(tail_mass(power_law(1, 1.0, 3.0), 0), 6)
    2.404114
    >>> tail_mass(truncate(power_law(1, 1.0, 3.0), 4.0), 4.0)
    0.0
    """
    if R < 0:
        raise ValueError('R must be nonnegative')
    _check_tail(k)
    if k.family == 'truncated' and R >= k.radius:
        return 0.0
    d = k.dimension
    if k.family == 'power_law' and R < 1:
        return k.prefactor * epstein_zeta(d, k.exponent)
    rr = float(R) * float(R)
    # Shells with r <= R / sqrt(d) lie inside the Euclidean ball.
    start = max(1, int(np.floor(R / np.sqrt(d))))
    if start > max_shell_radius(d):
        return _continuous_tail(k, R)

    def term(points):
        vals = kernel_values(k, points)
        vals[sq_norm(points) <= rr] = 0.0
        return vals

    support = max(k.support_radius, int(np.floor(R)) + 1)
    return lattice_sum(term, d, support, tail=lambda r: remainder(k, r), start=start)


def _continuous_tail(k, R):
    # Far beyond the shell cap: integral of the power tail outside the
    # Euclidean ball of radius R.
    power = k.power_tail
    if k.family == 'truncated':
        return _continuous_tail(k.base, R) - _continuous_tail(k.base, k.radius)
    if power is None:
        return 0.0
    prefactor, s = power
    d = k.dimension
    sphere = 2.0 * np.pi ** (0.5 * d) / gamma_fn(0.5 * d)
    return prefactor * sphere * R ** (d - s) / (s - d)


@lru_cache(maxsize=None)
def total_mass(k):
    """
    Sum of J(x) over all x != 0.

    >>> from fastperc.kernel.kernel import nearest_neighbor
    >>> total_mass(nearest_neighbor(2, 1.0))
    4.0
    """
    return tail_mass(k, 0.0)


def galton_watson_bound(k):
    """
    (sum_x J(x))^-1; no infinite cluster exists for beta below it.
    Returns inf for the zero kernel.

    >>> from fastperc.kernel.kernel import nearest_neighbor
    >>> galton_watson_bound(nearest_neighbor(2, 1.0))
    0.25
    """
    mass = total_mass(k)
    return float('inf') if mass <= 0 else 1.0 / mass


def l1_distance(k1, k2):
    """
    Sum over x != 0 of |k1(x) - k2(x)|.

    >>> from fastperc.kernel.kernel import power_law
    >>> k = power_law(1, 1.0, 4.0)
    >>> l1_distance(k, k)
    0.0
    """
    if k1.dimension != k2.dimension:
        raise DimensionMismatch('kernels live in different dimensions')
    _check_tail(k1)
    _check_tail(k2)
    if k1 == k2:
        return 0.0

    def term(points):
        return np.abs(kernel_values(k1, points) - kernel_values(k2, points))

    def tail(r):
        return abs(remainder(k1, r) - remainder(k2, r))

    support = max(k1.support_radius, k2.support_radius)
    return lattice_sum(term, k1.dimension, support, tail=tail)


@lru_cache(maxsize=1024)
def open_mass(k, beta):
    """
    Sum over x != 0 of 1 - exp(-beta J(x)), the expected number of
    open edges at a vertex. The tail past the last shell is bounded by
    its linearisation beta * J.

    >>> from fastperc.kernel.kernel import nearest_neighbor
    >>> open_mass(nearest_neighbor(1, 1.0), 0.0)
    0.0
    """
    if beta == 0:
        return 0.0
    _check_tail(k)

    def term(points):
        return -np.expm1(-beta * kernel_values(k, points))

    return lattice_sum(term, k.dimension, k.support_radius,
                       tail=lambda r: beta * remainder(k, r))


if __name__ == '__main__':
    import pytest
    pytest.main([__file__])

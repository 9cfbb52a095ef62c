"""
Translation invariant, symmetric edge weights J on Z^d.

An edge {x, y} is open with probability 1 - exp(-beta J(x - y)).
Kernels are immutable values; every family canonicalises the
displacement, so all lattice symmetry images evaluate equally.
"""
import logging
from dataclasses import dataclass
from itertools import permutations, product
from typing import Optional, Tuple

import numpy as np

from fastperc.errors import (
    DimensionMismatch, DivergentTail, OverlappingSets, ZeroDisplacement
)
from fastperc.utilities.lattice import as_points, canonical, canonical_key, sq_norm


logger = logging.getLogger(__name__)

FAMILIES = (
    'power_law', 'truncated', 'nearest_neighbor', 'tabulated', 'perturbed_nn'
)


@dataclass(frozen=True)
class Kernel:
    dimension: int
    family: str
    prefactor: float = 0.0
    exponent: float = 0.0
    radius: float = 0.0
    weight: float = 0.0
    table: Tuple[Tuple[Tuple[int, ...], float], ...] = ()
    base: Optional['Kernel'] = None
    nn_bonus: float = 0.0

    def __post_init__(self):
        assert self.family in FAMILIES, self.family
        if self.dimension < 1:
            raise DimensionMismatch('dimension must be positive')

    def __call__(self, x):
        return kernel_eval(self, x)

    @property
    def power_tail(self):
        """
        (prefactor, exponent) of the pure power law that this kernel
        equals far from the origin, or None when it has finite range.
        """
        if self.family == 'power_law':
            return self.prefactor, self.exponent
        if self.family == 'perturbed_nn':
            return self.base.power_tail
        return None

    @property
    def support_radius(self):
        """
        Infinity-norm radius beyond which the kernel is either zero or
        its pure power-law tail.
        """
        if self.family in ('power_law', 'nearest_neighbor'):
            return 1
        if self.family == 'tabulated':
            return max([max(k) for k, _ in self.table] + [1])
        if self.family == 'perturbed_nn':
            return max(1, self.base.support_radius)
        return max(int(np.ceil(self.radius)), self.base.support_radius)

    def to_mapping(self, prefix=''):
        """
        Flat string mapping used by experiment configs and by the
        BoxConfig text header; nested kernels use dotted keys.

        >>> truncate(power_law(2, 1.0, 4.0), 2.0).to_mapping()['base.exponent']
        '4.0'
        """
        out = {prefix + 'family': self.family,
               prefix + 'dimension': str(self.dimension)}
        if self.family == 'power_law':
            out[prefix + 'prefactor'] = repr(float(self.prefactor))
            out[prefix + 'exponent'] = repr(float(self.exponent))
        elif self.family == 'nearest_neighbor':
            out[prefix + 'weight'] = repr(float(self.weight))
        elif self.family == 'tabulated':
            out[prefix + 'table'] = '/'.join(
                '{}:{}'.format(','.join(str(c) for c in key), repr(float(val)))
                for key, val in self.table
            )
        elif self.family == 'truncated':
            out[prefix + 'radius'] = repr(float(self.radius))
            out.update(self.base.to_mapping(prefix + 'base.'))
        else:
            out[prefix + 'nn_bonus'] = repr(float(self.nn_bonus))
            out.update(self.base.to_mapping(prefix + 'base.'))
        return out

    def spec(self):
        """
        Single-token description, round-tripped by `kernel_from_spec`.

        >>> power_law(1, 1.0, 3.0).spec()
        'family=power_law;dimension=1;prefactor=1.0;exponent=3.0'
        """
        return ';'.join('{}={}'.format(k, v) for k, v in self.to_mapping().items())


def power_law(dimension, prefactor, exponent):
    """
    J(x) = prefactor * |x|^-exponent with the Euclidean norm.

    Only integrable exponents (exponent > dimension) are representable.

    >>> power_law(2, 1.0, 4.0)((1, 0))
    1.0
    """
    if exponent <= dimension:
        raise DivergentTail(
            'power law with s={} is not summable in d={}'.format(exponent, dimension)
        )
    if prefactor <= 0:
        raise ValueError('prefactor must be positive')
    return Kernel(dimension, 'power_law', prefactor=float(prefactor),
                  exponent=float(exponent))


def nearest_neighbor(dimension, weight):
    """
    >>> nearest_neighbor(2, 0.5)((0, -1))
    0.5
    """
    if weight <= 0:
        raise ValueError('weight must be positive')
    return Kernel(dimension, 'nearest_neighbor', weight=float(weight))


def tabulated(dimension, mapping):
    """
    Finite range kernel given per displacement class. Keys may be any
    representative of their class; they are canonicalised.

    >>> k = tabulated(2, {(1, 0): 1.0, (2, 1): 0.25})
    >>> k((-1, 2))
    0.25
    """
    table = {}
    for key, value in dict(mapping).items():
        if len(key) != dimension:
            raise DimensionMismatch('table key {} is not {}-dimensional'.format(key, dimension))
        ckey = canonical_key(key)
        if not any(ckey):
            raise ZeroDisplacement('tabulated kernels cannot weight the origin')
        if value < 0:
            raise ValueError('kernel weights must be nonnegative')
        table[ckey] = float(value)
    kernel = Kernel(dimension, 'tabulated', table=tuple(sorted(table.items())))
    if not generates_lattice(kernel):
        logger.warning('tabulated kernel %s is reducible; '
                       'experiments on it are not meaningful', kernel.spec())
    return kernel


def generates_lattice(k):
    """
    True when the displacements with positive weight, together with
    all their symmetry images, generate the whole of Z^d.

    >>> generates_lattice(tabulated(2, {(1, 1): 1.0, (2, 0): 1.0}))
    False
    >>> generates_lattice(tabulated(2, {(1, 1): 1.0, (1, 0): 1.0}))
    True
    """
    if k.family != 'tabulated':
        return True
    rows = []
    for key, value in k.table:
        if value <= 0:
            continue
        for perm in set(permutations(key)):
            for signs in product((1, -1), repeat=k.dimension):
                rows.append([s * c for s, c in zip(signs, perm)])
    return _unimodular_span(rows, k.dimension)


def _unimodular_span(rows, dimension):
    # Integer row echelon form; the span is Z^d iff every pivot is a unit.
    rows = [list(r) for r in rows]
    for col in range(dimension):
        while True:
            live = [i for i in range(col, len(rows)) if rows[i][col] != 0]
            if not live:
                return False
            best = min(live, key=lambda i: abs(rows[i][col]))
            rows[col], rows[best] = rows[best], rows[col]
            pivot = rows[col]
            done = True
            for i in range(col + 1, len(rows)):
                if rows[i][col]:
                    q = rows[i][col] // pivot[col]
                    rows[i] = [a - q * b for a, b in zip(rows[i], pivot)]
                    done = done and rows[i][col] == 0
            if done:
                break
        if abs(rows[col][col]) != 1:
            return False
    return True


def truncate(k, N):
    """
    Kernel equal to `k` inside Euclidean radius `N` and zero outside.

    >>> truncate(power_law(2, 1.0, 4.0), 1.0)((1, 1))
    0.0
    """
    if N <= 0:
        raise ValueError('truncation radius must be positive')
    if k.family == 'truncated':
        return Kernel(k.dimension, 'truncated', radius=float(min(N, k.radius)),
                      base=k.base)
    return Kernel(k.dimension, 'truncated', radius=float(N), base=k)


def perturbed_nn(k, nn_bonus):
    """
    J-bar: the kernel `k` with `nn_bonus` added on nearest neighbours.

    >>> perturbed_nn(power_law(1, 1.0, 3.0), 1.0)((1,))
    2.0
    """
    if nn_bonus < 0:
        raise ValueError('nn_bonus must be nonnegative')
    return Kernel(k.dimension, 'perturbed_nn', nn_bonus=float(nn_bonus), base=k)


def kernel_values(k, points):
    """
    Vectorised J over the rows of `points`. The origin evaluates to
    zero here; `kernel_eval` is the checked scalar entry point.
    """
    pts = as_points(points, k.dimension)
    r2 = sq_norm(pts).astype(np.float64)
    if k.family == 'power_law':
        out = np.zeros(len(pts))
        nz = r2 > 0
        out[nz] = k.prefactor * r2[nz] ** (-0.5 * k.exponent)
        return out
    if k.family == 'nearest_neighbor':
        return np.where(r2 == 1, k.weight, 0.0)
    if k.family == 'truncated':
        out = kernel_values(k.base, pts)
        out[r2 > k.radius * k.radius] = 0.0
        return out
    if k.family == 'perturbed_nn':
        return kernel_values(k.base, pts) + np.where(r2 == 1, k.nn_bonus, 0.0)

    lookup = dict(k.table)
    out = np.zeros(len(pts))
    if not lookup:
        return out
    reach = max(max(key) for key in lookup)
    near = np.flatnonzero(np.abs(pts).max(axis=1) <= reach)
    for i, row in zip(near, canonical(pts[near])):
        out[i] = lookup.get(tuple(int(c) for c in row), 0.0)
    return out


def _check_displacement(k, x):
    x = np.asarray(x, dtype=np.int64).ravel()
    if len(x) != k.dimension:
        raise DimensionMismatch(
            'displacement {} is not {}-dimensional'.format(tuple(x), k.dimension)
        )
    if not x.any():
        raise ZeroDisplacement('J is not defined at the origin (no self-loops)')
    return x


def kernel_eval(k, x):
    """
    J(x) for a nonzero lattice displacement `x`.

    >>> k = power_law(2, 1.0, 4.0)
    >>> kernel_eval(k, (1, 0)), kernel_eval(k, (0, -1))
    (1.0, 1.0)
    >>> kernel_eval(truncate(k, 2.0), (3, 0))
    0.0
    """
    x = _check_displacement(k, x)
    return float(kernel_values(k, x)[0])


def open_probability(k, beta, x):
    """
    1 - exp(-beta J(x)).

    >>> round(open_probability(power_law(2, 1.0, 4.0), np.log(2), (1, 0)), 12)
    0.5
    """
    if beta < 0:
        raise ValueError('beta must be nonnegative')
    return float(-np.expm1(-beta * kernel_eval(k, x)))


def open_probabilities(k, beta, points):
    return -np.expm1(-beta * kernel_values(k, points))


def kernel_mass(k, A, B):
    """
    J(A, B): the double sum of J(x - y) over x in A and y in B.

    >>> k = power_law(1, 1.0, 4.0)
    >>> kernel_mass(k, [[0]], [[1], [2]])
    1.0625
    """
    A = as_points(A, k.dimension)
    B = as_points(B, k.dimension)
    if len(A) == 0 or len(B) == 0:
        return 0.0
    overlap = set(map(tuple, A.tolist())) & set(map(tuple, B.tolist()))
    if overlap:
        raise OverlappingSets('A and B share {}'.format(sorted(overlap)[0]))
    diffs = (A[:, None, :] - B[None, :, :]).reshape(-1, k.dimension)
    return float(kernel_values(k, diffs).sum())


_FAMILY_KEYS = {
    'power_law': {'prefactor', 'exponent'},
    'nearest_neighbor': {'weight'},
    'tabulated': {'table'},
    'truncated': {'radius'},
    'perturbed_nn': {'nn_bonus'},
}


def kernel_from_mapping(mapping, prefix=''):
    """
    Inverse of `Kernel.to_mapping`. Unknown or missing keys raise
    `ValueError`, so config validation happens before any sampling.

    >>> k = perturbed_nn(truncate(power_law(2, 1.0, 4.0), 3.0), 1.0)
    >>> kernel_from_mapping(k.to_mapping()) == k
    True
    """
    own = {key[len(prefix):]: value for key, value in mapping.items()
           if key.startswith(prefix) and '.' not in key[len(prefix):]}
    family = own.get('family')
    if family not in _FAMILY_KEYS:
        raise ValueError('unknown kernel family {!r}'.format(family))
    if 'dimension' not in own:
        raise ValueError('kernel needs a dimension')
    allowed = _FAMILY_KEYS[family] | {'family', 'dimension'}
    extra = set(own) - allowed
    missing = allowed - set(own)
    if extra or missing:
        raise ValueError('kernel keys: unexpected {}, missing {}'.format(
            sorted(extra), sorted(missing)))

    dimension = int(own['dimension'])
    if family == 'power_law':
        kernel = power_law(dimension, float(own['prefactor']), float(own['exponent']))
    elif family == 'nearest_neighbor':
        kernel = nearest_neighbor(dimension, float(own['weight']))
    elif family == 'tabulated':
        table = {}
        for item in filter(None, own['table'].split('/')):
            key, value = item.split(':')
            table[tuple(int(c) for c in key.split(','))] = float(value)
        kernel = tabulated(dimension, table)
    else:
        base = kernel_from_mapping(mapping, prefix + 'base.')
        if base.dimension != dimension:
            raise DimensionMismatch('nested kernel dimension differs')
        if family == 'truncated':
            kernel = truncate(base, float(own['radius']))
        else:
            kernel = perturbed_nn(base, float(own['nn_bonus']))

    if not prefix:
        nested = {key for key in mapping if key.count('.')}
        depth = _depth(kernel)
        stray = [key for key in nested if key.count('base.') > depth]
        if stray:
            raise ValueError('unexpected kernel keys {}'.format(sorted(stray)))
    return kernel


def _depth(kernel):
    return 0 if kernel.base is None else 1 + _depth(kernel.base)


def kernel_from_spec(spec):
    """
    >>> kernel_from_spec('family=nearest_neighbor;dimension=2;weight=1.0')
    Kernel(dimension=2, family='nearest_neighbor', prefactor=0.0, exponent=0.0, radius=0.0, weight=1.0, table=(), base=None, nn_bonus=0.0)
    """
    mapping = dict(item.split('=', 1) for item in spec.split(';') if item)
    return kernel_from_mapping(mapping)


if __name__ == '__main__':
    import pytest
    pytest.main([__file__])

"""
Result records shared by the estimators.
"""
from dataclasses import dataclass, field
from typing import Dict, Optional, Tuple

from fastperc.core.replicates import mean_stderr


@dataclass(frozen=True)
class Estimate:
    """
    A Monte Carlo (or exact) value; `stderr` is the sample standard
    deviation over `replicates` divided by sqrt(replicates).
    """
    value: float
    stderr: float
    replicates: int
    seed: Optional[int]
    method: str

    @property
    def sd(self):
        return self.stderr * self.replicates ** 0.5

    def interval(self, sigmas=4.0):
        return self.value - sigmas * self.stderr, self.value + sigmas * self.stderr

    def to_mapping(self):
        return {'value': self.value, 'stderr': self.stderr,
                'replicates': self.replicates, 'seed': self.seed, 'method': self.method}


def estimate(values, seed, method):
    """
    >>> estimate([1, 1, 1], 7, 'mc').value
    1.0
    """
    value, stderr = mean_stderr(values)
    return Estimate(value, stderr, len(values), seed, method)


@dataclass(frozen=True)
class BetaBracket:
    """
    [low, high] around the finite-size critical point. `curves` maps
    each radius to the (beta, statistic) pairs evaluated there.
    """
    low: float
    high: float
    criterion: str
    radii: Tuple[int, ...]
    gw_bound: float
    curves: Dict[int, Tuple[Tuple[float, float], ...]] = field(default_factory=dict)
    replicates: int = 0
    seed: Optional[int] = None

    def __post_init__(self):
        assert 0 <= self.low <= self.high

    @property
    def midpoint(self):
        return (self.low + self.high) / 2

    @property
    def width(self):
        return self.high - self.low

    def contains(self, beta):
        return self.low <= beta <= self.high


if __name__ == '__main__':
    import pytest
    pytest.main([__file__])

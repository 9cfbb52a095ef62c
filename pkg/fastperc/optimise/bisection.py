"""
Bisection of a monotone statistic for the parameter at which it reaches
a level.
"""
import logging


logger = logging.getLogger(__name__)


def bracket_level(statistic, low, high, level, tol):
    """
    Shrinks [low, high] around the point where the nondecreasing
    `statistic` reaches `level`, keeping statistic(low) < level <=
    statistic(high), until high - low <= tol. Returns (low, high)
    and the probed (x, statistic(x)) pairs in probe order.

    >>> bracket_level(lambda x: x, 0.0, 1.0, 0.3, 0.1)[0]
    (0.25, 0.3125)
    """
    assert low <= high and tol > 0
    probes = []
    while high - low > tol:
        mid = (low + high) / 2
        value = statistic(mid)
        probes.append((mid, value))
        logger.debug('probe %.6g -> %.6g (bracket [%.6g, %.6g])', mid, value, low, high)
        if value >= level:
            high = mid
        else:
            low = mid
    return (low, high), probes


if __name__ == '__main__':
    import pytest
    pytest.main([__file__])

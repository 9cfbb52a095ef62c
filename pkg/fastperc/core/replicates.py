"""
Replicate fan-out on derived coupling seeds, with summary statistics
over the results.
"""
import concurrent.futures
import logging

import numpy as np

from fastperc.coupling.field import replicate_seed


logger = logging.getLogger(__name__)


def map_replicates(func, replicates, seed, workers=1):
    """
    Calls ``func(index, replicate_seed(seed, index))`` for every
    replicate and returns the results ordered by index. With
    ``workers > 1`` the calls run on a thread pool; the compiled
    kernels release the GIL.

    >>> map_replicates(lambda i, s: i * i, 4, seed=1)
    [0, 1, 4, 9]
    """
    if replicates < 1:
        raise ValueError('replicates must be positive')
    seeds = [replicate_seed(seed, i) for i in range(replicates)]
    logger.debug('running %d replicates on %d worker(s)', replicates, workers)
    if workers <= 1:
        return [func(i, s) for i, s in enumerate(seeds)]
    with concurrent.futures.ThreadPoolExecutor(workers) as executor:
        return list(executor.map(func, range(replicates), seeds))


def mean_stderr(values):
    """
    (mean, sample standard deviation / sqrt(n)); the error is zero for
    a single value.

    >>> m, e = mean_stderr([1.0, 0.0, 1.0, 0.0])
    >>> m, round(e, 6)
    (0.5, 0.288675)
    """
    arr = np.asarray(values, dtype=np.float64)
    assert arr.size > 0
    if arr.size == 1:
        return float(arr[0]), 0.0
    return float(arr.mean()), float(arr.std(ddof=1) / np.sqrt(arr.size))


if __name__ == '__main__':
    import pytest
    pytest.main([__file__])

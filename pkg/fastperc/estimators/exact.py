"""
Exhaustive ground truth on tiny vertex sets: every configuration of the
at most 15 edges among 6 vertices is enumerated and weighted.
"""
import numpy as np

from fastperc.cluster.union_find import uf_find_jit, uf_union_jit
from fastperc.core.convert_to_jit import convert_to_jit
from fastperc.errors import SourceOutsideSet, TooLarge
from fastperc.kernel.kernel import open_probabilities
from fastperc.utilities.lattice import as_points, lexsort_points


MAX_ORACLE_VERTICES = 6


def connection_profile(n, edges, probs, source, targets):
    """
    P(source <-> v using only the listed edges) for every v < n, with
    edge i open independently with probability probs[i], and the
    probability that source reaches at least one vertex with `targets`
    set.
    """
    m = edges.shape[0]
    out = np.zeros(n)
    hit = 0.0
    parent = np.empty(n, np.int64)
    rank = np.empty(n, np.int64)
    size = np.empty(n, np.int64)
    for mask in range(1 << m):
        w = 1.0
        for v in range(n):
            parent[v] = v
            rank[v] = 0
            size[v] = 1
        for i in range(m):
            if (mask >> i) & 1:
                w *= probs[i]
                uf_union_jit(parent, rank, size, edges[i, 0], edges[i, 1])
            else:
                w *= 1.0 - probs[i]
        if w == 0.0:
            continue
        rs = uf_find_jit(parent, source)
        reached = False
        for v in range(n):
            if uf_find_jit(parent, v) == rs:
                out[v] += w
                if targets[v]:
                    reached = True
        if reached:
            hit += w
    return out, hit


connection_profile_jit = convert_to_jit(connection_profile)


def oracle_edges(k, beta, points):
    """
    All pairs (i < j) of `points` with their open probabilities.
    """
    n = len(points)
    pairs = np.array([(i, j) for i in range(n) for j in range(i + 1, n)],
                     dtype=np.int64).reshape(-1, 2)
    probs = open_probabilities(k, beta, points[pairs[:, 1]] - points[pairs[:, 0]]) \
        if len(pairs) else np.zeros(0)
    live = probs > 0
    return pairs[live], probs[live]


def _locate(pts, points):
    points = as_points(points, pts.shape[1])
    out = []
    for p in points:
        hit = np.flatnonzero((pts == p).all(axis=1))
        if len(hit) == 0:
            raise SourceOutsideSet('{} is not in V'.format(tuple(int(c) for c in p)))
        out.append(int(hit[0]))
    return np.array(out, dtype=np.int64)


def connection_probabilities(k, beta, V, source, targets=None):
    """
    Exact P(source <-> v within V) for every v in V (V in lexicographic
    order) and the probability that source reaches some vertex of
    `targets`. Returns (points, per-vertex probabilities, hit).
    """
    pts = lexsort_points(as_points(V, k.dimension))
    if len(pts) > MAX_ORACLE_VERTICES:
        raise TooLarge('{} vertices exceed the exhaustive limit of {}'.format(
            len(pts), MAX_ORACLE_VERTICES))
    s = _locate(pts, source)[0]
    wanted = np.zeros(len(pts), dtype=np.bool_)
    if targets is not None:
        wanted[_locate(pts, targets)] = True
    edges, probs = oracle_edges(k, beta, pts)
    profile, hit = connection_profile_jit(len(pts), edges, probs, s, wanted)
    profile[s] = 1.0
    if wanted[s]:
        hit = 1.0
    return pts, profile, float(hit)


def exact_connect_oracle(k, beta, V, x, y):
    """
    P(x <-> y within V) by enumerating every edge configuration on V.

    >>> from fastperc.kernel import power_law
    >>> p = exact_connect_oracle(power_law(1, 1.0, 4.0), np.log(2), [(0,), (1,)], (0,), (1,))
    >>> round(p, 12)
    0.5
    """
    pts, profile, _ = connection_probabilities(k, beta, V, x)
    return float(profile[_locate(pts, y)[0]])


def exact_hit_probability(k, beta, V, x, targets):
    """
    P(x is joined within V to at least one vertex of `targets`).
    """
    return connection_probabilities(k, beta, V, x, targets)[2]


if __name__ == '__main__':
    import pytest
    pytest.main([__file__])

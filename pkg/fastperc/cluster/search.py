"""
Breadth-first search over the CSR adjacency of a BoxConfig.
"""
import numpy as np

from fastperc.core.convert_to_jit import convert_to_jit


# Hop count of vertices no search reaches; never a valid distance.
UNREACHABLE = np.iinfo(np.int64).max


def bfs_levels(indptr, indices, sources, allowed, max_depth):
    """
    Hop distances from the `sources` over edges whose endpoints are
    both `allowed`, stopping after `max_depth` levels (negative for no
    limit). Unvisited vertices hold UNREACHABLE.

    >>> indptr = np.array([0, 1, 3, 4])
    >>> indices = np.array([1, 0, 2, 1])
    >>> bfs_levels(indptr, indices, np.array([0]), np.ones(3, np.bool_), -1).tolist()
    [0, 1, 2]
    """
    n = len(indptr) - 1
    dist = np.full(n, UNREACHABLE, np.int64)
    queue = np.empty(n, np.int64)
    head = 0
    tail = 0
    for s in sources:
        if allowed[s] and dist[s] != 0:
            dist[s] = 0
            queue[tail] = s
            tail += 1
    while head < tail:
        a = queue[head]
        head += 1
        if max_depth >= 0 and dist[a] >= max_depth:
            continue
        for j in range(indptr[a], indptr[a + 1]):
            b = indices[j]
            if allowed[b] and dist[b] == UNREACHABLE:
                dist[b] = dist[a] + 1
                queue[tail] = b
                tail += 1
    return dist


bfs_levels_jit = convert_to_jit(bfs_levels)


def eccentricities(indptr, indices, members, allowed):
    """
    For every vertex in `members`, the largest finite hop distance to
    another member, and that member. One BFS per member.
    """
    m = len(members)
    best = np.zeros(m, np.int64)
    other = members.copy()
    src = np.empty(1, np.int64)
    for i in range(m):
        src[0] = members[i]
        dist = bfs_levels_jit(indptr, indices, src, allowed, -1)
        for j in range(m):
            dj = dist[members[j]]
            if dj != UNREACHABLE and dj > best[i]:
                best[i] = dj
                other[i] = members[j]
    return best, other


eccentricities_jit = convert_to_jit(eccentricities)


if __name__ == '__main__':
    import pytest
    pytest.main([__file__])

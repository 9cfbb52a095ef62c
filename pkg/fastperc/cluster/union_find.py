"""
Union-find over vertex indices, compiled for the cluster labelling loops.
"""
import numpy as np

from fastperc.core.convert_to_jit import convert_to_jit


def uf_find(parent, x):
    """
    Root of `x`, compressing the path on the way.
    """
    root = x
    while parent[root] != root:
        root = parent[root]
    while parent[x] != root:
        parent[x], x = root, parent[x]
    return root


uf_find_jit = convert_to_jit(uf_find)


def uf_union(parent, rank, size, a, b):
    """
    Union by rank; `size` is only meaningful at roots.
    """
    ra = uf_find_jit(parent, a)
    rb = uf_find_jit(parent, b)
    if ra == rb:
        return
    if rank[ra] < rank[rb]:
        ra, rb = rb, ra
    parent[rb] = ra
    size[ra] += size[rb]
    if rank[ra] == rank[rb]:
        rank[ra] += 1


uf_union_jit = convert_to_jit(uf_union)


def union_edges(n, edges, mask):
    """
    Union-find over the `edges` rows whose endpoints both have
    `mask` set. Returns (parent, rank, size, roots) with `roots` the
    fully resolved root of every vertex.

    >>> e = np.array([[0, 1], [1, 2]])
    >>> union_edges(4, e, np.ones(4, np.bool_))[3].tolist()
    [0, 0, 0, 3]
    """
    parent = np.arange(n)
    rank = np.zeros(n, np.int64)
    size = np.ones(n, np.int64)
    for row in range(edges.shape[0]):
        a = edges[row, 0]
        b = edges[row, 1]
        if mask[a] and mask[b]:
            uf_union_jit(parent, rank, size, a, b)
    roots = np.empty(n, np.int64)
    for i in range(n):
        roots[i] = uf_find_jit(parent, i)
    return parent, rank, size, roots


union_edges_jit = convert_to_jit(union_edges)


if __name__ == '__main__':
    import pytest
    pytest.main([__file__])

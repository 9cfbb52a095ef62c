"""
Lattice point helpers: point arrays, norms, shells and displacement classes.
"""
import numpy as np


def as_points(points, dimension=None):
    """
    Returns `points` as a 2d int64 array with one lattice
    point per row.

    A single point is promoted to a one-row array.

    >>> as_points((1, 2))
    array([[1, 2]])
    >>> as_points([[0, 0], [1, -1]]).shape
    (2, 2)
    """
    arr = np.asarray(points, dtype=np.int64)
    if arr.ndim == 1:
        arr = arr.reshape(1, -1)
    assert arr.ndim == 2
    if dimension is not None:
        assert arr.shape[1] == dimension
    return arr


def canonical(points):
    """
    Canonical displacement class: absolute values of the
    coordinates sorted ascending. Two displacements related by
    a lattice symmetry share their canonical form.

    >>> canonical([[-3, 1], [1, 3]])
    array([[1, 3],
           [1, 3]])
    """
    return np.sort(np.abs(as_points(points)), axis=1)


def canonical_key(x):
    """
    Hashable canonical form of a single displacement.

    >>> canonical_key((0, -2, 1))
    (0, 1, 2)
    """
    return tuple(int(c) for c in canonical(x)[0])


def inf_norm(points):
    return np.abs(as_points(points)).max(axis=1)


def sq_norm(points):
    pts = as_points(points)
    return (pts * pts).sum(axis=1)


def shell_points(dimension, r):
    """
    All lattice points with infinity-norm exactly `r`.

    Built face by face so no point is repeated; the count is
    (2r+1)^d - (2r-1)^d.

    >>> shell_points(2, 1).shape
    (8, 2)
    >>> len(shell_points(3, 2))
    98
    >>> shell_points(1, 3).ravel().tolist()
    [-3, 3]
    """
    assert r >= 1
    faces = []
    full = np.arange(-r, r + 1, dtype=np.int64)
    inner = np.arange(-r + 1, r, dtype=np.int64)
    for axis in range(dimension):
        # Coordinates before `axis` stay strictly inside so that
        # edges and corners belong to exactly one face.
        ranges = [inner] * axis + [np.array([-r, r], dtype=np.int64)] \
            + [full] * (dimension - axis - 1)
        if any(len(rng) == 0 for rng in ranges):
            continue
        grid = np.meshgrid(*ranges, indexing='ij')
        faces.append(np.stack([g.ravel() for g in grid], axis=1))
    return np.concatenate(faces, axis=0)


def cube_points(dimension, r, center=None):
    """
    All lattice points of the infinity-norm ball B_r(center) in
    lexicographic order.

    >>> cube_points(2, 1).tolist()[:3]
    [[-1, -1], [-1, 0], [-1, 1]]
    """
    rng = np.arange(-r, r + 1, dtype=np.int64)
    grid = np.meshgrid(*([rng] * dimension), indexing='ij')
    pts = np.stack([g.ravel() for g in grid], axis=1)
    if center is not None:
        pts = pts + np.asarray(center, dtype=np.int64)
    return pts


def lexsort_points(points):
    """
    Sorts rows lexicographically (first coordinate most
    significant) and removes duplicates.

    >>> lexsort_points([[1, 0], [0, 1], [1, 0]]).tolist()
    [[0, 1], [1, 0]]
    """
    pts = as_points(points)
    if len(pts) == 0:
        return pts
    return np.unique(pts, axis=0)


def half_displacements(dimension, radius, extent=None):
    """
    Lexicographically positive displacements (first nonzero
    coordinate positive) with infinity-norm at most `radius`.

    Each undirected edge {x, x+v} is generated once per `v`.
    `extent` optionally caps each coordinate's absolute value.

    >>> half_displacements(1, 2).ravel().tolist()
    [1, 2]
    >>> len(half_displacements(2, 1))
    4
    """
    pts = cube_points(dimension, radius)
    if extent is not None:
        pts = pts[(np.abs(pts) <= np.asarray(extent)).all(axis=1)]
    nonzero = pts != 0
    has = nonzero.any(axis=1)
    first = np.argmax(nonzero, axis=1)
    lead = pts[np.arange(len(pts)), first]
    return pts[has & (lead > 0)]


if __name__ == '__main__':
    import pytest
    pytest.main([__file__])

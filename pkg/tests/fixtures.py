"""
Shared kernels and hand-built configurations for the test suite.
"""
from fastperc.kernel import nearest_neighbor, power_law
from fastperc.sampler import BoxConfig, box


# Weights this large make every nearest-neighbour edge open at beta >= 1e-2.
FORCED_WEIGHT = 1e3


def forced_open(dimension):
    return nearest_neighbor(dimension, FORCED_WEIGHT)


def standard_kernels(dimension=2):
    return [nearest_neighbor(dimension, 1.0), power_law(dimension, 1.0, dimension + 2.0),
            power_law(dimension, 0.5, dimension + 1.5)]


def path_config(length):
    """
    The path 0 - 1 - ... - length on the line, in B_length.
    """
    return BoxConfig.from_edges(box(1, length),
                                [((i,), (i + 1,)) for i in range(length)])


def square_config():
    """
    The unit square (0,0) - (1,0) - (1,1) - (0,1) - (0,0) in B_1.
    """
    corners = [(0, 0), (1, 0), (1, 1), (0, 1)]
    return BoxConfig.from_edges(box(2, 1), list(zip(corners, corners[1:] + corners[:1])))


def full_grid(dimension, radius):
    """
    Every nearest-neighbour edge of B_radius open.
    """
    region = box(dimension, radius)
    pts = [tuple(int(c) for c in p) for p in region.vertices()]
    inside = set(pts)
    pairs = []
    for p in pts:
        for i in range(dimension):
            q = p[:i] + (p[i] + 1,) + p[i + 1:]
            if q in inside:
                pairs.append((p, q))
    return BoxConfig.from_edges(region, pairs)

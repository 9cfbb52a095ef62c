
from fastperc.cluster.clusters import (
    ClusterForest, components, find_mpads, largest_cluster, pad_union,
    restricted_cluster,
)
from fastperc.cluster.search import UNREACHABLE, bfs_levels


__all__ = [
    'UNREACHABLE',
    'ClusterForest',
    'bfs_levels',
    'components',
    'find_mpads',
    'largest_cluster',
    'pad_union',
    'restricted_cluster',
]

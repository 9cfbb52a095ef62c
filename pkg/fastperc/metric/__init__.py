
from fastperc.metric.distance import (
    DistanceField, bfs_distances, hop_lower_bound, max_cluster_distance,
)
from fastperc.metric.proxy import (
    InfiniteClusterProxy, cell_point, chemical_ball, dhat, dhat_from, enlarged_box,
    hat_index, hat_point, make_proxy, proxy_from_points,
)
from fastperc.metric.shape import (
    MuRow, MuTable, ShapeReport, default_directions, inf_norm_table, mu_sequence,
    mu_table, shape_check,
)


__all__ = [
    'DistanceField',
    'InfiniteClusterProxy',
    'MuRow',
    'MuTable',
    'ShapeReport',
    'bfs_distances',
    'cell_point',
    'chemical_ball',
    'default_directions',
    'dhat',
    'dhat_from',
    'enlarged_box',
    'hat_index',
    'hat_point',
    'hop_lower_bound',
    'inf_norm_table',
    'make_proxy',
    'max_cluster_distance',
    'mu_sequence',
    'mu_table',
    'proxy_from_points',
    'shape_check',
]

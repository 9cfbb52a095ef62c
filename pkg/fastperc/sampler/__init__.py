
from fastperc.sampler.box import (
    Box, Rectangle, box, region_from_spec, region_spec, vertex_index, vertex_mask,
)
from fastperc.sampler.config import (
    BoxConfig, Provenance, filter_edge_length, provenance_from_mapping, restrict,
    union_configs,
)
from fastperc.sampler.sample import (
    DEFAULT_MISS_BUDGET, cutoff_radius, resample, sample_box, sample_box_pf,
)
from fastperc.sampler.text import dump, dumps, load, loads


__all__ = [
    'DEFAULT_MISS_BUDGET',
    'Box',
    'BoxConfig',
    'Provenance',
    'Rectangle',
    'box',
    'cutoff_radius',
    'dump',
    'dumps',
    'filter_edge_length',
    'load',
    'loads',
    'provenance_from_mapping',
    'region_from_spec',
    'region_spec',
    'resample',
    'restrict',
    'sample_box',
    'sample_box_pf',
    'union_configs',
    'vertex_index',
    'vertex_mask',
]


from fastperc.coupling.field import (
    OMEGA, OMEGA_PRIME, OMEGA_SECOND, CouplingField, canonical_edge, edge_open,
    edge_uniform, key_uniform, replicate_seed, union_field,
)


__all__ = [
    'OMEGA',
    'OMEGA_PRIME',
    'OMEGA_SECOND',
    'CouplingField',
    'canonical_edge',
    'edge_open',
    'edge_uniform',
    'key_uniform',
    'replicate_seed',
    'union_field',
]

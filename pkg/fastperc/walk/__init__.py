
from fastperc.walk.random_walk import WalkStats, return_frequency, walk_stats
from fastperc.walk.resistance import (
    effective_resistance, effective_resistance_dense, resistance_growth,
)


__all__ = [
    'WalkStats',
    'effective_resistance',
    'effective_resistance_dense',
    'resistance_growth',
    'return_frequency',
    'walk_stats',
]


from fastperc.optimise.bisection import bracket_level


__all__ = [
    'bracket_level',
]

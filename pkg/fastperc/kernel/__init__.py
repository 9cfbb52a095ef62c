
from fastperc.kernel.kernel import (
    Kernel, generates_lattice, kernel_eval, kernel_from_mapping, kernel_from_spec,
    kernel_mass, kernel_values, nearest_neighbor, open_probabilities,
    open_probability, perturbed_nn, power_law, tabulated, truncate,
)
from fastperc.kernel.short_edge import (
    ShortEdgeFunction, gamma_from_theta, inverse_square, make_counterexample_1d,
    short_edge_from_mapping, short_edge_function, short_edge_gap,
)
from fastperc.kernel.sums import (
    galton_watson_bound, l1_distance, open_mass, tail_mass, total_mass,
)


__all__ = [
    'Kernel',
    'ShortEdgeFunction',
    'galton_watson_bound',
    'gamma_from_theta',
    'generates_lattice',
    'inverse_square',
    'kernel_eval',
    'kernel_from_mapping',
    'kernel_from_spec',
    'kernel_mass',
    'kernel_values',
    'l1_distance',
    'make_counterexample_1d',
    'nearest_neighbor',
    'open_mass',
    'open_probabilities',
    'open_probability',
    'perturbed_nn',
    'power_law',
    'short_edge_from_mapping',
    'short_edge_function',
    'short_edge_gap',
    'tabulated',
    'tail_mass',
    'total_mass',
    'truncate',
]

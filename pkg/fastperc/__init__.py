
from fastperc.coupling.field import CouplingField
from fastperc.estimators.connection import boundary_connection_prob, theta_density
from fastperc.kernel.kernel import nearest_neighbor, power_law, tabulated, truncate
from fastperc.sampler.box import box
from fastperc.sampler.sample import sample_box, sample_box_pf
from ._version import VERSION


__all__ = [
    'CouplingField',
    'boundary_connection_prob',
    'box',
    'nearest_neighbor',
    'power_law',
    'sample_box',
    'sample_box_pf',
    'tabulated',
    'theta_density',
    'truncate',
]


__version__ = VERSION


from fastperc.estimators.betac import (
    CRITERIA, AizenmanRow, ContinuityRow, StrictComparison, aizenman_probe,
    betac_bracket, compare_strict_inequality, continuity_probe, locality_sweep,
    pc_bracket,
)
from fastperc.estimators.connection import (
    beta_model, boundary_connection_prob, connect_probability, giant_cluster_profile,
    pf_model, replicate_statistic, theta_density,
)
from fastperc.estimators.exact import (
    MAX_ORACLE_VERTICES, connection_probabilities, exact_connect_oracle,
    exact_hit_probability,
)
from fastperc.estimators.phi import PHI_TAIL_TOL, PhiValue, phi_value
from fastperc.estimators.probes import finite_detour_probe, long_distance_probe
from fastperc.estimators.records import BetaBracket, Estimate, estimate


__all__ = [
    'CRITERIA',
    'MAX_ORACLE_VERTICES',
    'PHI_TAIL_TOL',
    'AizenmanRow',
    'BetaBracket',
    'ContinuityRow',
    'Estimate',
    'PhiValue',
    'StrictComparison',
    'aizenman_probe',
    'beta_model',
    'betac_bracket',
    'boundary_connection_prob',
    'compare_strict_inequality',
    'connect_probability',
    'connection_probabilities',
    'continuity_probe',
    'estimate',
    'exact_connect_oracle',
    'exact_hit_probability',
    'finite_detour_probe',
    'giant_cluster_profile',
    'locality_sweep',
    'long_distance_probe',
    'pc_bracket',
    'pf_model',
    'phi_value',
    'replicate_statistic',
    'theta_density',
]

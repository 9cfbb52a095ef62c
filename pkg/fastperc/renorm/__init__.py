
from fastperc.renorm.directed import (
    DirectedModel, directed_model, directed_survival, transfer_matrix_survival,
)
from fastperc.renorm.exploration import (
    AccessRecord, ExplorationResult, ExplorationState, TraceRow, beta_split,
    directed_exploration, exploration_survival, steering_rectangle, verify_path,
)
from fastperc.renorm.probes import DepthPadEstimate, annulus_pad_probe, depth_no_pad_probe


__all__ = [
    'AccessRecord',
    'DepthPadEstimate',
    'DirectedModel',
    'ExplorationResult',
    'ExplorationState',
    'TraceRow',
    'annulus_pad_probe',
    'beta_split',
    'depth_no_pad_probe',
    'directed_exploration',
    'directed_model',
    'directed_survival',
    'exploration_survival',
    'steering_rectangle',
    'transfer_matrix_survival',
    'verify_path',
]


from fastperc.cli.config import ExperimentConfig, load_config, parse_config
from fastperc.cli.experiments import REGISTRY
from fastperc.cli.main import main, run_experiment


__all__ = [
    'REGISTRY',
    'ExperimentConfig',
    'load_config',
    'main',
    'parse_config',
    'run_experiment',
]

"""
Experiment configuration files.

A config is INI-style text read with `configparser`:

    [experiment]
    name = theta
    seed = 7
    replicates = 64

    [kernel]
    family = power_law
    dimension = 2
    prefactor = 1.0
    exponent = 5.0

    [model]
    kind = betaJ
    beta = 1.2

    [geometry]
    dimension = 2
    radii = 8, 16, 32

Every section and key is checked against a schema before anything is
sampled; `ConfigParse` reports the first problem found.
"""
import configparser
import math
from dataclasses import dataclass, field
from typing import Any, Dict, Optional, Tuple

from fastperc.errors import ConfigParse, UnknownExperiment
from fastperc.kernel.kernel import kernel_from_mapping
from fastperc.kernel.short_edge import short_edge_from_mapping
from fastperc.sampler.sample import DEFAULT_MISS_BUDGET


def _int_list(text):
    return tuple(int(v) for v in text.replace(',', ' ').split())


def _float_list(text):
    return tuple(float(v) for v in text.replace(',', ' ').split())


def _points(text):
    """
    '0,0 / 1,0' -> ((0, 0), (1, 0))
    """
    return tuple(tuple(int(c) for c in item.split(',')) for item in text.split('/')
                 if item.strip())


def _flag(text):
    lowered = text.strip().lower()
    if lowered in ('1', 'true', 'yes', 'on'):
        return True
    if lowered in ('0', 'false', 'no', 'off'):
        return False
    raise ValueError('not a boolean: {!r}'.format(text))


def _optional_float(text):
    return None if text.strip().lower() == 'none' else float(text)


SECTIONS = {
    'experiment': {'name': str, 'seed': int, 'replicates': int, 'workers': int},
    'model': {'kind': str, 'beta': float, 'p': str, 'near': str, 'near_radius': str,
              'gamma': str, 'exponent': str, 'miss_budget': float},
    'geometry': {'dimension': int, 'radii': _int_list},
    'output': {'directory': str},
}

_SHORT_EDGE_KEYS = ('p', 'near', 'near_radius', 'gamma', 'exponent')

ESTIMATOR_KEYS = {
    'sample': {'write_configs': _flag},
    'theta': {},
    'betac': {'criterion': str, 'tol': float, 'knee_level': float},
    'locality': {'truncations': _float_list, 'criterion': str, 'tol': float,
                 'nn_bonus': float},
    'phi': {'set': _points, 'mode': str},
    'distance': {'factor': float, 'detour_n': int, 'inner_exponent': float, 'reach': int},
    'shape': {'directions': _points, 'times': _int_list, 'eps': float, 'rule': str},
    'giant': {},
    'walk': {'horizon': int, 'tol': float},
    'renorm': {'n': int, 'm': int, 'delta': float, 'N': _optional_float, 'depth': int,
               'beta_tilde': float, 'eta': float},
    'dsb': {'rho': _float_list, 'depth': int, 'width': int},
    'depthpad': {'r': float, 'N': float, 'depths': _int_list, 'reach': int},
    'counterexample1d': {'gamma': float, 'theta': float, 'truncations': _int_list,
                         'tol': float, 'aizenman': _flag},
}

EXPERIMENTS = tuple(ESTIMATOR_KEYS)

# Experiments that never sample the percolation model.
_MODEL_FREE = ('dsb',)


@dataclass(frozen=True)
class ExperimentConfig:
    name: str
    seed: int = 0
    replicates: int = 64
    workers: int = 1
    model: str = 'betaJ'
    beta: Optional[float] = None
    kernel: Any = None
    sf: Any = None
    dimension: Optional[int] = None
    radii: Tuple[int, ...] = ()
    miss_budget: float = DEFAULT_MISS_BUDGET
    estimator: Dict[str, Any] = field(default_factory=dict)
    out_dir: str = '.'

    def option(self, key, default=None):
        return self.estimator.get(key, default)

    def provenance(self):
        """
        Columns written in front of every output row.
        """
        if self.model == 'pf' and self.sf is not None:
            spec = self.sf.spec()
        elif self.kernel is not None:
            spec = self.kernel.spec()
        else:
            spec = ''
        return {'experiment': self.name, 'seed': self.seed, 'replicates': self.replicates,
                'model': self.model, 'kernel': spec,
                'beta': '' if self.beta is None else repr(self.beta)}


def _typed(section, values, schema):
    out = {}
    for key, text in values.items():
        if key not in schema:
            raise ConfigParse('unknown key {!r} in [{}]'.format(key, section))
        try:
            out[key] = schema[key](text)
        except (TypeError, ValueError) as exc:
            raise ConfigParse('[{}] {} = {!r}: {}'.format(section, key, text, exc)) from exc
    return out


def _read(text):
    parser = configparser.ConfigParser(interpolation=None, default_section='__defaults__')
    parser.optionxform = str
    try:
        parser.read_string(text)
    except configparser.Error as exc:
        raise ConfigParse(str(exc)) from exc
    return {name: dict(parser.items(name)) for name in parser.sections()}


def parse_config(text, overrides=None):
    """
    Validates config text (plus command line `overrides` such as seed,
    workers or out_dir) and returns an ExperimentConfig.

    >>> cfg = parse_config('[experiment]\\nname = dsb\\n[estimator]\\nrho = 0.5, 0.9\\n')
    >>> cfg.name, cfg.option('rho')
    ('dsb', (0.5, 0.9))
    """
    raw = _read(text)
    unknown = set(raw) - set(SECTIONS) - {'kernel', 'estimator'}
    if unknown:
        raise ConfigParse('unknown sections {}'.format(sorted(unknown)))
    typed = {name: _typed(name, raw.get(name, {}), schema) for name, schema in SECTIONS.items()}

    experiment = typed['experiment']
    name = experiment.get('name')
    if name is None:
        raise ConfigParse('[experiment] needs a name')
    if name not in ESTIMATOR_KEYS:
        raise UnknownExperiment('unknown experiment {!r}; expected one of {}'.format(
            name, ', '.join(EXPERIMENTS)))
    estimator = _typed('estimator', raw.get('estimator', {}), ESTIMATOR_KEYS[name])

    model = typed['model']
    kind = model.get('kind', 'betaJ')
    if kind not in ('betaJ', 'pf'):
        raise ConfigParse('[model] kind must be betaJ or pf, got {!r}'.format(kind))
    geometry = typed['geometry']
    dimension = geometry.get('dimension')

    kernel = None
    if 'kernel' in raw:
        try:
            kernel = kernel_from_mapping(raw['kernel'])
        except (KeyError, ValueError) as exc:
            raise ConfigParse('[kernel] {}'.format(exc)) from exc
        if dimension is not None and kernel.dimension != dimension:
            raise ConfigParse('kernel dimension {} differs from geometry dimension {}'.format(
                kernel.dimension, dimension))
        dimension = kernel.dimension

    sf = None
    if kind == 'pf':
        mapping = {key: raw['model'][key] for key in _SHORT_EDGE_KEYS if key in raw['model']}
        if 'p' not in mapping:
            raise ConfigParse('[model] kind = pf needs p')
        mapping['dimension'] = str(dimension or 1)
        try:
            sf = short_edge_from_mapping(mapping)
        except (KeyError, ValueError) as exc:
            raise ConfigParse('[model] {}'.format(exc)) from exc
        dimension = sf.dimension
    elif any(key in model for key in _SHORT_EDGE_KEYS):
        raise ConfigParse('[model] short-edge keys need kind = pf')

    if name not in _MODEL_FREE:
        if kind == 'betaJ' and kernel is None:
            raise ConfigParse('experiment {} needs a [kernel] section'.format(name))
    beta = model.get('beta')
    if beta is not None and (beta < 0 or math.isnan(beta)):
        raise ConfigParse('[model] beta must be nonnegative')

    values = dict(
        name=name, seed=experiment.get('seed', 0), replicates=experiment.get('replicates', 64),
        workers=experiment.get('workers', 1), model=kind, beta=beta, kernel=kernel, sf=sf,
        dimension=dimension, radii=geometry.get('radii', ()),
        miss_budget=model.get('miss_budget', DEFAULT_MISS_BUDGET), estimator=estimator,
        out_dir=typed['output'].get('directory', '.'),
    )
    for key, value in (overrides or {}).items():
        if value is not None:
            values[key] = value
    if values['seed'] < 0 or values['seed'] >= 1 << 64:
        raise ConfigParse('seed must be an unsigned 64-bit integer')
    if values['replicates'] < 1 or values['workers'] < 1:
        raise ConfigParse('replicates and workers must be positive')
    return ExperimentConfig(**values)


def load_config(path, overrides=None):
    try:
        with open(path) as f:
            text = f.read()
    except OSError as exc:
        raise ConfigParse('cannot read {}: {}'.format(path, exc)) from exc
    return parse_config(text, overrides)


if __name__ == '__main__':
    import pytest
    pytest.main([__file__])

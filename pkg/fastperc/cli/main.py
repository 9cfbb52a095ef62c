"""
fastperc command line.

    fastperc --config theta.ini --seed 7 --workers 4 --out results/

writes results/<experiment>.csv and results/<experiment>.json. Exit
status is 0 on success, 2 for configuration errors and 3 when an
estimator fails.
"""
import argparse
import csv
import io
import json
import logging
import math
import os
import sys

import numpy as np

from fastperc._version import VERSION
from fastperc.cli.config import load_config
from fastperc.cli.experiments import REGISTRY
from fastperc.errors import ConfigParse, PercolationError, UnknownExperiment


logger = logging.getLogger(__name__)

EXIT_OK, EXIT_CONFIG, EXIT_ESTIMATOR = 0, 2, 3

PROVENANCE = ('experiment', 'seed', 'replicates', 'model', 'kernel', 'beta', 'streams')


def _cell(value):
    """
    >>> [_cell(v) for v in (None, True, 3, 0.1, float('inf'), np.float64(2.5))]
    ['', '1', '3', '0.1', 'inf', '2.5']
    """
    if value is None:
        return ''
    if isinstance(value, (bool, np.bool_)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return repr(float(value))
    if isinstance(value, np.integer):
        return str(int(value))
    return str(value)


def _plain(value):
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, (float, np.floating)):
        value = float(value)
        return value if math.isfinite(value) else repr(value)
    return value


def render(cfg, func, rows, summary):
    """
    (csv text, json text) for one experiment run.
    """
    provenance = cfg.provenance()
    provenance['streams'] = ','.join(str(s) for s in func.streams)
    prefix = [_cell(provenance[key]) for key in PROVENANCE]
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(PROVENANCE + func.header)
    for row in rows:
        assert len(row) == len(func.header)
        writer.writerow(prefix + [_cell(v) for v in row])
    document = {'provenance': provenance, 'header': list(func.header),
                'rows': [dict(zip(func.header, _plain(list(row)))) for row in rows],
                'summary': summary}
    return buffer.getvalue(), json.dumps(_plain(document), indent=2, sort_keys=True) + '\n'


def run_experiment(cfg):
    """
    Runs the configured experiment and writes its CSV and JSON files;
    returns their paths.
    """
    func = REGISTRY[cfg.name]
    logger.info('running %s with seed %d, %d replicates on %d worker(s)', cfg.name,
                cfg.seed, cfg.replicates, cfg.workers)
    rows, summary = func(cfg)
    table, document = render(cfg, func, rows, summary)
    os.makedirs(cfg.out_dir, exist_ok=True)
    paths = (os.path.join(cfg.out_dir, cfg.name + '.csv'),
             os.path.join(cfg.out_dir, cfg.name + '.json'))
    for path, text in zip(paths, (table, document)):
        with open(path, 'w', newline='') as fh:
            fh.write(text)
    logger.info('wrote %s', ', '.join(paths))
    return paths


def build_parser():
    parser = argparse.ArgumentParser(
        prog='fastperc', description='Long-range percolation experiments.')
    parser.add_argument('--config', help='experiment config file')
    parser.add_argument('--seed', type=int, help='base seed (unsigned 64-bit)')
    parser.add_argument('--workers', type=int, help='replicate worker threads')
    parser.add_argument('--out', help='output directory')
    parser.add_argument('--list', action='store_true', help='list the experiments and exit')
    parser.add_argument('--log-level', default='WARNING',
                        choices=('DEBUG', 'INFO', 'WARNING', 'ERROR'))
    parser.add_argument('-v', '--verbose', action='store_true', help='same as --log-level INFO')
    parser.add_argument('--version', action='version', version=VERSION)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    logging.basicConfig(level='INFO' if args.verbose else args.log_level,
                        format='%(asctime)s %(name)s %(levelname)s %(message)s')
    if args.list:
        for name, func in REGISTRY.items():
            print('{:<18} {}'.format(name, ', '.join(func.header)))
        return EXIT_OK
    if args.config is None:
        print('fastperc: --config is required', file=sys.stderr)
        return EXIT_CONFIG
    try:
        cfg = load_config(args.config, {'seed': args.seed, 'workers': args.workers,
                                        'out_dir': args.out})
    except (ConfigParse, UnknownExperiment) as exc:
        logger.error('%s', exc)
        print('fastperc: {}'.format(exc), file=sys.stderr)
        return EXIT_CONFIG
    try:
        run_experiment(cfg)
    except ConfigParse as exc:
        print('fastperc: {}'.format(exc), file=sys.stderr)
        return EXIT_CONFIG
    except (PercolationError, ValueError) as exc:
        logger.error('%s failed: %s: %s', cfg.name, type(exc).__name__, exc)
        print('fastperc: {}: {}'.format(type(exc).__name__, exc), file=sys.stderr)
        return EXIT_ESTIMATOR
    return EXIT_OK


if __name__ == '__main__':
    sys.exit(main())

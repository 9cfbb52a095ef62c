import csv
import json

from fastperc.cli import REGISTRY, main, parse_config, run_experiment
from fastperc.cli.main import EXIT_CONFIG, EXIT_ESTIMATOR, EXIT_OK, PROVENANCE


DSB = """
[experiment]
name = dsb
seed = 11
replicates = 200

[estimator]
rho = 0.5, 0.9
depth = 6
width = 3
"""

ZERO_KERNEL = """
[experiment]
name = betac
replicates = 4

[kernel]
family = tabulated
dimension = 2
table =
"""

THETA = """
[experiment]
name = theta
replicates = 3

[kernel]
family = nearest_neighbor
dimension = 2
weight = 1000.0

[model]
beta = 1.0

[geometry]
radii = 2, 3
"""


def write(tmp_path, text, name='run.ini'):
    path = tmp_path / name
    path.write_text(text)
    return str(path)


def test_dsb_runs_are_byte_identical(tmp_path):
    config = write(tmp_path, DSB)
    assert main(['--config', config, '--out', str(tmp_path / 'a')]) == EXIT_OK
    assert main(['--config', config, '--out', str(tmp_path / 'b')]) == EXIT_OK
    first = (tmp_path / 'a' / 'dsb.csv').read_bytes()
    assert first == (tmp_path / 'b' / 'dsb.csv').read_bytes()
    assert (tmp_path / 'a' / 'dsb.json').read_bytes() == \
        (tmp_path / 'b' / 'dsb.json').read_bytes()


def test_csv_layout(tmp_path):
    config = write(tmp_path, DSB)
    main(['--config', config, '--out', str(tmp_path)])
    with open(str(tmp_path / 'dsb.csv'), newline='') as fh:
        rows = list(csv.reader(fh))
    assert tuple(rows[0]) == PROVENANCE + REGISTRY['dsb'].header
    assert len(rows) == 3
    record = dict(zip(rows[0], rows[1]))
    assert record['experiment'] == 'dsb'
    assert record['seed'] == '11'
    assert record['streams'] == '8'
    assert record['depth'] == '6'
    assert 0.0 <= float(record['mc']) <= 1.0


def test_seed_override_changes_the_output(tmp_path):
    config = write(tmp_path, DSB)
    main(['--config', config, '--out', str(tmp_path / 'a')])
    main(['--config', config, '--out', str(tmp_path / 'b'), '--seed', '12'])
    summary = json.loads((tmp_path / 'b' / 'dsb.json').read_text())
    assert summary['provenance']['seed'] == 12
    assert (tmp_path / 'a' / 'dsb.csv').read_text() != (tmp_path / 'b' / 'dsb.csv').read_text()


def test_theta_run(tmp_path):
    cfg = parse_config(THETA, {'out_dir': str(tmp_path)})
    csv_path, json_path = run_experiment(cfg)
    with open(json_path) as fh:
        document = json.load(fh)
    assert [row['n'] for row in document['rows']] == [2, 3]
    assert all(row['value'] == 1.0 for row in document['rows'])
    assert document['summary']['largest_radius_density'] == 1.0


def test_unknown_experiment_is_a_config_error(tmp_path):
    config = write(tmp_path, DSB.replace('name = dsb', 'name = teleport'))
    assert main(['--config', config]) == EXIT_CONFIG


def test_missing_config(tmp_path):
    assert main([]) == EXIT_CONFIG
    assert main(['--config', str(tmp_path / 'nothing.ini')]) == EXIT_CONFIG


def test_runtime_config_error(tmp_path):
    config = write(tmp_path, THETA.replace('[model]\nbeta = 1.0\n', ''))
    assert main(['--config', config, '--out', str(tmp_path)]) == EXIT_CONFIG


def test_zero_kernel_fails_the_estimator(tmp_path):
    config = write(tmp_path, ZERO_KERNEL)
    assert main(['--config', config, '--out', str(tmp_path)]) == EXIT_ESTIMATOR
    assert not (tmp_path / 'betac.csv').exists()


def test_list(capsys):
    assert main(['--list']) == EXIT_OK
    listed = capsys.readouterr().out.split('\n')
    assert [line.split()[0] for line in listed if line] == list(REGISTRY)


if __name__ == '__main__':
    import pytest
    pytest.main([__file__])

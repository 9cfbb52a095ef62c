from pytest import raises

from fastperc.coupling import CouplingField
from fastperc.kernel import power_law
from fastperc.sampler import BoxConfig, Rectangle, box, dump, dumps, load, loads, sample_box


def test_sampled_config_survives_the_text_format(tmp_path):
    cfg = sample_box(power_law(2, 1.0, 3.5), 1.0, box(2, 4), CouplingField(12))
    path = tmp_path / 'cfg.txt'
    dump(cfg, str(path))
    back = load(str(path))
    assert back.same_edges(cfg)
    assert back.provenance == cfg.provenance


def test_empty_config_and_rectangles():
    cfg = BoxConfig.from_edges(Rectangle((0, 5), (2, 9)), [])
    back = loads(dumps(cfg))
    assert back.region == cfg.region
    assert back.n_edges == 0


def test_rejects_foreign_text():
    with raises(ValueError):
        loads('hello\n')


if __name__ == '__main__':
    import pytest
    pytest.main([__file__])

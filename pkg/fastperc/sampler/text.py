"""
Plain text format for BoxConfigs.

The first line is a header of space separated ``key=value`` tokens
(region, dimension and the provenance); every further line is one open
edge written as two comma separated lattice points.
"""
import numpy as np

from fastperc.sampler.box import region_from_spec, region_spec
from fastperc.sampler.config import BoxConfig, provenance_from_mapping


MAGIC = '# fastperc-boxconfig'


def dumps(cfg):
    """
    >>> from fastperc.sampler.box import box
    >>> cfg = BoxConfig.from_edges(box(1, 2), [((0,), (2,))])
    >>> print(dumps(cfg).splitlines()[1])
    0 2
    """
    header = {'region': region_spec(cfg.region), 'dimension': str(cfg.region.dimension)}
    header.update(cfg.provenance.to_mapping())
    lines = [MAGIC + ' ' + ' '.join('{}={}'.format(k, v) for k, v in header.items())]
    for a, b in cfg.edge_points():
        lines.append('{} {}'.format(','.join(map(str, a)), ','.join(map(str, b))))
    return '\n'.join(lines) + '\n'


def loads(text):
    lines = text.splitlines()
    if not lines or not lines[0].startswith(MAGIC):
        raise ValueError('not a fastperc BoxConfig')
    header = dict(tok.split('=', 1) for tok in lines[0][len(MAGIC):].split())
    region = region_from_spec(header.pop('region'))
    dimension = int(header.pop('dimension'))
    assert dimension == region.dimension
    provenance = provenance_from_mapping(header)
    pairs = []
    for line in lines[1:]:
        if not line.strip():
            continue
        a, b = line.split()
        pairs.append((tuple(int(c) for c in a.split(',')),
                      tuple(int(c) for c in b.split(','))))
    if not pairs:
        return BoxConfig(region, np.empty((0, 2), dtype=np.int64), provenance)
    return BoxConfig.from_edges(region, pairs, provenance)


def dump(cfg, path):
    with open(path, 'w') as fh:
        fh.write(dumps(cfg))


def load(path):
    with open(path) as fh:
        return loads(fh.read())


if __name__ == '__main__':
    import pytest
    pytest.main([__file__])

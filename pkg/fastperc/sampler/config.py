"""
BoxConfig: the open-edge graph of a percolation configuration on a
finite region, with the provenance needed to regenerate it.
"""
from dataclasses import dataclass, field, replace
from functools import cached_property
from typing import Optional, Tuple

import numpy as np
from scipy import sparse

from fastperc.utilities.lattice import as_points


@dataclass(frozen=True)
class Provenance:
    model: str = 'fixture'
    kernel: str = ''
    beta: Optional[float] = None
    seed: Optional[int] = None
    streams: Tuple[int, ...] = ()
    miss_budget: Optional[float] = None
    cutoff: Optional[int] = None
    miss_bound: float = 0.0
    max_length: Optional[int] = None

    def to_mapping(self):
        out = {'model': self.model, 'kernel': self.kernel}
        for name in ('beta', 'seed', 'miss_budget', 'cutoff', 'miss_bound', 'max_length'):
            value = getattr(self, name)
            out[name] = 'none' if value is None else repr(value)
        out['streams'] = ','.join(str(s) for s in self.streams)
        return out


def _parse_optional(text, kind):
    return None if text == 'none' else kind(text)


def provenance_from_mapping(mapping):
    return Provenance(
        model=mapping['model'],
        kernel=mapping['kernel'],
        beta=_parse_optional(mapping['beta'], float),
        seed=_parse_optional(mapping['seed'], int),
        streams=tuple(int(s) for s in mapping['streams'].split(',') if s),
        miss_budget=_parse_optional(mapping['miss_budget'], float),
        cutoff=_parse_optional(mapping['cutoff'], int),
        miss_bound=float(mapping['miss_bound']),
        max_length=_parse_optional(mapping['max_length'], int),
    )


def _normalise_edges(edges):
    edges = np.asarray(edges, dtype=np.int64).reshape(-1, 2)
    if len(edges) == 0:
        return edges
    edges = np.sort(edges, axis=1)
    edges = edges[edges[:, 0] != edges[:, 1]]
    return np.unique(edges, axis=0)


@dataclass(frozen=True, eq=False)
class BoxConfig:
    """
    `edges` holds one row (i, j), i < j, per open edge, as row-major
    vertex indices of `region`, sorted and without repeats.
    """
    region: object
    edges: np.ndarray
    provenance: Provenance = field(default_factory=Provenance)

    def __post_init__(self):
        object.__setattr__(self, 'edges', _normalise_edges(self.edges))
        if len(self.edges):
            assert self.edges.min() >= 0 and self.edges.max() < self.region.volume

    @classmethod
    def from_edges(cls, region, pairs, provenance=None):
        """
        Builds a configuration from explicit endpoint pairs, for
        fixtures and tests.

        >>> from fastperc.sampler.box import box
        >>> cfg = BoxConfig.from_edges(box(1, 2), [((0,), (1,)), ((1,), (2,))])
        >>> cfg.n_edges, cfg.degree().tolist()
        (2, [0, 0, 1, 2, 1])
        """
        pairs = list(pairs)
        if not pairs:
            return cls(region, np.empty((0, 2), dtype=np.int64), provenance or Provenance())
        a = region.index(as_points([p[0] for p in pairs], region.dimension))
        b = region.index(as_points([p[1] for p in pairs], region.dimension))
        return cls(region, np.stack([a, b], axis=1), provenance or Provenance())

    @property
    def n_vertices(self):
        return self.region.volume

    @property
    def n_edges(self):
        return len(self.edges)

    @cached_property
    def adjacency(self):
        """
        Symmetric CSR matrix; row i lists the open neighbours of i in
        increasing order.
        """
        n = self.n_vertices
        rows = np.concatenate([self.edges[:, 0], self.edges[:, 1]])
        cols = np.concatenate([self.edges[:, 1], self.edges[:, 0]])
        data = np.ones(len(rows), dtype=np.int8)
        adj = sparse.csr_matrix((data, (rows, cols)), shape=(n, n))
        adj.sort_indices()
        return adj

    @property
    def indptr(self):
        return self.adjacency.indptr.astype(np.int64)

    @property
    def indices(self):
        return self.adjacency.indices.astype(np.int64)

    def neighbors(self, i):
        adj = self.adjacency
        return adj.indices[adj.indptr[i]:adj.indptr[i + 1]]

    def degree(self):
        return np.diff(self.adjacency.indptr)

    def edge_points(self):
        """
        (E, 2, d) endpoint coordinates.
        """
        return self.region.coords(self.edges)

    def edge_lengths(self):
        """
        Infinity-norm length of each open edge.
        """
        pts = self.edge_points()
        if len(pts) == 0:
            return np.zeros(0, dtype=np.int64)
        return np.abs(pts[:, 1] - pts[:, 0]).max(axis=1)

    def with_edges(self, edges, **changes):
        return BoxConfig(self.region, edges, replace(self.provenance, **changes))

    def same_edges(self, other):
        return self.region == other.region and np.array_equal(self.edges, other.edges)


def filter_edge_length(cfg, N):
    """
    omega_{<=N}: keeps the open edges of infinity-norm length at most N.
    """
    keep = cfg.edge_lengths() <= N
    limit = N if cfg.provenance.max_length is None else min(N, cfg.provenance.max_length)
    return cfg.with_edges(cfg.edges[keep], max_length=int(limit))


def union_configs(*configs):
    """
    Edge union of configurations on one region; with independent
    streams at beta and alpha this is distributed as omega_{alpha+beta}.
    """
    region = configs[0].region
    assert all(c.region == region for c in configs)
    edges = np.concatenate([c.edges for c in configs], axis=0)
    streams = tuple(s for c in configs for s in c.provenance.streams)
    return BoxConfig(region, edges, replace(configs[0].provenance, model='union',
                                            streams=streams))


def restrict(cfg, mask):
    """
    Keeps the edges with both endpoints in the vertex `mask`.
    """
    if len(cfg.edges) == 0:
        return cfg
    keep = mask[cfg.edges[:, 0]] & mask[cfg.edges[:, 1]]
    return cfg.with_edges(cfg.edges[keep])


if __name__ == '__main__':
    import pytest
    pytest.main([__file__])

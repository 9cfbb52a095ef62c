"""
Three-stream directed exploration of the truncated configuration.

Quadrant vertex u stands for the box B_n(8nu) (u lives in the first
two coordinates). From an active u the exploration tries to steer
into B_n(8n(u + e_i)) through the rectangle

    M_i^u = 8nu + {-3n..3n}^{i-1} x {-3n..11n} x {-3n..3n}^{d-i},

bridging from the anchor set R of u with one edge of the sprinkled
stream (omega' for i = 1, omega'' for i = 2) and growing the result in
omega_{beta-tilde} inside M_i^u minus R. The step succeeds when that
set contains an open m-pad of B_n(8n(u + e_i)).

Configurations are drawn lazily per rectangle and stream from the
shared coupling fields, so overlapping rectangles agree on every edge.
Every edge drawn lies in some M_i^u, hence has infinity length at most
14n.
"""
import logging
import math
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

import numpy as np

from fastperc.cluster.clusters import find_mpads
from fastperc.cluster.search import UNREACHABLE, bfs_levels_jit
from fastperc.core.replicates import map_replicates
from fastperc.coupling.field import OMEGA, OMEGA_PRIME, OMEGA_SECOND, CouplingField, edge_open
from fastperc.errors import GeometryInfeasible, SplitInvalid
from fastperc.estimators.records import estimate
from fastperc.kernel.kernel import truncate
from fastperc.sampler.box import Rectangle, box, vertex_mask
from fastperc.sampler.config import BoxConfig
from fastperc.sampler.sample import DEFAULT_MISS_BUDGET, sample_box
from fastperc.utilities.lattice import as_points


logger = logging.getLogger(__name__)

# Streams each phase may read.
PHASE_STREAMS = {'origin': (OMEGA,), 'step1': (OMEGA, OMEGA_PRIME),
                 'step2': (OMEGA, OMEGA_SECOND)}


def beta_split(beta, beta_tilde=None, eta=None):
    """
    (beta-tilde, eta) with beta-tilde + 2 eta = beta; defaults 0.75 beta
    and 0.125 beta.

    >>> beta_split(1.0)
    (0.75, 0.125)
    """
    beta_tilde = 0.75 * beta if beta_tilde is None else float(beta_tilde)
    eta = (beta - beta_tilde) / 2 if eta is None else float(eta)
    if beta_tilde < 0 or eta < 0:
        raise SplitInvalid('beta-tilde and eta must be nonnegative')
    if not math.isclose(beta_tilde + 2 * eta, beta, rel_tol=1e-12, abs_tol=1e-12):
        raise SplitInvalid('beta-tilde + 2 eta = {} differs from beta = {}'.format(
            beta_tilde + 2 * eta, beta))
    return beta_tilde, eta


def check_geometry(k, n, m, N):
    if k.dimension < 2:
        raise GeometryInfeasible('the exploration needs d >= 2')
    if n < 1 or m < 0 or m > n:
        raise GeometryInfeasible('need n >= 1 and 0 <= m <= n, got n={}, m={}'.format(n, m))
    if N is not None and not 0 < N <= 14 * n:
        raise GeometryInfeasible('need 0 < N <= 14n, got N={}'.format(N))


def lift(u, dimension):
    """
    Quadrant vertex as a point of Z^d.
    """
    out = np.zeros(dimension, np.int64)
    out[:2] = u
    return out


def block_center(u, n, dimension):
    return 8 * n * lift(u, dimension)


def steering_rectangle(u, i, n, dimension):
    """
    M_i^u for i in {1, 2}.

    >>> steering_rectangle((0, 0), 1, 1, 2)
    Rectangle(lo=(-3, -3), hi=(11, 3))
    """
    c = block_center(u, n, dimension)
    lo = c - 3 * n
    hi = c + 3 * n
    hi[i - 1] = c[i - 1] + 11 * n
    return Rectangle(tuple(int(x) for x in lo), tuple(int(x) for x in hi))


def _within(points, center, radius):
    if len(points) == 0:
        return points
    return points[(np.abs(points - center) <= radius).all(axis=1)]


@dataclass(frozen=True)
class AccessRecord:
    level: int
    phase: str
    stream: int
    rectangle: Rectangle


@dataclass(frozen=True)
class TraceRow:
    level: int
    active: int
    blocks_sampled: int
    edges_drawn: int


class LazySampler:
    """
    Draws omega_{beta-tilde}, omega'_eta and omega''_eta on demand,
    one rectangle at a time, and logs every access.
    """

    def __init__(self, kernel, seed, rates, miss_budget=DEFAULT_MISS_BUDGET):
        self.kernel = kernel
        self.seed = seed
        self.rates = rates
        self.miss_budget = miss_budget
        self.cache = {}
        self.log = []
        self.blocks = 0
        self.edges = 0

    def draw(self, level, phase, stream, rect):
        assert stream in PHASE_STREAMS[phase]
        self.log.append(AccessRecord(level, phase, stream, rect))
        key = (stream, rect)
        if key not in self.cache:
            cfg = sample_box(self.kernel, self.rates[stream], rect,
                             CouplingField(self.seed, stream), self.miss_budget)
            self.cache[key] = cfg
            self.blocks += 1
            self.edges += cfg.n_edges
        return self.cache[key]

    def counters(self):
        out = self.blocks, self.edges
        self.blocks = 0
        self.edges = 0
        return out

    def union(self):
        """
        omega = the union of every configuration drawn, on the
        rectangle covering them all.
        """
        rects = [rect for _, rect in self.cache]
        lo = tuple(int(x) for x in np.min([r.lo for r in rects], axis=0))
        hi = tuple(int(x) for x in np.max([r.hi for r in rects], axis=0))
        region = Rectangle(lo, hi)
        edges = [region.index(cfg.edge_points().reshape(-1, region.dimension)).reshape(-1, 2)
                 for cfg in self.cache.values() if cfg.n_edges]
        if not edges:
            return BoxConfig(region, np.empty((0, 2), np.int64))
        return BoxConfig(region, np.concatenate(edges))


@dataclass
class ExplorationState:
    """
    Active sets per level with their anchor sets R_1^u (points of
    B_3n(8nu)) and the open m-pad that activated each vertex.
    """
    n: int
    m: int
    N: Optional[float]
    beta: float
    beta_tilde: float
    eta: float
    active: List[List[Tuple[int, int]]] = field(default_factory=list)
    anchors: Dict[Tuple[int, int], np.ndarray] = field(default_factory=dict)
    pads: Dict[Tuple[int, int], Tuple[int, ...]] = field(default_factory=dict)
    dead: set = field(default_factory=set)
    access: List[AccessRecord] = field(default_factory=list)
    trace: List[TraceRow] = field(default_factory=list)

    @property
    def survival_depth(self):
        """
        Largest k with A_k nonempty; -1 when A_0 is empty.
        """
        return max((k for k, A in enumerate(self.active) if A), default=-1)


@dataclass(frozen=True)
class ExplorationResult:
    survival_depth: int
    trace: Tuple[TraceRow, ...]
    state: ExplorationState
    path: Optional[np.ndarray]
    verified: bool


def _steer(sampler, level, phase, stream, u, i, anchor, n, m, dimension):
    """
    One steering attempt from u towards u + e_i. Returns (X, pad center
    or None) where X holds the points reached in omega_{beta-tilde}
    inside M_i^u minus the anchor from one sprinkled edge out of the
    anchor.
    """
    rect = steering_rectangle(u, i, n, dimension)
    child = (u[0] + (i == 1), u[1] + (i == 2))
    base = sampler.draw(level, phase, OMEGA, rect)
    sprinkle = sampler.draw(level, phase, stream, rect)

    in_anchor = vertex_mask(rect, anchor)
    e = sprinkle.edges
    plus = np.zeros(rect.volume, np.bool_)
    if len(e):
        a, b = in_anchor[e[:, 0]], in_anchor[e[:, 1]]
        plus[e[a & ~b, 1]] = True
        plus[e[b & ~a, 0]] = True
    if not plus.any():
        return np.empty((0, dimension), np.int64), None

    hops = bfs_levels_jit(base.indptr, base.indices, np.flatnonzero(plus), ~in_anchor, -1)
    reached = hops != UNREACHABLE
    target = box(dimension, n, tuple(int(c) for c in block_center(child, n, dimension)))
    pads = find_mpads(base, reached & vertex_mask(rect, target), m)
    points = rect.coords(np.flatnonzero(reached))
    if len(pads) == 0:
        return points, None
    return points, tuple(int(c) for c in pads[0])


def _origin(sampler, m, dimension):
    rect = box(dimension, m)
    if m == 0:
        return rect.vertices()
    base = sampler.draw(0, 'origin', OMEGA, rect)
    if len(find_mpads(base, None, m)) == 0:
        return None
    return rect.vertices()


def _replay_path(union, sources, target):
    """
    A shortest path in `union` from the source points to `target`, as
    points, or None.
    """
    region = union.region
    src = region.index(sources)
    hops = bfs_levels_jit(union.indptr, union.indices, src,
                          np.ones(union.n_vertices, np.bool_), -1)
    at = int(region.index(target)[0])
    if hops[at] == UNREACHABLE:
        return None
    path = [at]
    while hops[at] > 0:
        nbrs = union.neighbors(at)
        at = int(nbrs[hops[nbrs] == hops[at] - 1].min())
        path.append(at)
    return region.coords(np.array(path[::-1], np.int64))


def verify_path(path, k, n, m, seed, rates, N=None):
    """
    Replays `path` edge by edge against the coupling fields: it must
    start in B_m(0) and every step must be open in omega_{beta-tilde},
    omega'_eta or omega''_eta with infinity length at most 14n.
    """
    path = as_points(path, k.dimension)
    if np.abs(path[0]).max() > m:
        return False
    kernel = k if N is None else truncate(k, N)
    fields = [CouplingField(seed, s) for s in (OMEGA, OMEGA_PRIME, OMEGA_SECOND)]
    for a, b in zip(path[:-1], path[1:]):
        if np.abs(b - a).max() > 14 * n:
            return False
        if not any(edge_open(f, (a, b), rates[f.stream_id], kernel) for f in fields):
            return False
    return True


def directed_exploration(k, beta, n, m, N, depth, seed, beta_tilde=None, eta=None,
                         miss_budget=DEFAULT_MISS_BUDGET, certify=True):
    """
    Runs the exploration to level `depth` (or until A_k is empty) and,
    when `certify` is set, replays one omega-open path from B_m(0) to
    the activating pad of the first vertex of the deepest level.

    `N` truncates the kernel (Euclidean radius, at most 14n); None
    keeps it whole.
    """
    check_geometry(k, n, m, N)
    beta_tilde, eta = beta_split(beta, beta_tilde, eta)
    d = k.dimension
    kernel = k if N is None else truncate(k, N)
    rates = {OMEGA: beta_tilde, OMEGA_PRIME: eta, OMEGA_SECOND: eta}
    sampler = LazySampler(kernel, seed, rates, miss_budget)
    state = ExplorationState(n, m, N, float(beta), beta_tilde, eta)

    origin = _origin(sampler, m, d)
    if origin is None:
        state.active.append([])
    else:
        state.active.append([(0, 0)])
        state.anchors[(0, 0)] = origin
        state.pads[(0, 0)] = tuple([0] * d)
    state.trace.append(TraceRow(0, len(state.active[0]), *sampler.counters()))

    for level in range(1, depth + 1):
        parents = sorted(state.active[level - 1])
        if not parents:
            break
        found = {}
        declared = set()
        reached = {}
        for u in parents:
            child = (u[0] + 1, u[1])
            declared.add(child)
            X, pad = _steer(sampler, level, 'step1', OMEGA_PRIME, u, 1,
                            state.anchors[u], n, m, d)
            reached[u] = X
            if pad is None:
                state.dead.add(child)
            elif child not in found:
                found[child] = (_within(X, block_center(child, n, d), 3 * n), pad)
        for u in parents:
            child = (u[0], u[1] + 1)
            if child in declared:
                continue
            declared.add(child)
            center = block_center(u, n, d)
            anchor = _within(np.unique(np.concatenate([state.anchors[u], reached[u]]), axis=0),
                             center, 3 * n)
            X, pad = _steer(sampler, level, 'step2', OMEGA_SECOND, u, 2, anchor, n, m, d)
            if pad is None:
                state.dead.add(child)
            else:
                found[child] = (_within(X, block_center(child, n, d), 3 * n), pad)
        for child, (anchor, pad) in found.items():
            state.anchors[child] = anchor
            state.pads[child] = pad
        state.active.append(sorted(found))
        state.trace.append(TraceRow(level, len(found), *sampler.counters()))
        logger.debug('level %d: %d active', level, len(found))

    state.access.extend(sampler.log)
    path, verified = None, False
    deepest = state.survival_depth
    if certify and deepest >= 0:
        target = state.pads[state.active[deepest][0]]
        if deepest == 0:
            path = as_points(target)
        else:
            path = _replay_path(sampler.union(), origin, target)
        verified = path is not None and verify_path(path, k, n, m, seed, rates, N)
        logger.info('exploration reached level %d; path of %s vertices verified: %s',
                    deepest, None if path is None else len(path), verified)
    return ExplorationResult(deepest, tuple(state.trace), state, path, verified)


def exploration_survival(k, beta, n, m, N, depth, replicates, seed, beta_tilde=None,
                         eta=None, workers=1, miss_budget=DEFAULT_MISS_BUDGET):
    """
    Estimate of P(A_depth is nonempty) over replicate seeds.
    """
    def run(index, rseed):
        result = directed_exploration(k, beta, n, m, N, depth, rseed, beta_tilde, eta,
                                      miss_budget, certify=False)
        return result.survival_depth == depth

    return estimate(map_replicates(run, replicates, seed, workers), seed,
                    'mc-exploration')


if __name__ == '__main__':
    import pytest
    pytest.main([__file__])

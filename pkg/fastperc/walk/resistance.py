"""
Effective resistance between a vertex and a grounded vertex set, with
unit conductance on every open edge.
"""
import inspect
import logging

import numpy as np
from scipy import sparse
from scipy.sparse import linalg as splinalg

from fastperc.cluster.search import UNREACHABLE, bfs_levels_jit
from fastperc.errors import Disconnected
from fastperc.sampler.box import box, vertex_index, vertex_mask


logger = logging.getLogger(__name__)

# scipy renamed the relative tolerance of cg from `tol` to `rtol`.
_CG_TOL = 'rtol' if 'rtol' in inspect.signature(splinalg.cg).parameters else 'tol'


def _dirichlet_system(cfg, center, boundary):
    """
    (center index, interior indices U, L_UU, A_{U,center}) where U is
    every vertex other than the center reachable from it without
    entering the boundary.
    """
    grounded = vertex_mask(cfg.region, boundary)
    c = vertex_index(cfg.region, center)
    if grounded[c]:
        raise ValueError('center lies in the boundary set')
    hops = bfs_levels_jit(cfg.indptr, cfg.indices, np.array([c], np.int64), ~grounded, -1)
    inside = hops != UNREACHABLE
    adj = cfg.adjacency.astype(np.float64)
    if adj[inside][:, grounded].nnz == 0:
        raise Disconnected('{} is not connected to the boundary'.format(tuple(center)))
    inside[c] = False
    interior = np.flatnonzero(inside)
    deg = np.asarray(adj.sum(axis=1)).ravel()
    sub = adj[interior][:, interior]
    lap = (sparse.diags(deg[interior]) - sub).tocsr()
    rhs = np.asarray(adj[interior][:, [c]].todense()).ravel()
    return c, interior, lap, rhs, deg


def _current(cfg, c, interior, phi, deg):
    nbrs = cfg.neighbors(c)
    pos = np.searchsorted(interior, nbrs)
    hit = pos < len(interior)
    hit[hit] = interior[pos[hit]] == nbrs[hit]
    return deg[c] - phi[pos[hit]].sum()


def effective_resistance(cfg, center, boundary, tol=1e-8, maxiter=None):
    """
    Potential 1 at `center` and 0 on `boundary`; the interior potential
    solves the Dirichlet problem by conjugate gradients preconditioned
    by the inverse degree. Returns 1 / (current out of `center`).

    >>> from fastperc.sampler import BoxConfig, box
    >>> cfg = BoxConfig.from_edges(box(1, 2), [((0,), (1,)), ((1,), (2,))])
    >>> round(effective_resistance(cfg, (0,), [(2,)]), 6)
    2.0
    """
    c, interior, lap, rhs, deg = _dirichlet_system(cfg, center, boundary)
    if len(interior) == 0:
        return 1.0 / deg[c]
    diag = lap.diagonal()
    jacobi = splinalg.LinearOperator(lap.shape, matvec=lambda x: x / diag, dtype=np.float64)
    phi, info = splinalg.cg(lap, rhs, M=jacobi, maxiter=maxiter, atol=0.0, **{_CG_TOL: tol})
    if info > 0:
        logger.warning('cg stopped after %d iterations without reaching %.1e', info, tol)
    assert info >= 0
    return float(1.0 / _current(cfg, c, interior, phi, deg))


def effective_resistance_dense(cfg, center, boundary):
    """
    The same quantity by a dense direct solve; for small checks.
    """
    c, interior, lap, rhs, deg = _dirichlet_system(cfg, center, boundary)
    if len(interior) == 0:
        return 1.0 / deg[c]
    phi = np.linalg.solve(lap.toarray(), rhs)
    return float(1.0 / _current(cfg, c, interior, phi, deg))


def resistance_growth(cfg, center, radii, tol=1e-8):
    """
    (n, R(center, {x : |x - center|_inf >= n})) for each radius; None
    where the center does not reach that set. Grounding everything
    outside B_n makes the sequence nondecreasing in n.
    """
    center = tuple(int(c) for c in center)
    out = []
    for n in radii:
        far = ~vertex_mask(cfg.region, box(len(center), int(n) - 1, center))
        try:
            value = effective_resistance(cfg, center, far, tol)
        except Disconnected:
            value = None
        logger.debug('radius %d: resistance %s', n, value)
        out.append((int(n), value))
    return out


if __name__ == '__main__':
    import pytest
    pytest.main([__file__])

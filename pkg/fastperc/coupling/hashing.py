"""
Counter-based uniforms for lattice edges.

Every uniform is a splitmix64 hash of (seed, stream, tag, coordinates),
so nothing is stored and any edge can be revisited in any order.

Edges {a, a+v} with v lexicographically positive are grouped, per
displacement v, into lattice-aligned blocks of base points a. A block
first draws the minimum M of its uniforms and the position holding it;
the remaining uniforms are M + (1 - M) h with h an independent hash.
This is exactly the joint law of i.i.d. uniforms, and a block with
M >= p contains no open edge, so the sampler skips it after one hash.
"""
import numpy as np

from fastperc.core.convert_to_jit import convert_to_jit


_GOLDEN = np.uint64(0x9E3779B97F4A7C15)
_MIX1 = np.uint64(0xBF58476D1CE4E5B9)
_MIX2 = np.uint64(0x94D049BB133111EB)
_S30 = np.uint64(30)
_S27 = np.uint64(27)
_S31 = np.uint64(31)
_S11 = np.uint64(11)
_UNIT = 1.0 / 9007199254740992.0
_OFFSET = 2147483648

EDGE_TAG = 1
BLOCK_TAG = 2
KEY_TAG = 3

# Blocks hold at most 2^12 base points.
_BLOCK_BITS = 12


def splitmix64(x):
    z = x + _GOLDEN
    z = (z ^ (z >> _S30)) * _MIX1
    z = (z ^ (z >> _S27)) * _MIX2
    return z ^ (z >> _S31)


splitmix64_jit = convert_to_jit(splitmix64)


def fold(h, value):
    return splitmix64_jit(h ^ np.uint64(value + _OFFSET))


fold_jit = convert_to_jit(fold)


def to_unit(h):
    return (h >> _S11) * _UNIT


to_unit_jit = convert_to_jit(to_unit)


def field_key(seed, stream):
    """
    Root hash of a coupling field; `seed` is a uint64.
    """
    return fold_jit(splitmix64_jit(seed), stream)


field_key_jit = convert_to_jit(field_key)


def coupling_key(seed, stream):
    """
    `field_key` as a numpy uint64. Compiled callers are specialised on
    the type of the key, so it must never reach them as a Python int.

    >>> type(coupling_key(1, 0)) is np.uint64
    True
    """
    return np.uint64(field_key_jit(np.uint64(seed), stream))


def block_side(v):
    """
    Side length of the base-point blocks for displacement `v`: the
    largest power of two not above |v|_inf, capped so a block has at
    most 2^12 points. Depends on v only, never on beta or the kernel.
    """
    d = len(v)
    reach = 0
    for i in range(d):
        a = v[i] if v[i] >= 0 else -v[i]
        if a > reach:
            reach = a
    cap = 1 << (_BLOCK_BITS // d)
    side = 1
    while side * 2 <= reach and side * 2 <= cap:
        side *= 2
    return side


block_side_jit = convert_to_jit(block_side)


def block_minimum(key, v, block, npoints):
    """
    (minimum uniform, position of the minimum) of one block.
    """
    h = fold_jit(key, BLOCK_TAG)
    for i in range(len(v)):
        h = fold_jit(h, v[i])
    for i in range(len(block)):
        h = fold_jit(h, block[i])
    u = to_unit_jit(h)
    m = -np.expm1(np.log1p(-u) / npoints)
    pos = int(to_unit_jit(splitmix64_jit(h)) * npoints)
    return m, pos


block_minimum_jit = convert_to_jit(block_minimum)


def edge_hash_unit(key, base, v):
    h = fold_jit(key, EDGE_TAG)
    for i in range(len(base)):
        h = fold_jit(h, base[i])
    for i in range(len(v)):
        h = fold_jit(h, v[i])
    return to_unit_jit(h)


edge_hash_unit_jit = convert_to_jit(edge_hash_unit)


def edge_unit(key, base, v):
    """
    U_e for the edge {base, base + v}, v lexicographically positive.
    """
    d = len(v)
    side = block_side_jit(v)
    npoints = side ** d
    block = np.empty(d, np.int64)
    pos = 0
    for i in range(d):
        block[i] = base[i] // side
        pos = pos * side + (base[i] - block[i] * side)
    m, argmin = block_minimum_jit(key, v, block, npoints)
    if pos == argmin:
        return m
    return m + (1.0 - m) * edge_hash_unit_jit(key, base, v)


edge_unit_jit = convert_to_jit(edge_unit)


def key_unit(key, coords):
    """
    Uniform keyed by an arbitrary integer tuple, for objects that are
    not lattice edges (walk steps, directed-model bonds).
    """
    h = fold_jit(key, KEY_TAG)
    for i in range(len(coords)):
        h = fold_jit(h, coords[i])
    return to_unit_jit(h)


key_unit_jit = convert_to_jit(key_unit)


def open_bases(lo, hi, v, p, key):
    """
    Base points a of the rectangle [lo, hi] with a + v also inside and
    U_{a, a+v} < p, as row-major indices into the rectangle.
    """
    d = len(lo)
    out = np.empty(16, np.int64)
    count = 0
    if p <= 0.0:
        return out[:0]

    blo = np.empty(d, np.int64)
    bhi = np.empty(d, np.int64)
    for i in range(d):
        blo[i] = max(lo[i], lo[i] - v[i])
        bhi[i] = min(hi[i], hi[i] - v[i])
        if blo[i] > bhi[i]:
            return out[:0]

    strides = np.empty(d, np.int64)
    s = 1
    for i in range(d - 1, -1, -1):
        strides[i] = s
        s *= hi[i] - lo[i] + 1

    side = block_side_jit(v)
    npoints = side ** d
    klo = np.empty(d, np.int64)
    khi = np.empty(d, np.int64)
    for i in range(d):
        klo[i] = blo[i] // side
        khi[i] = bhi[i] // side

    block = klo.copy()
    offset = np.zeros(d, np.int64)
    x = np.empty(d, np.int64)
    while True:
        m, argmin = block_minimum_jit(key, v, block, npoints)
        if m < p:
            offset[:] = 0
            for pos in range(npoints):
                inside = True
                for i in range(d):
                    x[i] = block[i] * side + offset[i]
                    if x[i] < blo[i] or x[i] > bhi[i]:
                        inside = False
                if inside:
                    if pos == argmin:
                        u = m
                    else:
                        u = m + (1.0 - m) * edge_hash_unit_jit(key, x, v)
                    if u < p:
                        if count == len(out):
                            grown = np.empty(2 * len(out), np.int64)
                            grown[:count] = out[:count]
                            out = grown
                        idx = 0
                        for i in range(d):
                            idx += (x[i] - lo[i]) * strides[i]
                        out[count] = idx
                        count += 1
                # Row-major odometer over the block's positions.
                j = d - 1
                while j >= 0:
                    offset[j] += 1
                    if offset[j] < side:
                        break
                    offset[j] = 0
                    j -= 1

        j = d - 1
        while j >= 0:
            block[j] += 1
            if block[j] <= khi[j]:
                break
            block[j] = klo[j]
            j -= 1
        if j < 0:
            break
    return out[:count]


open_bases_jit = convert_to_jit(open_bases)


def sample_edges(lo, hi, displacements, probabilities, key):
    """
    Open edges of the rectangle over every listed displacement, as
    (E, 2) row-major index pairs (a, a + v).
    """
    d = len(lo)
    strides = np.empty(d, np.int64)
    s = 1
    for i in range(d - 1, -1, -1):
        strides[i] = s
        s *= hi[i] - lo[i] + 1

    out = np.empty((64, 2), np.int64)
    count = 0
    for row in range(displacements.shape[0]):
        v = displacements[row]
        shift = 0
        for i in range(d):
            shift += v[i] * strides[i]
        bases = open_bases_jit(lo, hi, v, probabilities[row], key)
        for b in bases:
            if count == out.shape[0]:
                grown = np.empty((2 * out.shape[0], 2), np.int64)
                grown[:count] = out[:count]
                out = grown
            out[count, 0] = b
            out[count, 1] = b + shift
            count += 1
    return out[:count]


sample_edges_jit = convert_to_jit(sample_edges)


if __name__ == '__main__':
    import pytest
    pytest.main([__file__])

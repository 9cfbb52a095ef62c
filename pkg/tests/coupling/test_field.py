from hypothesis import given, settings
from hypothesis.strategies import integers, tuples
import numpy as np
from pytest import approx, raises

from fastperc.coupling import (
    OMEGA, OMEGA_PRIME, CouplingField, canonical_edge, edge_open, edge_uniform,
    key_uniform, replicate_seed, union_field,
)
from fastperc.errors import SameStream, SelfLoop
from fastperc.kernel import nearest_neighbor, power_law


points = tuples(integers(-50, 50), integers(-50, 50))
seeds = integers(0, 2 ** 64 - 1)


@given(seeds, points, points)
@settings(deadline=None)
def test_uniform_is_symmetric_and_in_unit_interval(seed, a, b):
    if a == b:
        return
    field = CouplingField(seed)
    u = edge_uniform(field, (a, b))
    assert 0.0 <= u < 1.0
    assert u == edge_uniform(field, (b, a))
    assert u == edge_uniform(field, (a, b))


def test_self_loop_rejected():
    with raises(SelfLoop):
        edge_uniform(CouplingField(1), ((0, 0), (0, 0)))
    with raises(SelfLoop):
        canonical_edge(((3,), (3,)))


def test_seed_and_stream_validation():
    with raises(ValueError):
        CouplingField(-1)
    with raises(ValueError):
        CouplingField(2 ** 64)
    with raises(ValueError):
        CouplingField(0, -1)


def test_streams_are_different():
    e = ((0, 0), (1, 0))
    base = CouplingField(11)
    assert edge_uniform(base, e) != edge_uniform(base.stream(OMEGA_PRIME), e)
    assert base.stream(OMEGA_PRIME).stream_id == OMEGA_PRIME


@settings(max_examples=25)
@given(seeds)
def test_open_sets_nested_in_beta(seed):
    field = CouplingField(seed)
    k = power_law(2, 1.0, 4.0)
    edges = [((0, 0), (x, y)) for x in range(-3, 4) for y in range(-3, 4) if (x, y) != (0, 0)]
    grid = [0.0, 0.3, 0.7, 1.5, 4.0]
    for e in edges:
        opened = [edge_open(field, e, beta, k) for beta in grid]
        assert opened == sorted(opened)
        assert not opened[0]


def test_edge_law_frequency():
    k = nearest_neighbor(1, 1.0)
    beta = np.log(2.0)
    trials = 20000
    hits = sum(edge_open(CouplingField(replicate_seed(3, i)), ((0,), (1,)), beta, k)
               for i in range(trials))
    sigma = np.sqrt(0.25 / trials)
    assert hits / trials == approx(0.5, abs=4 * sigma)


def test_sprinkled_union_law():
    k = nearest_neighbor(1, 1.0)
    alpha = beta = np.log(2.0)
    trials = 20000
    hits = 0
    for i in range(trials):
        f = CouplingField(replicate_seed(5, i))
        hits += union_field(((0,), (1,)), k, f, beta, f.stream(OMEGA_PRIME), alpha)
    sigma = np.sqrt(0.75 * 0.25 / trials)
    assert hits / trials == approx(0.75, abs=4 * sigma)


def test_union_needs_distinct_streams():
    f = CouplingField(1)
    with raises(SameStream):
        union_field(((0,), (1,)), nearest_neighbor(1, 1.0), f, 1.0, f, 1.0)


def test_uniforms_look_uniform():
    field = CouplingField(2024)
    u = np.array([edge_uniform(field, ((0, 0), (x, y)))
                  for x in range(1, 60) for y in range(-30, 30)])
    assert u.mean() == approx(0.5, abs=4 * np.sqrt(1 / 12 / len(u)))
    counts, _ = np.histogram(u, bins=10, range=(0, 1))
    assert counts.min() > 0.8 * len(u) / 10


def test_replicate_seeds_are_pure_and_distinct():
    seeds = [replicate_seed(9, i) for i in range(1000)]
    assert seeds == [replicate_seed(9, i) for i in range(1000)]
    assert len(set(seeds)) == 1000
    assert all(0 <= s < 2 ** 64 for s in seeds)


def test_key_uniform():
    u = key_uniform(4, 7, (1, 2, 3))
    assert 0.0 <= u < 1.0
    assert u == key_uniform(4, 7, (1, 2, 3))
    assert u != key_uniform(4, 8, (1, 2, 3))
    assert u != key_uniform(4, 7, (1, 2, 4))


def test_uniforms_do_not_depend_on_call_order():
    small, large = CouplingField(1), CouplingField(14871207630202690639)
    e = ((0, 0), (1, 2))
    first = [edge_uniform(small, e), edge_uniform(large, e)]
    second = [edge_uniform(large, e), edge_uniform(small, e)]
    assert first == second[::-1]
    assert type(large.key) is np.uint64
    assert key_uniform(2 ** 64 - 1, 7, (3,)) == key_uniform(2 ** 64 - 1, 7, (3,))


def test_default_stream_is_omega():
    assert CouplingField(1).stream_id == OMEGA


if __name__ == '__main__':
    import pytest
    pytest.main([__file__])

import math
from functools import partial

from numba import jit
from pytest import raises

from fastperc.core.convert_to_jit import JIT_KWARGS, convert_to_jit


def test_does_not_convert_math_builtins():
    for func in (math.exp, math.floor, math.log, math.sqrt):
        assert convert_to_jit(func) is func


def test_does_not_convert_jitted_functions():
    @jit(nopython=True)
    def jit_func():     # pragma: no cover
        return 5

    assert convert_to_jit(jit_func) is jit_func
    assert jit_func() == 5


def test_does_not_convert_converted_functions():
    def five():     # pragma: no cover
        return 5

    converted = convert_to_jit(five)

    assert convert_to_jit(converted) is converted
    assert converted() == 5


def test_package_options():
    def add(a, b):      # pragma: no cover
        return a + b

    jitted = convert_to_jit(add)
    assert jitted(1, 2) == 3
    assert jitted.targetoptions['nogil'] is True
    assert JIT_KWARGS['nopython']


def test_overrides():
    def add(a, b):      # pragma: no cover
        return a + b

    assert convert_to_jit(add, nogil=False).targetoptions['nogil'] is False
    assert convert_to_jit(add, cache=False)(2, 2) == 4


def test_raises_for_non_func():
    with raises(TypeError):
        convert_to_jit('And Now for Something Completely Different')

    with raises(TypeError):
        convert_to_jit({'answer': 42})

    with raises(TypeError):
        convert_to_jit(partial(sum))


if __name__ == '__main__':
    import pytest
    pytest.main([__file__])

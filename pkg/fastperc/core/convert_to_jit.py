
from inspect import isbuiltin, isfunction
from types import MappingProxyType

from numba import jit
from numba.core.target_extension import CPUDispatcher


# nogil lets replicate workers run compiled loops on plain threads.
JIT_KWARGS = MappingProxyType({
    'nopython': True, 'nogil': True
})


def convert_to_jit(func, **overrides):
    """
    Compiles `func` with numba using the package-wide
    options in `JIT_KWARGS`.

    Already compiled dispatchers and builtins are returned
    unchanged, so this is safe to call on anything that
    might be passed as a callable argument.

    Any keyword `overrides` are merged over the defaults,
    for example ``convert_to_jit(f, parallel=True)``.

    >>> def double(x):
    ...     return 2 * x
    >>> double_jit = convert_to_jit(double)
    >>> double_jit(21)
    42
    >>> convert_to_jit(double_jit) is double_jit
    True
    """
    if isinstance(func, CPUDispatcher) or isbuiltin(func):
        return func

    if not isfunction(func):
        raise TypeError("Can't JIT a non-function object: {}".format(func))

    options = dict(JIT_KWARGS)
    options.update(overrides)

    return jit(**options)(func)


if __name__ == '__main__':
    import pytest
    pytest.main([__file__])

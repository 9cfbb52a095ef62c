import numba
import numpy
import pytest
import scipy


@pytest.fixture(autouse=True)
def add_preconfigured_np(doctest_namespace):
    """
    Fixture executed for every doctest.

    Injects numpy into each test's namespace, so doctests can use
    ``np`` without importing it.
    """
    doctest_namespace['np'] = numpy


def pytest_report_header(config):
    return 'Testing fastperc using: Numba {}, NumPy {}, SciPy {}'.format(
        numba.__version__, numpy.__version__, scipy.__version__,
    )

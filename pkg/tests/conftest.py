import functools

import pytest

from distquot import GridDomain, build_field


@functools.lru_cache(maxsize=None)
def field(p, ell=1):
    return build_field(p, ell)


@functools.lru_cache(maxsize=None)
def domain(p, ell, d):
    return GridDomain(field(p, ell), d)


@pytest.fixture(scope="session")
def f3():
    return field(3)


@pytest.fixture(scope="session")
def f5():
    return field(5)


@pytest.fixture(scope="session")
def f9():
    return field(3, 2)

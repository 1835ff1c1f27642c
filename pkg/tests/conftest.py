"""
Shared fixtures.

The symbol cache is redirected to a per-session temporary directory, and the
normalised symbol maps of the bundled test curves are built once per session.
"""

import os

import pytest

from padic_ell.curve import get_curve
from padic_ell.modsym import symbol_maps
from padic_ell.utils.const import ENV_CACHE
from padic_ell.utils.paths import Paths


@pytest.fixture(scope="session", autouse=True)
def symbol_cache_dir(tmp_path_factory):
    path = tmp_path_factory.mktemp("symbol_cache")
    previous = os.environ.get(ENV_CACHE)
    os.environ[ENV_CACHE] = str(path)
    Paths().refresh_paths()
    yield path
    if previous is None:
        os.environ.pop(ENV_CACHE, None)
    else:
        os.environ[ENV_CACHE] = previous
    Paths().refresh_paths()


@pytest.fixture(scope="session")
def e11():
    return get_curve("11a1")


@pytest.fixture(scope="session")
def e37():
    return get_curve("37a1")


@pytest.fixture(scope="session")
def e14():
    return get_curve("14a1")


@pytest.fixture(scope="session")
def maps_11a1(e11):
    return symbol_maps(e11)


@pytest.fixture(scope="session")
def maps_37a1(e37):
    return symbol_maps(e37)


@pytest.fixture(scope="session")
def maps_14a1(e14):
    return symbol_maps(e14)

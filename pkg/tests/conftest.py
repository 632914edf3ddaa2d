import os

import pytest


@pytest.fixture(scope="session", autouse=True)
def _session_cache_dir(tmp_path_factory):
    """Point the enumeration cache at a throwaway directory so test runs never
    touch the working tree or each other."""
    path = tmp_path_factory.mktemp("tyz-cache")
    old = os.environ.get("TYZ_CACHE_DIR")
    os.environ["TYZ_CACHE_DIR"] = str(path)
    yield
    if old is None:
        os.environ.pop("TYZ_CACHE_DIR", None)
    else:
        os.environ["TYZ_CACHE_DIR"] = old

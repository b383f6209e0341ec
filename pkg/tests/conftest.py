import os

import pytest

from cubicstab.enumerate import enumerate_maximal
from cubicstab.simplex import build_simplex
from cubicstab.tables import atlas_index, load_expected_tables

WORKERS = int(os.environ.get("CUBICSTAB_WORKERS", "8"))


@pytest.fixture(scope="session")
def ctx6():
    return build_simplex(6, 3)


@pytest.fixture(scope="session")
def tables():
    return load_expected_tables()


@pytest.fixture(scope="session")
def atlas6(ctx6):
    """The full n=6 atlas; computed once per session (about a minute)."""
    return enumerate_maximal(ctx6, workers=WORKERS)


@pytest.fixture(scope="session")
def paper_ids(atlas6, tables):
    """1-based published family id -> atlas position (23 = unstable)."""
    return atlas_index(atlas6, tables)

from __future__ import annotations

import pytest

from alcove.root_data import RootDatum


@pytest.fixture(scope="session")
def d2():
    return RootDatum(2, 1, 7)


@pytest.fixture(scope="session")
def d2_13():
    return RootDatum(2, 1, 13)


@pytest.fixture(scope="session")
def d3():
    return RootDatum(3, 1, 37)


@pytest.fixture(scope="session")
def d22():
    return RootDatum(2, 2, 7)

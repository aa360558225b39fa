from __future__ import annotations

import pytest

from ringlab import construct


@pytest.fixture(scope="session")
def catalog():
    return construct.default_catalog()


@pytest.fixture(scope="session")
def catalog_rings(catalog):
    return [entry.ring for entry in catalog]

import random

import pytest

from config import get_settings
from gfq.field_tower import make_field
from qcalc.qcombin import QContext


@pytest.fixture
def gf2():
    return make_field(2, 1, 1)


@pytest.fixture
def gf3():
    return make_field(3, 1, 1)


@pytest.fixture
def gf4():
    return make_field(2, 1, 2)


@pytest.fixture
def gf8():
    return make_field(2, 1, 3)


@pytest.fixture
def gf9():
    return make_field(3, 1, 2)


@pytest.fixture
def gf16():
    return make_field(2, 1, 4)


@pytest.fixture
def gf4_over_gf4():
    """GF(16) as a degree-2 extension of GF(4)"""
    return make_field(2, 2, 2)


@pytest.fixture
def q2():
    return QContext(2)


@pytest.fixture
def q3():
    return QContext(3)


@pytest.fixture
def rng():
    return random.Random(20240611)


@pytest.fixture
def fresh_settings():
    """Re-read settings from the (monkeypatched) environment."""
    get_settings.cache_clear()
    yield get_settings
    get_settings.cache_clear()

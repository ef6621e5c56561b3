import pytest
from hypothesis import settings

from helpers import ALMOST_LINEAR_CUBIC, SLP_PAIR_IDEAL, TOGLIATTI

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")


@pytest.fixture
def togliatti():
    return TOGLIATTI


@pytest.fixture
def almost_linear_cubic():
    return ALMOST_LINEAR_CUBIC


@pytest.fixture
def slp_pair_ideal():
    return SLP_PAIR_IDEAL

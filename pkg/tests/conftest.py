import random

import pytest
from hypothesis import settings

from booklink.table import load_knot_data, load_witnesses

settings.register_profile("booklink", derandomize=True, deadline=None, max_examples=200)
settings.load_profile("booklink")

DEFAULT_SEED = 20240611


def pytest_addoption(parser):
    parser.addoption("--seed", type=int, default=DEFAULT_SEED,
                     help="seed for randomized word generation")


@pytest.fixture
def seed(request) -> int:
    return request.config.getoption("--seed")


@pytest.fixture
def rng(seed) -> random.Random:
    return random.Random(seed)


@pytest.fixture(scope="session")
def knots():
    return load_knot_data()


@pytest.fixture(scope="session")
def knots_by_name(knots):
    return {r.name: r for r in knots}


@pytest.fixture(scope="session")
def witnesses(knots):
    return load_witnesses(records=knots)

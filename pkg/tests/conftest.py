import random

import pytest
from hypothesis import settings

from latpoly.checks import random_polytope

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@pytest.fixture
def rng():
    return random.Random(20240601)


@pytest.fixture
def make_polytope():
    return random_polytope

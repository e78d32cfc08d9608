import random

import pytest

from coxwalls.systems import STANDARD


@pytest.fixture(params=sorted(STANDARD))
def any_system(request):
    return STANDARD[request.param]()


@pytest.fixture
def rng():
    return random.Random(20240611)

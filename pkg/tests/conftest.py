import random

import pytest
from hypothesis import settings

from rssubcode.field import FieldContext

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@pytest.fixture(params=[(2, 1), (7, 1), (101, 1), (2, 2), (2, 3), (3, 2), (2, 4)],
                ids=lambda pm: f"GF({pm[0]}^{pm[1]})")
def small_field(request):
    return FieldContext(*request.param)


@pytest.fixture
def rng():
    return random.Random(12345)

from functools import lru_cache
from pathlib import Path

import pytest

from impconf.generators import EnumerationOptions, enumerate_configurations, gen_pn, gen_small
from impconf.topology import apply_puncture_plan

GOLDEN = Path(__file__).parent / "golden"


@lru_cache(maxsize=None)
def census(n, reflections=False):
    return tuple(enumerate_configurations(EnumerationOptions(n, quotient_reflections=reflections)))


def census_upto(n):
    return [c for k in range(3, n + 1) for c in census(k)]


def hass_scott():
    return apply_puncture_plan(gen_small("sphere3"))


def n3_torus():
    return apply_puncture_plan(gen_small("torus1"))


@pytest.fixture
def hs():
    return hass_scott()


@pytest.fixture
def torus():
    return n3_torus()


@pytest.fixture(params=[2, 3, 4, 5])
def pn(request):
    return gen_pn(request.param)

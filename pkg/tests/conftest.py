import numpy as np
import pytest

from scabbard.params import all_params


def pytest_make_parametrize_id(config, val, argname):
    if hasattr(val, "scheme_id"):
        return val.name
    return None


@pytest.fixture
def rng():
    return np.random.default_rng(0xC0FFEE)


ALL_PARAMS = list(all_params())


@pytest.fixture(params=ALL_PARAMS, ids=lambda p: p.name)
def scheme_params(request):
    return request.param

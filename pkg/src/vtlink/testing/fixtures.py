# MIT License: Copyright (c) 2026, the vtlink developers.
# See the LICENSE file in the root directory for full license text.

import pytest

from .utils import random_order


@pytest.fixture
def seed(pytestconfig):
    try:
        return pytestconfig.getoption("randomly_seed")
    except ValueError:
        return 1


@pytest.fixture
def rng(seed):
    from vtlink._utils import check_random_state

    return check_random_state(seed)


@pytest.fixture
def random_small_graph(rng):
    from vtlink.random import random_graph

    return random_graph(random_order(rng), edge_probability=rng.uniform(0.2, 0.8), random_state=rng)


@pytest.fixture
def asymmetric26_graph():
    from vtlink.data import get_asymmetric26_graph

    return get_asymmetric26_graph()


@pytest.fixture
def sd16_neighbourhood_graph():
    from vtlink.data import get_sd16_neighbourhood_graph

    return get_sd16_neighbourhood_graph()


@pytest.fixture
def petersen_graph():
    from vtlink.data import get_petersen_graph

    return get_petersen_graph()

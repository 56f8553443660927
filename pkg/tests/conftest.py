import pytest

import support


@pytest.fixture
def sample_net():
    return support.sample_graph()


@pytest.fixture
def bridge_graph():
    return support.weak_bridge_graph()

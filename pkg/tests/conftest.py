import random

import pytest

from pinchband.diagram import random_diagram, table_diagram
from pinchband.table import names


@pytest.fixture(scope="session")
def corpus():
    return [(name, table_diagram(name)) for name in names()]


@pytest.fixture(scope="session")
def random_diagrams():
    rng = random.Random(20240917)
    return [random_diagram(rng, max_crossings=10) for _ in range(200)]

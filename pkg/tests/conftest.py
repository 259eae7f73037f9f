import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

import pytest

from formata.groups import PermGroup, generate


@pytest.fixture
def s4():
    return generate(4, ["(0 1)", "(0 1 2 3)"])


@pytest.fixture
def a4():
    return generate(4, ["(0 1 2)", "(0 1)(2 3)"])


@pytest.fixture
def d8():
    return generate(4, ["(0 1 2 3)", "(0 2)"])


@pytest.fixture
def v4():
    return generate(4, ["(0 1)(2 3)", "(0 2)(1 3)"])


@pytest.fixture
def s3():
    return generate(3, ["(0 1)", "(0 1 2)"])


@pytest.fixture
def c6():
    return generate(6, ["(0 1 2 3 4 5)"])

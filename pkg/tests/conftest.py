import random

import pytest

from admissible_weights import build_root_system


@pytest.fixture
def rng():
    return random.Random(20240811)


@pytest.fixture
def a1():
    return build_root_system("A1")


@pytest.fixture
def a2():
    return build_root_system("A2")


@pytest.fixture
def b2():
    return build_root_system("B2")


@pytest.fixture
def g2():
    return build_root_system("G2")

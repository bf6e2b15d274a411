from random import Random

import pytest

from qym.forms import Window


@pytest.fixture
def rng():
    return Random("qym-tests")


@pytest.fixture
def small_window():
    return Window.cube(-1, 1)


@pytest.fixture
def window():
    return Window.cube(-2, 2)

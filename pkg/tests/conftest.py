import json
import os

import numpy as np
import pytest

from src.experiments.generators import gen_gaussian_consistent, gen_gaussian_inconsistent

FIXTURES = os.path.join(os.path.dirname(__file__), "fixtures")


@pytest.fixture
def fixture_path():
    """ Absolute path of a file in tests/fixtures.
    """

    def path(name):
        return os.path.join(FIXTURES, name)

    return path


@pytest.fixture
def small_problem():
    return gen_gaussian_consistent(30, 4, seed=3)


@pytest.fixture(scope="session")
def desk_problem():
    return gen_gaussian_consistent(200, 20, seed=1)


@pytest.fixture(scope="session")
def desk_inconsistent_problem():
    return gen_gaussian_inconsistent(200, 20, 0.1, seed=1)


@pytest.fixture
def rng():
    return np.random.default_rng(42)


@pytest.fixture
def write_config(tmp_path):
    """ Write a configuration mapping to ``tmp_path/config.json`` and return its path.
    """

    def write(content, name="config.json"):
        path = tmp_path / name
        path.write_text(json.dumps(content))
        return str(path)

    return write

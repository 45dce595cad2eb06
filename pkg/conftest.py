import os

import pytest

from ginv.linalg import RMatrix
from ginv.store import load_matrix

DATA_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), "data")


def data_path(name: str) -> str:
    return os.path.join(DATA_DIR, name)


@pytest.fixture
def ten_vertex() -> RMatrix:
    return load_matrix(data_path("ten_vertex.txt"))


@pytest.fixture
def two_example_a() -> RMatrix:
    return load_matrix(data_path("two_example_a.txt"))


@pytest.fixture
def two_example_a_ginv() -> RMatrix:
    return load_matrix(data_path("two_example_a_ginv.txt"))


@pytest.fixture
def two_example_b() -> RMatrix:
    return load_matrix(data_path("two_example_b.txt"))


@pytest.fixture
def ssd() -> RMatrix:
    return load_matrix(data_path("ssd.txt"))


@pytest.fixture
def corona4() -> RMatrix:
    return load_matrix(data_path("corona4.txt"))


@pytest.fixture
def ssd_ginv() -> RMatrix:
    return RMatrix([
        ["0", "0", "0", "2/5", "1/5"],
        ["0", "0", "1/2", "-1/5", "-1/10"],
        ["0", "1/2", "0", "-2/5", "-1/5"],
        ["2/5", "-1/5", "-2/5", "8/25", "4/25"],
        ["1/5", "-1/10", "-1/5", "4/25", "2/25"],
    ])

import pytest

from ninecong.modular9 import twisted_model
from ninecong.verify.cases import CASES


@pytest.fixture(scope="session")
def model_47775():
    c = CASES["ex-47775-direct"]
    return twisted_model(c.a, c.b, "direct").transform(c.matrix)


@pytest.fixture(scope="session")
def model_201():
    c = CASES["ex-201-reverse"]
    return twisted_model(c.a, c.b, "reverse").transform(c.matrix)

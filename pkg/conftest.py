import math
import random
import shutil
import tempfile
import typing

import pytest
from click.testing import CliRunner
from sympy import factorint

from theaetetus.powers import Ratio, Surd, reduce
from theaetetus.powers.cli import cli

SEED = 147


def random_pairs(rng: random.Random, count: int, high: int = 10 ** 6) -> typing.List[typing.Tuple[int, int]]:
    return [(rng.randint(1, high), rng.randint(1, high)) for _ in range(count)]


def coprime_pairs(rng: random.Random, count: int, high: int = 10 ** 6) -> typing.List[typing.Tuple[int, int]]:
    pairs = []
    while len(pairs) < count:
        m, n = rng.randint(1, high), rng.randint(1, high)
        if math.gcd(m, n) == 1:
            pairs.append((m, n))
    return pairs


def random_ratio(rng: random.Random, high: int = 60) -> Ratio:
    return reduce(rng.randint(1, high), rng.randint(1, high))


def random_surd(rng: random.Random, kernels: typing.Sequence[int] = (1, 2, 3, 5, 6, 7, 10, 11)) -> Surd:
    return Surd(random_ratio(rng), rng.choice(kernels))


def square_by_factorint(n: int) -> bool:
    return all(exponent % 2 == 0 for exponent in factorint(n).values())


def invoke(runner: CliRunner, *args: str):
    return runner.invoke(cli, list(args), catch_exceptions=False)


@pytest.fixture
def rng() -> random.Random:
    return random.Random(SEED)


@pytest.fixture
def runner() -> CliRunner:
    return CliRunner()


@pytest.fixture
def tmp_folder() -> str:
    folder = tempfile.mkdtemp()
    yield folder
    shutil.rmtree(folder)


@pytest.fixture
def oracle_limit(request) -> int:
    return int(request.config.getoption("--oracle-limit"))


def pytest_addoption(parser):
    parser.addoption('--oracle-limit', action='store', default="100000")

import random
from fractions import Fraction

import pytest

from lieradicals import catalog


def rand_vec(rng: random.Random, n: int, denominators=(1, 2, 3)) -> tuple:
    return tuple(
        Fraction(rng.randint(-3, 3), rng.choice(denominators)) for _ in range(n)
    )


@pytest.fixture(scope="session")
def s32():
    return catalog.get("s3_2").algebra


@pytest.fixture(scope="session")
def heis3():
    return catalog.get("heis3").algebra


@pytest.fixture(scope="session")
def sl2():
    return catalog.get("sl2").algebra


@pytest.fixture(scope="session")
def sl2s32():
    return catalog.get("sl2_plus_s3_2").algebra


@pytest.fixture(scope="session")
def abelian2():
    return catalog.get("abelian2").algebra

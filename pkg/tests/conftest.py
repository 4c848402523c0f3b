import random

import pytest

from equicoh.designs import (
    build_hesse_sic,
    build_hoggar_sic,
    build_mub,
    build_qubit_sics,
)
from equicoh.numerics import ComplexMatrix


@pytest.fixture(scope="session")
def qubit_sics():
    return build_qubit_sics()


@pytest.fixture(scope="session")
def hesse():
    return build_hesse_sic()


@pytest.fixture(scope="session")
def hoggar():
    return build_hoggar_sic()


@pytest.fixture(scope="session")
def mub2():
    return build_mub(2)


@pytest.fixture(scope="session")
def mub3():
    return build_mub(3)


@pytest.fixture(scope="session")
def mub8():
    return build_mub(8)


def random_hermitian(d, rng):
    """Seeded random Hermitian matrix with O(1) entries."""
    raw = [[complex(rng.gauss(0, 1), rng.gauss(0, 1)) for _ in range(d)] for _ in range(d)]
    return ComplexMatrix.from_rows(
        [
            [(raw[i][j] + raw[j][i].conjugate()) / 2 for j in range(d)]
            for i in range(d)
        ]
    )


@pytest.fixture
def rng():
    return random.Random(20250811)

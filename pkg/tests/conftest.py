from __future__ import annotations

import pytest

from src.algebra.field import PrimeField, Rng

P_SMALL = 7
P_BIG = 2**31 - 1

@pytest.fixture
def f7() -> PrimeField:
    return PrimeField(P_SMALL)

@pytest.fixture
def fbig() -> PrimeField:
    return PrimeField(P_BIG)

@pytest.fixture
def f101() -> PrimeField:
    return PrimeField(101)

@pytest.fixture
def rng() -> Rng:
    return Rng(20240607)

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

import numpy as np
from sympy import isprime

from ..core.config import get_settings
from ..core.errors import FieldTooSmall, NotPrime, TooFewPoints, ZeroInverse

settings = get_settings()

# Field elements are plain ints kept in [0, p).
FieldElement = int

@dataclass(frozen=True)
class PrimeField:
    """The prime field Z/pZ for an odd word-size prime p."""
    p: int

    def __post_init__(self) -> None:
        if self.p < 3 or not isprime(self.p):
            raise NotPrime(f"modulus {self.p} is not an odd prime", details={"p": self.p})

    def __call__(self, value: int) -> FieldElement:
        return value % self.p

    def add(self, a: FieldElement, b: FieldElement) -> FieldElement:
        return (a + b) % self.p

    def sub(self, a: FieldElement, b: FieldElement) -> FieldElement:
        return (a - b) % self.p

    def neg(self, a: FieldElement) -> FieldElement:
        return -a % self.p

    def mul(self, a: FieldElement, b: FieldElement) -> FieldElement:
        return a * b % self.p

    def inv(self, a: FieldElement) -> FieldElement:
        return field_inv(self, a)

    def random_element(self, rng: Rng) -> FieldElement:
        return rng.integers(0, self.p)

    def __str__(self) -> str:
        return f"GF({self.p})"

def field_inv(field: PrimeField, a: FieldElement) -> FieldElement:
    a %= field.p
    if a == 0:
        raise ZeroInverse("zero has no inverse", details={"p": field.p})
    return pow(a, -1, field.p)

def default_field() -> PrimeField:
    return PrimeField(settings.DEFAULT_MODULUS)

class Rng:
    """Seeded random stream; fork it instead of sharing across tasks."""

    def __init__(self, seed: Union[int, np.random.SeedSequence, None] = None) -> None:
        if seed is None:
            seed = settings.DEFAULT_SEED
        if isinstance(seed, np.random.SeedSequence):
            self._sequence = seed
        else:
            self._sequence = np.random.SeedSequence(seed)
        self._generator = np.random.Generator(np.random.PCG64(self._sequence))

    @property
    def seed(self) -> int:
        return int(self._sequence.entropy)

    def integers(self, low: int, high: int) -> int:
        """Uniform integer in [low, high)."""
        return int(self._generator.integers(low, high))

    def distinct(self, population: int, count: int) -> list[int]:
        drawn = self._generator.choice(population, size=count, replace=False)
        return [int(v) for v in drawn]

    def fork(self, count: int) -> list[Rng]:
        return [Rng(child) for child in self._sequence.spawn(count)]

def sample_distinct_subset(
    S_size: int,
    delta: int,
    rng: Rng,
    field: Optional[PrimeField] = None
) -> list[FieldElement]:
    """Uniform random delta-subset of {0, ..., S_size - 1}, in sampling order."""
    if field is not None and S_size > field.p:
        raise FieldTooSmall(
            f"sample set of size {S_size} does not fit in {field}",
            details={"S_size": S_size, "p": field.p}
        )
    if delta > S_size:
        raise TooFewPoints(
            f"cannot draw {delta} distinct points from a set of size {S_size}",
            details={"S_size": S_size, "delta": delta}
        )
    return rng.distinct(S_size, delta)

def random_elements(field: PrimeField, count: int, rng: Rng) -> list[FieldElement]:
    return [field.random_element(rng) for _ in range(count)]
from __future__ import annotations

from enum import Enum
from functools import lru_cache
from typing import Optional, Protocol, Union

from ..algebra.field import Rng
from ..algebra.linalg import FieldMatrix, inverse, mat_mul, transpose
from ..core.config import get_settings
from ..core.errors import GeneratorGrowth, ShapeMismatch, ValidationError
from ..core.logger import logger
from .displacement import INV, SYL, TINV, FieldGenerators, apply_displacement, compress, reconstruct

settings = get_settings()

class InversionFlag(str, Enum):
    FAIL = "Fail"
    SINGULAR = "Singular"

InversionOutcome = Union[FieldGenerators, InversionFlag]

class InversionBackend(Protocol):
    name: str

    def invert(self, gen: FieldGenerators, sample_size: int, rng: Rng) -> InversionOutcome:
        """INV generators of the inverse of the SYL-structured matrix, or a flag."""
        ...

class DenseInversionBackend:
    """Reconstruct, invert by Gauss-Jordan, compress under the INV operator. Never fails."""

    name = "dense"

    def invert(self, gen: FieldGenerators, sample_size: int, rng: Rng) -> InversionOutcome:
        field = gen.field
        N = inverse(field, reconstruct(gen))
        if N is None:
            return InversionFlag.SINGULAR
        return compress(apply_displacement(N, INV, field), INV, field)

_BACKENDS = {
    DenseInversionBackend.name: DenseInversionBackend,
}

@lru_cache()
def get_inversion_backend(name: Optional[str] = None) -> InversionBackend:
    name = name or settings.INVERSION_BACKEND
    if name not in _BACKENDS:
        raise ValidationError(f"unknown inversion backend '{name}'", details={"available": sorted(_BACKENDS)})
    return _BACKENDS[name]()

def inv_structured(
    gen: FieldGenerators,
    sample_size: int,
    rng: Rng,
    backend: Optional[InversionBackend] = None
) -> InversionOutcome:
    if gen.operator is not SYL:
        raise ValidationError("inversion expects SYL generators", details={"operator": gen.operator.value})
    backend = backend or get_inversion_backend()
    outcome = backend.invert(gen, sample_size, rng)
    if isinstance(outcome, InversionFlag):
        return outcome
    if outcome.alpha > gen.alpha + settings.GENERATOR_GROWTH:
        logger.error(f"inverse generators grew from {gen.alpha} to {outcome.alpha} columns")
        raise GeneratorGrowth(
            "inverse generators exceed the growth bound",
            details={"alpha": gen.alpha, "returned": outcome.alpha, "backend": backend.name}
        )
    return outcome

def mul_inv_structured_dense(gen: FieldGenerators, Y: FieldMatrix) -> FieldMatrix:
    """N * Y for N given by INV generators."""
    if gen.operator is not INV:
        raise ValidationError("expected INV generators", details={"operator": gen.operator.value})
    if len(Y) != gen.n:
        raise ShapeMismatch("right factor has the wrong row count", details={"n": gen.n, "rows": len(Y)})
    return mat_mul(gen.field, reconstruct(gen), Y)

def left_generators(gen: FieldGenerators) -> FieldGenerators:
    """Generators (-H, G) of N^T under Z0^T X - X Z1."""
    if gen.operator is not INV:
        raise ValidationError("expected INV generators", details={"operator": gen.operator.value})
    p = gen.field.p
    negated = [[-h % p for h in row] for row in gen.H]
    return FieldGenerators(gen.field, negated, [list(row) for row in gen.G], TINV)

def mul_dense_inv_structured(X: FieldMatrix, gen: FieldGenerators) -> FieldMatrix:
    """X * N for N given by INV generators, through the generators of N^T."""
    if any(len(row) != gen.n for row in X):
        raise ShapeMismatch("left factor has the wrong column count", details={"n": gen.n})
    NT = reconstruct(left_generators(gen))
    return transpose(mat_mul(gen.field, NT, transpose(X, gen.n)), len(X))

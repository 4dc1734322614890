"""Displacement operators and generator representations.

Z0 is the down-shift matrix and Z1 the cyclic down-shift. Three operators
are used, all evaluated by index shifts:

    SYLVESTER           Z0   X - X Z1^T
    INVERSE             Z1^T X - X Z0
    TRANSPOSED_INVERSE  Z0^T X - X Z1
"""
from __future__ import annotations

import operator as op
from dataclasses import dataclass
from enum import Enum
from typing import Any, Callable, Optional, Sequence, Union

from ..algebra.field import FieldElement, PrimeField, Rng, random_elements
from ..algebra.linalg import FieldMatrix, outer_product, rank_factorization
from ..algebra.poly import Poly
from ..algebra.polymat import PolyMat, row_echelon
from ..core.errors import ShapeMismatch, ValidationError

class DisplacementOperator(str, Enum):
    SYLVESTER = "SYL"
    INVERSE = "INV"
    TRANSPOSED_INVERSE = "TINV"

SYL = DisplacementOperator.SYLVESTER
INV = DisplacementOperator.INVERSE
TINV = DisplacementOperator.TRANSPOSED_INVERSE

@dataclass(frozen=True)
class _Ring:
    zero: Any
    sub: Callable[[Any, Any], Any]
    add: Callable[[Any, Any], Any]

def _field_ring(field: PrimeField) -> _Ring:
    p = field.p
    return _Ring(0, lambda a, b: (a - b) % p, lambda a, b: (a + b) % p)

def _poly_ring(field: PrimeField) -> _Ring:
    return _Ring(Poly.zero(field), op.sub, op.add)

def _displace(X: Sequence[Sequence[Any]], operator: DisplacementOperator, ring: _Ring) -> list[list[Any]]:
    n = len(X)
    z, sub = ring.zero, ring.sub
    if operator is SYL:
        return [[sub(X[i - 1][j] if i else z, X[i][(j - 1) % n]) for j in range(n)] for i in range(n)]
    if operator is INV:
        return [[sub(X[(i + 1) % n][j], X[i][j + 1] if j < n - 1 else z) for j in range(n)] for i in range(n)]
    return [[sub(X[i + 1][j] if i < n - 1 else z, X[i][(j + 1) % n]) for j in range(n)] for i in range(n)]

def _solve(D: Sequence[Sequence[Any]], operator: DisplacementOperator, ring: _Ring) -> list[list[Any]]:
    """Unique X with operator(X) = D."""
    n = len(D)
    z, sub, add = ring.zero, ring.sub, ring.add
    X = [[z] * n for _ in range(n)]
    if n == 0:
        return X
    if operator is SYL:
        X[0] = [sub(z, D[0][(k + 1) % n]) for k in range(n)]
        for i in range(1, n):
            X[i] = [sub(X[i - 1][(k + 1) % n], D[i][(k + 1) % n]) for k in range(n)]
    elif operator is INV:
        for k in range(n):
            X[k][n - 1] = D[(k - 1) % n][n - 1]
        for j in reversed(range(n - 1)):
            for k in range(n):
                X[k][j] = add(D[(k - 1) % n][j], X[(k - 1) % n][j + 1])
    else:
        X[n - 1] = [sub(z, D[n - 1][(k - 1) % n]) for k in range(n)]
        for i in reversed(range(n - 1)):
            X[i] = [sub(X[i + 1][(k - 1) % n], D[i][(k - 1) % n]) for k in range(n)]
    return X

@dataclass(frozen=True)
class FieldGenerators:
    """(G, H), n x alpha each, with operator(N) = G H^T over the field."""
    field: PrimeField
    G: FieldMatrix
    H: FieldMatrix
    operator: DisplacementOperator = SYL

    def __post_init__(self) -> None:
        if len(self.G) != len(self.H):
            raise ShapeMismatch("generator row counts differ", details={"G": len(self.G), "H": len(self.H)})
        widths = {len(row) for row in self.G} | {len(row) for row in self.H}
        if len(widths) > 1:
            raise ShapeMismatch("generator column counts differ", details={"widths": sorted(widths)})

    @property
    def n(self) -> int:
        return len(self.G)

    @property
    def alpha(self) -> int:
        return len(self.G[0]) if self.G else 0

    def product(self) -> FieldMatrix:
        return outer_product(self.field, self.G, self.H)

@dataclass(frozen=True)
class PolyGenerators:
    """(G, H), n x alpha polynomial matrices, with operator(M) = G H^T."""
    G: PolyMat
    H: PolyMat
    operator: DisplacementOperator = SYL

    def __post_init__(self) -> None:
        if self.G.shape != self.H.shape:
            raise ShapeMismatch("generator shapes differ", details={"G": self.G.shape, "H": self.H.shape})

    @property
    def field(self) -> PrimeField:
        return self.G.field

    @property
    def n(self) -> int:
        return self.G.rows

    @property
    def alpha(self) -> int:
        return self.G.cols

    @property
    def degree(self):
        return max(self.G.degree, self.H.degree)

    def evaluate(self, a: FieldElement) -> FieldGenerators:
        return FieldGenerators(self.field, self.G.evaluate(a), self.H.evaluate(a), self.operator)

    def product(self) -> PolyMat:
        return self.G @ self.H.transpose()

Matrix = Union[PolyMat, FieldMatrix]

def apply_displacement(
    M: Matrix,
    operator: DisplacementOperator = SYL,
    field: Optional[PrimeField] = None
) -> Matrix:
    if isinstance(M, PolyMat):
        if not M.is_square():
            raise ShapeMismatch("displacement of a non-square matrix", details={"shape": M.shape})
        n = M.rows
        return PolyMat(M.field, _displace(M.entries, operator, _poly_ring(M.field)), n, n)
    if field is None:
        raise ValidationError("a field is required for constant matrices")
    if any(len(row) != len(M) for row in M):
        raise ShapeMismatch("displacement of a non-square matrix", details={"rows": len(M)})
    return _displace(M, operator, _field_ring(field))

def compress(
    D: Matrix,
    operator: DisplacementOperator = SYL,
    field: Optional[PrimeField] = None
) -> Union[FieldGenerators, PolyGenerators]:
    """Generators with G H^T = D and alpha = rank(D)."""
    if isinstance(D, PolyMat):
        n = D.rows
        ech = row_echelon(D.transpose(), inverse=True)
        r = ech.rank
        G = ech.E.submatrix(range(r), range(n)).transpose()
        H = ech.V.submatrix(range(n), range(r))
        return PolyGenerators(G, H, operator)
    if field is None:
        raise ValidationError("a field is required for constant matrices")
    G, H = rank_factorization(field, D)
    return FieldGenerators(field, G, H, operator)

def reconstruct(gen: Union[FieldGenerators, PolyGenerators]) -> Matrix:
    """The unique matrix whose displacement under gen.operator is G H^T."""
    if isinstance(gen, PolyGenerators):
        n = gen.n
        D = gen.product()
        return PolyMat(gen.field, _solve(D.entries, gen.operator, _poly_ring(gen.field)), n, n)
    return _solve(gen.product(), gen.operator, _field_ring(gen.field))

def generators_of(M: Matrix, field: Optional[PrimeField] = None) -> Union[FieldGenerators, PolyGenerators]:
    """Compressed SYL generators of a dense matrix."""
    return compress(apply_displacement(M, SYL, field), SYL, field)

def random_generators(
    field: PrimeField,
    n: int,
    alpha: int,
    degree: int,
    rng: Rng
) -> PolyGenerators:
    """SYL generators with uniformly random entries of degree <= ``degree``."""
    def random_mat() -> PolyMat:
        return PolyMat(
            field,
            [[Poly(field, random_elements(field, degree + 1, rng)) for _ in range(alpha)] for _ in range(n)],
            n,
            alpha
        )
    return PolyGenerators(random_mat(), random_mat(), SYL)

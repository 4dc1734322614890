"""Dense linear algebra over a prime field on row-major lists of ints.

Elimination runs on sympy ``DomainMatrix`` over ``GF(p)``; callers see plain
lists with entries in [0, p).
"""
from __future__ import annotations

from functools import lru_cache
from typing import Optional, Sequence

from sympy.polys.domains import GF
from sympy.polys.domains.finitefield import FiniteField
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.exceptions import DMNonInvertibleMatrixError

from ..core.errors import ShapeMismatch
from .field import FieldElement, PrimeField

FieldMatrix = list[list[FieldElement]]

@lru_cache()
def _domain(p: int) -> FiniteField:
    return GF(p)

def to_domain_matrix(field: PrimeField, A: Sequence[Sequence[int]], cols: Optional[int] = None) -> DomainMatrix:
    K = _domain(field.p)
    if cols is None:
        cols = len(A[0]) if A else 0
    return DomainMatrix([[K(int(v)) for v in row] for row in A], (len(A), cols), K)

def from_domain_matrix(field: PrimeField, M: DomainMatrix) -> FieldMatrix:
    p = field.p
    rows, cols = M.shape
    if not rows or not cols:
        return [[] for _ in range(rows)]
    return [[int(v) % p for v in row] for row in M.to_list()]

def zeros(rows: int, cols: int) -> FieldMatrix:
    return [[0] * cols for _ in range(rows)]

def identity(n: int) -> FieldMatrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]

def copy(A: Sequence[Sequence[FieldElement]]) -> FieldMatrix:
    return [list(row) for row in A]

def transpose(A: Sequence[Sequence[FieldElement]], cols: Optional[int] = None) -> FieldMatrix:
    if cols is None:
        cols = len(A[0]) if A else 0
    return [[row[j] for row in A] for j in range(cols)]

def mat_mul(field: PrimeField, A: Sequence[Sequence[int]], B: Sequence[Sequence[int]]) -> FieldMatrix:
    inner = len(B)
    if A and len(A[0]) != inner:
        raise ShapeMismatch(
            "inner dimensions differ",
            details={"left_cols": len(A[0]), "right_rows": inner}
        )
    cols = len(B[0]) if B else 0
    if not A or not inner or not cols:
        return zeros(len(A), cols)
    product = to_domain_matrix(field, A) * to_domain_matrix(field, B)
    return from_domain_matrix(field, product)

def outer_product(field: PrimeField, G: Sequence[Sequence[int]], H: Sequence[Sequence[int]]) -> FieldMatrix:
    """G * H^T for generator pairs stored as n x alpha row lists."""
    alpha = len(G[0]) if G else 0
    if not alpha:
        return zeros(len(G), len(H))
    return mat_mul(field, G, transpose(H, alpha))

def mat_sub(field: PrimeField, A: Sequence[Sequence[int]], B: Sequence[Sequence[int]]) -> FieldMatrix:
    p = field.p
    return [[(a - b) % p for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]

def row_echelon(field: PrimeField, A: Sequence[Sequence[int]]) -> tuple[FieldMatrix, list[int]]:
    """Reduced row echelon form and pivot columns."""
    if not A or not A[0]:
        return copy(A), []
    R, pivots = to_domain_matrix(field, A).rref()
    return from_domain_matrix(field, R), list(pivots)

def rank(field: PrimeField, A: Sequence[Sequence[int]]) -> int:
    if not A or not A[0]:
        return 0
    return to_domain_matrix(field, A).rank()

def rank_factorization(field: PrimeField, D: Sequence[Sequence[int]]) -> tuple[FieldMatrix, FieldMatrix]:
    """Return (G, H), both n x r with r = rank(D), such that G * H^T = D."""
    R, pivots = row_echelon(field, D)
    G = [[row[j] for j in pivots] for row in D]
    cols = len(D[0]) if D else 0
    H = [[R[k][j] for k in range(len(pivots))] for j in range(cols)]
    return G, H

def inverse(field: PrimeField, A: Sequence[Sequence[int]]) -> Optional[FieldMatrix]:
    """Inverse of a square matrix, or None when A is singular."""
    n = len(A)
    if any(len(row) != n for row in A):
        raise ShapeMismatch("inverse of a non-square matrix", details={"rows": n})
    if not n:
        return []
    try:
        inv = to_domain_matrix(field, A).inv()
    except (DMNonInvertibleMatrixError, ZeroDivisionError):
        return None
    return from_domain_matrix(field, inv)

def determinant(field: PrimeField, A: Sequence[Sequence[int]]) -> FieldElement:
    if not A:
        return 1
    return int(to_domain_matrix(field, A).det()) % field.p

def nullspace(field: PrimeField, A: Sequence[Sequence[int]], cols: int) -> FieldMatrix:
    """Basis of the right kernel {x : A x = 0}; free coordinates are unit vectors."""
    p = field.p
    R, pivots = row_echelon(field, A) if A else ([], [])
    free = [j for j in range(cols) if j not in pivots]
    basis = []
    for f in free:
        x = [0] * cols
        x[f] = 1
        for r, j in enumerate(pivots):
            x[j] = -R[r][f] % p
        basis.append(x)
    return basis

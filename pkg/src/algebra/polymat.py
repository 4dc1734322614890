from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional, Sequence, Union

from ..core.errors import InvalidIndexTuple, NotReduced, ShapeMismatch, SingularMatrix, ValidationError
from .field import FieldElement, PrimeField, field_inv
from .linalg import FieldMatrix, determinant as field_determinant, rank
from .poly import NEG_INF, Degree, Poly, interpolate

Shift = tuple[int, ...]

class PolyMat:
    """Immutable dense matrix of polynomials."""

    __slots__ = ("field", "rows", "cols", "entries")

    def __init__(
        self,
        field: PrimeField,
        entries: Sequence[Sequence[Poly]],
        rows: Optional[int] = None,
        cols: Optional[int] = None
    ) -> None:
        self.field = field
        self.entries: tuple[tuple[Poly, ...], ...] = tuple(tuple(row) for row in entries)
        self.rows = len(self.entries) if rows is None else rows
        if cols is None:
            cols = len(self.entries[0]) if self.entries else 0
        self.cols = cols
        if len(self.entries) != self.rows or any(len(row) != cols for row in self.entries):
            raise ShapeMismatch(
                "matrix rows have inconsistent lengths",
                details={"rows": self.rows, "cols": cols}
            )

    # Constructors

    @classmethod
    def zeros(cls, field: PrimeField, rows: int, cols: int) -> PolyMat:
        z = Poly.zero(field)
        return cls(field, [[z] * cols for _ in range(rows)], rows, cols)

    @classmethod
    def identity(cls, field: PrimeField, n: int) -> PolyMat:
        return cls.diagonal(field, [Poly.one(field)] * n)

    @classmethod
    def diagonal(cls, field: PrimeField, diag: Sequence[Poly]) -> PolyMat:
        n = len(diag)
        z = Poly.zero(field)
        return cls(field, [[diag[i] if i == j else z for j in range(n)] for i in range(n)], n, n)

    @classmethod
    def from_coefficients(cls, field: PrimeField, nested: Sequence[Sequence[Sequence[int]]]) -> PolyMat:
        return cls(field, [[Poly(field, cs) for cs in row] for row in nested])

    @classmethod
    def from_field_matrix(cls, field: PrimeField, A: Sequence[Sequence[int]], cols: Optional[int] = None) -> PolyMat:
        if cols is None:
            cols = len(A[0]) if A else 0
        return cls(field, [[Poly(field, [a]) for a in row] for row in A], len(A), cols)

    # Access

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, key: tuple[int, int]) -> Poly:
        i, j = key
        return self.entries[i][j]

    def row(self, i: int) -> tuple[Poly, ...]:
        return self.entries[i]

    def column(self, j: int) -> tuple[Poly, ...]:
        return tuple(row[j] for row in self.entries)

    def __iter__(self) -> Iterator[tuple[Poly, ...]]:
        return iter(self.entries)

    @property
    def degree(self) -> Degree:
        return max((e.degree for row in self.entries for e in row), default=NEG_INF)

    def is_zero(self) -> bool:
        return all(e.is_zero() for row in self.entries for e in row)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def to_lists(self) -> list[list[Poly]]:
        return [list(row) for row in self.entries]

    # Structure

    def transpose(self) -> PolyMat:
        return PolyMat(self.field, [self.column(j) for j in range(self.cols)], self.cols, self.rows)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> PolyMat:
        return PolyMat(self.field, [[self.entries[i][j] for j in cols] for i in rows], len(rows), len(cols))

    def reverse_rows(self) -> PolyMat:
        return PolyMat(self.field, self.entries[::-1], self.rows, self.cols)

    def vstack(self, other: PolyMat) -> PolyMat:
        if self.cols != other.cols:
            raise ShapeMismatch("vstack with different column counts", details={"cols": [self.cols, other.cols]})
        return PolyMat(self.field, self.entries + other.entries, self.rows + other.rows, self.cols)

    def hstack(self, other: PolyMat) -> PolyMat:
        if self.rows != other.rows:
            raise ShapeMismatch("hstack with different row counts", details={"rows": [self.rows, other.rows]})
        return PolyMat(
            self.field,
            [a + b for a, b in zip(self.entries, other.entries)],
            self.rows,
            self.cols + other.cols
        )

    # Arithmetic

    def _check_same_shape(self, other: PolyMat) -> None:
        if self.shape != other.shape:
            raise ShapeMismatch("matrix shapes differ", details={"left": self.shape, "right": other.shape})

    def __add__(self, other: PolyMat) -> PolyMat:
        self._check_same_shape(other)
        return PolyMat(
            self.field,
            [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.entries, other.entries)],
            self.rows,
            self.cols
        )

    def __sub__(self, other: PolyMat) -> PolyMat:
        self._check_same_shape(other)
        return PolyMat(
            self.field,
            [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.entries, other.entries)],
            self.rows,
            self.cols
        )

    def __neg__(self) -> PolyMat:
        return PolyMat(self.field, [[-a for a in row] for row in self.entries], self.rows, self.cols)

    def __matmul__(self, other: PolyMat) -> PolyMat:
        if self.cols != other.rows:
            raise ShapeMismatch(
                "inner dimensions differ",
                details={"left": self.shape, "right": other.shape}
            )
        zero = Poly.zero(self.field)
        out = []
        for row in self.entries:
            acc = [zero] * other.cols
            for k, a in enumerate(row):
                if a:
                    acc = [s + a * b for s, b in zip(acc, other.entries[k])]
            out.append(acc)
        return PolyMat(self.field, out, self.rows, other.cols)

    def scale(self, c: Union[Poly, int]) -> PolyMat:
        return PolyMat(self.field, [[a * c for a in row] for row in self.entries], self.rows, self.cols)

    def mod(self, mu: Poly) -> PolyMat:
        return PolyMat(self.field, [[a % mu for a in row] for row in self.entries], self.rows, self.cols)

    def evaluate(self, a: FieldElement) -> FieldMatrix:
        return [[e(a) for e in row] for row in self.entries]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PolyMat):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    __hash__ = None

    def __repr__(self) -> str:
        body = "; ".join("[" + ", ".join(str(e) for e in row) + "]" for row in self.entries)
        return f"PolyMat({self.rows}x{self.cols}: {body})"

@dataclass(frozen=True)
class IndexTuple:
    """Strictly increasing column indices; the modules below require indices[0] = 0."""
    indices: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(j < 0 for j in self.indices):
            raise InvalidIndexTuple("negative index", details={"indices": list(self.indices)})
        if any(a >= b for a, b in zip(self.indices, self.indices[1:])):
            raise InvalidIndexTuple("indices are not strictly increasing", details={"indices": list(self.indices)})

    @classmethod
    def leading(cls, m: int) -> IndexTuple:
        return cls(tuple(range(m)))

    def __len__(self) -> int:
        return len(self.indices)

    def __iter__(self) -> Iterator[int]:
        return iter(self.indices)

    def __getitem__(self, k: int) -> int:
        return self.indices[k]

    @property
    def is_leading(self) -> bool:
        return self.indices == tuple(range(len(self.indices)))

    def validate_for(self, n: int) -> None:
        m = len(self.indices)
        if not 1 <= m <= n:
            raise InvalidIndexTuple(f"need 1 <= m <= {n}, got m = {m}", details={"indices": list(self.indices)})
        if self.indices[0] != 0:
            raise InvalidIndexTuple("first index must be 0", details={"indices": list(self.indices)})
        if self.indices[-1] >= n:
            raise InvalidIndexTuple(f"index out of range for n = {n}", details={"indices": list(self.indices)})

    def complement(self, n: int) -> tuple[int, ...]:
        chosen = set(self.indices)
        return tuple(k for k in range(n) if k not in chosen)

    def permutation(self, n: int) -> tuple[int, ...]:
        """Column order (j_0, ..., j_{m-1}, k_0, ..., k_{n-m-1})."""
        return self.indices + self.complement(n)

    def embed(self, vector: Sequence[Poly], n: int) -> list[Poly]:
        """[p 0] * pi: place p_i at column j_i, zeros elsewhere."""
        if len(vector) != len(self.indices):
            raise ShapeMismatch("vector length differs from tuple length", details={"m": len(self.indices)})
        out = [Poly.zero(vector[0].field)] * n
        for j, v in zip(self.indices, vector):
            out[j] = v
        return out

def _check_shift(M: PolyMat, s: Sequence[int]) -> Shift:
    if len(s) != M.cols:
        raise ShapeMismatch("shift length differs from column count", details={"shift": len(s), "cols": M.cols})
    return tuple(s)

def shifted_row_degree(M: PolyMat, s: Sequence[int]) -> list[Degree]:
    s = _check_shift(M, s)
    return [max((e.degree + sj for e, sj in zip(row, s)), default=NEG_INF) for row in M.entries]

def leading_matrix(M: PolyMat, s: Sequence[int]) -> FieldMatrix:
    s = _check_shift(M, s)
    out = []
    for row, t in zip(M.entries, shifted_row_degree(M, s)):
        if t is NEG_INF:
            out.append([0] * M.cols)
        else:
            out.append([e.coefficient(t - sj) for e, sj in zip(row, s)])
    return out

def is_reduced(M: PolyMat, s: Sequence[int]) -> bool:
    if M.rows > M.cols:
        return False
    return rank(M.field, leading_matrix(M, s)) == M.rows

def is_weak_popov(M: PolyMat, s: Sequence[int]) -> bool:
    """Row i has its s-pivot, the rightmost entry reaching its s-row degree, in column i."""
    if not M.is_square():
        return False
    lmat = leading_matrix(M, s)
    n = M.rows
    return all(lmat[i][i] != 0 and not any(lmat[i][i + 1:]) for i in range(n))

def is_popov(M: PolyMat, s: Sequence[int]) -> bool:
    """Weak Popov with monic pivots on the diagonal, each of degree strictly above
    every other entry in its column.

    The degree condition reads down columns, not along rows: in row i the
    entries left of the pivot may have degree equal to or above deg M[i, i].
    """
    if not is_weak_popov(M, s):
        return False
    for j in range(M.cols):
        pivot = M[j, j]
        if not pivot.is_monic():
            return False
        if any(M[i, j].degree >= pivot.degree for i in range(M.rows) if i != j):
            return False
    return True

def is_hnf(M: PolyMat) -> bool:
    if not M.is_square():
        return False
    for i in range(M.rows):
        diag = M[i, i]
        if not diag.is_monic():
            return False
        if any(M[i, j] for j in range(i + 1, M.cols)):
            return False
        if any(M[i, j].degree >= M[j, j].degree for j in range(i)):
            return False
    return True

class RowOperations:
    """Row operations on a working matrix, mirrored on a transform U and its inverse V."""

    def __init__(self, M: PolyMat, transform: bool = False, inverse: bool = False) -> None:
        self.field = M.field
        self.A = M.to_lists()
        n = M.rows
        eye = PolyMat.identity(M.field, n)
        self.U = eye.to_lists() if transform else None
        self.V = eye.to_lists() if inverse else None

    def axpy(self, i: int, k: int, q: Poly, upto: Optional[int] = None) -> None:
        """row_i -= q * row_k."""
        A = self.A
        width = len(A[i]) if upto is None else upto
        for c in range(width):
            if A[k][c]:
                A[i][c] = A[i][c] - q * A[k][c]
        if self.U is not None:
            ui, uk = self.U[i], self.U[k]
            for c in range(len(ui)):
                if uk[c]:
                    ui[c] = ui[c] - q * uk[c]
        if self.V is not None:
            for vrow in self.V:
                if vrow[i]:
                    vrow[k] = vrow[k] + q * vrow[i]

    def swap(self, i: int, k: int) -> None:
        if i == k:
            return
        self.A[i], self.A[k] = self.A[k], self.A[i]
        if self.U is not None:
            self.U[i], self.U[k] = self.U[k], self.U[i]
        if self.V is not None:
            for vrow in self.V:
                vrow[i], vrow[k] = vrow[k], vrow[i]

    def scale(self, i: int, c: FieldElement) -> None:
        self.A[i] = [a.scale(c) for a in self.A[i]]
        if self.U is not None:
            self.U[i] = [a.scale(c) for a in self.U[i]]
        if self.V is not None:
            inv = field_inv(self.field, c)
            for vrow in self.V:
                vrow[i] = vrow[i].scale(inv)

    def eliminate(self, rows: Sequence[int], j: int, upto: Optional[int] = None) -> Optional[int]:
        """Euclidean elimination in column j among ``rows``; returns the surviving row."""
        while True:
            nonzero = [i for i in rows if self.A[i][j]]
            if not nonzero:
                return None
            pivot = min(nonzero, key=lambda i: len(self.A[i][j].coeffs))
            others = [i for i in nonzero if i != pivot]
            if not others:
                return pivot
            for i in others:
                q = self.A[i][j] // self.A[pivot][j]
                self.axpy(i, pivot, q, upto)

    def matrix(self, which: list[list[Poly]], rows: int, cols: int) -> PolyMat:
        return PolyMat(self.field, which, rows, cols)

def dense_hnf(M: PolyMat, transform: bool = True) -> tuple[PolyMat, Optional[PolyMat]]:
    """Lower-triangular Hermite normal form H = U * M of a square nonsingular M."""
    if not M.is_square():
        raise ShapeMismatch("HNF needs a square matrix", details={"shape": M.shape})
    n = M.rows
    ops = RowOperations(M, transform=transform)
    for j in reversed(range(n)):
        pivot = ops.eliminate(range(j + 1), j, upto=j + 1)
        if pivot is None:
            raise SingularMatrix("matrix is singular", details={"column": j})
        ops.swap(pivot, j)
    for j in range(n):
        ops.scale(j, field_inv(M.field, ops.A[j][j].lc))
    for j in reversed(range(n)):
        for i in range(j + 1, n):
            q = ops.A[i][j] // ops.A[j][j]
            if q:
                ops.axpy(i, j, q, upto=j + 1)
    H = ops.matrix(ops.A, n, n)
    U = ops.matrix(ops.U, n, n) if transform else None
    return H, U

@dataclass(frozen=True)
class Echelon:
    """U * M = E and M = V * E, with the first ``rank`` rows of E nonzero."""
    E: PolyMat
    rank: int
    pivots: tuple[int, ...]
    U: Optional[PolyMat] = None
    V: Optional[PolyMat] = None

def row_echelon(M: PolyMat, transform: bool = False, inverse: bool = False) -> Echelon:
    ops = RowOperations(M, transform=transform, inverse=inverse)
    r = 0
    pivots = []
    for j in range(M.cols):
        if r == M.rows:
            break
        pivot = ops.eliminate(range(r, M.rows), j)
        if pivot is None:
            continue
        ops.swap(pivot, r)
        pivots.append(j)
        r += 1
    n = M.rows
    return Echelon(
        E=ops.matrix(ops.A, n, M.cols),
        rank=r,
        pivots=tuple(pivots),
        U=ops.matrix(ops.U, n, n) if transform else None,
        V=ops.matrix(ops.V, n, n) if inverse else None
    )

def left_kernel_basis(T: PolyMat) -> PolyMat:
    """Rows spanning {u : u * T = 0}."""
    ech = row_echelon(T, transform=True)
    return ech.U.submatrix(range(ech.rank, T.rows), range(T.rows))

def column_basis(F: PolyMat) -> PolyMat:
    ech = row_echelon(F.transpose())
    return ech.E.submatrix(range(ech.rank), range(F.rows)).transpose()

def hnf_row_membership(H: PolyMat, vector: Sequence[Poly]) -> bool:
    """Whether a row vector lies in the row span of a nonsingular HNF."""
    v = list(vector)
    for j in reversed(range(H.rows)):
        q, r = divmod(v[j], H[j, j])
        if r:
            return False
        if q:
            v = [a - q * b for a, b in zip(v, H.row(j))]
    return True

def det_degree_reduced(M: PolyMat, s: Sequence[int]) -> int:
    if not M.is_square() or not is_reduced(M, s):
        raise NotReduced("matrix is not in shifted-reduced form", details={"shape": M.shape})
    return sum(shifted_row_degree(M, s)) - sum(s)

def adjugate_degree_bound(M: PolyMat, s: Sequence[int]) -> int:
    return det_degree_reduced(M, s) + max(s) - min(s)

def determinant(M: PolyMat) -> Poly:
    """det(M) by evaluation at deg-bound + 1 points and interpolation."""
    if not M.is_square():
        raise ShapeMismatch("determinant of a non-square matrix", details={"shape": M.shape})
    field = M.field
    if M.rows == 0:
        return Poly.one(field)
    row_degrees = [max((e.degree for e in row), default=NEG_INF) for row in M.entries]
    if any(d is NEG_INF for d in row_degrees):
        return Poly.zero(field)
    bound = sum(row_degrees)
    if bound + 1 > field.p:
        raise ValidationError("field too small for the determinant degree bound", details={"bound": bound})
    points = list(range(bound + 1))
    values = [field_determinant(field, M.evaluate(a)) for a in points]
    return interpolate(field, points, values)

"""Bases of relation modules R(mu, F) = {p : p F = 0 mod mu}."""
from __future__ import annotations

from typing import Optional, Sequence

from ..core.errors import GcdNotOne, NoSolution, ShapeMismatch, ValidationError
from ..core.logger import logger
from .field import field_inv
from .poly import Poly, mod_inverse, xgcd
from .polymat import PolyMat, RowOperations, dense_hnf, left_kernel_basis

def hnf_relbas(mu: Poly, F: PolyMat) -> PolyMat:
    """HNF basis of R(mu, F), via a kernel basis of [F; mu I]."""
    if mu.is_zero():
        raise ValidationError("relation modulus must be nonzero")
    field = F.field
    m, n = F.shape
    reduced = F.mod(mu)
    if reduced.is_zero():
        return PolyMat.identity(field, m)
    stacked = reduced.vstack(PolyMat.diagonal(field, [mu] * n))
    kernel = left_kernel_basis(stacked)
    basis = kernel.submatrix(range(kernel.rows), range(m))
    H, _ = dense_hnf(basis, transform=False)
    return H

def _pivot(row: Sequence[Poly], s: Sequence[int]) -> Optional[tuple[int, int]]:
    """(index, degree) of the rightmost entry reaching the s-row degree."""
    best = None
    best_key = None
    for j, (e, sj) in enumerate(zip(row, s)):
        if e:
            key = e.degree + sj
            if best_key is None or key >= best_key:
                best, best_key = j, key
    return None if best is None else (best, row[best].degree)

def popov_form(M: PolyMat, s: Sequence[int]) -> PolyMat:
    """s-Popov form of a square nonsingular matrix (same row span)."""
    if len(s) != M.cols:
        raise ShapeMismatch("shift length differs from column count", details={"shift": len(s), "cols": M.cols})
    field = M.field
    n = M.rows
    ops = RowOperations(M)

    # Weak Popov: distinct pivot indices
    while True:
        seen: dict[int, int] = {}
        clash = None
        for i in range(n):
            piv = _pivot(ops.A[i], s)
            if piv is None:
                raise ValidationError("matrix is singular", details={"row": i})
            if piv[0] in seen:
                clash = (seen[piv[0]], i, piv[0])
                break
            seen[piv[0]] = i
        if clash is None:
            break
        a, b, j = clash
        if ops.A[a][j].degree < ops.A[b][j].degree:
            a, b = b, a
        da, db = ops.A[a][j].degree, ops.A[b][j].degree
        c = ops.A[a][j].lc * field_inv(field, ops.A[b][j].lc)
        ops.axpy(a, b, Poly.monomial(field, da - db, c))

    order = sorted(range(n), key=lambda i: _pivot(ops.A[i], s)[0])
    rows = [ops.A[i] for i in order]
    ops.A = rows
    for i in range(n):
        ops.scale(i, field_inv(field, ops.A[i][i].lc))

    # Normalize: pivots dominate their columns
    for i in range(n):
        while True:
            row = ops.A[i]
            violating = [
                j for j in range(n)
                if j != i and row[j] and row[j].degree >= ops.A[j][j].degree
            ]
            if not violating:
                break
            j = max(violating, key=lambda k: (row[k].degree + s[k], k))
            q = Poly.monomial(field, row[j].degree - ops.A[j][j].degree, row[j].lc)
            ops.axpy(i, j, q)
    return PolyMat(field, ops.A, n, n)

def popov_relbas(mu: Poly, F: PolyMat, s: Sequence[int]) -> PolyMat:
    return popov_form(hnf_relbas(mu, F), s)

def relbas_onecol_hrow(mu: Poly, c: Sequence[Poly]) -> PolyMat:
    """HNF basis of R(mu, c) for one column with gcd(c_0, mu) = 1."""
    field = mu.field
    mu = mu.monic()
    m = len(c)
    inv = mod_inverse(c[0], mu)
    zero, one = Poly.zero(field), Poly.one(field)
    rows = [[mu] + [zero] * (m - 1)]
    for i in range(1, m):
        b = (-(c[i] * inv)) % mu
        rows.append([b] + [one if k == i else zero for k in range(1, m)])
    return PolyMat(field, rows, m, m)

def bezout_modulo(mu: Poly, row: Sequence[Poly]) -> list[Poly]:
    """Coefficients u with sum u_k row_k = 1 mod mu, by a left fold of xgcd."""
    field = mu.field
    g = mu
    coeffs = [Poly.zero(field)] * len(row)
    for k, entry in enumerate(row):
        if g.is_one():
            break
        e = entry % mu
        if e.is_zero():
            continue
        h, u, v = xgcd(g, e)
        coeffs = [(u * a) % mu for a in coeffs]
        coeffs[k] = (coeffs[k] + v) % mu
        g = h
    if not g.is_one():
        raise GcdNotOne("row entries share a factor with mu", details={"gcd": str(g)})
    return coeffs

def relbas_tworow(
    mu: Poly,
    row0: Sequence[Poly],
    rowi: Sequence[Poly],
    coeffs: Optional[list[Poly]] = None
) -> Poly:
    """b with b * row0 + rowi = 0 mod mu, deg b < deg mu."""
    mu = mu.monic()
    if coeffs is None:
        coeffs = bezout_modulo(mu, row0)
    b = Poly.zero(mu.field)
    for u, r in zip(coeffs, rowi):
        b = b - u * r
    b = b % mu
    if any((b * r0 + ri) % mu for r0, ri in zip(row0, rowi)):
        logger.debug("two-row relation basis is not of the expected shape")
        raise NoSolution("row is not a multiple of row 0 modulo mu")
    return b

"""The block-Toeplitz matrix M of a DRL basis and SYL generators of L * M.

Rows of M hold y^k * g_i on the basis (1, y, ..., y^(n-1)), block i having
counts[i] rows. L reverses the row order.
"""
from __future__ import annotations

from ..algebra.poly import Poly
from ..algebra.polymat import PolyMat
from ..core.errors import DegreeTooHigh
from ..structured.displacement import SYL, PolyGenerators
from .grobner import DrlBasis, Staircase
from .polynomial import BivPoly

def row_polynomials(gb: DrlBasis, st: Staircase) -> list[BivPoly]:
    """(g_0, y g_0, ..., y^(n_0 - 1) g_0, ..., y^(n_l - 1) g_l)."""
    return [g.shift_y(k) for g, count in zip(gb.polys, st.counts) for k in range(count)]

def build_matrix(gb: DrlBasis, st: Staircase) -> PolyMat:
    n = st.n
    return PolyMat(gb.field, [f.to_row(n) for f in row_polynomials(gb, st)], n, n)

def psi(f: BivPoly, n: int) -> BivPoly:
    """y * (f - f_(n-1) y^(n-1)) + f_(n-1): cyclic shift of the coefficient row."""
    if f.ydeg >= n:
        raise DegreeTooHigh(f"y-degree must be below {n}", details={"ydeg": f.ydeg, "n": n})
    if f.ydeg < n - 1:
        return f.shift_y(1)
    top = f.coefficient(n - 1)
    return BivPoly(f.field, [top] + list(f.ycoeffs[: n - 1]))

def displacement_generators_LM(gb: DrlBasis, st: Staircase) -> PolyGenerators:
    """SYL generators (G, H), n x l, of L * M.

    Column k of G is the identity column m_k = n - (n_0 + ... + n_k), column k
    of H holds g_(k+1) - psi(y^(n_k - 1) g_k), with g_l = 0.
    """
    field = gb.field
    n = st.n
    ell = len(gb.polys)
    zero, one = Poly.zero(field), Poly.one(field)
    G = [[zero] * ell for _ in range(n)]
    H = [[zero] * ell for _ in range(n)]
    filled = 0
    for k, (g, count) in enumerate(zip(gb.polys, st.counts)):
        filled += count
        m_k = n - filled
        nxt = gb.polys[k + 1] if k + 1 < ell else BivPoly.zero(field)
        diff = nxt - psi(g.shift_y(count - 1), n)
        G[m_k][k] = one
        for j, c in enumerate(diff.to_row(n)):
            H[j][k] = c
    return PolyGenerators(PolyMat(field, G, n, ell), PolyMat(field, H, n, ell), SYL)

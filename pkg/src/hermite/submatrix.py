"""Leading HNF submatrix H[J, J] of a structured matrix.

The column slice N[:, 0] is tried first. When its denominator already has
degree D the HNF has a single nontrivial column (Hcol) and the relation
basis of that column gives H[J, J]. Otherwise the row slice N[J, :] is used,
with a fast two-row path when the HNF has a single nontrivial row (Hrow).
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Union

from ..algebra.field import FieldElement, Rng
from ..algebra.poly import Poly, gcd, gcd_many
from ..algebra.polymat import IndexTuple, PolyMat
from ..algebra.relbas import bezout_modulo, hnf_relbas, relbas_onecol_hrow, relbas_tworow
from ..core.logger import logger
from ..core.outcomes import Fail, Singular
from ..structured.displacement import PolyGenerators
from ..structured.inversion import InversionBackend
from ..structured.modsolve import default_sample_size
from .slices import InverseSlice, inverse_cols, inverse_rows

class Branch(str, Enum):
    HCOL_HROW = "HcolHrow"
    HCOL = "Hcol"
    HROW = "Hrow"
    GENERAL = "General"

class Certificate(str, Enum):
    TRUE = "True"
    UNKNOWN = "Unknown"

@dataclass(frozen=True)
class HnfSubResult:
    """HNF basis of the module M_J; cert TRUE means basis == H[J, J]."""
    basis: PolyMat
    cert: Certificate
    branch: Branch
    mu: Poly
    indices: IndexTuple
    det_exact: bool = False
    points: tuple[tuple[FieldElement, ...], ...] = ()

    @property
    def certified(self) -> bool:
        return self.cert is Certificate.TRUE

HnfSubOutcome = Union[Fail, Singular, HnfSubResult]

def check_fills_space(B: PolyMat, J: IndexTuple, D: int) -> bool:
    """Whether a prefix {0..k} of J has B diagonal degrees summing to D."""
    total = 0
    for k, j in enumerate(J):
        if j != k:
            break
        total += B[k, k].degree
        if total == D:
            return True
    return False

def _certify(B: PolyMat, J: IndexTuple, D: int) -> Certificate:
    # a prefix whose degrees reach D >= deg det M fills the whole space
    if J.is_leading or check_fills_space(B, J, D):
        return Certificate.TRUE
    return Certificate.UNKNOWN

def _column(field, entries) -> PolyMat:
    return PolyMat(field, [[e] for e in entries], len(entries), 1)

def _hrow_basis(mu: Poly, R: PolyMat) -> PolyMat:
    field = mu.field
    m = R.rows
    row0 = R.row(0)
    coeffs = bezout_modulo(mu, row0)
    zero, one = Poly.zero(field), Poly.one(field)
    rows = [[mu.monic()] + [zero] * (m - 1)]
    for i in range(1, m):
        b = relbas_tworow(mu, row0, R.row(i), coeffs)
        rows.append([b] + [one if k == i else zero for k in range(1, m)])
    return PolyMat(field, rows, m, m)

def hermite_submatrix(
    gen: PolyGenerators,
    J: IndexTuple,
    D: int,
    Da: int,
    S_size: Optional[int] = None,
    rng: Optional[Rng] = None,
    backend: Optional[InversionBackend] = None,
    det_exact: bool = False
) -> HnfSubOutcome:
    """H[J, J] for M given by SYL generators, D >= deg det M, Da >= deg adj M.

    Returns Fail or Singular flags from the modular solvers unchanged.
    """
    J.validate_for(gen.n)
    field = gen.field
    rng = rng or Rng()
    if S_size is None:
        S_size = default_sample_size(field, gen.n, D + Da + 1, D)
    col_rng, row_rng = rng.fork(2)

    cols = inverse_cols(gen, IndexTuple((0,)), D, Da, S_size, col_rng, backend)
    if not isinstance(cols, InverseSlice):
        return cols
    mu = cols.mu
    c = cols.numerators.column(0)
    cJ = [c[j] for j in J]

    if mu.degree == D:
        # deg mu = D forces D = deg det M
        if gcd(mu, c[0]).is_one():
            B = relbas_onecol_hrow(mu, cJ)
            branch, cert = Branch.HCOL_HROW, Certificate.TRUE
        else:
            B = hnf_relbas(mu, _column(field, cJ))
            branch, cert = Branch.HCOL, _certify(B, J, D)
        logger.info(f"branch {branch.value}, deg mu = {D}, cert {cert.value}")
        return HnfSubResult(B, cert, branch, mu, J, det_exact, (cols.points,))

    logger.debug(f"deg mu = {mu.degree} < {D} on the first column, trying rows")
    rows = inverse_rows(gen, J, D, Da, S_size, row_rng, backend)
    if not isinstance(rows, InverseSlice):
        return rows
    mu, R = rows.mu, rows.numerators
    points = (cols.points, rows.points)

    if mu.degree == D and gcd_many(R.row(0), mu).is_one():
        B = _hrow_basis(mu, R)
        branch, cert = Branch.HROW, Certificate.TRUE
    else:
        B = hnf_relbas(mu, R)
        branch = Branch.GENERAL
        cert = _certify(B, J, D)
    logger.info(f"branch {branch.value}, deg mu = {mu.degree}, cert {cert.value}")
    return HnfSubResult(B, cert, branch, mu, J, det_exact, points)

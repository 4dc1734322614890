"""DRL to lex change of order through the HNF of the block-Toeplitz matrix."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from ..algebra.field import Rng
from ..algebra.polymat import IndexTuple, PolyMat
from ..core.logger import logger
from ..core.outcomes import Fail, Singular
from ..hermite.submatrix import Branch, Certificate, HnfSubResult, hermite_submatrix
from ..structured.inversion import InversionBackend
from .construction import displacement_generators_LM
from .grobner import DrlBasis, LexBasis, Staircase, build_staircase
from .polynomial import BivPoly

def extract_lex(B: PolyMat) -> LexBasis:
    """Rows of an HNF whose diagonal degree drops, read as polynomials in y.

    Reading stops at the first unit diagonal entry, a pure power of y.
    """
    polys = []
    previous = None
    for i in range(B.rows):
        d = B[i, i].degree
        if previous is None or d < previous:
            polys.append(BivPoly.from_row(B.row(i)[: i + 1]))
            previous = d
        if d == 0:
            break
    return LexBasis(tuple(polys), B.rows)

@dataclass(frozen=True)
class ChangeOrderResult:
    lex: LexBasis
    staircase: Staircase
    alpha: int
    branch: Branch
    cert: Certificate
    m: int
    doublings: int

    @property
    def shape_position(self) -> bool:
        return self.lex.is_shape_position()

ChangeOrderOutcome = Union[Fail, Singular, ChangeOrderResult]

def change_order(
    gb: DrlBasis,
    m_hint: Optional[int] = None,
    sample_size: Optional[int] = None,
    rng: Optional[Rng] = None,
    backend: Optional[InversionBackend] = None
) -> ChangeOrderOutcome:
    """Reduced lex basis of the ideal of ``gb``, doubling m until the staircase closes."""
    st = build_staircase(gb)
    gen = displacement_generators_LM(gb, st)
    D, n = st.D, st.n
    Da = D + n
    m = min(max(m_hint or 2, 1), n)
    rng = rng or Rng()
    logger.info(f"staircase {list(st.counts)}: n = {n}, D = {D}, displacement rank {gen.alpha}")

    doublings = 0
    while True:
        rng, attempt = rng.fork(2)
        outcome = hermite_submatrix(
            gen, IndexTuple.leading(m), D, Da,
            S_size=sample_size, rng=attempt, backend=backend, det_exact=True
        )
        if not isinstance(outcome, HnfSubResult):
            return outcome
        lex = extract_lex(outcome.basis)
        if lex.complete or m == n:
            break
        logger.info(f"m = {m} leaves the lex staircase open, doubling")
        m = min(2 * m, n)
        doublings += 1

    if not lex.complete or lex.standard_monomial_count() != D:
        logger.warning(f"lex staircase counts {lex.standard_monomial_count()} monomials, expected {D}")
    return ChangeOrderResult(lex, st, gen.alpha, outcome.branch, outcome.cert, m, doublings)

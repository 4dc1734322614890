"""Column and row slices of M^-1 as (common denominator, numerators)."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from ..algebra.field import FieldElement, Rng
from ..algebra.poly import Poly, lcm_tree, rational_reconstruct
from ..algebra.polymat import IndexTuple, PolyMat
from ..core.logger import logger
from ..core.outcomes import Fail, Singular
from ..structured.displacement import PolyGenerators
from ..structured.inversion import InversionBackend
from ..structured.modsolve import (
    SolveSuccess,
    modular_left_solve,
    modular_right_solve,
    default_sample_size,
)

@dataclass(frozen=True)
class InverseSlice:
    """mu monic lcm of the denominators of a slice of N = M^-1, numerators = mu * slice."""
    mu: Poly
    numerators: PolyMat
    points: tuple[FieldElement, ...] = ()

SliceOutcome = Union[Fail, Singular, InverseSlice]

def _reconstruct_slice(F: PolyMat, A: Poly, D: int, Da: int) -> tuple[Poly, PolyMat]:
    fractions = [[rational_reconstruct(e, A, Da, D) for e in row] for row in F.entries]
    mu = lcm_tree([g for row in fractions for _, g in row])
    numerators = [[f * (mu // g) for f, g in row] for row in fractions]
    return mu, PolyMat(F.field, numerators, F.rows, F.cols)

def _selector(gen: PolyGenerators, J: IndexTuple) -> PolyMat:
    """Rows J of the identity, m x n."""
    field = gen.field
    zero, one = Poly.zero(field), Poly.one(field)
    return PolyMat(
        field,
        [[one if k == j else zero for k in range(gen.n)] for j in J],
        len(J),
        gen.n
    )

def _slice(
    gen: PolyGenerators,
    J: IndexTuple,
    D: int,
    Da: int,
    S_size: Optional[int],
    rng: Rng,
    backend: Optional[InversionBackend],
    columns: bool
) -> SliceOutcome:
    delta = D + Da + 1
    if S_size is None:
        S_size = default_sample_size(gen.field, gen.n, delta, D)
    selector = _selector(gen, J)
    if columns:
        outcome = modular_right_solve(gen, selector.transpose(), delta, S_size, rng, backend)
    else:
        outcome = modular_left_solve(gen, selector, delta, S_size, rng, backend)
    if not isinstance(outcome, SolveSuccess):
        return outcome
    mu, numerators = _reconstruct_slice(outcome.solution, outcome.modulus, D, Da)
    logger.debug(f"inverse {'columns' if columns else 'rows'} {list(J)}: deg mu = {mu.degree}")
    return InverseSlice(mu, numerators, outcome.points)

def inverse_cols(
    gen: PolyGenerators,
    J: IndexTuple,
    D: int,
    Da: int,
    S_size: Optional[int],
    rng: Rng,
    backend: Optional[InversionBackend] = None
) -> SliceOutcome:
    """(mu, mu N[:, J]) for D >= deg det M and Da >= deg adj M."""
    return _slice(gen, J, D, Da, S_size, rng, backend, columns=True)

def inverse_rows(
    gen: PolyGenerators,
    J: IndexTuple,
    D: int,
    Da: int,
    S_size: Optional[int],
    rng: Rng,
    backend: Optional[InversionBackend] = None
) -> SliceOutcome:
    """(mu, mu N[J, :]) for D >= deg det M and Da >= deg adj M."""
    return _slice(gen, J, D, Da, S_size, rng, backend, columns=False)

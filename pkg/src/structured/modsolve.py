"""Modular solving of structured polynomial systems by evaluation and interpolation."""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence, Union

from ..algebra.field import FieldElement, PrimeField, Rng, sample_distinct_subset
from ..algebra.linalg import FieldMatrix
from ..algebra.poly import Poly, interpolate, multipoint_eval
from ..algebra.polymat import PolyMat
from ..core.config import get_settings
from ..core.errors import DuplicatePoints, FieldTooSmall, ShapeMismatch, ValidationError
from ..core.logger import logger
from ..core.outcomes import Fail, Singular, SingularAt
from .displacement import FieldGenerators, PolyGenerators
from .inversion import (
    InversionBackend,
    InversionFlag,
    inv_structured,
    mul_dense_inv_structured,
    mul_inv_structured_dense,
)

settings = get_settings()

class Side(str, Enum):
    RIGHT = "right"
    LEFT = "left"

@dataclass(frozen=True)
class SolveSuccess:
    """F with M F = Y (or F M = X) modulo A = prod (x - a_i)."""
    modulus: Poly
    solution: PolyMat
    points: tuple[FieldElement, ...]

SolveOutcome = Union[Fail, Singular, SolveSuccess]
PointOutcome = Union[FieldMatrix, InversionFlag]

def recommended_sample_size(n: int, delta: int, D: int) -> int:
    return settings.SAMPLE_SIZE_FACTOR * delta * max(n * (n + 1), 2 * D)

def default_sample_size(field: PrimeField, n: int, delta: int, D: int) -> int:
    """recommended_sample_size, clamped to the field size."""
    size = recommended_sample_size(n, delta, D)
    if size > field.p:
        logger.warning(f"sample size {size} clamped to {field.p}")
        return field.p
    return size

def _evaluate_at_points(M: PolyMat, points: Sequence[FieldElement]) -> list[FieldMatrix]:
    values = [[multipoint_eval(e, points) for e in row] for row in M.entries]
    return [[[vals[k] for vals in row] for row in values] for k in range(len(points))]

@dataclass(frozen=True)
class _PointTask:
    index: int
    gen: FieldGenerators
    rhs: FieldMatrix
    rng: Rng

def _solve_at_point(
    task: _PointTask,
    side: Side,
    sample_size: int,
    backend: Optional[InversionBackend]
) -> PointOutcome:
    inverse = inv_structured(task.gen, sample_size, task.rng, backend)
    if isinstance(inverse, InversionFlag):
        logger.debug(f"point {task.index}: {inverse.value}")
        return inverse
    if side is Side.RIGHT:
        return mul_inv_structured_dense(inverse, task.rhs)
    return mul_dense_inv_structured(task.rhs, inverse)

def _run_points(
    tasks: list[_PointTask],
    side: Side,
    sample_size: int,
    backend: Optional[InversionBackend]
) -> Union[list[FieldMatrix], Fail, SingularAt]:
    def flag(index: int, outcome: InversionFlag) -> Union[Fail, SingularAt]:
        if outcome is InversionFlag.FAIL:
            return Fail(f"structured inversion failed at point {index}")
        return SingularAt(index)

    workers = settings.SOLVER_WORKERS
    if workers > 1 and len(tasks) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            outcomes = list(pool.map(lambda t: _solve_at_point(t, side, sample_size, backend), tasks))
        for task, outcome in zip(tasks, outcomes):
            if isinstance(outcome, InversionFlag):
                return flag(task.index, outcome)
        return outcomes

    solutions = []
    for task in tasks:
        outcome = _solve_at_point(task, side, sample_size, backend)
        if isinstance(outcome, InversionFlag):
            return flag(task.index, outcome)
        solutions.append(outcome)
    return solutions

def _solve_with_points(
    gen: PolyGenerators,
    rhs: PolyMat,
    points: Sequence[FieldElement],
    rng: Rng,
    side: Side,
    sample_size: Optional[int],
    backend: Optional[InversionBackend]
) -> Union[Fail, SingularAt, PolyMat]:
    field = gen.field
    n = gen.n
    if side is Side.RIGHT and rhs.rows != n:
        raise ShapeMismatch("right-hand side has the wrong row count", details={"n": n, "rows": rhs.rows})
    if side is Side.LEFT and rhs.cols != n:
        raise ShapeMismatch("left-hand side has the wrong column count", details={"n": n, "cols": rhs.cols})
    if len(set(points)) != len(points):
        raise DuplicatePoints("evaluation points are not distinct")
    if rhs.degree >= len(points):
        raise ValidationError(
            "right-hand side degree must be below the number of points",
            details={"degree": str(rhs.degree), "points": len(points)}
        )
    G_at = _evaluate_at_points(gen.G, points)
    H_at = _evaluate_at_points(gen.H, points)
    rhs_at = _evaluate_at_points(rhs, points)
    rngs = rng.fork(len(points))
    tasks = [
        _PointTask(k, FieldGenerators(field, G_at[k], H_at[k], gen.operator), rhs_at[k], rngs[k])
        for k in range(len(points))
    ]
    outcome = _run_points(tasks, side, sample_size or len(points), backend)
    if isinstance(outcome, (Fail, SingularAt)):
        return outcome
    rows, cols = rhs.shape
    entries = [
        [interpolate(field, points, [sol[r][c] for sol in outcome]) for c in range(cols)]
        for r in range(rows)
    ]
    return PolyMat(field, entries, rows, cols)

def right_solve_with_points(
    gen: PolyGenerators,
    Y: PolyMat,
    points: Sequence[FieldElement],
    rng: Rng,
    sample_size: Optional[int] = None,
    backend: Optional[InversionBackend] = None
) -> Union[Fail, SingularAt, PolyMat]:
    """F with M F = Y mod prod (x - a_i), or the first singular point."""
    return _solve_with_points(gen, Y, points, rng, Side.RIGHT, sample_size, backend)

def left_solve_with_points(
    gen: PolyGenerators,
    X: PolyMat,
    points: Sequence[FieldElement],
    rng: Rng,
    sample_size: Optional[int] = None,
    backend: Optional[InversionBackend] = None
) -> Union[Fail, SingularAt, PolyMat]:
    """F with F M = X mod prod (x - a_i), or the first singular point."""
    return _solve_with_points(gen, X, points, rng, Side.LEFT, sample_size, backend)

def _modular_solve(
    gen: PolyGenerators,
    rhs: PolyMat,
    delta: int,
    S_size: int,
    rng: Rng,
    side: Side,
    backend: Optional[InversionBackend]
) -> SolveOutcome:
    field: PrimeField = gen.field
    if field.p < delta:
        logger.warning(f"{field} has fewer than {delta} elements")
        return Fail("field smaller than the number of points")
    sample_rng, solve_rng = rng.fork(2)
    try:
        points = sample_distinct_subset(S_size, delta, sample_rng, field)
    except FieldTooSmall as e:
        logger.warning(f"sample set does not fit in the field: {e.message}")
        return Fail(e.message)
    outcome = _solve_with_points(gen, rhs, points, solve_rng, side, S_size, backend)
    if isinstance(outcome, Fail):
        logger.warning(f"{side.value} modular solve: Fail")
        return outcome
    if isinstance(outcome, SingularAt):
        prefix = tuple(points[: outcome.index + 1])
        logger.warning(f"{side.value} modular solve: singular at point {prefix[-1]}")
        return Singular(prefix)
    return SolveSuccess(Poly.from_roots(field, points), outcome, tuple(points))

def modular_right_solve(
    gen: PolyGenerators,
    Y: PolyMat,
    delta: int,
    S_size: int,
    rng: Rng,
    backend: Optional[InversionBackend] = None
) -> SolveOutcome:
    return _modular_solve(gen, Y, delta, S_size, rng, Side.RIGHT, backend)

def modular_left_solve(
    gen: PolyGenerators,
    X: PolyMat,
    delta: int,
    S_size: int,
    rng: Rng,
    backend: Optional[InversionBackend] = None
) -> SolveOutcome:
    return _modular_solve(gen, X, delta, S_size, rng, Side.LEFT, backend)

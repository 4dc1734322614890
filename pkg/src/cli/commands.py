"""Job runners behind the command-line application.

Each runner takes a validated JobConfig and returns (exit code, report).
Exit codes: 0 success, 1 error, 2 Singular, 3 Fail.
"""
from __future__ import annotations

from enum import IntEnum
from typing import Optional, Sequence

from ..algebra.field import Rng
from ..algebra.poly import NEG_INF
from ..algebra.polymat import IndexTuple, PolyMat, dense_hnf, hnf_row_membership
from ..bivar.change_order import change_order
from ..bivar.construction import displacement_generators_LM
from ..bivar.grobner import build_staircase
from ..core.config import get_settings
from ..core.errors import SingularMatrix
from ..core.logger import logger
from ..core.outcomes import Fail, Singular
from ..hermite.submatrix import HnfSubResult, hermite_submatrix
from ..structured.displacement import PolyGenerators, random_generators, reconstruct
from ..structured.modsolve import default_sample_size
from ..utils.formats import TextCodec, format_lex, parse_gb
from ..utils.metrics import Timer, summarize
from ..utils.validators import resolve_indices, validate_bounds, validate_modulus
from .schemas import BenchRow, ChangeOrderReport, HnfReport, JobConfig, Status

settings = get_settings()

class ExitCode(IntEnum):
    OK = 0
    ERROR = 1
    SINGULAR = 2
    FAIL = 3

def exit_code_for(outcome: object) -> ExitCode:
    if isinstance(outcome, Singular):
        return ExitCode.SINGULAR
    if isinstance(outcome, Fail):
        return ExitCode.FAIL
    return ExitCode.OK

def default_bounds(gen: PolyGenerators) -> tuple[int, int]:
    """D = n deg M and Da = (n - 1) deg M."""
    d = reconstruct(gen).degree
    d = 0 if d is NEG_INF else d
    return gen.n * d, (gen.n - 1) * d

def _rows(M: PolyMat) -> list[list[str]]:
    return [[str(e) for e in row] for row in M.entries]

def verify_against_dense(gen: PolyGenerators, result: HnfSubResult) -> str:
    """PASS if B = H[J, J], MODULE if only membership of B's rows holds, FAIL otherwise."""
    H, _ = dense_hnf(reconstruct(gen), transform=False)
    J = result.indices
    expected = H.submatrix(J.indices, J.indices)
    if result.basis == expected:
        return "PASS"
    if result.certified:
        logger.error("certified basis differs from the dense HNF")
        return "FAIL"
    members = all(hnf_row_membership(H, J.embed(row, gen.n)) for row in result.basis.entries)
    return "MODULE" if members else "FAIL"

def run_hnf_submatrix(config: JobConfig) -> tuple[ExitCode, HnfReport]:
    field = validate_modulus(config.modulus)
    codec = TextCodec(field)
    gen = codec.parse_structured(config.input_path.read_text())
    J = resolve_indices(gen.n, config.m, config.indices)
    D, Da = default_bounds(gen)
    D = D if config.det_bound is None else config.det_bound
    Da = Da if config.adj_bound is None else config.adj_bound
    validate_bounds(D, Da)
    S_size = config.sample_size or default_sample_size(field, gen.n, D + Da + 1, D)
    logger.info(f"hnf-submatrix: n = {gen.n}, alpha = {gen.alpha}, J = {list(J)}, D = {D}, Da = {Da}")

    outcome = hermite_submatrix(gen, J, D, Da, S_size, Rng(config.seed), det_exact=config.exact_det)
    report = HnfReport(
        status=Status.SUCCESS,
        modulus=field.p,
        seed=config.seed,
        n=gen.n,
        alpha=gen.alpha,
        indices=list(J),
        det_bound=D,
        adj_bound=Da,
        det_exact=config.exact_det,
        sample_size=S_size
    )
    if isinstance(outcome, Singular):
        report.status = Status.SINGULAR
        report.witness = list(outcome.points)
    elif isinstance(outcome, Fail):
        report.status = Status.FAIL
        report.reason = outcome.reason
    else:
        report.branch = outcome.branch.value
        report.cert = outcome.cert.value
        report.mu = str(outcome.mu)
        report.basis = _rows(outcome.basis)
        report.points_used = sum(len(p) for p in outcome.points)
        if config.verify:
            report.verify = verify_against_dense(gen, outcome)
        if config.out is not None:
            config.out.write_text(codec.format_matrix(outcome.basis))
    return exit_code_for(outcome), report

def run_change_order(config: JobConfig) -> tuple[ExitCode, ChangeOrderReport]:
    gb = parse_gb(config.input_path.read_text())
    if gb.field.p != config.modulus:
        logger.warning(f"basis file uses p = {gb.field.p}, overriding --modulus {config.modulus}")
    st = build_staircase(gb)
    alpha = displacement_generators_LM(gb, st).alpha
    outcome = change_order(gb, m_hint=config.m, sample_size=config.sample_size, rng=Rng(config.seed))
    report = ChangeOrderReport(
        status=Status.SUCCESS,
        modulus=gb.field.p,
        seed=config.seed,
        ell=len(gb),
        staircase=list(st.counts),
        n=st.n,
        D=st.D,
        alpha=alpha
    )
    if isinstance(outcome, Singular):
        report.status = Status.SINGULAR
        report.witness = list(outcome.points)
    elif isinstance(outcome, Fail):
        report.status = Status.FAIL
        report.reason = outcome.reason
    else:
        report.branch = outcome.branch.value
        report.cert = outcome.cert.value
        report.m = outcome.m
        report.doublings = outcome.doublings
        report.shape_position = outcome.shape_position
        report.lex = [[str(c) for c in f.ycoeffs] for f in outcome.lex.polys]
        if config.out is not None:
            config.out.write_text(format_lex(outcome.lex, gb.field))
    return exit_code_for(outcome), report

def _bench_cell(
    n: int,
    alpha: int,
    d: int,
    m: int,
    repeats: int,
    config: JobConfig,
    rng: Rng
) -> BenchRow:
    field = validate_modulus(config.modulus)
    gen = random_generators(field, n, alpha, d, rng)
    M = reconstruct(gen)
    D, Da = default_bounds(gen)
    J = IndexTuple.leading(min(m, n))
    row = BenchRow(n=n, alpha=gen.alpha, d=d, m=len(J), status="OK", repeats=repeats)

    structured, dense = [], []
    for attempt in rng.fork(repeats):
        with Timer() as t:
            outcome = hermite_submatrix(gen, J, D, Da, config.sample_size, attempt)
        if not isinstance(outcome, HnfSubResult):
            logger.warning(f"bench cell n = {n}: {type(outcome).__name__}, skipped")
            row.status = "SKIP"
            return row
        structured.append(t.elapsed)
        row.branch = outcome.branch.value
        with Timer() as t:
            try:
                dense_hnf(M, transform=False)
            except SingularMatrix:
                row.status = "SKIP"
                return row
        dense.append(t.elapsed)
    row.structured_median = summarize(structured).median
    row.dense_median = summarize(dense).median
    return row

def run_bench(
    config: JobConfig,
    sizes: Sequence[int],
    alphas: Sequence[int],
    degrees: Sequence[int],
    repeats: Optional[int] = None
) -> list[BenchRow]:
    repeats = repeats or settings.BENCH_REPEATS
    m = config.m or 2
    grid = [(n, a, d) for n in sizes for a in alphas for d in degrees]
    rngs = Rng(config.seed).fork(len(grid))
    rows = []
    for (n, a, d), rng in zip(grid, rngs):
        logger.info(f"bench cell n = {n}, alpha = {a}, d = {d}")
        rows.append(_bench_cell(n, a, d, m, repeats, config, rng))
    return rows

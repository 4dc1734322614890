from __future__ import annotations

import sys
from pathlib import Path
from typing import Callable, Optional

import typer
from pydantic import ValidationError as ConfigError
from rich.console import Console
from rich.table import Table

from .cli.commands import ExitCode, run_bench, run_change_order, run_hnf_submatrix
from .cli.schemas import BenchRow, Command, JobConfig, Report
from .core.config import get_settings
from .core.errors import HnfError
from .core.logger import logger

settings = get_settings()
console = Console()

def _int_list(text: str) -> list[int]:
    return [int(t) for t in text.replace(",", " ").split()]

def _guarded(job: Callable[[], int]) -> None:
    """Run a job, mapping domain, config and I/O errors to exit status 1."""
    try:
        code = job()
    except HnfError as exc:
        logger.error(f"{exc.code.value}: {exc.message}", extra={"details": exc.details})
        typer.echo(f"error: {exc.code.value}: {exc.message}", err=True)
        raise typer.Exit(exc.exit_code)
    except ConfigError as exc:
        typer.echo(f"error: invalid options: {exc.errors()[0]['msg']}", err=True)
        raise typer.Exit(ExitCode.ERROR)
    except (OSError, ValueError) as exc:
        typer.echo(f"error: {exc}", err=True)
        raise typer.Exit(ExitCode.ERROR)
    raise typer.Exit(code)

def _emit(report: Report, json_path: Optional[Path]) -> None:
    sys.stdout.write(report.to_text())
    if json_path is not None:
        json_path.write_text(report.model_dump_json(indent=2))

def _bench_table(rows: list[BenchRow]) -> Table:
    table = Table(title=f"{settings.PROJECT_NAME} bench")
    for column in ("n", "alpha", "d", "m", "status", "branch", "structured (s)", "dense (s)"):
        table.add_column(column)

    def cell(value: Optional[float]) -> str:
        return "-" if value is None else f"{value:.4f}"

    for row in rows:
        table.add_row(
            str(row.n), str(row.alpha), str(row.d), str(row.m), row.status,
            row.branch or "-", cell(row.structured_median), cell(row.dense_median)
        )
    return table

def create_application() -> typer.Typer:
    """Create and configure the command-line application."""
    application = typer.Typer(
        name=settings.PROJECT_NAME,
        help="Leading Hermite normal form submatrices of structured polynomial matrices.",
        add_completion=False,
        no_args_is_help=True
    )

    def show_version(value: bool) -> None:
        if value:
            typer.echo(f"{settings.PROJECT_NAME} {settings.VERSION}")
            raise typer.Exit(ExitCode.OK)

    @application.callback()
    def root(
        version: bool = typer.Option(False, "--version", callback=show_version, is_eager=True)
    ) -> None:
        """Leading Hermite normal form submatrices of structured polynomial matrices."""

    @application.command("hnf-submatrix")
    def hnf_submatrix(
        input_path: Path = typer.Argument(..., help="Dense matrix or generator file."),
        modulus: int = typer.Option(settings.DEFAULT_MODULUS, "--modulus", "-p"),
        seed: int = typer.Option(settings.DEFAULT_SEED, "--seed"),
        m: Optional[int] = typer.Option(None, "--m", help="Use J = (0, ..., m-1)."),
        indices: Optional[str] = typer.Option(None, "--indices", help="Comma separated J, starting at 0."),
        det_bound: Optional[int] = typer.Option(None, "--det-bound", help="D >= deg det M."),
        adj_bound: Optional[int] = typer.Option(None, "--adj-bound", help="Da >= deg adj M."),
        exact_det: bool = typer.Option(False, "--exact-det", help="D equals deg det M."),
        sample_size: Optional[int] = typer.Option(None, "--sample-size"),
        verify: bool = typer.Option(False, "--verify", help="Compare with the dense HNF."),
        out: Optional[Path] = typer.Option(None, "--out", help="Write B in matrix format."),
        json_path: Optional[Path] = typer.Option(None, "--json", help="Write the report as JSON.")
    ) -> None:
        """Compute H[J, J] of the HNF of M."""
        def job() -> int:
            config = JobConfig(
                command=Command.HNF_SUBMATRIX, input_path=input_path, modulus=modulus, seed=seed,
                m=m, indices=indices, det_bound=det_bound, adj_bound=adj_bound, exact_det=exact_det,
                sample_size=sample_size, verify=verify, out=out, json_path=json_path
            )
            code, report = run_hnf_submatrix(config)
            _emit(report, config.json_path)
            return code
        _guarded(job)

    @application.command("change-order")
    def change_order(
        input_path: Path = typer.Argument(..., help="DRL Groebner basis file."),
        modulus: int = typer.Option(settings.DEFAULT_MODULUS, "--modulus", "-p"),
        seed: int = typer.Option(settings.DEFAULT_SEED, "--seed"),
        m: Optional[int] = typer.Option(None, "--m", help="Initial number of HNF rows."),
        sample_size: Optional[int] = typer.Option(None, "--sample-size"),
        out: Optional[Path] = typer.Option(None, "--out", help="Write the lex basis."),
        json_path: Optional[Path] = typer.Option(None, "--json", help="Write the report as JSON.")
    ) -> None:
        """Convert a bivariate DRL basis to the reduced lex basis."""
        def job() -> int:
            config = JobConfig(
                command=Command.CHANGE_ORDER, input_path=input_path, modulus=modulus, seed=seed,
                m=m, sample_size=sample_size, out=out, json_path=json_path
            )
            code, report = run_change_order(config)
            _emit(report, config.json_path)
            return code
        _guarded(job)

    @application.command("bench")
    def bench(
        sizes: str = typer.Option("8,16", "--sizes", help="Matrix dimensions n."),
        alphas: str = typer.Option("2", "--alphas", help="Displacement ranks."),
        degrees: str = typer.Option("2", "--degrees", help="Generator degrees."),
        m: int = typer.Option(2, "--m"),
        repeats: int = typer.Option(settings.BENCH_REPEATS, "--repeats", min=1),
        modulus: int = typer.Option(settings.DEFAULT_MODULUS, "--modulus", "-p"),
        seed: int = typer.Option(settings.DEFAULT_SEED, "--seed"),
        sample_size: Optional[int] = typer.Option(None, "--sample-size"),
        plain: bool = typer.Option(False, "--plain", help="key: value rows instead of a table."),
        json_path: Optional[Path] = typer.Option(None, "--json", help="Write the rows as JSON.")
    ) -> None:
        """Time the structured path against the dense HNF over a grid."""
        def job() -> int:
            config = JobConfig(
                command=Command.BENCH, modulus=modulus, seed=seed, m=m,
                sample_size=sample_size, json_path=json_path
            )
            rows = run_bench(config, _int_list(sizes), _int_list(alphas), _int_list(degrees), repeats)
            if plain:
                sys.stdout.write("\n".join(row.to_text() for row in rows))
            else:
                console.print(_bench_table(rows))
            if config.json_path is not None:
                config.json_path.write_text("[\n" + ",\n".join(r.model_dump_json(indent=2) for r in rows) + "\n]\n")
            return ExitCode.OK
        _guarded(job)

    return application

app = create_application()

if __name__ == "__main__":
    app()

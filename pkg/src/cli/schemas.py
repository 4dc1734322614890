from __future__ import annotations

from enum import Enum
from pathlib import Path
from typing import Any, Optional

from pydantic import BaseModel, Field, field_validator, model_validator
from sympy import isprime

from ..core.config import get_settings

settings = get_settings()

class Command(str, Enum):
    HNF_SUBMATRIX = "hnf-submatrix"
    CHANGE_ORDER = "change-order"
    BENCH = "bench"

class Status(str, Enum):
    SUCCESS = "Success"
    SINGULAR = "Singular"
    FAIL = "Fail"

class JobConfig(BaseModel):
    command: Command
    input_path: Optional[Path] = None
    modulus: int = Field(default=settings.DEFAULT_MODULUS, ge=3)
    seed: int = Field(default=settings.DEFAULT_SEED, ge=0)
    m: Optional[int] = Field(default=None, ge=1)
    indices: Optional[str] = None
    det_bound: Optional[int] = Field(default=None, ge=0)
    adj_bound: Optional[int] = Field(default=None, ge=0)
    exact_det: bool = False
    sample_size: Optional[int] = Field(default=None, ge=1)
    out: Optional[Path] = None
    json_path: Optional[Path] = None
    verify: bool = False

    @field_validator("modulus")
    @classmethod
    def modulus_is_prime(cls, p: int) -> int:
        if not isprime(p):
            raise ValueError(f"modulus {p} is not prime")
        return p

    @model_validator(mode="after")
    def one_index_source(self) -> JobConfig:
        if self.m is not None and self.indices is not None:
            raise ValueError("--m and --indices are mutually exclusive")
        return self

def _render(key: str, value: Any) -> list[str]:
    if value is None:
        return []
    if isinstance(value, Enum):
        value = value.value
    if isinstance(value, list) and value and isinstance(value[0], list):
        return [f"{key}[{i}]: {' | '.join(str(v) for v in row)}" for i, row in enumerate(value)]
    if isinstance(value, list):
        return [f"{key}: {' '.join(str(v) for v in value)}"]
    return [f"{key}: {value}"]

class Report(BaseModel):
    """Line-oriented key: value rendering; None fields are omitted."""

    def to_text(self) -> str:
        lines: list[str] = []
        for key, value in self.model_dump().items():
            lines.extend(_render(key, value))
        return "\n".join(lines) + "\n"

class HnfReport(Report):
    status: Status
    modulus: int
    seed: int
    n: int
    alpha: int
    indices: list[int]
    det_bound: int
    adj_bound: int
    det_exact: bool
    sample_size: int
    branch: Optional[str] = None
    cert: Optional[str] = None
    mu: Optional[str] = None
    basis: Optional[list[list[str]]] = None
    points_used: Optional[int] = None
    witness: Optional[list[int]] = None
    reason: Optional[str] = None
    verify: Optional[str] = None

class ChangeOrderReport(Report):
    status: Status
    modulus: int
    seed: int
    ell: int
    staircase: list[int]
    n: int
    D: int
    alpha: int
    branch: Optional[str] = None
    cert: Optional[str] = None
    m: Optional[int] = None
    doublings: Optional[int] = None
    shape_position: Optional[bool] = None
    lex: Optional[list[list[str]]] = None
    witness: Optional[list[int]] = None
    reason: Optional[str] = None

class BenchRow(Report):
    n: int
    alpha: int
    d: int
    m: int
    status: str
    branch: Optional[str] = None
    structured_median: Optional[float] = None
    dense_median: Optional[float] = None
    repeats: int

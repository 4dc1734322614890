"""Las Vegas outcome flags shared by the solver layers.

A randomized routine either succeeds, reports ``Fail`` (unlucky random
choices, rerun with another seed) or reports ``Singular`` (a sampled point
is a root of the determinant, or the matrix itself is singular).
"""
from __future__ import annotations

from dataclasses import dataclass

@dataclass(frozen=True)
class Fail:
    reason: str = ""

    def __str__(self) -> str:
        return "Fail"

@dataclass(frozen=True)
class Singular:
    points: tuple[int, ...] = ()

    def __str__(self) -> str:
        return "Singular"

@dataclass(frozen=True)
class SingularAt:
    """Index of the first point where the evaluated matrix is singular."""
    index: int

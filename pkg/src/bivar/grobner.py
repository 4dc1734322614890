"""DRL input bases, their staircases, and lex output bases."""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Sequence

from ..algebra.field import PrimeField
from ..core.errors import NotMinimalBasis
from .polynomial import BivPoly, Monomial, drl_leading_monomial, lex_leading_monomial

@dataclass(frozen=True)
class DrlBasis:
    """Minimal DRL Groebner basis of a zero-dimensional ideal, sorted by lm y-degree."""
    field: PrimeField
    polys: tuple[BivPoly, ...]

    @classmethod
    def from_polys(cls, field: PrimeField, polys: Sequence[BivPoly]) -> DrlBasis:
        ordered = sorted(polys, key=lambda g: drl_leading_monomial(g)[0])
        basis = cls(field, tuple(ordered))
        basis.validate()
        return basis

    def __len__(self) -> int:
        return len(self.polys)

    @property
    def leading_monomials(self) -> list[Monomial]:
        return [drl_leading_monomial(g) for g in self.polys]

    def validate(self) -> None:
        ell = len(self.polys)
        if ell < 2:
            raise NotMinimalBasis("a zero-dimensional basis needs at least two polynomials", details={"ell": ell})
        lms = self.leading_monomials
        details = {"leading_monomials": [list(m) for m in lms]}
        if lms[0][0] != 0:
            raise NotMinimalBasis("first leading monomial is not a power of x", details=details)
        if lms[-1][1] != 0:
            raise NotMinimalBasis("last leading monomial is not a power of y", details=details)
        for (yi, xi), (yk, xk) in zip(lms, lms[1:]):
            if not (yi < yk and xi > xk):
                raise NotMinimalBasis("leading monomials do not form a minimal staircase", details=details)
        if self.polys[-1].ydeg != lms[-1][0]:
            raise NotMinimalBasis("last polynomial has a y-degree above its leading monomial", details=details)

@dataclass(frozen=True)
class Staircase:
    """Block sizes n_i of the block-Toeplitz matrix, its size n and the ideal degree D."""
    counts: tuple[int, ...]
    n: int
    D: int
    offsets: tuple[int, ...] = ()

def build_staircase(gb: DrlBasis) -> Staircase:
    gb.validate()
    lms = gb.leading_monomials
    ell = len(lms)
    counts = [lms[i + 1][0] - lms[i][0] for i in range(ell - 1)]
    top = max(counts[i] + gb.polys[i].ydeg for i in range(ell - 1))
    counts.append(max(1, top - gb.polys[-1].ydeg))
    n = sum(counts)
    for i, g in enumerate(gb.polys):
        if g.ydeg > n - counts[i]:
            raise NotMinimalBasis(
                "polynomial does not fit its block",
                details={"index": i, "ydeg": g.ydeg, "limit": n - counts[i]}
            )
    D = sum(counts[i] * lms[i][1] for i in range(ell - 1))
    offsets = tuple(lms[i][0] for i in range(ell))
    return Staircase(tuple(counts), n, D, offsets)

@dataclass(frozen=True)
class LexBasis:
    """Reduced lex Groebner basis elements read from the first ``rows`` HNF rows."""
    polys: tuple[BivPoly, ...]
    rows: int
    reduced: bool = True
    leading: tuple[Monomial, ...] = dc_field(default=(), init=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "leading", tuple(lex_leading_monomial(f) for f in self.polys))

    def __len__(self) -> int:
        return len(self.polys)

    @property
    def complete(self) -> bool:
        """Whether a pure power of y was reached, closing the staircase."""
        return bool(self.leading) and self.leading[-1][1] == 0

    def standard_monomial_count(self) -> int:
        total = 0
        for k, (s, d) in enumerate(self.leading):
            nxt = self.leading[k + 1][0] if k + 1 < len(self.leading) else self.rows
            if d:
                total += d * (nxt - s)
        return total

    def is_shape_position(self) -> bool:
        return len(self.polys) == 2 and self.leading[0][0] == 0 and self.leading[1] == (1, 0)

"""Bivariate polynomials viewed in K[x][y]."""
from __future__ import annotations

from typing import Iterable, Mapping, Sequence, Union

from ..algebra.field import FieldElement, PrimeField
from ..algebra.poly import Poly
from ..core.errors import ShapeMismatch, ZeroPolynomial

Monomial = tuple[int, int]  # (y-exponent, x-exponent)

class BivPoly:
    """sum_i ycoeffs[i](x) * y^i, with no trailing zero coefficient."""

    __slots__ = ("field", "ycoeffs")

    def __init__(self, field: PrimeField, ycoeffs: Iterable[Poly] = ()) -> None:
        cs = list(ycoeffs)
        while cs and cs[-1].is_zero():
            cs.pop()
        self.field = field
        self.ycoeffs: tuple[Poly, ...] = tuple(cs)

    @classmethod
    def zero(cls, field: PrimeField) -> BivPoly:
        return cls(field)

    @classmethod
    def from_x(cls, f: Poly) -> BivPoly:
        return cls(f.field, [f])

    @classmethod
    def from_terms(cls, field: PrimeField, terms: Mapping[Monomial, int]) -> BivPoly:
        """Build from {(i, j): c} meaning c * y^i * x^j."""
        if not terms:
            return cls(field)
        top = max(i for i, _ in terms)
        rows: list[dict[int, int]] = [{} for _ in range(top + 1)]
        for (i, j), c in terms.items():
            rows[i][j] = (rows[i].get(j, 0) + c) % field.p
        ycoeffs = []
        for row in rows:
            width = max(row, default=-1) + 1
            ycoeffs.append(Poly(field, [row.get(j, 0) for j in range(width)]))
        return cls(field, ycoeffs)

    @classmethod
    def from_row(cls, row: Sequence[Poly]) -> BivPoly:
        """Row vector on the basis (1, y, y^2, ...)."""
        if not row:
            raise ShapeMismatch("empty row")
        return cls(row[0].field, row)

    @property
    def ydeg(self) -> int:
        return len(self.ycoeffs) - 1

    @property
    def xdeg(self) -> int:
        return max((len(c.coeffs) - 1 for c in self.ycoeffs), default=-1)

    @property
    def tdeg(self) -> int:
        return max((i + len(c.coeffs) - 1 for i, c in enumerate(self.ycoeffs) if c), default=-1)

    def is_zero(self) -> bool:
        return not self.ycoeffs

    def __bool__(self) -> bool:
        return bool(self.ycoeffs)

    def coefficient(self, i: int) -> Poly:
        if 0 <= i < len(self.ycoeffs):
            return self.ycoeffs[i]
        return Poly.zero(self.field)

    def terms(self) -> dict[Monomial, FieldElement]:
        return {
            (i, j): c
            for i, cy in enumerate(self.ycoeffs)
            for j, c in enumerate(cy.coeffs)
            if c
        }

    def to_row(self, n: int) -> list[Poly]:
        """Coefficient row of length n; ydeg must be below n."""
        if self.ydeg >= n:
            raise ShapeMismatch("polynomial does not fit the row", details={"ydeg": self.ydeg, "n": n})
        return [self.coefficient(i) for i in range(n)]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BivPoly):
            return NotImplemented
        return self.field == other.field and self.ycoeffs == other.ycoeffs

    def __hash__(self) -> int:
        return hash((self.field.p, self.ycoeffs))

    def __add__(self, other: BivPoly) -> BivPoly:
        k = max(len(self.ycoeffs), len(other.ycoeffs))
        return BivPoly(self.field, [self.coefficient(i) + other.coefficient(i) for i in range(k)])

    def __sub__(self, other: BivPoly) -> BivPoly:
        k = max(len(self.ycoeffs), len(other.ycoeffs))
        return BivPoly(self.field, [self.coefficient(i) - other.coefficient(i) for i in range(k)])

    def __neg__(self) -> BivPoly:
        return BivPoly(self.field, [-c for c in self.ycoeffs])

    def __mul__(self, other: Union[BivPoly, Poly, int]) -> BivPoly:
        if isinstance(other, BivPoly):
            if self.is_zero() or other.is_zero():
                return BivPoly(self.field)
            out = [Poly.zero(self.field)] * (len(self.ycoeffs) + len(other.ycoeffs) - 1)
            for i, a in enumerate(self.ycoeffs):
                if a:
                    for j, b in enumerate(other.ycoeffs):
                        out[i + j] = out[i + j] + a * b
            return BivPoly(self.field, out)
        return BivPoly(self.field, [c * other for c in self.ycoeffs])

    __rmul__ = __mul__

    def shift_y(self, k: int) -> BivPoly:
        """y^k * self."""
        if self.is_zero():
            return self
        return BivPoly(self.field, [Poly.zero(self.field)] * k + list(self.ycoeffs))

    def __call__(self, x: FieldElement, y: FieldElement) -> FieldElement:
        p = self.field.p
        acc = 0
        for c in reversed(self.ycoeffs):
            acc = (acc * y + c(x)) % p
        return acc

    def __repr__(self) -> str:
        return f"BivPoly({self.field}, {[str(c) for c in self.ycoeffs]})"

def drl_key(mono: Monomial) -> tuple[int, int]:
    """Sort key of the degree reverse lexicographic order with x < y."""
    i, j = mono
    return (i + j, i)

def lex_key(mono: Monomial) -> tuple[int, int]:
    """Sort key of the lexicographic order with x < y."""
    return mono

def drl_leading_monomial(f: BivPoly) -> Monomial:
    """(y-exponent, x-exponent) of the DRL-largest monomial of f."""
    if f.is_zero():
        raise ZeroPolynomial("leading monomial of the zero polynomial")
    return max(f.terms(), key=drl_key)

def lex_leading_monomial(f: BivPoly) -> Monomial:
    if f.is_zero():
        raise ZeroPolynomial("leading monomial of the zero polynomial")
    return (f.ydeg, len(f.ycoeffs[-1].coeffs) - 1)

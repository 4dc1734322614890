"""Line-oriented text formats for polynomials, matrices, generators and bases.

    Poly         ``c0 c1 ... ck`` ascending, ``0`` for zero
    PolyMat      ``rows cols`` then one Poly per line, row-major
    generators   ``n alpha d`` then G and H row-major, entries of degree <= d
    DRL basis    ``p ell`` then per polynomial ``ny`` and ny Poly lines (y^0 first)

Blank lines and lines starting with ``#`` are skipped.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from ..algebra.field import PrimeField
from ..algebra.poly import Poly
from ..algebra.polymat import PolyMat
from ..bivar.grobner import DrlBasis, LexBasis
from ..bivar.polynomial import BivPoly
from ..core.errors import HnfError, ParseError
from ..core.logger import logger
from ..structured.displacement import SYL, PolyGenerators, generators_of

class _Lines:
    def __init__(self, text: str) -> None:
        self._lines: Iterator[tuple[int, str]] = (
            (number, line.strip())
            for number, line in enumerate(text.splitlines(), start=1)
            if line.strip() and not line.strip().startswith("#")
        )
        self.number = 0

    def next(self, what: str) -> str:
        try:
            self.number, line = next(self._lines)
        except StopIteration:
            raise ParseError(f"unexpected end of input while reading {what}", details={"after_line": self.number})
        return line

    def ints(self, what: str, count: Optional[int] = None) -> list[int]:
        line = self.next(what)
        try:
            values = [int(token) for token in line.split()]
        except ValueError:
            raise ParseError(f"non-integer token in {what}", details={"line": self.number, "text": line})
        if count is not None and len(values) != count:
            raise ParseError(
                f"expected {count} integers for {what}",
                details={"line": self.number, "text": line}
            )
        return values

    def finish(self) -> None:
        rest = next(self._lines, None)
        if rest is not None:
            raise ParseError("trailing content after the last entry", details={"line": rest[0]})

@dataclass
class TextCodec:
    field: PrimeField

    def format_poly(self, f: Poly) -> str:
        return str(f)

    def parse_poly(self, line: str) -> Poly:
        try:
            return Poly(self.field, [int(token) for token in line.split()])
        except ValueError as e:
            raise ParseError("malformed polynomial", details={"text": line, "error": str(e)})

    def _read_entries(self, lines: _Lines, rows: int, cols: int, what: str) -> list[list[Poly]]:
        return [
            [Poly(self.field, lines.ints(f"{what}[{i},{j}]")) for j in range(cols)]
            for i in range(rows)
        ]

    def format_matrix(self, M: PolyMat) -> str:
        out = [f"{M.rows} {M.cols}"]
        out.extend(str(e) for row in M.entries for e in row)
        return "\n".join(out) + "\n"

    def parse_matrix(self, text: str) -> PolyMat:
        lines = _Lines(text)
        rows, cols = lines.ints("matrix header", 2)
        if rows < 0 or cols < 0:
            raise ParseError("negative matrix dimension", details={"rows": rows, "cols": cols})
        M = PolyMat(self.field, self._read_entries(lines, rows, cols, "entry"), rows, cols)
        lines.finish()
        return M

    def format_generators(self, gen: PolyGenerators) -> str:
        d = max(gen.degree, 0) if gen.alpha else 0
        out = [f"{gen.n} {gen.alpha} {d}"]
        out.extend(str(e) for M in (gen.G, gen.H) for row in M.entries for e in row)
        return "\n".join(out) + "\n"

    def parse_generators(self, text: str) -> PolyGenerators:
        lines = _Lines(text)
        n, alpha, d = lines.ints("generator header", 3)
        if n < 1 or alpha < 0:
            raise ParseError("invalid generator dimensions", details={"n": n, "alpha": alpha})
        G = PolyMat(self.field, self._read_entries(lines, n, alpha, "G"), n, alpha)
        H = PolyMat(self.field, self._read_entries(lines, n, alpha, "H"), n, alpha)
        lines.finish()
        gen = PolyGenerators(G, H, SYL)
        if alpha and gen.degree > d:
            raise ParseError("generator entry exceeds the declared degree", details={"declared": d})
        return gen

    def parse_structured(self, text: str) -> PolyGenerators:
        """SYL generators from either a generator file or a dense matrix file."""
        header = _Lines(text).next("header").split()
        if len(header) == 3:
            return self.parse_generators(text)
        if len(header) == 2:
            M = self.parse_matrix(text)
            if not M.is_square():
                raise ParseError("structured input must be square", details={"shape": list(M.shape)})
            return generators_of(M)
        raise ParseError("unrecognised header", details={"header": " ".join(header)})

def format_biv_list(field: PrimeField, polys: Sequence[BivPoly]) -> str:
    out = [f"{field.p} {len(polys)}"]
    for f in polys:
        out.append(str(len(f.ycoeffs)))
        out.extend(str(c) for c in f.ycoeffs)
    return "\n".join(out) + "\n"

def format_gb(gb: DrlBasis) -> str:
    return format_biv_list(gb.field, gb.polys)

def format_lex(lex: LexBasis, field: PrimeField) -> str:
    return format_biv_list(field, lex.polys)

def read_biv_list(text: str) -> tuple[PrimeField, list[BivPoly]]:
    lines = _Lines(text)
    p, ell = lines.ints("basis header", 2)
    try:
        field = PrimeField(p)
    except HnfError as e:
        logger.error(f"basis file modulus rejected: {e.message}")
        raise ParseError("basis modulus is not a usable prime", details={"p": p})
    polys = []
    for k in range(ell):
        (ny,) = lines.ints(f"y-length of polynomial {k}", 1)
        if ny < 0:
            raise ParseError("negative y-length", details={"line": lines.number})
        polys.append(BivPoly(field, [Poly(field, lines.ints(f"polynomial {k}")) for _ in range(ny)]))
    lines.finish()
    return field, polys

def parse_gb(text: str) -> DrlBasis:
    field, polys = read_biv_list(text)
    return DrlBasis.from_polys(field, polys)


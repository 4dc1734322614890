from __future__ import annotations

import pytest

from src.algebra.field import PrimeField, Rng
from src.algebra.poly import Poly
from src.algebra.polymat import PolyMat
from src.core.errors import InvalidIndexTuple, NotMinimalBasis, ParseError, ValidationError
from src.structured.displacement import apply_displacement, random_generators, reconstruct
from src.utils.formats import TextCodec, format_gb, parse_gb, read_biv_list
from src.utils.validators import parse_indices, resolve_indices, validate_bounds

from .oracles import four_generator_basis

SMALL_MATRIX = """\
# M = [[1, -x], [1, -2x]]
2 2
1
0 -1

1
0 -2
"""

XY_BASIS = """\
101 2
1
0 1
2
0
1
"""

def test_parse_dense_matrix(f101: PrimeField) -> None:
    M = TextCodec(f101).parse_matrix(SMALL_MATRIX)
    assert M == PolyMat(f101, [[Poly.one(f101), Poly(f101, [0, 100])], [Poly.one(f101), Poly(f101, [0, 99])]])

def test_matrix_text_is_stable(f101: PrimeField) -> None:
    codec = TextCodec(f101)
    M = codec.parse_matrix(SMALL_MATRIX)
    text = codec.format_matrix(M)
    assert text == "2 2\n1\n0 100\n1\n0 99\n"
    assert codec.parse_matrix(text) == M

@pytest.mark.parametrize("text", [
    "2 2\n1\n0 1\n1\n",
    "2 2\n1\n0 1\n1\n0\n5\n",
    "2 x\n",
    "",
    "-1 2\n",
])
def test_malformed_matrix(f101: PrimeField, text: str) -> None:
    with pytest.raises(ParseError) as info:
        TextCodec(f101).parse_matrix(text)
    assert info.value.code.value == "PARSE_ERROR"
    assert info.value.exit_code == 1

def test_generator_file(f101: PrimeField, rng: Rng) -> None:
    codec = TextCodec(f101)
    gen = random_generators(f101, 3, 2, 2, rng)
    text = codec.format_generators(gen)
    assert text.splitlines()[0] == f"3 2 {gen.degree}"
    parsed = codec.parse_structured(text)
    assert (parsed.G, parsed.H) == (gen.G, gen.H)

def test_generator_degree_is_checked(f101: PrimeField) -> None:
    text = "1 1 0\n0 1\n1\n"
    with pytest.raises(ParseError):
        TextCodec(f101).parse_generators(text)

def test_dense_input_is_compressed(f101: PrimeField) -> None:
    codec = TextCodec(f101)
    gen = codec.parse_structured(SMALL_MATRIX)
    M = codec.parse_matrix(SMALL_MATRIX)
    assert reconstruct(gen) == M
    assert gen.product() == apply_displacement(M)

def test_structured_input_must_be_square(f101: PrimeField) -> None:
    with pytest.raises(ParseError):
        TextCodec(f101).parse_structured("1 2\n1\n1\n")
    with pytest.raises(ParseError):
        TextCodec(f101).parse_structured("1 2 3 4\n")

def test_parse_gb() -> None:
    gb = parse_gb(XY_BASIS)
    assert gb.field.p == 101
    assert gb.leading_monomials == [(0, 1), (1, 0)]
    assert format_gb(gb) == XY_BASIS

def test_basis_file_round_trip(fbig: PrimeField, rng: Rng) -> None:
    gb = four_generator_basis(fbig, rng)
    assert parse_gb(format_gb(gb)) == gb

def test_basis_file_errors() -> None:
    with pytest.raises(ParseError):
        read_biv_list("100 1\n1\n1\n")
    with pytest.raises(ParseError):
        read_biv_list("101 2\n1\n0 1\n")
    with pytest.raises(NotMinimalBasis):
        parse_gb("101 1\n1\n0 1\n")

def test_parse_indices() -> None:
    assert parse_indices("0,2,5").indices == (0, 2, 5)
    assert parse_indices(" 0 1  3 ").indices == (0, 1, 3)
    with pytest.raises(InvalidIndexTuple):
        parse_indices("0,a")
    with pytest.raises(InvalidIndexTuple):
        parse_indices("  ")

def test_resolve_indices() -> None:
    assert resolve_indices(4).indices == (0,)
    assert resolve_indices(4, m=3).indices == (0, 1, 2)
    assert resolve_indices(4, indices="0,3").indices == (0, 3)
    with pytest.raises(InvalidIndexTuple):
        resolve_indices(4, indices="1,2")
    with pytest.raises(InvalidIndexTuple):
        resolve_indices(2, m=3)
    with pytest.raises(ValidationError):
        resolve_indices(4, m=2, indices="0,1")

def test_validate_bounds() -> None:
    validate_bounds(0, 0)
    with pytest.raises(ValidationError):
        validate_bounds(-1, 2)

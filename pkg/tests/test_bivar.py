from __future__ import annotations

import pytest

from src.algebra.field import PrimeField, Rng
from src.algebra.poly import Poly, interpolate
from src.algebra.polymat import PolyMat, det_degree_reduced, is_weak_popov
from src.bivar.change_order import ChangeOrderResult, change_order, extract_lex
from src.bivar.construction import build_matrix, displacement_generators_LM, psi, row_polynomials
from src.bivar.grobner import DrlBasis, build_staircase
from src.bivar.polynomial import BivPoly, drl_leading_monomial, lex_leading_monomial
from src.core.errors import DegreeTooHigh, NotMinimalBasis, ShapeMismatch, ZeroPolynomial
from src.core.outcomes import Fail
from src.hermite.submatrix import Branch, Certificate
from src.structured.displacement import apply_displacement

from .oracles import (
    L,
    FailingInversionBackend,
    four_generator_basis,
    point_ideal_drl_basis,
    point_ideal_lex_basis,
    random_points,
    staircase_size,
    vanishes_on,
)

def biv(field: PrimeField, terms: dict[tuple[int, int], int]) -> BivPoly:
    return BivPoly.from_terms(field, terms)

def x_y_basis(field: PrimeField) -> DrlBasis:
    return DrlBasis.from_polys(field, [biv(field, {(1, 0): 1}), biv(field, {(0, 1): 1})])

def test_leading_monomials(f101: PrimeField) -> None:
    f = biv(f101, {(0, 3): 1, (1, 1): 2, (2, 0): 5})
    assert drl_leading_monomial(f) == (0, 3)
    assert lex_leading_monomial(f) == (2, 0)
    assert (f.ydeg, f.xdeg, f.tdeg) == (2, 3, 3)
    with pytest.raises(ZeroPolynomial):
        drl_leading_monomial(BivPoly.zero(f101))

def test_drl_ties_broken_by_y(f101: PrimeField) -> None:
    f = biv(f101, {(0, 2): 1, (1, 1): 1, (0, 1): 1})
    assert drl_leading_monomial(f) == (1, 1)

def test_bivariate_arithmetic(f101: PrimeField) -> None:
    x = biv(f101, {(0, 1): 1})
    y = biv(f101, {(1, 0): 1})
    assert (x + y) * (x - y) == x * x - y * y
    f = (x + y) * (x + y) * 3
    assert f(2, 5) == 3 * 49 % 101
    assert f.terms() == {(0, 2): 3, (1, 1): 6, (2, 0): 3}
    assert y.shift_y(2) == y * y * y
    assert (x * Poly(f101, [1, 1])).terms() == {(0, 1): 1, (0, 2): 1}

def test_to_row(f101: PrimeField) -> None:
    f = biv(f101, {(2, 1): 1, (0, 0): 4})
    assert f.to_row(4) == [Poly(f101, [4]), Poly.zero(f101), Poly.x(f101), Poly.zero(f101)]
    assert BivPoly.from_row(f.to_row(4)) == f
    with pytest.raises(ShapeMismatch):
        f.to_row(2)

def test_psi_is_cyclic_shift(f101: PrimeField) -> None:
    f = biv(f101, {(0, 0): 1, (1, 0): 2, (2, 0): 3})
    assert psi(f, 3) == biv(f101, {(0, 0): 3, (1, 0): 1, (2, 0): 2})
    assert psi(f, 4) == f.shift_y(1)
    with pytest.raises(DegreeTooHigh):
        psi(f, 2)

@pytest.mark.parametrize("terms", [
    [{(1, 0): 1}],
    [{(1, 1): 1}, {(2, 0): 1}],
    [{(0, 2): 1}, {(1, 2): 1}, {(3, 0): 1}],
    [{(0, 2): 1}, {(1, 1): 1}],
])
def test_invalid_drl_bases(f101: PrimeField, terms: list[dict[tuple[int, int], int]]) -> None:
    with pytest.raises(NotMinimalBasis):
        DrlBasis.from_polys(f101, [biv(f101, t) for t in terms])

def test_basis_is_sorted_by_leading_y_degree(f101: PrimeField) -> None:
    gb = DrlBasis.from_polys(f101, [biv(f101, {(2, 0): 1}), biv(f101, {(0, 2): 1}), biv(f101, {(1, 1): 1})])
    assert gb.leading_monomials == [(0, 2), (1, 1), (2, 0)]
    st = build_staircase(gb)
    assert (st.counts, st.n, st.D) == ((1, 1, 1), 3, 3)
    assert st.D == staircase_size(gb.leading_monomials)

def test_staircase_of_x_y(f101: PrimeField) -> None:
    gb = x_y_basis(f101)
    st = build_staircase(gb)
    assert (st.counts, st.n, st.D) == ((1, 1), 2, 1)
    x, zero, one = Poly.x(f101), Poly.zero(f101), Poly.one(f101)
    assert build_matrix(gb, st) == PolyMat(f101, [[x, zero], [zero, one]])
    gen = displacement_generators_LM(gb, st)
    assert gen.G == PolyMat(f101, [[zero, one], [one, zero]])
    assert gen.product() == PolyMat(f101, [[-one, zero], [zero, one - x]])

def test_four_generator_staircase(fbig: PrimeField, rng: Rng) -> None:
    gb = four_generator_basis(fbig, rng)
    st = build_staircase(gb)
    assert st.counts == (5, 3, 2, 2)
    assert st.n == 12
    assert st.D == 53 == staircase_size(gb.leading_monomials)
    M = build_matrix(gb, st)
    shift = tuple(range(st.n))
    assert is_weak_popov(M, shift)
    assert det_degree_reduced(M, shift) == st.D
    assert displacement_generators_LM(gb, st).alpha == 4

def test_four_generator_row_degrees(fbig: PrimeField, rng: Rng) -> None:
    gb = four_generator_basis(fbig, rng)
    rows = row_polynomials(gb, build_staircase(gb))
    assert len(rows) == 12
    assert [f.ydeg for f in rows[:5]] == [6, 7, 8, 9, 10]
    assert rows[5] == gb.polys[1]

def test_generators_of_reversed_matrix(fbig: PrimeField, rng: Rng) -> None:
    for gb in (four_generator_basis(fbig, rng), point_ideal_drl_basis(fbig, random_points(fbig, 6, rng))):
        st = build_staircase(gb)
        LM = PolyMat.from_field_matrix(fbig, L(st.n)) @ build_matrix(gb, st)
        gen = displacement_generators_LM(gb, st)
        assert gen.alpha == len(gb)
        assert gen.product() == apply_displacement(LM)

def test_extract_lex_reads_dropping_rows(f101: PrimeField) -> None:
    x = Poly.x(f101)
    one = Poly.one(f101)
    B = PolyMat.diagonal(f101, [x * x, x * x, one])
    lex = extract_lex(B)
    assert lex.leading == ((0, 2), (2, 0))
    assert lex.complete
    assert lex.standard_monomial_count() == 4
    assert not lex.is_shape_position()

def test_extract_lex_incomplete(f101: PrimeField) -> None:
    x = Poly.x(f101)
    lex = extract_lex(PolyMat.diagonal(f101, [x * x, x]))
    assert len(lex) == 2
    assert not lex.complete

def test_change_order_of_coordinate_ideal(fbig: PrimeField) -> None:
    out = change_order(x_y_basis(fbig), sample_size=10**6, rng=Rng(1))
    assert isinstance(out, ChangeOrderResult)
    x = biv(fbig, {(0, 1): 1})
    y = biv(fbig, {(1, 0): 1})
    assert out.lex.polys == (x, y)
    assert out.shape_position
    assert out.branch is Branch.HROW
    assert out.cert is Certificate.TRUE

@pytest.mark.parametrize("k", [3, 5, 8])
def test_change_order_of_generic_points(fbig: PrimeField, rng: Rng, k: int) -> None:
    points = random_points(fbig, k, rng)
    gb = point_ideal_drl_basis(fbig, points)
    assert all(vanishes_on(g, points) for g in gb.polys)
    out = change_order(gb, rng=rng)
    assert isinstance(out, ChangeOrderResult)
    assert out.staircase.D == k
    assert list(out.lex.polys) == point_ideal_lex_basis(fbig, points)
    assert out.shape_position
    assert out.branch in (Branch.HCOL_HROW, Branch.HROW)
    assert out.lex.standard_monomial_count() == k

def test_change_order_with_shared_abscissas(fbig: PrimeField, rng: Rng) -> None:
    points = random_points(fbig, 6, rng, distinct_x=False)
    gb = point_ideal_drl_basis(fbig, points)
    out = change_order(gb, m_hint=1, rng=rng)
    assert isinstance(out, ChangeOrderResult)
    assert list(out.lex.polys) == point_ideal_lex_basis(fbig, points)
    assert not out.shape_position
    assert out.doublings >= 1
    assert out.lex.standard_monomial_count() == 6

def test_change_order_clamps_m(fbig: PrimeField) -> None:
    out = change_order(x_y_basis(fbig), m_hint=50, sample_size=10**6, rng=Rng(2))
    assert isinstance(out, ChangeOrderResult)
    assert out.m == 2
    assert out.doublings == 0

def test_change_order_propagates_failure(fbig: PrimeField) -> None:
    out = change_order(x_y_basis(fbig), rng=Rng(3), backend=FailingInversionBackend())
    assert isinstance(out, Fail)

HROW_BRANCHES = (Branch.HCOL_HROW, Branch.HROW)

@pytest.mark.slow
def test_change_order_of_random_shape_position_ideals(fbig: PrimeField) -> None:
    rng = Rng(99)
    for _ in range(50):
        k = rng.integers(2, 21)
        points = random_points(fbig, k, rng)
        out = change_order(point_ideal_drl_basis(fbig, points), sample_size=10**9, rng=rng)
        assert isinstance(out, ChangeOrderResult), k
        assert out.branch in HROW_BRANCHES
        assert out.cert is Certificate.TRUE
        assert out.shape_position
        xs = [a for a, _ in points]
        fitted = interpolate(fbig, xs, [b for _, b in points])
        assert out.lex.polys == (
            BivPoly.from_row([Poly.from_roots(fbig, xs)]),
            BivPoly.from_row([-fitted, Poly.one(fbig)]),
        )

@pytest.mark.slow
def test_change_order_of_random_ideals_with_shared_abscissas(fbig: PrimeField) -> None:
    rng = Rng(100)
    for _ in range(12):
        k = rng.integers(4, 17)
        points = random_points(fbig, k, rng, distinct_x=False)
        out = change_order(point_ideal_drl_basis(fbig, points), sample_size=10**9, rng=rng)
        assert isinstance(out, ChangeOrderResult), k
        assert out.branch not in HROW_BRANCHES
        assert not out.shape_position
        assert out.lex.complete
        assert out.lex.standard_monomial_count() == out.staircase.D == k
        assert all(vanishes_on(f, points) for f in out.lex.polys)
        assert list(out.lex.polys) == point_ideal_lex_basis(fbig, points)

from __future__ import annotations

import pytest

from src.algebra.field import PrimeField, Rng
from src.algebra.poly import Poly, gcd, gcd_many
from src.algebra.polymat import PolyMat, dense_hnf, determinant, is_hnf, is_popov
from src.algebra.relbas import (
    bezout_modulo,
    hnf_relbas,
    popov_form,
    popov_relbas,
    relbas_onecol_hrow,
    relbas_tworow,
)
from src.core.errors import GcdNotOne, NoSolution, ValidationError

from .oracles import (
    annihilates,
    random_poly,
    random_polymat,
    relation_quotient_dimension,
    spans_relations,
)

def column(field: PrimeField, entries: list[Poly]) -> PolyMat:
    return PolyMat(field, [[e] for e in entries], len(entries), 1)

def diagonal_degree(B: PolyMat) -> int:
    return sum(B[i, i].degree for i in range(B.rows))

@pytest.fixture
def mu(f101: PrimeField) -> Poly:
    return Poly.from_roots(f101, [1, 2, 2, 7])

@pytest.mark.parametrize("m,n", [(1, 1), (3, 1), (3, 2), (2, 3)])
def test_hnf_relbas_is_relation_basis(f101: PrimeField, rng: Rng, mu: Poly, m: int, n: int) -> None:
    F = random_polymat(f101, m, n, 3, rng)
    B = hnf_relbas(mu, F)
    assert B.shape == (m, m)
    assert is_hnf(B)
    assert annihilates(B, mu, F)
    assert spans_relations(B, mu, F)
    assert diagonal_degree(B) == relation_quotient_dimension(mu, F)

def test_hnf_relbas_with_shared_factors(f101: PrimeField, mu: Poly) -> None:
    x = Poly.x(f101)
    F = column(f101, [x - 2, (x - 1) * (x - 7), Poly.one(f101)])
    B = hnf_relbas(mu, F)
    assert annihilates(B, mu, F)
    assert spans_relations(B, mu, F)

def test_hnf_relbas_of_zero_residue_is_identity(f101: PrimeField, mu: Poly) -> None:
    F = column(f101, [mu, mu * 3])
    assert hnf_relbas(mu, F) == PolyMat.identity(f101, 2)

def test_hnf_relbas_rejects_zero_modulus(f101: PrimeField) -> None:
    with pytest.raises(ValidationError):
        hnf_relbas(Poly.zero(f101), PolyMat.identity(f101, 1))

def test_onecol_hrow_matches_general(f101: PrimeField, rng: Rng, mu: Poly) -> None:
    c = [Poly.x(f101) + 5] + [random_poly(f101, 3, rng) for _ in range(3)]
    B = relbas_onecol_hrow(mu, c)
    assert B == hnf_relbas(mu, column(f101, c))
    assert B[0, 0] == mu
    assert all(B[i, i].is_one() for i in range(1, 4))

def test_bezout_modulo(f101: PrimeField, mu: Poly) -> None:
    x = Poly.x(f101)
    row = [Poly.zero(f101), x - 2, x - 1, x * x + 1]
    u = bezout_modulo(mu, row)
    total = Poly.zero(f101)
    for a, b in zip(u, row):
        total = total + a * b
    assert (total % mu).is_one()

def test_bezout_modulo_common_factor(f101: PrimeField, mu: Poly) -> None:
    x = Poly.x(f101)
    with pytest.raises(GcdNotOne):
        bezout_modulo(mu, [x - 2, (x - 2) * (x - 1)])

def test_relbas_tworow(f101: PrimeField, rng: Rng, mu: Poly) -> None:
    x = Poly.x(f101)
    row0 = [x - 2, x + 3, random_poly(f101, 2, rng)]
    c = random_poly(f101, 3, rng)
    rowi = [(c * e) % mu for e in row0]
    b = relbas_tworow(mu, row0, rowi)
    assert b == (-c) % mu

def test_relbas_tworow_without_relation(f101: PrimeField, mu: Poly) -> None:
    one, zero = Poly.one(f101), Poly.zero(f101)
    with pytest.raises(NoSolution):
        relbas_tworow(mu, [one, zero], [zero, one])

def test_popov_form(f101: PrimeField, rng: Rng) -> None:
    M = random_polymat(f101, 3, 3, 2, rng)
    Pm = popov_form(M, (0, 0, 0))
    assert is_popov(Pm, (0, 0, 0))
    assert dense_hnf(Pm, transform=False)[0] == dense_hnf(M, transform=False)[0]
    assert determinant(Pm) == determinant(M).monic()

def test_popov_relbas_spans_same_module(f101: PrimeField, rng: Rng, mu: Poly) -> None:
    F = random_polymat(f101, 3, 2, 3, rng)
    Pm = popov_relbas(mu, F, (0, 0, 0))
    assert is_popov(Pm, (0, 0, 0))
    assert dense_hnf(Pm, transform=False)[0] == hnf_relbas(mu, F)

@pytest.mark.parametrize("s", [(0, 0), (0, 3), (5, 1), (-2, 7)])
def test_popov_relbas_of_zero_matrix_is_identity(f101: PrimeField, mu: Poly, s: tuple[int, int]) -> None:
    F = PolyMat.zeros(f101, 2, 3)
    assert hnf_relbas(mu, F) == PolyMat.identity(f101, 2)
    assert popov_relbas(mu, F, s) == PolyMat.identity(f101, 2)

def test_popov_relbas_with_spread_shift_is_hnf(f101: PrimeField, rng: Rng, mu: Poly) -> None:
    F = random_polymat(f101, 3, 2, 3, rng)
    D = mu.degree
    assert popov_relbas(mu, F, (0, D, 2 * D)) == hnf_relbas(mu, F)

def random_modulus(field: PrimeField, rng: Rng) -> Poly:
    """Monic with up to five roots drawn from a small pool, so repeated factors occur."""
    roots = [rng.integers(0, 6) for _ in range(rng.integers(1, 6))]
    return Poly.from_roots(field, roots)

@pytest.mark.slow
def test_random_relation_bases(f101: PrimeField) -> None:
    rng = Rng(91)
    for _ in range(100):
        mu = random_modulus(f101, rng)
        m, n = rng.integers(1, 4), rng.integers(1, 5)
        F = random_polymat(f101, m, n, mu.degree, rng)
        B = hnf_relbas(mu, F)
        assert is_hnf(B)
        assert annihilates(B, mu, F)
        assert spans_relations(B, mu, F)
        assert diagonal_degree(B) == relation_quotient_dimension(mu, F)

        D = mu.degree
        assert popov_relbas(mu, F, tuple(k * D for k in range(m))) == B

        c = F.column(0)
        if n == 1 and gcd(c[0], mu).is_one():
            assert relbas_onecol_hrow(mu, c) == B

@pytest.mark.slow
def test_random_tworow_matches_hnf_relbas(f101: PrimeField) -> None:
    rng = Rng(92)
    checked = 0
    for _ in range(100):
        mu = random_modulus(f101, rng)
        m, n = rng.integers(2, 4), rng.integers(1, 5)
        row0 = [random_poly(f101, mu.degree - 1, rng) for _ in range(n)]
        if not gcd_many(row0, mu).is_one():
            continue
        multipliers = [random_poly(f101, mu.degree - 1, rng) for _ in range(1, m)]
        rows = [row0] + [[(c * e) % mu for e in row0] for c in multipliers]
        R = PolyMat(f101, rows, m, n)
        B = hnf_relbas(mu, R)
        for i in range(1, m):
            assert relbas_tworow(mu, row0, R.row(i)) == B[i, 0]
            assert B[i, 0] == (-multipliers[i - 1]) % mu
        checked += 1
    assert checked >= 50

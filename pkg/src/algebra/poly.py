"""Dense univariate polynomials over a prime field.

Coefficients are stored ascending with trailing zeros stripped, so the zero
polynomial has an empty coefficient tuple and degree ``NEG_INF``.
"""
from __future__ import annotations

import functools
from typing import Iterable, Sequence, Union

from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_div, gf_gcd, gf_gcdex

from ..core.config import get_settings
from ..core.errors import BothZero, DuplicatePoints, NoSolution, NotCoprime, ValidationError, ZeroInput
from .field import FieldElement, PrimeField, field_inv

settings = get_settings()

@functools.total_ordering
class NegativeInfinity:
    """Degree of the zero polynomial; absorbs additions, below every int."""

    _instance = None

    def __new__(cls) -> NegativeInfinity:
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "-inf"

    def __eq__(self, other: object) -> bool:
        return other is self

    def __lt__(self, other: object) -> bool:
        if other is self:
            return False
        if isinstance(other, int):
            return True
        return NotImplemented

    def __hash__(self) -> int:
        return hash("-inf")

    def __add__(self, other: object) -> NegativeInfinity:
        if other is self or isinstance(other, int):
            return self
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other: object) -> NegativeInfinity:
        if isinstance(other, int):
            return self
        return NotImplemented

NEG_INF = NegativeInfinity()
Degree = Union[int, NegativeInfinity]

# Coefficient-list kernels

def _strip(cs: list[int]) -> list[int]:
    while cs and cs[-1] == 0:
        cs.pop()
    return cs

def _add(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = (out[i] + c) % p
    return _strip(out)

def _sub(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    out = list(a) + [0] * max(0, len(b) - len(a))
    for i, c in enumerate(b):
        out[i] = (out[i] - c) % p
    return _strip(out)

def _schoolbook(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return _strip([c % p for c in out])

def _karatsuba(a: Sequence[int], b: Sequence[int], p: int, threshold: int) -> list[int]:
    if len(a) <= threshold or len(b) <= threshold:
        return _schoolbook(a, b, p)
    k = max(len(a), len(b)) // 2
    a0, a1 = a[:k], a[k:]
    b0, b1 = b[:k], b[k:]
    z0 = _karatsuba(a0, b0, p, threshold)
    z2 = _karatsuba(a1, b1, p, threshold)
    z1 = _karatsuba(_add(a0, a1, p), _add(b0, b1, p), p, threshold)
    out = [0] * (len(a) + len(b) - 1)
    for i, c in enumerate(z0):
        out[i] += c
        out[i + k] -= c
    for i, c in enumerate(z2):
        out[i + 2 * k] += c
        out[i + k] -= c
    for i, c in enumerate(z1):
        out[i + k] += c
    return _strip([c % p for c in out])

def _to_gf(cs: Sequence[int]) -> list[int]:
    # galoistools stores coefficients leading first
    return list(reversed(cs))

def _from_gf(f: Sequence[int], p: int) -> list[int]:
    return _strip([int(c) % p for c in reversed(f)])

def _divmod(a: Sequence[int], b: Sequence[int], p: int) -> tuple[list[int], list[int]]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if len(a) < len(b):
        return [], list(a)
    q, r = gf_div(_to_gf(a), _to_gf(b), p, ZZ)
    return _from_gf(q, p), _from_gf(r, p)

class Poly:
    __slots__ = ("field", "coeffs")

    def __init__(self, field: PrimeField, coeffs: Iterable[int] = ()) -> None:
        p = field.p
        self.field = field
        self.coeffs: tuple[int, ...] = tuple(_strip([c % p for c in coeffs]))

    @classmethod
    def _wrap(cls, field: PrimeField, cs: list[int]) -> Poly:
        # cs must already be reduced and stripped
        obj = object.__new__(cls)
        obj.field = field
        obj.coeffs = tuple(cs)
        return obj

    @classmethod
    def zero(cls, field: PrimeField) -> Poly:
        return cls._wrap(field, [])

    @classmethod
    def one(cls, field: PrimeField) -> Poly:
        return cls._wrap(field, [1])

    @classmethod
    def constant(cls, field: PrimeField, c: int) -> Poly:
        return cls(field, [c])

    @classmethod
    def monomial(cls, field: PrimeField, k: int, c: int = 1) -> Poly:
        return cls(field, [0] * k + [c])

    @classmethod
    def x(cls, field: PrimeField) -> Poly:
        return cls._wrap(field, [0, 1])

    @classmethod
    def from_roots(cls, field: PrimeField, roots: Sequence[FieldElement]) -> Poly:
        if not roots:
            return cls.one(field)
        return SubproductTree(field, roots).root

    # Properties

    @property
    def degree(self) -> Degree:
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def lc(self) -> FieldElement:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return self.coeffs == (1,)

    def is_monic(self) -> bool:
        return self.lc == 1

    def coefficient(self, k: int) -> FieldElement:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def _coerce(self, other: object) -> Poly:
        if isinstance(other, Poly):
            if other.field.p != self.field.p:
                raise ValidationError(
                    "polynomials over different fields",
                    details={"p": self.field.p, "q": other.field.p}
                )
            return other
        if isinstance(other, int):
            return Poly(self.field, [other])
        return NotImplemented

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self.coeffs == Poly(self.field, [other]).coeffs
        if not isinstance(other, Poly):
            return NotImplemented
        return self.field.p == other.field.p and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.field.p, self.coeffs))

    # Arithmetic

    def __add__(self, other: Union[Poly, int]) -> Poly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Poly._wrap(self.field, _add(self.coeffs, other.coeffs, self.field.p))

    __radd__ = __add__

    def __sub__(self, other: Union[Poly, int]) -> Poly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Poly._wrap(self.field, _sub(self.coeffs, other.coeffs, self.field.p))

    def __rsub__(self, other: Union[Poly, int]) -> Poly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __neg__(self) -> Poly:
        p = self.field.p
        return Poly._wrap(self.field, [-c % p for c in self.coeffs])

    def __mul__(self, other: Union[Poly, int]) -> Poly:
        if isinstance(other, int):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return poly_mul(self, other)

    __rmul__ = __mul__

    def __divmod__(self, other: Union[Poly, int]) -> tuple[Poly, Poly]:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        q, r = _divmod(self.coeffs, other.coeffs, self.field.p)
        return Poly._wrap(self.field, q), Poly._wrap(self.field, r)

    def __floordiv__(self, other: Union[Poly, int]) -> Poly:
        return divmod(self, other)[0]

    def __mod__(self, other: Union[Poly, int]) -> Poly:
        return divmod(self, other)[1]

    def __call__(self, a: FieldElement) -> FieldElement:
        p = self.field.p
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * a + c) % p
        return acc

    def scale(self, c: int) -> Poly:
        c %= self.field.p
        if c == 0:
            return Poly.zero(self.field)
        p = self.field.p
        return Poly._wrap(self.field, [a * c % p for a in self.coeffs])

    def monic(self) -> Poly:
        if not self.coeffs or self.coeffs[-1] == 1:
            return self
        return self.scale(field_inv(self.field, self.coeffs[-1]))

    def shift(self, k: int) -> Poly:
        """Multiply by x^k."""
        if not self.coeffs:
            return self
        return Poly._wrap(self.field, [0] * k + list(self.coeffs))

    def truncate(self, k: int) -> Poly:
        """Reduce modulo x^k."""
        return Poly._wrap(self.field, _strip(list(self.coeffs[:k])))

    def derivative(self) -> Poly:
        p = self.field.p
        return Poly._wrap(self.field, _strip([i * c % p for i, c in enumerate(self.coeffs)][1:]))

    def __repr__(self) -> str:
        return f"Poly({list(self.coeffs)}, p={self.field.p})"

    def __str__(self) -> str:
        return " ".join(str(c) for c in self.coeffs) if self.coeffs else "0"

def poly_mul(a: Poly, b: Poly) -> Poly:
    return Poly._wrap(a.field, _karatsuba(a.coeffs, b.coeffs, a.field.p, settings.KARATSUBA_THRESHOLD))

def xgcd(a: Poly, b: Poly) -> tuple[Poly, Poly, Poly]:
    """Return (g, u, v) with g monic, u*a + v*b = g."""
    if a.is_zero() and b.is_zero():
        raise BothZero("xgcd of two zero polynomials")
    field = a.field
    p = field.p
    u, v, g = gf_gcdex(_to_gf(a.coeffs), _to_gf(b.coeffs), p, ZZ)
    return tuple(Poly._wrap(field, _from_gf(f, p)) for f in (g, u, v))

def gcd(a: Poly, b: Poly) -> Poly:
    if a.is_zero() and b.is_zero():
        raise BothZero("gcd of two zero polynomials")
    p = a.field.p
    return Poly._wrap(a.field, _from_gf(gf_gcd(_to_gf(a.coeffs), _to_gf(b.coeffs), p, ZZ), p))

def gcd_many(polys: Iterable[Poly], start: Poly) -> Poly:
    """Left fold of gcd starting from ``start``, stopping early at 1."""
    g = start
    for f in polys:
        if g.is_one():
            break
        if f:
            g = gcd(g, f) if g else f.monic()
    return g

def lcm(a: Poly, b: Poly) -> Poly:
    if a.is_zero() or b.is_zero():
        raise ZeroInput("lcm of a zero polynomial")
    return (a * b // gcd(a, b)).monic()

def lcm_tree(polys: Sequence[Poly]) -> Poly:
    """Monic lcm through a balanced binary tree."""
    if not polys:
        raise ZeroInput("lcm of an empty list")
    if any(f.is_zero() for f in polys):
        raise ZeroInput("lcm of a zero polynomial", details={"count": len(polys)})
    layer = [f.monic() for f in polys]
    while len(layer) > 1:
        nxt = [lcm(layer[i], layer[i + 1]) for i in range(0, len(layer) - 1, 2)]
        if len(layer) % 2:
            nxt.append(layer[-1])
        layer = nxt
    return layer[0]

def mod_inverse(c: Poly, mu: Poly) -> Poly:
    if mu.is_zero():
        raise NotCoprime("inverse modulo the zero polynomial")
    g, u, _ = xgcd(c % mu, mu)
    if not g.is_one():
        raise NotCoprime("polynomial is not invertible modulo mu", details={"gcd": str(g)})
    return u % mu

class SubproductTree:
    """Products of (x - a_i) over a balanced binary tree; level 0 holds the leaves."""

    def __init__(self, field: PrimeField, points: Sequence[FieldElement]) -> None:
        p = field.p
        self.field = field
        self.points = [a % p for a in points]
        self.levels: list[list[Poly]] = [[Poly._wrap(field, [-a % p, 1]) for a in self.points]]
        while len(self.levels[-1]) > 1:
            prev = self.levels[-1]
            nxt = [prev[i] * prev[i + 1] for i in range(0, len(prev) - 1, 2)]
            if len(prev) % 2:
                nxt.append(prev[-1])
            self.levels.append(nxt)

    @property
    def root(self) -> Poly:
        return self.levels[-1][0]

    def evaluate(self, f: Poly) -> list[FieldElement]:
        rems = [f % self.root]
        for level in reversed(self.levels[:-1]):
            nxt = []
            for i, r in enumerate(rems):
                nxt.append(r % level[2 * i])
                if 2 * i + 1 < len(level):
                    nxt.append(r % level[2 * i + 1])
            rems = nxt
        return [r.coefficient(0) for r in rems]

    def combine(self, weights: Sequence[FieldElement]) -> Poly:
        """Sum of w_i * root / (x - a_i)."""
        vals = [Poly(self.field, [w]) for w in weights]
        for level in self.levels[:-1]:
            nxt = []
            for i in range(0, len(vals), 2):
                if i + 1 < len(vals):
                    nxt.append(vals[i] * level[i + 1] + vals[i + 1] * level[i])
                else:
                    nxt.append(vals[i])
            vals = nxt
        return vals[0]

def multipoint_eval(f: Poly, points: Sequence[FieldElement]) -> list[FieldElement]:
    if len(points) <= settings.SUBPRODUCT_THRESHOLD:
        return [f(a) for a in points]
    return SubproductTree(f.field, points).evaluate(f)

def interpolate(
    field: PrimeField,
    points: Sequence[FieldElement],
    values: Sequence[FieldElement]
) -> Poly:
    """The unique polynomial of degree < len(points) through the given values."""
    if len(points) != len(values) or not points:
        raise ValidationError(
            "interpolation needs as many values as points, at least one",
            details={"points": len(points), "values": len(values)}
        )
    if len({a % field.p for a in points}) != len(points):
        raise DuplicatePoints("interpolation points are not distinct")
    p = field.p
    if len(points) <= settings.SUBPRODUCT_THRESHOLD:
        root = Poly.one(field)
        for a in points:
            root = root * Poly._wrap(field, [-a % p, 1])
        result = Poly.zero(field)
        for a, v in zip(points, values):
            if v % p == 0:
                continue
            basis = root // Poly._wrap(field, [-a % p, 1])
            result = result + basis.scale(v * field_inv(field, basis(a)))
        return result
    tree = SubproductTree(field, points)
    denominators = tree.evaluate(tree.root.derivative())
    weights = [v * field_inv(field, d) % p for v, d in zip(values, denominators)]
    return tree.combine(weights)

def rational_reconstruct(F: Poly, A: Poly, df: int, dg: int) -> tuple[Poly, Poly]:
    """Find f/g with g*F = f mod A, deg f <= df, deg g <= dg; g monic, gcd(f, g) = 1."""
    field = A.field
    r0, r1 = A, F % A
    t0, t1 = Poly.zero(field), Poly.one(field)
    while len(r1.coeffs) - 1 > df:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        t0, t1 = t1, t0 - q * t1
    f, g = r1, t1
    if g.is_zero() or g.degree > dg:
        raise NoSolution(
            "no fraction within the degree bounds",
            details={"df": df, "dg": dg, "deg_g": str(g.degree)}
        )
    if not gcd(f, g).is_one():
        raise NoSolution("reconstructed fraction is not reduced", details={"df": df, "dg": dg})
    inv = field_inv(field, g.lc)
    return f.scale(inv), g.scale(inv)

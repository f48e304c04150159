"""The reduced curve y^2 = f(x), deg f = 7, over GF(p) and its extensions."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Sequence

from .field import GF, FieldError, GFElement, Poly, discriminant, is_prime, sqrt_in_extension

GENUS = 3


class BadReduction(ValueError):
    """The prime is too small or the curve has bad reduction there."""


@dataclass(frozen=True)
class CurveModP:
    p: int
    f: Poly

    @property
    def a7(self) -> int:
        return self.f.lc

    @property
    def genus(self) -> int:
        return GENUS

    def __str__(self) -> str:
        return f"y^2 = {self.f} over GF({self.p})"


@dataclass(frozen=True)
class CurvePoint:
    """A point of C; x = y = None is the point at infinity."""

    x: GFElement | None = None
    y: GFElement | None = None

    @property
    def is_infinity(self) -> bool:
        return self.x is None

    def is_weierstrass(self) -> bool:
        return self.is_infinity or self.y.is_zero()

    def degree(self) -> int:
        """Degree of the smallest field GF(p^d), d <= 2 or 3, containing the coordinates."""
        if self.is_infinity:
            return 1
        if self.x.is_base() and self.y.is_base():
            return 1
        return max(self.x.field.degree, self.y.field.degree)

    def is_rational(self) -> bool:
        return self.degree() == 1

    def conjugate(self) -> "CurvePoint":
        if self.is_infinity:
            return self
        return CurvePoint(self.x.frobenius(), self.y.frobenius())

    def sort_key(self):
        if self.is_infinity:
            return (0,)
        return (1, self.x.field.degree, self.x.sort_key(), self.y.sort_key())

    def __repr__(self) -> str:
        if self.is_infinity:
            return "inf"
        return f"({self.x!r},{self.y!r})"


INFINITY = CurvePoint()


def reduce_curve(coeffs: Sequence[int], p: int) -> CurveModP:
    """Reduce integer coefficients (constant term first, 8 of them) modulo p.

    Raises BadReduction when p < 5 or is not prime, when the x^7 coefficient
    vanishes mod p, or when f has a repeated root mod p.
    """
    if len(coeffs) != 8:
        raise ValueError("expected 8 coefficients (degree 7, constant term first)")
    if not is_prime(p):
        raise BadReduction(f"{p} is not prime")
    if p < 5:
        raise BadReduction("prime too small: need p >= 5")
    f = Poly(p, coeffs)
    if f.degree != 7:
        raise BadReduction("bad reduction: leading coefficient vanishes mod p")
    if discriminant(f) == 0:
        raise BadReduction("bad reduction: discriminant vanishes mod p")
    return CurveModP(p, f)


def _points_over(C: CurveModP, F: GF) -> Iterator[CurvePoint]:
    table = F.sqrt_table()
    for x in F.elements():
        fx = C.f(x)
        s = table.get(fx.coords)
        if s is None:
            continue
        if s.is_zero():
            yield CurvePoint(x, s)
        else:
            yield from sorted((CurvePoint(x, s), CurvePoint(x, -s)), key=CurvePoint.sort_key)


def points(C: CurveModP, extension_degree: int = 1) -> list[CurvePoint]:
    """All points of C over GF(p^d): infinity first, then by (x, y) coordinates."""
    F = GF(C.p, extension_degree)
    return [INFINITY] + list(_points_over(C, F))


def affine_points_with_x(C: CurveModP, x: GFElement) -> list[CurvePoint]:
    """Points above x whose y lies in x's field or (for x in GF(p)) in GF(p^2)."""
    s = sqrt_in_extension(C.f(x))
    if s is None:
        return []
    x = s.field(x) if s.field.degree > x.field.degree else x
    if s.is_zero():
        return [CurvePoint(x, s)]
    return sorted((CurvePoint(x, s), CurvePoint(x, -s)), key=CurvePoint.sort_key)


def involution(P: CurvePoint) -> CurvePoint:
    if P.is_infinity:
        return P
    return CurvePoint(P.x, -P.y)


def on_curve(C: CurveModP, P: CurvePoint) -> bool:
    return P.is_infinity or P.y * P.y == C.f(P.x)


@dataclass(frozen=True)
class ZetaData:
    n1: int
    n2: int
    n3: int
    l_poly: tuple[int, ...]  # constant term first, degree 6
    jacobian_order: int


def _euler_count(C: CurveModP, k: int) -> int:
    """#C(GF(p^k)) = p^k + 1 + sum_x chi(f(x)), chi by Euler's criterion."""
    F = GF(C.p, k)
    e = (F.order - 1) // 2
    total = F.order + 1
    for x in F.elements():
        v = C.f(x)
        if v.is_zero():
            continue
        total += 1 if v ** e == 1 else -1
    return total


def zeta_data(C: CurveModP) -> ZetaData:
    """Point counts over GF(p^k), k <= 3, the L-polynomial and #J(F_p) = L(1)."""
    p = C.p
    n = [_euler_count(C, k) for k in (1, 2, 3)]
    # power sums of the Frobenius eigenvalues: s_k = p^k + 1 - N_k
    s = [p ** k + 1 - n[k - 1] for k in (1, 2, 3)]
    e1 = s[0]
    e2 = (e1 * s[0] - s[1]) // 2
    e3 = (e2 * s[0] - e1 * s[1] + s[2]) // 3
    a1, a2, a3 = -e1, e2, -e3
    l_poly = (1, a1, a2, a3, p * a2, p * p * a1, p ** 3)
    order = sum(l_poly)
    for k in (1, 2, 3):
        if abs(n[k - 1] - p ** k - 1) > 2 * GENUS * math.sqrt(p ** k):
            raise FieldError(f"Hasse-Weil violated over GF({p}^{k})")
    if order <= 0:
        raise FieldError("non-positive Jacobian order")
    return ZetaData(n[0], n[1], n[2], l_poly, order)

"""Divisor classes on J(F_p) in Mumford form, Cantor's algorithm, and W_2(F_p).

A class is stored as its reduced representative (u, v): u monic of degree
at most 3, deg v < deg u and u | v^2 - f.  It stands for [D - deg(D) inf]
where D is the effective divisor cut out by y = v(x) on the roots of u.
Reduced representatives are unique in genus 3, so classes compare by (u, v).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable

from .curve import INFINITY, CurveModP, CurvePoint, involution, points
from .field import GF, FieldError, Poly, poly_xgcd


class NotRational(ValueError):
    pass


class GroupOrderError(RuntimeError):
    pass


@dataclass(frozen=True)
class DivisorClass:
    u: Poly
    v: Poly

    @property
    def degree(self) -> int:
        return self.u.degree

    def is_zero(self) -> bool:
        return self.u.degree == 0

    def key(self) -> str:
        return f"u={self.u};v={self.v}"

    def sort_key(self):
        return (self.u.degree, self.u.c, self.v.c)

    def __lt__(self, other: "DivisorClass"):
        return self.sort_key() < other.sort_key()

    def __repr__(self) -> str:
        return f"<{self.key()}>"


def zero_class(p: int) -> DivisorClass:
    return DivisorClass(Poly.const(p, 1), Poly(p))


def make_class(C: CurveModP, u: Poly, v: Poly) -> DivisorClass:
    """Normalise (u, v) and check the Mumford condition u | v^2 - f."""
    u = u.monic()
    v = v % u
    if (v * v - C.f) % u:
        raise FieldError(f"u = {u} does not divide v^2 - f for v = {v}")
    if u.degree > 3:
        raise FieldError("class is not reduced")
    return DivisorClass(u, v)


def _to_base_poly(p: int, coeffs) -> Poly:
    try:
        return Poly(p, [int(c) for c in coeffs])
    except FieldError as exc:
        raise NotRational("pair is not Galois-stable") from exc


def class_of_pair(C: CurveModP, P1: CurvePoint, P2: CurvePoint) -> DivisorClass:
    """The class [(P1) + (P2) - 2 inf].

    P1, P2 must be rational or a Galois-conjugate pair.  Pairs (P, iota P)
    go to 0; (P, inf) goes to [P - inf]; a doubled non-Weierstrass point uses
    the tangent lift v = b + f'(a)/(2b) (x - a).
    """
    p = C.p
    if P1.is_infinity and P2.is_infinity:
        return zero_class(p)
    if P1.is_infinity:
        P1, P2 = P2, P1
    if P2.is_infinity:
        if not P1.is_rational():
            raise NotRational("single point is not rational")
        return make_class(C, Poly(p, [-int(P1.x), 1]), Poly(p, [int(P1.y)]))
    if P2 == involution(P1):
        return zero_class(p)
    if {P1.conjugate(), P2.conjugate()} != {P1, P2}:
        raise NotRational("pair is not Galois-stable")
    a1, b1, a2, b2 = P1.x, P1.y, P2.x, P2.y
    if a1 != a2:
        slope = (b2 - b1) / (a2 - a1)
        u = [a1 * a2, -(a1 + a2), 1]
        v = [b1 - slope * a1, slope]
    else:
        # tangent: P1 == P2 with b1 != 0
        fprime = C.f.derivative()(a1)
        slope = fprime / (b1 * 2)
        u = [a1 * a1, -(a1 * 2), 1]
        v = [b1 - slope * a1, slope]
    return make_class(C, _to_base_poly(p, u), _to_base_poly(p, v))


def negate(a: DivisorClass) -> DivisorClass:
    return DivisorClass(a.u, (-a.v) % a.u if a.u.degree > 0 else a.v)


def cantor_add(a: DivisorClass, b: DivisorClass, C: CurveModP) -> DivisorClass:
    """Composition followed by reduction, for the odd-degree genus-3 model."""
    f = C.f
    u1, v1, u2, v2 = a.u, a.v, b.u, b.v
    d0, e1, e2 = poly_xgcd(u1, u2)
    d, c1, c2 = poly_xgcd(d0, v1 + v2)
    s1, s2, s3 = c1 * e1, c1 * e2, c2
    u = (u1 * u2).exact_div(d * d)
    v = (s1 * u1 * v2 + s2 * u2 * v1 + s3 * (v1 * v2 + f)).exact_div(d) % u
    while u.degree > 3:
        u = (f - v * v).exact_div(u).monic()
        v = (-v) % u
    u = u.monic()
    return DivisorClass(u, v % u)


def scalar_mul(n: int, a: DivisorClass, C: CurveModP) -> DivisorClass:
    if n < 0:
        return scalar_mul(-n, negate(a), C)
    result = zero_class(C.p)
    base = a
    while n:
        if n & 1:
            result = cantor_add(result, base, C)
        base = cantor_add(base, base, C)
        n >>= 1
    return result


def subgroup_generated(gens: Iterable[DivisorClass], C: CurveModP,
                       order_bound: int | None = None) -> frozenset[DivisorClass]:
    """Closure of gens under Cantor addition (a finite monoid closure is a group)."""
    gens = list(gens)
    seen = {zero_class(C.p)}
    frontier = list(seen)
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = cantor_add(x, g, C)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        if order_bound is not None and len(seen) > order_bound:
            raise GroupOrderError(f"subgroup has more than {order_bound} elements")
        frontier = nxt
    return frozenset(seen)


def enumerate_jacobian(C: CurveModP) -> list[DivisorClass]:
    """Every reduced Mumford pair over GF(p), by brute force.  Use for small p only."""
    p, f = C.p, C.f
    out = [zero_class(p)]
    for deg in (1, 2, 3):
        for tail in itertools.product(range(p), repeat=deg):
            u = Poly(p, tuple(reversed(tail)) + (1,))
            target = f % u
            for vc in itertools.product(range(p), repeat=deg):
                v = Poly(p, vc)
                if (v * v) % u == target:
                    out.append(DivisorClass(u, v))
    return out


@dataclass(frozen=True)
class W2Set:
    """W_2(F_p) with one witness pair per class.

    witness[0_J] is (inf, inf); antidiagonal lists the P (inf included) with
    (P, iota P) a rational pair, i.e. the centres of the 0_J residue disks.
    """

    classes: tuple[DivisorClass, ...]
    witness: dict = field(compare=False)
    antidiagonal: tuple[CurvePoint, ...] = ()

    def __contains__(self, c) -> bool:
        return c in self.witness

    def __len__(self) -> int:
        return len(self.classes)

    def __iter__(self):
        return iter(self.classes)

    def negated_closed(self) -> bool:
        return all(negate(c) in self.witness for c in self.classes)


def enumerate_w2(C: CurveModP) -> W2Set:
    """All classes [(P1)+(P2)-2 inf] with {P1, P2} Galois-stable, deduplicated by (u, v)."""
    p = C.p
    rational = [P for P in points(C, 1) if not P.is_infinity]
    quadratic = [P for P in points(C, 2)
                 if not P.is_infinity and not P.is_rational()]
    witness: dict[DivisorClass, tuple[CurvePoint, CurvePoint]] = {zero_class(p): (INFINITY, INFINITY)}

    def add(P1, P2):
        c = class_of_pair(C, P1, P2)
        witness.setdefault(c, (P1, P2))

    for P in rational:
        add(P, INFINITY)
    for i, P1 in enumerate(rational):
        for P2 in rational[i:]:
            if P2 != involution(P1):
                add(P1, P2)
    for Q in quadratic:
        Qs = Q.conjugate()
        if Qs != involution(Q) and Q.sort_key() < Qs.sort_key():
            add(Q, Qs)
    antidiagonal = [INFINITY] + rational + [Q for Q in quadratic
                                            if Q.conjugate() == involution(Q)]
    classes = tuple(sorted(witness))
    return W2Set(classes, witness, tuple(antidiagonal))


def reduce_rational_class(C: CurveModP, u_coeffs, v_coeffs) -> DivisorClass:
    """Reduce a Mumford pair with rational coefficients (Fractions) modulo p."""
    p = C.p

    def red(q):
        num, den = q.numerator, q.denominator
        if den % p == 0:
            raise NotRational(f"coefficient {q} is not {p}-integral")
        return num * pow(den, -1, p) % p

    return make_class(C, Poly(p, [red(q) for q in u_coeffs]), Poly(p, [red(q) for q in v_coeffs]))


def point_class(C: CurveModP, P: CurvePoint) -> DivisorClass:
    return class_of_pair(C, P, INFINITY)


__all__ = [
    "DivisorClass", "W2Set", "NotRational", "GroupOrderError", "zero_class", "make_class",
    "class_of_pair", "negate", "cantor_add", "scalar_mul", "subgroup_generated",
    "enumerate_jacobian", "enumerate_w2", "reduce_rational_class", "point_class", "GF",
]

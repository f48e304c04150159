"""Mod-p residue-disk tests: the 2x2 matrix criterion and the 0_J-disk criterion.

A differential is given by (c0, c1, c2), meaning (c0 + c1 x + c2 x^2) dx/y.
Uniformizers: t = x - a at a non-Weierstrass affine point, t = y at an
affine Weierstrass point, t = x^3/y at infinity.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .curve import CurveModP, CurvePoint, involution
from .field import GF, GFElement
from .picard import W2Set
from .wedge import WedgeForm, annihilator_from_beta, beta_from_alpha


@dataclass(frozen=True)
class AnnihilatorModP:
    p: int
    w1: tuple[int, int, int]
    w2: tuple[int, int, int]

    @classmethod
    def from_alpha(cls, p: int, a1: Sequence[int], a2: Sequence[int]) -> "AnnihilatorModP":
        beta_from_alpha(a1, a2, p)  # rank check
        return cls(p, tuple(int(c) % p for c in a1), tuple(int(c) % p for c in a2))

    @classmethod
    def from_beta(cls, beta: WedgeForm) -> "AnnihilatorModP":
        w1, w2 = annihilator_from_beta(beta)
        return cls(beta.p, w1, w2)

    @property
    def beta(self) -> WedgeForm:
        return beta_from_alpha(self.w1, self.w2, self.p)

    def __iter__(self):
        return iter((self.w1, self.w2))


def _h(w, a):
    return w[0] + a * w[1] + a * a * w[2]


def _dh(w, a):
    return a * (2 * w[2]) + w[1]


def local_expansion(C: CurveModP, w: Sequence[int], P: CurvePoint) -> tuple[GFElement, GFElement]:
    """(value, first derivative) of w/dt at t = 0."""
    F = GF(C.p) if P.is_infinity else P.x.field
    if P.is_infinity:
        # x ~ t^-2/a7, y ~ t^-7/a7^3 and w/dt is even in t
        return F(-2 * w[2]), F.zero
    a, b = P.x, P.y
    fp = C.f.derivative()(a)
    if b.is_zero():
        # x = a + t^2/f'(a) + ..., so w/dt = 2 h(x)/f'(a) + O(t^2)
        return _h(w, a) * 2 / fp, F.zero
    h = _h(w, a)
    value = h / b
    deriv = _dh(w, a) / b - h * fp / (b * b * b * 2)
    return value, deriv


def disk_matrix_det(C: CurveModP, P1: CurvePoint, P2: CurvePoint, ann: AnnihilatorModP) -> GFElement:
    """Determinant of the 2x2 matrix of w_i/dt values at P1, P2 (value and
    derivative rows when P1 = P2).  Defined off the 0_J disk only."""
    if P2 == involution(P1) and not (P1 == P2 and not P1.is_weierstrass()):
        raise ValueError("(P, iota P) lies over 0_J; use zero_disk_check")
    e1 = [local_expansion(C, w, P1) for w in ann]
    if P1 == P2:
        return e1[0][0] * e1[1][1] - e1[1][0] * e1[0][1]
    e2 = [local_expansion(C, w, P2) for w in ann]
    return e1[0][0] * e2[1][0] - e1[1][0] * e2[0][0]


def zero_disk_check(C: CurveModP, P: CurvePoint, ann: AnnihilatorModP) -> bool:
    """True when some w_i/dt is nonzero at P: the 0_J disk through (P, iota P) is clear."""
    return any(not local_expansion(C, w, P)[0].is_zero() for w in ann)


def zero_disk_verdict(C: CurveModP, w2: W2Set, ann: AnnihilatorModP) -> bool:
    """zero_disk_check over every P with (P, iota P) rational, infinity included."""
    return all(zero_disk_check(C, P, ann) for P in w2.antidiagonal)


def matrix_verdicts(C: CurveModP, w2: W2Set, ann: AnnihilatorModP) -> dict:
    """class -> True when the matrix is invertible (disk holds at most one point)."""
    out = {}
    for c in w2.classes:
        if c.is_zero():
            continue
        P1, P2 = w2.witness[c]
        out[c] = not disk_matrix_det(C, P1, P2, ann).is_zero()
    return out

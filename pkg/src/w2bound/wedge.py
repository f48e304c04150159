"""The wedge form of two annihilating differentials and the case split.

For w_i = (a_i0 + a_i1 x + a_i2 x^2) dx/y the wedge w_1 ^ w_2 on C x C is,
up to the factor (x_2 - x_1) dx_1 dx_2 / (y_1 y_2), the symmetric bilinear
form b01 + b02 (x1 + x2) + b12 x1 x2 with b_nm the 2x2 minors.  Its zero
locus Z either splits as (b x1 + a)(b x2 + a) (case I), or is the graph of
the Moebius involution mu(x) = -(b02 x + b01)/(b12 x + b02) lifted to C x C.
Whether that lift is reducible decides case II against case III.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .curve import CurveModP, CurvePoint, INFINITY
from .field import (
    GF,
    FieldError,
    GFElement,
    Poly,
    factor_squarefree_small,
    mobius_numerator,
    poly_gcd,
    poly_ord_at,
    poly_roots,
    poly_xgcd,
    sqrt_in_extension,
)


class RankError(ValueError):
    """The two differentials are proportional mod p."""


@dataclass(frozen=True)
class WedgeForm:
    p: int
    beta01: int
    beta02: int
    beta12: int

    @classmethod
    def from_triple(cls, p: int, triple: Sequence[int]) -> "WedgeForm":
        b = [int(t) % p for t in triple]
        if len(b) != 3:
            raise ValueError("beta needs three entries (b01, b02, b12)")
        lead = next((t for t in b if t), None)
        if lead is None:
            raise RankError("beta is identically zero")
        inv = pow(lead, -1, p)
        return cls(p, *(t * inv % p for t in b))

    @property
    def triple(self) -> tuple[int, int, int]:
        return (self.beta01, self.beta02, self.beta12)

    @property
    def delta(self) -> int:
        """b02^2 - b01 b12; zero exactly in case I."""
        return (self.beta02 ** 2 - self.beta01 * self.beta12) % self.p

    @property
    def diag_quadratic(self) -> Poly:
        return Poly(self.p, [self.beta01, 2 * self.beta02, self.beta12])

    @property
    def pole(self) -> int | None:
        """x with b12 x + b02 = 0, i.e. mu(x) = inf; None when b12 = 0."""
        if self.beta12 == 0:
            return None
        return -self.beta02 * pow(self.beta12, -1, self.p) % self.p

    def value(self, x1, x2):
        return self.beta01 + (x1 + x2) * self.beta02 + x1 * x2 * self.beta12

    def c(self, x):
        return x * self.beta12 + self.beta02

    def mobius(self, x):
        """mu(x), or None when x is the pole."""
        if isinstance(x, int):
            x = GF(self.p)(x)
        den = self.c(x)
        if den.is_zero():
            return None
        return -(x * self.beta02 + self.beta01) / den

    def __str__(self) -> str:
        return "({},{},{})".format(*self.triple)


def beta_from_alpha(alpha1: Sequence[int], alpha2: Sequence[int], p: int) -> WedgeForm:
    if len(alpha1) != 3 or len(alpha2) != 3:
        raise ValueError("alpha vectors need three entries")
    a1 = [int(a) % p for a in alpha1]
    a2 = [int(a) % p for a in alpha2]

    def minor(n, m):
        return (a1[n] * a2[m] - a1[m] * a2[n]) % p

    triple = (minor(0, 1), minor(0, 2), minor(1, 2))
    if not any(triple):
        raise RankError("annihilator reduces to rank < 2 mod p")
    return WedgeForm.from_triple(p, triple)


# case tags

@dataclass(frozen=True)
class CaseI:
    """Z = {b x1 + a = 0} u {b x2 + a = 0} and D = C_P + C_iotaP.

    P is None when b = 0, meaning the point at infinity.
    """

    a: GFElement
    b: GFElement
    P: CurvePoint
    root: bool  # x(P) is a root of f (or P = inf)
    name: str = field(default="I", init=False)


@dataclass(frozen=True)
class CaseII:
    gamma: int
    sqrt_gamma: tuple  # the two square roots of gamma, in GF(p) or GF(p^2)
    name: str = field(default="II", init=False)


@dataclass(frozen=True)
class CaseIII:
    name: str = field(default="III", init=False)


@dataclass(frozen=True)
class EllipticObstruction:
    gamma: int
    name: str = field(default="elliptic", init=False)


def _case_one(C: CurveModP, beta: WedgeForm) -> CaseI:
    p = C.p
    F2 = GF(p, 2)
    if beta.beta12:
        b = sqrt_in_extension(GF(p)(beta.beta12))
        a = F2(beta.beta02) / b if b.field.degree == 2 else b.field(beta.beta02) / b
        xP = GF(p)(beta.pole)
        fx = C.f(xP)
        y = sqrt_in_extension(fx)
        P = CurvePoint(y.field(xP), y)
        return CaseI(a, b, P, fx.is_zero())
    a = sqrt_in_extension(GF(p)(beta.beta01))
    return CaseI(a, a.field.zero, INFINITY, True)


def proportionality(C: CurveModP, beta: WedgeForm):
    """gamma with f = gamma * M, M = mobius_numerator(f, beta, 8); None if no such gamma."""
    M = mobius_numerator(C.f, beta.triple, 8)
    if M.degree != C.f.degree:
        return None, M
    gamma = C.f.lc * pow(M.lc, -1, C.p) % C.p
    if M.scale(gamma) == C.f:
        return gamma, M
    return None, M


def obstruction_identity(C: CurveModP, beta: WedgeForm) -> bool:
    """f'(xi0) = a7 (b02^2 - b01 b12)^3 with beta scaled so that b12 = 1.

    Both sides scale differently under beta -> lambda beta, so the identity is
    only meaningful for a fixed scaling; with b12 = 1 it says gamma * delta^4 = 1,
    i.e. the lift of mu to C is an involution.
    """
    p = C.p
    if not beta.beta12:
        return False
    b12 = beta.beta12
    lhs = C.f.derivative()(beta.pole) * pow(b12, 6, p) % p
    return lhs == C.a7 * pow(beta.delta, 3, p) % p


def case_split(C: CurveModP, beta: WedgeForm):
    p = C.p
    if beta.delta == 0:
        return _case_one(C, beta)
    gamma, _ = proportionality(C, beta)
    if gamma is None:
        return CaseIII()
    if beta.beta12 and obstruction_identity(C, beta):
        return EllipticObstruction(gamma)
    r = sqrt_in_extension(GF(p)(gamma))
    return CaseII(gamma, tuple(sorted((r, -r), key=lambda e: e.sort_key())))


# independent check of reducibility: does mu permute the roots of f?

def _mulmod(a: Poly, b: Poly, g: Poly) -> Poly:
    return (a * b) % g


def _image_is_root(C: CurveModP, beta: WedgeForm, g: Poly) -> bool:
    """For theta a root of the irreducible g (not the pole): is f(mu(theta)) = 0?

    Works in GF(p)[x]/(g): mu(theta) is computed with an explicit inverse of
    b12 theta + b02, then f is evaluated by Horner.
    """
    p = C.p
    num = Poly(p, [-beta.beta01, -beta.beta02]) % g
    den = Poly(p, [beta.beta02, beta.beta12]) % g
    d, s, _ = poly_xgcd(den, g)
    if d.degree != 0:
        raise FieldError("pole inside a non-linear factor")
    image = _mulmod(num, s, g)
    acc = Poly(p)
    for coeff in reversed(C.f.c):
        acc = (_mulmod(acc, image, g) + coeff) % g
    return not acc


def permutes_roots(C: CurveModP, beta: WedgeForm) -> bool:
    """Criterion for Z reducible: mu permutes the roots of f, where for b12 != 0
    the pole must itself be a root and the remaining roots are permuted."""
    p = C.p
    xi0 = beta.pole
    if xi0 is not None and C.f(xi0) % p:
        return False
    for g in factor_squarefree_small(C.f):
        if xi0 is not None and g == Poly(p, [-xi0, 1]):
            continue
        if not _image_is_root(C, beta, g):
            return False
    return True


# Z data

@dataclass(frozen=True)
class SingularZPoint:
    """A singular point of Z up to Galois conjugacy.

    kind "weierstrass": ((xi, 0), (mu xi, 0)) with xi a root of f in S;
    kind "infinity": (inf, inf), only when b12 = 0;
    kind "pole": ((xi0, 0), inf) and its swap, when eta = 1.
    xi is a GFElement for degree <= 2 roots, else None with factor set.
    """

    kind: str
    xi: GFElement | None = None
    image: GFElement | None = None
    factor: Poly | None = None

    def sort_key(self):
        order = {"pole": 0, "infinity": 1, "weierstrass": 2}[self.kind]
        xs = () if self.xi is None else (self.xi.field.degree, self.xi.sort_key())
        fs = () if self.factor is None else (self.factor.degree, self.factor.c)
        return (order, fs, xs)


@dataclass
class ZAnalysis:
    F: Poly
    M: Poly
    s_poly: Poly          # prod over S of (x - xi), monic
    s_factors: list       # irreducible factors of s_poly
    G: Poly
    eta: int
    xi0: int | None
    diag_quadratic: Poly
    diag_roots: list      # roots over GF(p) or GF(p^2), without multiplicity
    gamma_xi: dict        # diag root -> 0|1
    sing_Z: list
    geometric_sing_count: int

    def ord_F(self, a) -> int:
        return poly_ord_at(self.F, a) if self.F else 0

    def ord_G(self, a) -> int:
        return poly_ord_at(self.G, a) if self.G else 0


def z_analysis(C: CurveModP, beta: WedgeForm) -> ZAnalysis:
    p = C.p
    if beta.delta == 0:
        raise ValueError("Z undefined in case I")
    f = C.f
    M = mobius_numerator(f, beta.triple, 8)
    F = M - f.scale(pow(beta.delta, 4, p))
    xi0 = beta.pole
    eta = int(xi0 is not None and f(xi0) % p == 0)
    s_poly = poly_gcd(f, M)
    if eta:
        s_poly = s_poly.exact_div(Poly(p, [-xi0, 1]))
    s_factors = factor_squarefree_small(s_poly) if s_poly.degree > 0 else []
    G = F.exact_div(s_poly) if F else F

    q = beta.diag_quadratic
    diag_roots = []
    if q.degree > 0:
        for r in poly_roots(q, 2):
            if r not in diag_roots:
                diag_roots.append(r)
    sq = GF(p).sqrt_table()
    gamma_xi = {}
    for r in diag_roots:
        ok = 0
        if r.is_base():
            v = f(int(r)) % p
            ok = int(v != 0 and (v,) in sq)
        gamma_xi[r] = ok

    sing = []
    for g in s_factors:
        if g.degree <= 2:
            for xi in poly_roots(g, g.degree):
                sing.append(SingularZPoint("weierstrass", xi, beta.mobius(xi), g))
        else:
            sing.append(SingularZPoint("weierstrass", None, None, g))
    if beta.beta12 == 0:
        sing.append(SingularZPoint("infinity"))
    if eta:
        sing.append(SingularZPoint("pole", GF(p)(xi0)))
    sing.sort(key=SingularZPoint.sort_key)
    count = s_poly.degree + int(beta.beta12 == 0) + 2 * eta
    return ZAnalysis(F, M, s_poly, s_factors, G, eta, xi0, q, diag_roots, gamma_xi, sing, count)


def annihilator_from_beta(beta: WedgeForm) -> tuple[tuple[int, int, int], tuple[int, int, int]]:
    """Two coefficient vectors whose minors are proportional to beta."""
    p = beta.p
    b01, b02, b12 = beta.triple
    if b02 == 0 and b12 == 0:
        w1, w2 = (1, 0, 0), (0, b01, 0)
    elif b12:
        w1, w2 = (b02, b12, 0), (-b01 * pow(b12, -1, p) % p, 0, 1)
    else:
        w1, w2 = (b02, b12, 0), (0, b01 * pow(b02, -1, p) % p, 1)
    return tuple(x % p for x in w1), tuple(x % p for x in w2)


def all_normalized_betas(p: int):
    """Every normalized nonzero triple, p^2 + p + 1 of them."""
    out = []
    for b01 in range(p):
        for b02 in range(p):
            for b12 in range(p):
                if (b01, b02, b12) != (0, 0, 0):
                    w = WedgeForm.from_triple(p, (b01, b02, b12))
                    if w.triple == (b01, b02, b12):
                        out.append(w)
    return out

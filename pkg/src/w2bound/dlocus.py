"""D(F_p), its singular points, the per-class jet bounds m(x), and N.

D is the divisor of w1 ^ w2 on W_2.  Outside case I it is the image of the
curve Z = {b01 + b02 (x1 + x2) + b12 x1 x2 = 0} in C x C, so its rational
points are the classes of Galois-stable pairs on Z.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

from .curve import INFINITY, CurveModP, CurvePoint, affine_points_with_x, involution, points
from .field import GF
from .picard import DivisorClass, NotRational, W2Set, class_of_pair, zero_class
from .wedge import CaseI, CaseII, CaseIII, EllipticObstruction, WedgeForm, ZAnalysis


class ConsistencyError(RuntimeError):
    """A computed quantity violates a bound that the theory guarantees."""


MAX_M = 6


@dataclass(frozen=True)
class DPoint:
    cls: DivisorClass
    provenance: str        # origin | affine | conjugate | diagonal | infinity | weierstrass | pole | caseI
    witness: tuple         # one Z-point (P1, P2) mapping to the class
    singular: bool = False
    delta: int = 0
    m_bound: int = 0


@dataclass
class DLocus:
    case: object
    points: list = field(default_factory=list)
    n_value: int | None = None

    def classes(self) -> list[DivisorClass]:
        return [d.cls for d in self.points]

    def singular(self) -> list[DPoint]:
        return [d for d in self.points if d.singular]

    def get(self, c: DivisorClass) -> DPoint | None:
        for d in self.points:
            if d.cls == c:
                return d
        return None

    def m_table(self) -> dict:
        return {d.cls: d.m_bound for d in self.points}


def _try_class(C, P1, P2):
    try:
        return class_of_pair(C, P1, P2)
    except NotRational:
        return None


def _case_one_points(C: CurveModP, case: CaseI) -> list[DPoint]:
    p = C.p
    P = case.P
    zero = zero_class(p)
    if not P.is_rational():
        # P^sigma = iota P: the only Galois-stable pair through P is (P, iota P)
        return [DPoint(zero, "origin", (P, involution(P)))]
    found: dict[DivisorClass, tuple] = {}
    centres = [P] if P.is_weierstrass() else [P, involution(P)]
    for Q in centres:
        for R in points(C, 1):
            found.setdefault(class_of_pair(C, R, Q), (R, Q))
    out = []
    for c in sorted(found):
        out.append(DPoint(c, "origin" if c.is_zero() else "caseI", found[c],
                          singular=c.is_zero() and not P.is_weierstrass()))
    return out


def _delta_flag(beta: WedgeForm, P1: CurvePoint, P2: CurvePoint) -> int:
    # (b12 a2 + b02)^4 b1 - (b02^2 - b01 b12)^2 b2 = 0
    lhs = beta.c(P2.x) ** 4 * P1.y - P2.y * (beta.delta ** 2)
    return int(lhs.is_zero())


def _z_pairs(C: CurveModP, beta: WedgeForm):
    """Galois-stable ordered pairs on Z (affine part and points at infinity)."""
    p = C.p
    F1, F2 = GF(p), GF(p, 2)
    for x1 in F1.elements():
        x2 = beta.mobius(x1)
        if x2 is None:
            for Q in affine_points_with_x(C, x1):
                yield Q, INFINITY
            continue
        for P1 in affine_points_with_x(C, x1):
            for P2 in affine_points_with_x(C, x2):
                yield P1, P2
    for x1 in F2.elements():
        if x1.is_base():
            continue
        if beta.mobius(x1) != x1.frobenius():
            continue
        for P1 in affine_points_with_x(C, x1):
            yield P1, P1.conjugate()
    if beta.beta12 == 0:
        yield INFINITY, INFINITY


def _classify(C, beta, za, P1, P2) -> tuple[str, int]:
    if P2.is_infinity or P1.is_infinity:
        Q = P1 if P2.is_infinity else P2
        if Q.is_infinity:
            return "origin", 0
        return ("pole" if Q.y.is_zero() else "infinity"), 0
    if P1.x == P2.x:
        if P2 == involution(P1):
            return "origin", 0
        return "diagonal", 0
    if P1.y.is_zero() and P2.y.is_zero():
        return "weierstrass", 1
    prov = "affine" if P1.is_rational() else "conjugate"
    return prov, _delta_flag(beta, P1, P2)


def enumerate_d(C: CurveModP, beta: WedgeForm, case, za: ZAnalysis | None,
                w2: W2Set | None = None) -> DLocus:
    if isinstance(case, EllipticObstruction):
        raise ValueError("D is not handled under the elliptic obstruction")
    if isinstance(case, CaseI):
        pts = _case_one_points(C, case)
        d = DLocus(case, pts)
    else:
        zero = zero_class(C.p)
        found: dict[DivisorClass, DPoint] = {zero: DPoint(zero, "origin", (INFINITY, INFINITY), singular=True)}
        for P1, P2 in _z_pairs(C, beta):
            c = _try_class(C, P1, P2)
            if c is None or c in found:
                continue
            prov, delta = _classify(C, beta, za, P1, P2)
            singular = isinstance(case, CaseIII) and prov in ("weierstrass", "pole")
            found[c] = DPoint(c, prov, (P1, P2), singular=singular, delta=delta)
        d = DLocus(case, [found[c] for c in sorted(found)])
    if w2 is not None:
        missing = [x.cls for x in d.points if x.cls not in w2]
        if missing:
            raise ConsistencyError(f"D classes outside W2: {missing}")
    return d


def _m_case_three(C: CurveModP, beta: WedgeForm, za: ZAnalysis, d: DPoint) -> int:
    P1, P2 = d.witness
    prov = d.provenance
    if prov == "origin":
        return 2
    if prov == "infinity":
        return 1
    if prov == "pole":
        return (za.ord_F(za.xi0) - 1) + 2
    if prov == "weierstrass":
        return (za.ord_F(P1.x) - 1) + 2
    if prov == "diagonal":
        k = za.ord_F(P1.x)
        if k % 2 == 0:
            raise ConsistencyError(f"ord of F at a fixed point is even ({k})")
        return (k - 1) // 2 + 1
    return d.delta * za.ord_F(P1.x) + 1


def m_bound_table(d: DLocus, C: CurveModP, za: ZAnalysis | None, beta: WedgeForm | None = None) -> DLocus:
    case = d.case
    out = []
    for x in d.points:
        if isinstance(case, CaseI):
            if case.root:
                m = 6 if x.cls.is_zero() else 2
            elif x.cls.is_zero():
                m = 4
            else:
                P1, P2 = x.witness
                m = 2 if (P1 == P2 and not P1.is_infinity) else 1
        elif isinstance(case, CaseII):
            m = 4 if x.cls.is_zero() else 2
        else:
            m = _m_case_three(C, beta, za, x)
        if m > MAX_M or m < 0:
            raise ConsistencyError(f"m = {m} at {x.cls.key()}")
        out.append(replace(x, m_bound=m))
    return DLocus(case, out, d.n_value)


def n_value(d: DLocus, za: ZAnalysis) -> int:
    """N = sum ord_{a1} G over off-diagonal affine D-points with delta = 1
    + eta (ord_{xi0} G - 1) + (1/2) sum over diagonal roots gamma_xi (ord_xi G - 1)."""
    if not isinstance(d.case, CaseIII):
        raise ValueError("N is defined in case III only")
    total = 0
    for x in d.points:
        if x.provenance in ("affine", "conjugate", "weierstrass") and x.delta:
            total += za.ord_G(x.witness[0].x)
    if za.eta:
        total += za.ord_G(za.xi0) - 1
    half = 0
    for xi, g in za.gamma_xi.items():
        if g:
            half += za.ord_G(xi) - 1
    if half % 2:
        raise ConsistencyError("half-sum in N is not an integer")
    total += half // 2
    if total < 0:
        raise ConsistencyError("negative N")
    return total

import pytest

from conftest import ALPHA_1, ALPHA_2, ALPHA_3, good_curves
from w2bound.bounds import EllipticObstructionError, analyse
from w2bound.curve import INFINITY, involution, points
from w2bound.field import GF
from w2bound.oracles import matrix_mismatches
from w2bound.picard import enumerate_w2
from w2bound.disks import (
    AnnihilatorModP,
    local_expansion,
    matrix_verdicts,
    disk_matrix_det,
    zero_disk_check,
    zero_disk_verdict,
)
from w2bound.wedge import all_normalized_betas


def _series_expansion(C, w, P):
    """(h(x)/y) in t = x - a to order t^2, via a Hensel square root of f(a + t)."""
    a, b = P.x, P.y
    F = a.field
    # Taylor coefficients of f(a + t) and h(a + t)
    f = [F(c) for c in C.f.c]
    f0 = sum((c * a ** i for i, c in enumerate(f)), F.zero)
    f1 = sum((c * i * a ** (i - 1) for i, c in enumerate(f) if i), F.zero)
    h0 = a * a * w[2] + a * w[1] + w[0]
    h1 = a * (2 * w[2]) + w[1]
    assert b * b == f0
    y1 = f1 / (b * 2)
    # 1/y = 1/b - y1/b^2 t + ...
    inv0, inv1 = b.inverse(), -(y1 / (b * b))
    return h0 * inv0, h0 * inv1 + h1 * inv0


@pytest.mark.parametrize("label,p,C", good_curves((5, 7)))
def test_expansion_matches_series(label, p, C):
    pts = [P for P in points(C, 2) if not P.is_infinity and not P.y.is_zero()]
    for w in [(1, 0, 0), (0, 1, 0), (0, 0, 1), (2, 3, 1)]:
        for P in pts:
            assert local_expansion(C, w, P) == _series_expansion(C, w, P)


def test_weierstrass_expansion(c1):
    # x^2 dx/y at (3, 0) on the first curve mod 7: 2 h(3) / f'(3)
    P = next(Q for Q in points(c1) if not Q.is_infinity and int(Q.x) == 3)
    val, der = local_expansion(c1, (0, 0, 1), P)
    F = GF(7)
    assert val == F(2 * 9) / c1.f.derivative()(F(3))
    assert der.is_zero()


def test_infinity_expansion(c1):
    val, der = local_expansion(c1, (5, 4, 3), INFINITY)
    assert val == GF(7)(-6) and der.is_zero()


def test_det_antisymmetric(c1):
    ann = AnnihilatorModP.from_alpha(7, *ALPHA_1)
    pts = points(c1)
    for P in pts:
        for Q in pts:
            if Q == involution(P) and P != Q:
                with pytest.raises(ValueError):
                    disk_matrix_det(c1, P, Q, ann)
                continue
            if Q == involution(P) or Q == P:
                continue
            assert disk_matrix_det(c1, P, Q, ann) == -disk_matrix_det(c1, Q, P, ann)


def test_zero_disk_examples(c1, c2, c3):
    assert zero_disk_verdict(c2, enumerate_w2(c2), AnnihilatorModP.from_alpha(5, *ALPHA_2))
    assert zero_disk_verdict(c3, enumerate_w2(c3), AnnihilatorModP.from_alpha(5, *ALPHA_3))
    # x dx/y and x^2 dx/y both vanish at (0, +-1): the 0_J disk is not cleared
    ann1 = AnnihilatorModP.from_alpha(7, *ALPHA_1)
    assert not zero_disk_verdict(c1, enumerate_w2(c1), ann1)
    P = next(Q for Q in points(c1) if not Q.is_infinity and int(Q.x) == 0)
    assert not zero_disk_check(c1, P, ann1)


def test_vanishing_at_infinity(c1):
    ann = AnnihilatorModP(7, (1, 0, 0), (0, 1, 0))
    assert not zero_disk_check(c1, INFINITY, ann)
    assert zero_disk_check(c1, INFINITY, AnnihilatorModP(7, (1, 0, 0), (0, 0, 1)))


def test_annihilator_roundtrip():
    ann = AnnihilatorModP.from_alpha(5, *ALPHA_3)
    assert ann.beta.triple == (1, 4, 3)
    assert AnnihilatorModP.from_beta(ann.beta).beta == ann.beta


def test_example_matrix_verdicts(c2, c3):
    for C, alpha in ((c2, ALPHA_2), (c3, ALPHA_3)):
        ann = AnnihilatorModP.from_alpha(C.p, *alpha)
        case, za, w2, d = analyse(C, ann.beta)
        v = matrix_verdicts(C, w2, ann)
        bad = {c for c, ok in v.items() if not ok}
        assert bad == {c for c in d.classes() if not c.is_zero()}


@pytest.mark.parametrize("label,p,C", good_curves((5, 7)))
def test_det_vanishes_exactly_on_D(label, p, C):
    w2 = enumerate_w2(C)
    for b in all_normalized_betas(p):
        try:
            case, za, _, d = analyse(C, b, w2)
        except EllipticObstructionError:
            continue
        ann = AnnihilatorModP.from_beta(b)
        assert matrix_mismatches(C, w2, ann, d.classes()) == []

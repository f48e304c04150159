"""Independent cross-checks used by `w2bound verify` and the test-suite."""

from __future__ import annotations

import random

from .curve import CurveModP, zeta_data
from .field import GF
from .picard import W2Set, cantor_add, enumerate_jacobian, enumerate_w2, scalar_mul, zero_class
from .disks import AnnihilatorModP, matrix_verdicts
from .wedge import WedgeForm, all_normalized_betas, permutes_roots, proportionality


def _chi_counts(C: CurveModP):
    """(affine F_p points, rational Weierstrass points, x with f(x) a nonzero nonsquare)."""
    p = C.p
    e = (p - 1) // 2
    n_a = w = nonsq = 0
    for x in range(p):
        v = C.f(x) % p
        if v == 0:
            n_a += 1
            w += 1
        elif pow(v, e, p) == 1:
            n_a += 2
        else:
            nonsq += 1
    return n_a, w, nonsq


def w2_count_formula(C: CurveModP) -> int:
    """#W_2(F_p) without building any class.

    1 (origin) + n_a ([P - inf]) + unordered rational pairs off the
    antidiagonal + conjugate pairs {Q, Q^sigma} with Q^sigma != iota Q.
    """
    n_a, w, nonsq = _chi_counts(C)
    n2_a = zeta_data(C).n2 - 1
    rational_pairs = n_a * (n_a + 1) // 2 - (n_a - w) // 2 - w
    conj_pairs = (n2_a - n_a) // 2 - nonsq
    return 1 + n_a + rational_pairs + conj_pairs


def case_one_bruteforce(beta: WedgeForm) -> bool:
    """Search GF(p^2) for (a, b) with (b x1 + a)(b x2 + a) proportional to beta."""
    p = beta.p
    F = GF(p, 2)
    target = beta.triple
    for b in F.elements():
        for a in F.elements():
            if a.is_zero() and b.is_zero():
                continue
            form = (a * a, a * b, b * b)
            # proportional iff all 2x2 minors vanish
            if all((form[i] * target[j] - form[j] * target[i]).is_zero()
                   for i in range(3) for j in range(i + 1, 3)):
                return True
    return False


def lagrange_check(C: CurveModP, samples: int = 100, seed: int = 0, w2: W2Set | None = None) -> list:
    """Classes g (random sums of W_2 elements) with N g != 0, N = L(1)."""
    order = zeta_data(C).jacobian_order
    w2 = w2 if w2 is not None else enumerate_w2(C)
    rng = random.Random(seed)
    classes = list(w2.classes)
    bad = []
    for _ in range(samples):
        g = cantor_add(cantor_add(rng.choice(classes), rng.choice(classes), C), rng.choice(classes), C)
        if not scalar_mul(order, g, C).is_zero():
            bad.append(g)
    return bad


def jacobian_size_check(C: CurveModP) -> bool:
    return len(enumerate_jacobian(C)) == zeta_data(C).jacobian_order


def criterion_mismatches(C: CurveModP, betas=None) -> list:
    """betas where the proportionality test and the root-permutation test disagree."""
    betas = betas if betas is not None else all_normalized_betas(C.p)
    out = []
    for b in betas:
        if b.delta == 0:
            continue
        if (proportionality(C, b)[0] is not None) != permutes_roots(C, b):
            out.append(b)
    return out


def matrix_mismatches(C: CurveModP, w2: W2Set, ann: AnnihilatorModP, d_classes) -> list:
    """Classes off 0_J where 'matrix invertible' does not match 'not in D'."""
    d_classes = set(d_classes)
    return [c for c, ok in matrix_verdicts(C, w2, ann).items() if ok == (c in d_classes)]


__all__ = [
    "w2_count_formula", "case_one_bruteforce", "lagrange_check", "jacobian_size_check",
    "criterion_mismatches", "matrix_mismatches", "zero_class",
]

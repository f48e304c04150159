"""Per-disk counts and the final upper bounds on #W_2(Q)."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

from .curve import CurveModP, points, reduce_curve, BadReduction
from .dlocus import DLocus, enumerate_d, m_bound_table, n_value
from .field import is_prime
from .picard import W2Set, enumerate_w2
from .wedge import (
    CaseI,
    CaseII,
    CaseIII,
    EllipticObstruction,
    WedgeForm,
    ZAnalysis,
    beta_from_alpha,
    case_split,
    z_analysis,
)


class PrimeTooSmall(ValueError):
    pass


class EllipticObstructionError(RuntimeError):
    """The wedge divisor has a genus-one component; the method does not apply."""

    def __init__(self, msg, context=None):
        super().__init__(msg)
        self.context = context or {}


def disk_bound(m: int, p: int) -> int:
    """floor((p-1) m / (p-2)) + 1 = m + 1 + floor(m / (p-2)); needs m < p."""
    if m < 0:
        raise ValueError("m must be non-negative")
    if m >= p:
        raise PrimeTooSmall(f"prime too small for this disk: m = {m} >= p = {p}")
    return m + 1 + m // (p - 2)


def ceil_12_sqrt(p: int) -> int:
    r = math.isqrt(144 * p)
    return r if r * r == 144 * p else r + 1


def theorem_bound(p: int, w2_count: int) -> int:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p < 11:
        raise PrimeTooSmall("the general bound needs p >= 11")
    return w2_count + 2 * p + ceil_12_sqrt(p) + 7


@dataclass
class BoundReport:
    p: int
    beta: WedgeForm
    case: object
    counts: dict
    m_table: dict                 # DivisorClass -> m, over D(F_p)
    disk_counts: dict             # DivisorClass -> disk_bound(m), over D(F_p)
    refined_bound: int
    closed_forms: dict            # name -> value
    closed_form_bound: int
    theorem_bound: int | None
    warnings: list = field(default_factory=list)
    curve: CurveModP | None = None
    w2: W2Set | None = None
    dlocus: DLocus | None = None
    za: ZAnalysis | None = None

    @property
    def case_name(self) -> str:
        return self.case.name


def resolve_beta(p: int, alpha: Sequence[Sequence[int]] | None = None,
                 beta: Sequence[int] | None = None) -> WedgeForm:
    if (alpha is None) == (beta is None):
        raise ValueError("give exactly one of alpha or beta")
    if alpha is not None:
        if len(alpha) != 2:
            raise ValueError("alpha needs two vectors")
        return beta_from_alpha(alpha[0], alpha[1], p)
    return WedgeForm.from_triple(p, beta)


def analyse(C: CurveModP, beta: WedgeForm, w2: W2Set | None = None):
    """case, Z data, and D with m-bounds filled.  Raises on the elliptic obstruction."""
    case = case_split(C, beta)
    if isinstance(case, EllipticObstruction):
        raise EllipticObstructionError(
            "elliptic obstruction: D has a genus-one component, the method cannot handle it",
            {"gamma": case.gamma})
    za = None if isinstance(case, CaseI) else z_analysis(C, beta)
    w2 = w2 if w2 is not None else enumerate_w2(C)
    d = m_bound_table(enumerate_d(C, beta, case, za, w2), C, za, beta)
    if isinstance(case, CaseIII):
        d.n_value = n_value(d, za)
    return case, za, w2, d


def bound_for_curve(C: CurveModP, beta: WedgeForm, w2: W2Set | None = None) -> BoundReport:
    p = C.p
    case, za, w2, d = analyse(C, beta, w2)
    n_c = len(points(C, 1))
    n_w2 = len(w2)
    n_d = len(d.points)
    n_sing = len(d.singular())
    counts = {"C": n_c, "W2": n_w2, "D": n_d, "SingD": n_sing, "N": d.n_value}
    warnings = []

    m_table = d.m_table()
    disk_counts = {c: disk_bound(m, p) for c, m in m_table.items()}
    refined = n_w2 + sum(v - 1 for v in disk_counts.values())

    closed = {}
    if isinstance(case, CaseI):
        closed["statement"] = n_w2 + 2 * n_c + 4
        if not case.root:
            closed["proof_nonroot"] = n_w2 + 2 * n_c + 2
        closed_bound = closed["statement"]
    elif isinstance(case, CaseII):
        closed["statement"] = n_w2 + 2 * n_c + 4
        closed["via_D"] = n_w2 + 2 * n_d + 2
        closed_bound = min(closed.values())
    else:
        closed["statement"] = n_w2 + n_d + n_sing + d.n_value
        # both diagonal classes (xi, +-b) carry the half-sum term, not just one
        half = sum(za.ord_G(xi) - 1 for xi, g in za.gamma_xi.items() if g) // 2
        closed["diagonal_both_signs"] = closed["statement"] + half
        closed_bound = closed["statement"]

    if p >= 11 and refined > closed_bound:
        warnings.append(f"refined bound {refined} exceeds the closed form {closed_bound}")
    tb = None
    if p >= 11:
        tb = theorem_bound(p, n_w2)
    else:
        warnings.append("p < 11: the general bound does not apply")
    if isinstance(case, CaseIII) and n_d > p + ceil_12_sqrt(p) + 1:
        warnings.append("#D(F_p) exceeds the Hasse-Weil estimate")
    return BoundReport(p, beta, case, counts, m_table, disk_counts, refined, closed,
                       closed_bound, tb, warnings, C, w2, d, za)


def compute_bound(coeffs: Sequence[int], p: int, alpha=None, beta=None) -> BoundReport:
    C = reduce_curve(coeffs, p)
    return bound_for_curve(C, resolve_beta(p, alpha, beta))


__all__ = [
    "BadReduction", "BoundReport", "EllipticObstructionError", "PrimeTooSmall",
    "disk_bound", "theorem_bound", "ceil_12_sqrt", "compute_bound", "bound_for_curve",
    "analyse", "resolve_beta",
]

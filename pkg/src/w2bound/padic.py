"""Truncated p-adic power series, Newton polygons, and zero counts in pZ_p.

A coefficient is a triple [valuation, unit, precision]:
  [v, u, k]       p^v * u + O(p^k), u a unit, v < k
  [v, u, None]    exactly p^v * u
  [None, 0, k]    O(p^k), valuation unknown but at least k
  [None, 0, None] exactly zero
Coefficients past the end of the list are unknown p-adic integers.
Short forms for formats without null: [] is an exact zero and [k] is O(p^k).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence


class Inconclusive(ValueError):
    pass


@dataclass(frozen=True)
class Coefficient:
    valuation: int | None
    unit: int
    precision: int | None

    @property
    def exact_zero(self) -> bool:
        return self.valuation is None and self.precision is None

    @property
    def known(self) -> bool:
        """Valuation is determined."""
        return self.valuation is not None

    def lower(self) -> float:
        """Lower bound on the valuation."""
        if self.valuation is not None:
            return self.valuation
        return float("inf") if self.precision is None else self.precision


@dataclass(frozen=True)
class TruncatedSeries:
    p: int
    coeffs: tuple[Coefficient, ...]

    @classmethod
    def from_triples(cls, p: int, triples: Iterable[Sequence]) -> "TruncatedSeries":
        out = []
        for t in triples:
            t = list(t)
            if len(t) == 0:
                t = [None, 0, None]
            elif len(t) == 1:
                t = [None, 0, t[0]]
            if len(t) != 3:
                raise ValueError(f"bad coefficient {t!r}")
            v, u, k = t
            if v is not None:
                if u % p == 0:
                    raise ValueError("unit part must be prime to p")
                if k is not None and v >= k:
                    raise ValueError("valuation must be below the precision")
            out.append(Coefficient(v, int(u) if v is not None else 0, k))
        return cls(p, tuple(out))

    @classmethod
    def from_integers(cls, p: int, values: Sequence[int], precision: int | None = None) -> "TruncatedSeries":
        """Exact integers (precision None), or integers known mod p^precision."""
        out = []
        for a in values:
            if precision is not None:
                a %= p ** precision
            if a == 0:
                out.append(Coefficient(None, 0, precision))
                continue
            v = 0
            while a % p == 0:
                a //= p
                v += 1
            out.append(Coefficient(v, a, precision))
        return cls(p, tuple(out))

    def scale_unit(self, u: int) -> "TruncatedSeries":
        """Multiply by a p-adic unit u (valuations are unchanged)."""
        if u % self.p == 0:
            raise ValueError("not a unit")
        return TruncatedSeries(self.p, tuple(
            Coefficient(c.valuation, (c.unit * u) if c.known else 0, c.precision) for c in self.coeffs))

    def to_triples(self) -> list:
        return [[c.valuation, c.unit, c.precision] for c in self.coeffs]


@dataclass(frozen=True)
class Segment:
    slope: Fraction | None   # None stands for -infinity (a root at t = 0)
    length: int
    start: int
    determinate: bool = True


def _lower_hull(pts: list[tuple[int, int]]) -> list[tuple[int, int]]:
    hull: list[tuple[int, int]] = []
    for q in pts:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            # drop hull[-1] if it lies on or above the chord hull[-2] -> q
            if (y2 - y1) * (q[0] - x1) >= (q[1] - y1) * (x2 - x1):
                hull.pop()
            else:
                break
        hull.append(q)
    return hull


def newton_polygon(s: TruncatedSeries, max_index: int | None = None) -> list[Segment]:
    """Lower convex hull of (i, v(c_i)) over coefficients with known valuation.

    Leading exact zeros give a slope -infinity segment.  A segment is marked
    indeterminate when some coefficient of unknown valuation in its range
    could lie on or below it.
    """
    coeffs = list(s.coeffs if max_index is None else s.coeffs[:max_index + 1])
    lead = 0
    while lead < len(coeffs) and coeffs[lead].exact_zero:
        lead += 1
    pts = [(i, c.valuation) for i, c in enumerate(coeffs) if c.known]
    if not pts:
        raise ValueError("no coefficient with known valuation")
    segs = []
    if lead:
        segs.append(Segment(None, lead, 0, True))
    hull = _lower_hull(pts)
    for (x1, y1), (x2, y2) in zip(hull, hull[1:]):
        slope = Fraction(y2 - y1, x2 - x1)
        det = True
        for j in range(x1 + 1, x2):
            c = coeffs[j]
            if not c.known and not c.exact_zero and c.lower() <= y1 + slope * (j - x1):
                det = False
        segs.append(Segment(slope, x2 - x1, x1, det))
    return segs


def roots_in_pZp_upper(s: TruncatedSeries) -> int:
    """Upper bound on the number of zeros in pZ_p (t = 0 included).

    Substituting t = p s, zeros in pZ_p become zeros in Z_p of a series with
    coefficient valuations v_i + i; the bound is the largest index where the
    minimum is attained, widened to any index whose coefficient is not
    known well enough to rule it out.  Equivalently the total length of the
    Newton polygon segments with slope <= -1.
    """
    coeffs = s.coeffs
    if not any(c.known and c.valuation == 0 for c in coeffs):
        raise Inconclusive("no unit coefficient among the known terms")
    known = [(i, c.valuation + i) for i, c in enumerate(coeffs) if c.known]
    m_star = min(w for _, w in known)
    bound = max(i for i, w in known if w == m_star)
    for j, c in enumerate(coeffs):
        if not c.known and not c.exact_zero and c.lower() + j <= m_star:
            bound = max(bound, j)
    # unlisted tail terms have valuation >= 0, hence weight >= index > m_star
    return bound


def roots_from_polygon(segs: Sequence[Segment]) -> int:
    """Total length of segments with slope <= -1 (the -infinity segment included)."""
    return sum(g.length for g in segs if g.slope is None or g.slope <= -1)

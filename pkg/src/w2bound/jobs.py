"""Job files, the full pipeline as a JSON-ready report, and the verify suite."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any

try:
    import tomllib
except ModuleNotFoundError:  # Python 3.10
    import tomli as tomllib

from .bounds import BoundReport, EllipticObstructionError, PrimeTooSmall, bound_for_curve, resolve_beta
from .curve import BadReduction, CurveModP, reduce_curve, zeta_data
from .field import FieldError, is_prime
from .padic import Inconclusive, TruncatedSeries, newton_polygon, roots_in_pZp_upper
from .picard import (
    DivisorClass,
    NotRational,
    W2Set,
    enumerate_w2,
    reduce_rational_class,
    subgroup_generated,
)
from .disks import AnnihilatorModP, matrix_verdicts, zero_disk_verdict
from .wedge import CaseI, CaseII, CaseIII, WedgeForm
from . import oracles

SCHEMA = 1
INT64 = 2 ** 63


class JobError(ValueError):
    """Malformed job input."""


@dataclass
class JobSpec:
    curve: list[int]
    p: int
    alpha: list[list[int]] | None = None
    beta: list[int] | None = None
    known_points: list[dict] = field(default_factory=list)
    series: dict = field(default_factory=dict)
    name: str = ""


def _int(x, what) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise JobError(f"{what} must be an integer, got {x!r}")
    if not -INT64 <= x < INT64:
        raise JobError(f"{what} does not fit in a signed 64-bit integer")
    return x


def _rational(x, what) -> Fraction:
    if isinstance(x, bool):
        raise JobError(f"{what}: bad number {x!r}")
    try:
        return Fraction(x) if isinstance(x, (int, str)) else Fraction(str(x))
    except (ValueError, ZeroDivisionError) as exc:
        raise JobError(f"{what}: bad rational {x!r}") from exc


def parse_job(data: dict) -> JobSpec:
    if not isinstance(data, dict):
        raise JobError("job must be a mapping")
    curve = data.get("curve")
    if not isinstance(curve, list) or len(curve) != 8:
        raise JobError("curve must list 8 integer coefficients, constant term first")
    curve = [_int(c, "curve coefficient") for c in curve]
    if "p" not in data:
        raise JobError("missing p")
    p = _int(data["p"], "p")
    alpha, beta = data.get("alpha"), data.get("beta")
    if (alpha is None) == (beta is None):
        raise JobError("give exactly one of alpha (two vectors) or beta (a triple)")
    if alpha is not None:
        if not isinstance(alpha, list) or len(alpha) != 2 or any(
                not isinstance(a, list) or len(a) != 3 for a in alpha):
            raise JobError("alpha must be two lists of three integers")
        alpha = [[_int(c, "alpha entry") for c in a] for a in alpha]
    else:
        if not isinstance(beta, list) or len(beta) != 3:
            raise JobError("beta must be a list of three integers")
        beta = [_int(c, "beta entry") for c in beta]
    known = data.get("known_points", []) or []
    if not isinstance(known, list):
        raise JobError("known_points must be a list")
    for k in known:
        if not isinstance(k, dict) or not (("u" in k and "v" in k) or "point" in k):
            raise JobError("each known point needs u and v, or point = [x, y]")
    series = data.get("series", {}) or {}
    if not isinstance(series, dict):
        raise JobError("series must map names to coefficient triples")
    return JobSpec(curve, p, alpha, beta, known, series, str(data.get("name", "")))


def load_job(path: str | Path) -> JobSpec:
    path = Path(path)
    try:
        raw = path.read_bytes()
    except OSError as exc:
        raise JobError(f"cannot read {path}: {exc}") from exc
    try:
        if path.suffix.lower() == ".toml":
            data = tomllib.loads(raw.decode())
        else:
            data = json.loads(raw)
    except (ValueError, UnicodeDecodeError) as exc:
        raise JobError(f"cannot parse {path}: {exc}") from exc
    return parse_job(data)


def known_point_class(C: CurveModP, entry: dict) -> DivisorClass:
    if "point" in entry:
        pt = entry["point"]
        if not isinstance(pt, list) or len(pt) != 2:
            raise JobError("point must be [x, y]")
        x, y = (_rational(t, "point coordinate") for t in pt)
        u, v = [-x, Fraction(1)], [y]
    else:
        u = [_rational(t, "u coefficient") for t in entry["u"]]
        v = [_rational(t, "v coefficient") for t in entry["v"]]
        if not u or u[-1] != 1:
            raise JobError("u must be monic (constant term first)")
    try:
        return reduce_rational_class(C, u, v)
    except (NotRational, FieldError) as exc:
        raise JobError(f"known point {entry}: {exc}") from exc


def _check_prime(p: int):
    if p < 2 or not is_prime(p):
        raise BadReduction(f"{p} is not prime")


def _annihilator(job: JobSpec, beta: WedgeForm) -> AnnihilatorModP:
    if job.alpha is not None:
        return AnnihilatorModP.from_alpha(job.p, *job.alpha)
    return AnnihilatorModP.from_beta(beta)


def _fmt(x) -> str:
    return repr(x)


def _point_str(P) -> str:
    return "inf" if P.is_infinity else f"({P.x!r},{P.y!r})"


def case_info(case) -> dict:
    out: dict[str, Any] = {"name": case.name}
    if isinstance(case, CaseI):
        out.update({"a": _fmt(case.a), "b": _fmt(case.b), "P": _point_str(case.P),
                    "x_P_is_root": case.root})
    elif isinstance(case, CaseII):
        out.update({"gamma": case.gamma, "sqrt_gamma": [_fmt(r) for r in case.sqrt_gamma]})
    elif hasattr(case, "gamma"):
        out["gamma"] = case.gamma
    return out


def report_to_dict(job: JobSpec, r: BoundReport, ann: AnnihilatorModP, w2: W2Set) -> dict:
    C = r.curve
    z = zeta_data(C)
    d = r.dlocus
    out: dict[str, Any] = {
        "schema": SCHEMA,
        "name": job.name,
        "outcome": "ok",
        "p": r.p,
        "curve_mod_p": str(C.f),
        "zeta": {"N1": z.n1, "N2": z.n2, "N3": z.n3, "L": list(z.l_poly), "jacobian_order": z.jacobian_order},
        "beta": list(r.beta.triple),
        "annihilator": [list(ann.w1), list(ann.w2)],
        "case": case_info(r.case),
        "counts": r.counts,
    }
    if r.za is not None:
        za = r.za
        out["z_locus"] = {
            "F": str(za.F), "G": str(za.G), "S": str(za.s_poly), "eta": za.eta,
            "diag_quadratic": str(za.diag_quadratic),
            "gamma_xi": {_fmt(k): v for k, v in za.gamma_xi.items()},
            "singular_points_geometric": za.geometric_sing_count,
        }
    out["D"] = [{"class": x.cls.key(), "provenance": x.provenance,
                 "witness": [_point_str(P) for P in x.witness],
                 "singular": x.singular, "delta": x.delta, "m": x.m_bound,
                 "disk_bound": r.disk_counts[x.cls]} for x in d.points]
    out["m_table"] = {x.cls.key(): x.m_bound for x in d.points}
    out["bounds"] = {
        "refined": r.refined_bound,
        "closed_form": r.closed_form_bound,
        "closed_forms": r.closed_forms,
        "theorem": r.theorem_bound,
        "theorem_terms": {"p": r.p, "twelve_sqrt_p": {"coefficient": 12, "radicand": r.p}},
    }
    verdicts = matrix_verdicts(C, w2, ann)
    out["residue_disks"] = {
        "zero_disk_clear": zero_disk_verdict(C, w2, ann),
        "matrix_invertible": {c.key(): verdicts[c] for c in w2.classes if c in verdicts},
    }
    if job.known_points:
        gens = [known_point_class(C, k) for k in job.known_points]
        H = subgroup_generated(gens, C, z.jacobian_order)
        inter = sorted(c for c in H if c in w2)
        out["known_points"] = {
            "reductions": [g.key() for g in gens],
            "subgroup_order": len(H),
            "w2_intersection": [c.key() for c in inter],
            "disk_bounds": {c.key(): r.disk_counts.get(c, 1) for c in inter},
        }
    if job.series:
        res = {}
        for name in sorted(job.series):
            s = TruncatedSeries.from_triples(r.p, job.series[name])
            try:
                res[name] = {"roots_in_pZp_at_most": roots_in_pZp_upper(s),
                             "newton_polygon": [[None if g.slope is None else str(g.slope), g.length, g.determinate]
                                                for g in newton_polygon(s)]}
            except Inconclusive as exc:
                res[name] = {"inconclusive": str(exc)}
        out["series"] = res
    out["warnings"] = r.warnings
    return out


def run(job: JobSpec) -> dict:
    """Full pipeline.  Raises BadReduction/PrimeTooSmall, EllipticObstructionError, JobError."""
    _check_prime(job.p)
    C = reduce_curve(job.curve, job.p)
    try:
        beta = resolve_beta(job.p, job.alpha, job.beta)
    except ValueError as exc:
        raise JobError(str(exc)) from exc
    w2 = enumerate_w2(C)
    ann = _annihilator(job, beta)
    r = bound_for_curve(C, beta, w2)
    return report_to_dict(job, r, ann, w2)


def dumps(report: dict) -> str:
    return json.dumps(report, indent=2, ensure_ascii=False) + "\n"


@dataclass
class OracleResult:
    name: str
    passed: bool
    detail: str = ""


def verify(job: JobSpec, tamper_beta: list[int] | None = None) -> list[OracleResult]:
    """Run the oracle suite.  tamper_beta replaces the wedge used for D while the
    differentials stay as given, which must break the matrix/D equivalence."""
    _check_prime(job.p)
    C = reduce_curve(job.curve, job.p)
    beta = resolve_beta(job.p, job.alpha, job.beta)
    ann = _annihilator(job, beta)
    if tamper_beta is not None:
        beta = WedgeForm.from_triple(job.p, tamper_beta)
    res: list[OracleResult] = []
    w2 = enumerate_w2(C)

    n = oracles.w2_count_formula(C)
    res.append(OracleResult("w2_count", n == len(w2), f"enumerated {len(w2)}, formula {n}"))
    res.append(OracleResult("w2_symmetric", w2.negated_closed(), "closed under negation"))

    bad = oracles.lagrange_check(C, samples=100, w2=w2)
    res.append(OracleResult("jacobian_order", not bad,
                            f"L(1) = {zeta_data(C).jacobian_order} kills 100 samples" if not bad
                            else f"{len(bad)} samples not killed"))
    if C.p <= 7:
        ok = oracles.jacobian_size_check(C)
        res.append(OracleResult("jacobian_bruteforce", ok, "brute-force #J matches L(1)"))

    mism = oracles.criterion_mismatches(C)
    res.append(OracleResult("reducibility_criterion", not mism,
                            "proportionality matches root permutation" if not mism
                            else f"mismatch at {[str(b) for b in mism[:5]]}"))

    case_one = beta.delta == 0
    res.append(OracleResult("case_one_criterion", case_one == oracles.case_one_bruteforce(beta),
                            f"delta = {beta.delta}"))

    try:
        r = bound_for_curve(C, beta, w2)
    except EllipticObstructionError as exc:
        res.append(OracleResult("pipeline", True, f"elliptic obstruction: {exc}"))
        return res
    except PrimeTooSmall as exc:
        res.append(OracleResult("pipeline", False, str(exc)))
        return res
    mm = oracles.matrix_mismatches(C, w2, ann, r.dlocus.classes())
    res.append(OracleResult("matrix_vs_D", not mm,
                            "det = 0 exactly on D" if not mm else f"mismatch at {[c.key() for c in mm[:5]]}"))
    ms = list(r.m_table.values())
    cap = 4 if isinstance(r.case, CaseII) else 6
    res.append(OracleResult("m_bound", max(ms) <= cap, f"max m = {max(ms)}, cap {cap}"))
    if isinstance(r.case, CaseIII):
        res.append(OracleResult("N_bound", r.counts["N"] <= 8, f"N = {r.counts['N']}"))
        res.append(OracleResult("singular_bound", r.counts["SingD"] <= 5, f"#Sing = {r.counts['SingD']}"))
    res.append(OracleResult("D_in_W2", all(c in w2 for c in r.dlocus.classes()), "D(F_p) inside W2(F_p)"))
    return res

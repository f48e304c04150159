"""Bounds on rational points of W_2 for genus 3 hyperelliptic curves y^2 = f(x), deg f = 7."""

from .bounds import BoundReport, compute_bound, disk_bound, theorem_bound
from .curve import BadReduction, CurveModP, points, reduce_curve, zeta_data
from .field import GF, Poly
from .picard import DivisorClass, cantor_add, class_of_pair, enumerate_w2, subgroup_generated
from .wedge import WedgeForm, beta_from_alpha, case_split, z_analysis

__version__ = "0.1.0"

__all__ = [
    "BoundReport", "compute_bound", "disk_bound", "theorem_bound",
    "BadReduction", "CurveModP", "points", "reduce_curve", "zeta_data",
    "GF", "Poly",
    "DivisorClass", "cantor_add", "class_of_pair", "enumerate_w2", "subgroup_generated",
    "WedgeForm", "beta_from_alpha", "case_split", "z_analysis",
]

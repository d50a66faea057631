"""Exact computations in the quotient algebras U(gl3)/J^alpha acting on S^alpha(V)."""

from .exactcore import Poly, RationalMatrix, Rational, det_and_rank, lagrange_interpolate, poly_eval
from .gl3rep import build_gt_model, build_symmetric_model, enumerate_gt_diagrams

__all__ = [
    "Poly",
    "Rational",
    "RationalMatrix",
    "build_gt_model",
    "build_symmetric_model",
    "det_and_rank",
    "enumerate_gt_diagrams",
    "lagrange_interpolate",
    "poly_eval",
]

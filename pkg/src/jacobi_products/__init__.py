"""Exact arithmetic for Jacobi-sum products R_q and the cyclotomic matrices A_q."""

from ._accel import backend
from .characters import (
    Character,
    RqResult,
    compute_Rq,
    jacobi_sum,
    lambda_k,
    normalization_exponent,
    quadratic_jacobi,
    ring_for,
    rq_product,
    verify_generator_independence,
)
from .curves import decompose, trace_aq, verify_bew_half_sum
from .cyclotomic import CycloInt, CycloRing, ExactDivisor, ReductionMap, cyclotomic_polynomial, cyclotomic_ring
from .elementary import class_number, class_number_forms, jacobi_symbol, legendre, thm13_congruences
from .finite_field import FqElement, FqField, build_field, field_of_order, prime_power
from .matrices import build_Aq, det_cyclotomic, det_eigen_product, det_exact
from .verdict import Verdict
from .verify import PUBLISHED_RQ_TABLE, SUITES, compute_report, corollary_reconstruction, run_suite

__version__ = "0.1.0"

__all__ = [
    "Character", "CycloInt", "CycloRing", "ExactDivisor", "FqElement", "FqField", "PUBLISHED_RQ_TABLE",
    "ReductionMap", "RqResult", "SUITES", "Verdict", "backend", "build_Aq", "build_field",
    "class_number", "class_number_forms", "compute_Rq", "compute_report", "corollary_reconstruction",
    "cyclotomic_polynomial", "cyclotomic_ring", "decompose", "det_cyclotomic", "det_eigen_product",
    "det_exact", "field_of_order", "jacobi_sum", "jacobi_symbol", "lambda_k", "legendre",
    "normalization_exponent", "prime_power", "quadratic_jacobi", "ring_for", "rq_product", "run_suite",
    "thm13_congruences", "trace_aq", "verify_bew_half_sum", "verify_generator_independence",
]

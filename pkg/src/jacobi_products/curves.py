"""Frobenius trace of Y^2 = X^3 + X and the decomposition p = c^2 + 4 d^2."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .finite_field import FqField, build_field, is_prime
from .verdict import Verdict


@dataclass(frozen=True)
class CurveTrace:
    q: int
    a: int


@dataclass(frozen=True)
class TwoSquareDecomp:
    p: int
    c: int
    d: int


def trace_aq(field: FqField) -> CurveTrace:
    """a_q(E) = -sum over x of phi(x^3 + x).

    Uses x^3 + x = x (1 + x^2), so for x = g^t the summand is
    (-1)^t phi(1 + g^(2t)).
    """
    t = np.arange(field.m, dtype=np.int64)
    logs = field.one_plus_log[(2 * t) % field.m]
    terms = np.where(logs < 0, 0, (1 - 2 * (t % 2)) * (1 - 2 * (logs % 2)))
    a = -int(terms.sum())
    if a * a > 4 * field.q:
        raise ArithmeticError(f"Hasse bound violated: a_{field.q} = {a}")
    return CurveTrace(field.q, a)


def _require_prime_1_mod_4(p: int):
    if not is_prime(p) or p % 2 == 0:
        raise ValueError(f"p must be an odd prime, got {p}")
    if p % 4 != 1:
        raise ValueError(f"p must be 1 mod 4, got {p}")


def decompose(p: int) -> TwoSquareDecomp:
    """The unique (c, d) with p = c^2 + 4 d^2, c = 1 mod 4, d >= 0."""
    _require_prime_1_mod_4(p)
    d = 0
    while 4 * d * d < p:
        r = p - 4 * d * d
        c = math.isqrt(r)
        if c * c == r:
            if c % 4 != 1:
                c = -c
            return TwoSquareDecomp(p, c, d)
        d += 1
    raise ArithmeticError(f"{p} has no decomposition c^2 + 4d^2")  # pragma: no cover


def half_sum(p: int) -> int:
    """sum over 0 < x < p/2 of (x^3 + x | p)."""
    F = build_field(p, 1)
    x = np.arange(1, (p + 1) // 2, dtype=np.int64)
    return int(F.quad_table[(x * x % p * x + x) % p].sum())


def verify_bew_half_sum(p: int) -> Verdict:
    """The half-interval sum equals -c_p and a_p = 2 c_p."""
    _require_prime_1_mod_4(p)
    c = decompose(p).c
    h = half_sum(p)
    a = trace_aq(build_field(p, 1)).a
    if h != -c:
        return Verdict(False, witness=h, detail=f"half sum {h} != -c_p = {-c}")
    if a != 2 * c:
        return Verdict(False, witness=a, detail=f"a_p = {a} != 2 c_p = {2 * c}")
    return Verdict(True, detail=f"c_p = {c}, a_p = {a}")

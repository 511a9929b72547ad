"""Multiplicative characters, Jacobi sums and the product R_q.

The base character chi sends the canonical generator g of F_q^x to zeta_{q-1},
so chi is also the Teichmuller character for the reduction map of
:mod:`jacobi_products.cyclotomic`.  Every character takes the value 0 at 0,
the trivial one included.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import kernels
from .cyclotomic import CycloInt, CycloRing, cyclotomic_ring
from .finite_field import FqField, field_of_order
from .verdict import Verdict


def ring_for(field: FqField) -> CycloRing:
    return cyclotomic_ring(field.m)


@dataclass(frozen=True)
class Character:
    """chi^k, the exponent taken mod q-1."""

    field: FqField
    ring: CycloRing
    k: int

    def __post_init__(self):
        if self.ring.m != self.field.m:
            raise ValueError("ring conductor must be q-1")
        object.__setattr__(self, "k", self.k % self.field.m)

    @classmethod
    def of(cls, field: FqField, k: int) -> Character:
        return cls(field, ring_for(field), k)

    def __call__(self, x) -> CycloInt:
        return character_value(self, x)

    def __mul__(self, other: Character) -> Character:
        return Character(self.field, self.ring, self.k + other.k)

    def __pow__(self, e: int) -> Character:
        return Character(self.field, self.ring, self.k * e)

    def inverse(self) -> Character:
        return Character(self.field, self.ring, -self.k)

    def is_trivial(self) -> bool:
        return self.k == 0

    def is_quadratic(self) -> bool:
        return self.k == self.field.n


def character_value(chi: Character, x) -> CycloInt:
    x = chi.field(x)
    if x.is_zero():
        return chi.ring.zero
    return chi.ring.zeta(chi.k * chi.field.dlog(x))


def _jacobi_exponents(field: FqField, ring: CycloRing, a: int, b: int) -> CycloInt:
    return ring.from_histogram(kernels.jacobi_histogram(a, b, field.one_minus_log, field.m))


def jacobi_sum(chi: Character, psi: Character) -> CycloInt:
    """J(chi, psi) = sum over x in F_q of chi(x) psi(1-x)."""
    if chi.field is not psi.field:
        raise ValueError("characters of different fields")
    return _jacobi_exponents(chi.field, chi.ring, chi.k, psi.k)


def quadratic_jacobi(field: FqField, ring: CycloRing, k: int) -> CycloInt:
    """J(phi, chi^k)."""
    return _jacobi_exponents(field, ring, field.n, k)


def lambda_sum(field: FqField, ring: CycloRing, k: int) -> CycloInt:
    """sum over nonzero squares x of phi(1+x) chi^k(x), for any integer k."""
    m = field.m
    t = np.arange(0, m, 2, dtype=np.int64)  # the squares are g^t, t even
    logs = field.one_plus_log[t]
    weights = np.where(logs < 0, 0, 1 - 2 * (logs % 2))
    return ring.from_histogram(kernels.exponent_histogram((k % m) * t, weights, m))


def lambda_k(field: FqField, ring: CycloRing, k: int) -> CycloInt:
    if not 1 <= k <= field.n:
        raise ValueError(f"k must lie in [1, {field.n}], got {k}")
    return lambda_sum(field, ring, k)


def normalization_exponent(q: int) -> int:
    """e(q) = #{k : 0 < k < (q-1)/4}."""
    return (q - 2) // 4


def factor_via_lambda(field: FqField, ring: CycloRing, k: int) -> CycloInt:
    """J(phi,chi^k) + J(phi,chi^-k) computed as (-1)^k * 2 * lambda(k)."""
    lam = lambda_sum(field, ring, k)
    return lam * (2 if k % 2 == 0 else -2)


def factor_via_jacobi(field: FqField, ring: CycloRing, k: int) -> CycloInt:
    return quadratic_jacobi(field, ring, k) + quadratic_jacobi(field, ring, -k)


def rq_product(field: FqField, ring: CycloRing, s: int = 1, path: str = "lambda") -> CycloInt:
    """prod over 0 < k < (q-1)/4 of the factor for chi^(s k), as a ring element."""
    factor = {"lambda": factor_via_lambda, "jacobi": factor_via_jacobi}[path]
    e = normalization_exponent(field.q)
    return ring.prod(factor(field, ring, s * k) for k in range(1, e + 1))


@dataclass(frozen=True)
class RqResult:
    q: int
    n: int
    e: int
    R: int
    x: int


def compute_Rq(q: int, path: str = "lambda", s: int = 1) -> RqResult:
    """R_q and x_q = R_q / 2^e(q).

    Raises ArithmeticError if the product is not a rational integer or is not
    divisible by 2^e(q).
    """
    field = field_of_order(q)
    ring = ring_for(field)
    value = rq_product(field, ring, s=s, path=path).as_rational_integer()
    if value is None:
        raise ArithmeticError(f"R_{q} is not a rational integer")
    e = normalization_exponent(q)
    if value % (1 << e):
        raise ArithmeticError(f"2^{e} does not divide R_{q} = {value}")
    return RqResult(q=q, n=field.n, e=e, R=value, x=value >> e)


def generator_exponents(q: int) -> list[int]:
    return [s for s in range(1, q - 1) if math.gcd(s, q - 1) == 1]


def verify_generator_independence(q: int):
    """Recompute R_q(chi^s) for every generator chi^s; Verdict with witness s."""
    field = field_of_order(q)
    ring = ring_for(field)
    base = rq_product(field, ring)
    for s in generator_exponents(q)[1:]:
        other = rq_product(field, ring, s=s)
        if other != base:
            return Verdict(False, witness=s, detail=f"R_q(chi^{s}) != R_q(chi)")
    return Verdict(True, detail=f"{len(generator_exponents(q))} generators agree")

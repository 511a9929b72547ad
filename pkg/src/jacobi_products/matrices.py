"""The cyclotomic matrix A_q, exact determinants, and the Carlitz / Wu-Wang families."""

from __future__ import annotations

from typing import Sequence

import numpy as np

from . import kernels
from .characters import Character, jacobi_sum, lambda_k, quadratic_jacobi, ring_for
from .cyclotomic import CycloInt, CycloRing, ExactDivisor
from .finite_field import FqField, build_field, is_prime
from .verdict import Verdict


def build_Aq(field: FqField) -> np.ndarray:
    """[phi(s_i + s_j)] over the nonzero squares in canonical order."""
    s = field.square_indices
    sums = kernels.index_axpy(s[:, None], s[None, :], 1, field.p, field.f)
    return field.quad_table[sums]


def det_exact(M) -> int:
    """Bareiss fraction-free elimination over Python ints.

    Pivot: first nonzero entry at or below the diagonal; a zero column
    returns 0.
    """
    a = np.array(M, dtype=object)
    n = a.shape[0]
    if n == 0:
        return 1
    if a.shape != (n, n):
        raise ValueError("matrix must be square")
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k, k] == 0:
            rows = np.nonzero(a[k + 1:, k] != 0)[0]
            if rows.size == 0:
                return 0
            r = k + 1 + int(rows[0])
            a[[k, r]] = a[[r, k]]
            sign = -sign
        piv = a[k, k]
        a[k + 1:, k + 1:] = (a[k + 1:, k + 1:] * piv - np.outer(a[k + 1:, k], a[k, k + 1:])) // prev
        prev = piv
    return sign * int(a[n - 1, n - 1])


def det_cyclotomic(M: Sequence[Sequence[CycloInt]]) -> CycloInt:
    """Bareiss over Z[zeta_m]; every division is checked to be exact."""
    a = [list(row) for row in M]
    n = len(a)
    ring = a[0][0].ring
    sign, divide = 1, None
    for k in range(n - 1):
        if a[k][k].is_zero():
            r = next((r for r in range(k + 1, n) if not a[r][k].is_zero()), None)
            if r is None:
                return ring.zero
            a[k], a[r] = a[r], a[k]
            sign = -sign
        piv = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[i][j] * piv - a[i][k] * a[k][j]
                a[i][j] = num if divide is None else divide(num)
        divide = ExactDivisor(piv)
    return a[n - 1][n - 1] * sign


def verify_eigenrelation(field: FqField, ring: CycloRing, k: int) -> Verdict:
    """A_q v_k = lambda_k v_k with v_k = (chi^k(s_1), ..., chi^k(s_n))."""
    A = build_Aq(field)
    lam = lambda_k(field, ring, k)
    logs = field.log[field.square_indices]
    exps = (k * logs) % field.m
    for i in range(A.shape[0]):
        lhs = ring.from_histogram(kernels.exponent_histogram(exps, A[i], field.m))
        if lhs != lam * ring.zeta(int(exps[i])):
            return Verdict(False, witness=i, detail=f"row {i} of A v_{k} differs")
    return Verdict(True)


def det_eigen_product(field: FqField, ring: CycloRing) -> int:
    value = ring.prod(lambda_k(field, ring, k) for k in range(1, field.n + 1)).as_rational_integer()
    if value is None:
        raise ArithmeticError(f"product of eigenvalues of A_{field.q} is not rational")
    return value


def carlitz_matrix(p: int) -> np.ndarray:
    F = build_field(p, 1)
    i = np.arange(1, p)
    return F.quad_table[(i[:, None] - i[None, :]) % p]


def carlitz_determinant(p: int) -> int:
    if p % 2 == 0 or not is_prime(p):
        raise ValueError(f"p must be an odd prime, got {p}")
    return det_exact(carlitz_matrix(p))


def carlitz_jacobi_product(p: int) -> int:
    """(-1)^((p-1)/2) * prod_{k=1}^{p-1} J_p(phi, chi^k)."""
    F = build_field(p, 1)
    ring = ring_for(F)
    value = ring.prod(quadratic_jacobi(F, ring, k) for k in range(1, p)).as_rational_integer()
    if value is None:
        raise ArithmeticError("Jacobi-sum product is not rational")
    return value * (-1) ** ((p - 1) // 2)


def _check_wu_wang(field: FqField, r: int):
    if field.q % 4 != 3:
        raise ValueError(f"q must be 3 mod 4, got {field.q}")
    if not 1 <= r <= field.q - 2:
        raise ValueError(f"r must lie in [1, {field.q - 2}], got {r}")


def wu_wang_matrix(field: FqField, ring: CycloRing, r: int) -> list[list[CycloInt]]:
    _check_wu_wang(field, r)
    chi = Character(field, ring, r)
    sq = [field.element_from_index(int(i)) for i in field.square_indices]
    return [[chi(si + sj) + chi(si - sj) for sj in sq] for si in sq]


def wu_wang_determinant(field: FqField, ring: CycloRing, r: int) -> CycloInt:
    return det_cyclotomic(wu_wang_matrix(field, ring, r))


def wu_wang_product(field: FqField, ring: CycloRing, r: int) -> CycloInt:
    """prod_{k=0}^{(q-3)/2} J(chi^r, chi^(2k))."""
    _check_wu_wang(field, r)
    chi = Character(field, ring, r)
    return ring.prod(jacobi_sum(chi, Character(field, ring, 2 * k)) for k in range((field.q - 1) // 2))

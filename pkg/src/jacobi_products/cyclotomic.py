"""Exact arithmetic in Z[zeta_m] = Z[x]/Phi_m(x).

Elements are coefficient tuples on the power basis 1, z, ..., z^(d-1) with
d = deg Phi_m, so equality is tuple equality and rational integers are
exactly the tuples with a single nonzero leading entry.  Coefficients are
Python ints and grow without bound; products use the int64 kernel while a
bound check proves it safe, and numpy object arrays otherwise.
"""

from __future__ import annotations

import cmath
import functools
import math
from typing import TYPE_CHECKING, Iterable, Sequence

import numpy as np

from . import kernels

if TYPE_CHECKING:
    from .finite_field import FqElement, FqField

_I64_SAFE = 1 << 62


@functools.lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Phi_m as integer coefficients, low degree first."""
    if m < 1:
        raise ValueError("m must be positive")
    num = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            num = _exact_div(num, cyclotomic_polynomial(d))
    return tuple(num)


def _exact_div(num: list[int], den: Sequence[int]) -> list[int]:
    # den is monic
    num = list(num)
    dd = len(den) - 1
    quot = [0] * (len(num) - dd)
    for k in range(len(quot) - 1, -1, -1):
        c = num[k + dd]
        quot[k] = c
        if c:
            for i, v in enumerate(den):
                num[k + i] -= c * v
    if any(num[:dd]):
        raise ArithmeticError("inexact polynomial division")
    return quot


def _max_abs(values) -> int:
    return max((abs(int(v)) for v in values), default=0)


class CycloRing:
    """Z[zeta_m] with its power-basis reduction table.

    ``red[k]`` is the reduced form of x^(d+k); rows cover every exponent a
    product or an exponent histogram of length m can produce.
    """

    def __init__(self, m: int):
        if m < 1:
            raise ValueError("m must be positive")
        self.m = m
        self.phi = cyclotomic_polynomial(m)
        self.d = d = len(self.phi) - 1
        top = max(m, 2 * d - 1)
        rows = []
        r = [-c for c in self.phi[:d]]
        for _ in range(d, top):
            rows.append(r)
            lead = r[-1]
            r = [0] + r[:-1]
            r = [a - lead * b for a, b in zip(r, self.phi[:d])]
        self._red_obj = np.array(rows, dtype=object).reshape(len(rows), d)
        self.red_max = _max_abs(self._red_obj.ravel())
        self._red_i64 = (
            self._red_obj.astype(np.int64) if self.red_max < 1 << 31 else None
        )

    def __repr__(self):
        return f"CycloRing(m={self.m})"

    # -- constructors ---------------------------------------------------------

    def reduce(self, vec) -> CycloInt:
        """Reduce a coefficient vector of any length <= max(m, 2d-1)."""
        vec = np.asarray(vec)
        d = self.d
        if vec.shape[0] < d:
            vec = np.concatenate([vec, np.zeros(d - vec.shape[0], dtype=vec.dtype)])
        head, tail = vec[:d], vec[d:]
        if tail.shape[0] == 0:
            return CycloInt(self, tuple(int(c) for c in head))
        if (
            vec.dtype != object
            and self._red_i64 is not None
            and _max_abs(tail) * self.red_max * (tail.shape[0] + 1) + _max_abs(head) < _I64_SAFE
        ):
            out = head.astype(np.int64) + tail.astype(np.int64) @ self._red_i64[: tail.shape[0]]
        else:
            head = head.astype(object)
            out = head + tail.astype(object).dot(self._red_obj[: tail.shape[0]])
        return CycloInt(self, tuple(int(c) for c in out))

    def __call__(self, value) -> CycloInt:
        if isinstance(value, CycloInt):
            if value.ring is not self:
                raise ValueError("element belongs to a different ring")
            return value
        if isinstance(value, (int, np.integer)):
            return CycloInt(self, (int(value),) + (0,) * (self.d - 1))
        return self.reduce(np.array([int(c) for c in value], dtype=object))

    @property
    def zero(self) -> CycloInt:
        return self(0)

    @property
    def one(self) -> CycloInt:
        return self(1)

    def zeta(self, k: int = 1) -> CycloInt:
        """zeta_m^k."""
        vec = np.zeros(self.m, dtype=np.int64)
        vec[k % self.m] = 1
        return self.reduce(vec)

    def from_histogram(self, counts) -> CycloInt:
        """sum_j counts[j] zeta^j for a length-m exponent histogram."""
        return self.reduce(np.asarray(counts))

    def prod(self, factors: Iterable[CycloInt]) -> CycloInt:
        acc = self.one
        for f in factors:
            acc = acc * f
        return acc


@functools.lru_cache(maxsize=None)
def cyclotomic_ring(m: int) -> CycloRing:
    return CycloRing(m)


class CycloInt:
    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: CycloRing, coeffs: tuple[int, ...]):
        self.ring = ring
        self.coeffs = coeffs

    def _coerce(self, other):
        if isinstance(other, CycloInt):
            if other.ring is not self.ring:
                raise ValueError("elements belong to different rings")
            return other
        if isinstance(other, (int, np.integer)):
            return self.ring(int(other))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycloInt(self.ring, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CycloInt(self.ring, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycloInt(self.ring, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, np.integer)):
            other = int(other)
            return CycloInt(self.ring, tuple(a * other for a in self.coeffs))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        ring = self.ring
        d = ring.d
        amax, bmax = _max_abs(self.coeffs), _max_abs(other.coeffs)
        if amax == 0 or bmax == 0:
            return ring.zero
        conv_bound = amax * bmax * d
        if ring._red_i64 is not None and conv_bound * (1 + (d - 1) * ring.red_max) < _I64_SAFE:
            out = kernels.polymulmod(
                np.array(self.coeffs, dtype=np.int64),
                np.array(other.coeffs, dtype=np.int64),
                ring._red_i64,
            )
            return CycloInt(ring, tuple(int(c) for c in out))
        c = np.convolve(np.array(self.coeffs, dtype=object), np.array(other.coeffs, dtype=object))
        out = c[:d] + c[d:].dot(ring._red_obj[: d - 1]) if d > 1 else c[:d]
        return CycloInt(ring, tuple(int(v) for v in out))

    __rmul__ = __mul__

    def __pow__(self, e: int) -> CycloInt:
        if e < 0:
            raise ValueError("negative powers are not supported")
        result, base = self.ring.one, self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, np.integer)):
            return self.as_rational_integer() == int(other)
        if not isinstance(other, CycloInt):
            return NotImplemented
        return self.ring is other.ring and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.ring.m, self.coeffs))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def as_rational_integer(self) -> int | None:
        """The integer this element equals, or None when it is not rational."""
        if any(self.coeffs[1:]):
            return None
        return self.coeffs[0]

    def galois_conjugate(self, t: int) -> CycloInt:
        """sigma_t: zeta -> zeta^t."""
        m = self.ring.m
        if math.gcd(t, m) != 1:
            raise ValueError(f"{t} is not coprime to {m}")
        vec = np.zeros(m, dtype=object)
        for i, c in enumerate(self.coeffs):
            if c:
                vec[(i * t) % m] += c
        return self.ring.reduce(vec)

    def conjugate(self) -> CycloInt:
        """Complex conjugation, sigma_{-1}."""
        return self.galois_conjugate(-1)

    def multiplication_matrix(self) -> list[list[int]]:
        """Matrix of y -> self*y on the power basis (columns are self*z^j)."""
        ring = self.ring
        cols = [(self * ring.zeta(j)).coeffs for j in range(ring.d)]
        return [[cols[j][i] for j in range(ring.d)] for i in range(ring.d)]

    def to_complex(self) -> complex:
        """Value under zeta -> exp(2 pi i/m).  For display only."""
        z = cmath.exp(2j * math.pi / self.ring.m)
        return sum(c * z**i for i, c in enumerate(self.coeffs))

    def __repr__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                mono = "" if i == 0 else ("z" if i == 1 else f"z^{i}")
                terms.append(f"{c}*{mono}" if mono else str(c))
        return f"CycloInt(m={self.ring.m}, {' + '.join(terms) or '0'})"


class ExactDivisor:
    """Precomputed data for repeated exact division by a fixed nonzero b.

    With adj = prod of sigma_t(b) over t != 1 and N = b*adj in Z, the quotient
    a/b equals a*adj/N, and it lies in Z[zeta_m] exactly when N divides every
    coefficient of a*adj.
    """

    def __init__(self, b: CycloInt):
        if b.is_zero():
            raise ZeroDivisionError("division by zero in Z[zeta_m]")
        ring = b.ring
        self.adj = ring.prod(
            b.galois_conjugate(t) for t in range(2, ring.m) if math.gcd(t, ring.m) == 1
        )
        norm = (b * self.adj).as_rational_integer()
        if norm is None:  # pragma: no cover - the norm of an element is rational
            raise ArithmeticError("norm is not rational")
        self.norm = norm

    def __call__(self, a: CycloInt) -> CycloInt:
        out = []
        for c in (a * self.adj).coeffs:
            qt, r = divmod(c, self.norm)
            if r:
                raise ArithmeticError("quotient is not integral: nonzero remainder")
            out.append(qt)
        return CycloInt(a.ring, tuple(out))


def divide_exact(a: CycloInt, b: CycloInt) -> CycloInt:
    """The c in Z[zeta_m] with b*c = a; ArithmeticError if none exists."""
    return ExactDivisor(b)(a)


class ReductionMap:
    """Z[zeta_m] -> F_q, m = q-1: reduce coefficients mod p, send zeta to g."""

    def __init__(self, ring: CycloRing, field: FqField):
        if ring.m != field.q - 1:
            raise ValueError(f"ring conductor {ring.m} does not match field order {field.q}")
        self.ring = ring
        self.field = field
        p, f = field.p, field.f
        idx = field.exp[: ring.d]
        # digits of g^i, one row per basis element
        self._digits = np.stack([(idx // p**k) % p for k in range(f)], axis=1)

    def __call__(self, a: CycloInt) -> FqElement:
        if a.ring is not self.ring:
            raise ValueError("element belongs to a different ring")
        p = self.field.p
        c = np.array([int(v) % p for v in a.coeffs], dtype=np.int64)
        digits = (c @ self._digits) % p
        return self.field(digits.tolist())


def reduce_mod_prime_ideal(rmap: ReductionMap, a: CycloInt) -> FqElement:
    return rmap(a)


def teichmuller(rmap: ReductionMap, x) -> CycloInt:
    """omega(x) = zeta^dlog(x); the lift whose reduction is x."""
    x = rmap.field(x)
    if x.is_zero():
        raise ValueError("the Teichmuller lift is defined on nonzero elements")
    return rmap.ring.zeta(rmap.field.dlog(x))

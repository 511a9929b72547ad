"""Table-driven finite fields F_q, q = p**f, with a canonical primitive element.

An element is stored as its *index*: the coefficient vector (c_0, ..., c_{f-1})
of its polynomial representative read as the base-p integer
``c_0 + c_1 p + ... + c_{f-1} p**(f-1)``.  The canonical element order used
everywhere (square lists, matrix rows) is increasing index.
"""

from __future__ import annotations

import functools
from typing import Iterator, Sequence

import numpy as np

from . import kernels
from .cyclotomic import cyclotomic_polynomial

MAX_ORDER = 10**6


def is_prime(n: int) -> bool:
    """Deterministic trial division; fine for the desk-scale sizes used here."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def prime_power(q: int) -> tuple[int, int] | None:
    """Return (p, f) with q == p**f, or None when q is not a prime power."""
    if q < 2:
        return None
    fs = prime_factors(q)
    if len(fs) != 1:
        return None
    p, f = fs[0], 0
    while q > 1:
        q //= p
        f += 1
    return p, f


def odd_prime_powers(lo: int, hi: int) -> list[int]:
    return [q for q in range(max(lo, 3), hi + 1) if q % 2 and prime_power(q)]


# -- polynomials over Z/p, coefficient tuples low -> high ----------------------


def _poly_mulmod(a, b, mod_low, p):
    f = len(mod_low)
    prod = [0] * (2 * f - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] += x * y
    for deg in range(2 * f - 2, f - 1, -1):
        top = prod[deg] % p
        if top:
            for i in range(f):
                prod[deg - f + i] -= top * mod_low[i]
    return tuple(c % p for c in prod[:f])


def _x_has_order(mod_low, p, m):
    f = len(mod_low)
    one = tuple([1] + [0] * (f - 1))
    x = tuple([0, 1] + [0] * (f - 2))

    def power(e):
        result, base = one, x
        while e:
            if e & 1:
                result = _poly_mulmod(result, base, mod_low, p)
            base = _poly_mulmod(base, base, mod_low, p)
            e >>= 1
        return result

    if power(m) != one:
        return False
    return all(power(m // r) != one for r in prime_factors(m))


def _poly_rem_mod_p(num, den_low, p):
    """Remainder of ``num`` (low -> high) modulo the monic x^f + den_low."""
    f = len(den_low)
    r = [c % p for c in num]
    for deg in range(len(r) - 1, f - 1, -1):
        top = r[deg]
        if top:
            for i in range(f):
                r[deg - f + i] = (r[deg - f + i] - top * den_low[i]) % p
            r[deg] = 0
    return r[:f]


def divides_cyclotomic(mod_low: Sequence[int], p: int, m: int) -> bool:
    """True when x^f + mod_low divides Phi_m(x) modulo p."""
    return not any(_poly_rem_mod_p(cyclotomic_polynomial(m), list(mod_low), p))


def canonical_modulus(p: int, f: int) -> tuple[int, ...]:
    """First monic degree-f factor of Phi_{q-1} mod p, in lexicographic order.

    Candidates x^f + c_{f-1} x^{f-1} + ... + c_0 are enumerated by the base-p
    integer with c_{f-1} most significant.  A monic degree-f polynomial divides
    Phi_{q-1} mod p exactly when x has order q-1 modulo it, which is the test
    used; the result is returned low -> high without the leading 1.
    """
    m = p**f - 1
    for t in range(p**f):
        low = tuple((t // p**i) % p for i in range(f))
        if low[0] and _x_has_order(low, p, m):
            return low
    raise ArithmeticError(f"no degree-{f} factor of Phi_{m} mod {p}")  # pragma: no cover


def smallest_primitive_root(p: int) -> int:
    m = p - 1
    fs = prime_factors(m)
    for g in range(1, p):
        if all(pow(g, m // r, p) != 1 for r in fs):
            return g
    raise ArithmeticError(f"no primitive root mod {p}")  # pragma: no cover


class FqElement:
    __slots__ = ("field", "index")

    def __init__(self, field: FqField, index: int):
        self.field = field
        self.index = int(index)

    @property
    def coeffs(self) -> tuple[int, ...]:
        p, i = self.field.p, self.index
        return tuple((i // p**k) % p for k in range(self.field.f))

    def is_zero(self) -> bool:
        return self.index == 0

    def _coerce(self, other) -> FqElement:
        if isinstance(other, FqElement):
            if other.field is not self.field:
                raise ValueError("elements belong to different fields")
            return other
        if isinstance(other, int):
            return self.field(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.field._add(self.index, other.index, 1)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.field._add(self.index, other.index, -1)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __neg__(self):
        return self.field._add(0, self.index, -1)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.index == 0 or other.index == 0:
            return self.field.zero
        fld = self.field
        return FqElement(fld, fld.exp[(fld.log[self.index] + fld.log[other.index]) % fld.m])

    __rmul__ = __mul__

    def __pow__(self, e: int):
        fld = self.field
        if self.index == 0:
            if e <= 0:
                raise ZeroDivisionError("0 has no inverse")
            return fld.zero
        return FqElement(fld, fld.exp[(int(fld.log[self.index]) * e) % fld.m])

    def inverse(self) -> FqElement:
        return self ** -1

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.field(other)
        if not isinstance(other, FqElement):
            return NotImplemented
        return other.field is self.field and other.index == self.index

    def __hash__(self):
        return hash((self.field.q, self.index))

    def __lt__(self, other: FqElement) -> bool:
        return self.index < other.index

    def __repr__(self):
        if self.field.f == 1:
            return f"F{self.field.q}({self.index})"
        return f"F{self.field.q}{list(self.coeffs)}"


class FqField:
    """F_q with generator g, exponent table ``exp[j] = g^j`` and ``log`` its inverse.

    ``log[0]`` is -1.  ``one_minus_log[t]`` and ``one_plus_log[t]`` hold the
    discrete logs of 1 - g^t and 1 + g^t (-1 where that element is zero).
    Arrays are read-only; the object is immutable after construction.
    """

    def __init__(self, p: int, f: int):
        if not isinstance(p, int) or p % 2 == 0 or not is_prime(p):
            raise ValueError(f"p must be an odd prime, got {p!r}")
        if not isinstance(f, int) or f <= 0:
            raise ValueError(f"f must be a positive integer, got {f!r}")
        q = p**f
        if q > MAX_ORDER:
            raise ValueError(f"q = {q} exceeds the supported bound {MAX_ORDER}")
        self.p, self.f, self.q = p, f, q
        self.m = q - 1
        self.n = self.m // 2
        if f == 1:
            g = smallest_primitive_root(p)
            self.modulus = None
            low = ((-g) % p,)
        else:
            low = canonical_modulus(p, f)
            self.modulus = low + (1,)
        self._low = low
        exp = kernels.power_table(low, p, self.m)
        log = np.full(q, -1, dtype=np.int64)
        log[exp] = np.arange(self.m, dtype=np.int64)
        one = np.ones(self.m, dtype=np.int64)
        self.exp = exp
        self.log = log
        self.one_minus_log = log[kernels.index_axpy(one, exp, -1, p, f)]
        self.one_plus_log = log[kernels.index_axpy(one, exp, 1, p, f)]
        for arr in (self.exp, self.log, self.one_minus_log, self.one_plus_log):
            arr.flags.writeable = False
        self.zero = FqElement(self, 0)
        self.one = FqElement(self, 1)
        self.generator = FqElement(self, int(exp[1 % self.m]))

    def __repr__(self):
        return f"FqField(p={self.p}, f={self.f})"

    def __call__(self, value) -> FqElement:
        if isinstance(value, FqElement):
            if value.field is not self:
                raise ValueError("element belongs to a different field")
            return value
        if isinstance(value, (int, np.integer)):
            return FqElement(self, int(value) % self.p)
        coeffs = list(value)
        if len(coeffs) > self.f:
            raise ValueError("too many coefficients")
        return FqElement(self, sum((int(c) % self.p) * self.p**i for i, c in enumerate(coeffs)))

    def _add(self, a: int, b: int, alpha: int) -> FqElement:
        if self.f == 1:
            return FqElement(self, (a + alpha * b) % self.p)
        out = kernels.index_axpy(np.array([a]), np.array([b]), alpha, self.p, self.f)
        return FqElement(self, int(out[0]))

    def element_from_index(self, index: int) -> FqElement:
        return FqElement(self, index)

    def elements(self) -> Iterator[FqElement]:
        """All q elements in canonical order."""
        return (FqElement(self, i) for i in range(self.q))

    def dlog(self, x: FqElement) -> int:
        x = self(x)
        if x.index == 0:
            raise ValueError("0 has no discrete logarithm")
        return int(self.log[x.index])

    def power(self, j: int) -> FqElement:
        return FqElement(self, int(self.exp[j % self.m]))

    @functools.cached_property
    def quad_table(self) -> np.ndarray:
        """phi_q indexed by element index."""
        t = np.where(self.log % 2 == 0, 1, -1).astype(np.int64)
        t[0] = 0
        t.flags.writeable = False
        return t

    @functools.cached_property
    def square_indices(self) -> np.ndarray:
        s = np.sort(self.exp[0::2])
        s.flags.writeable = False
        return s


@functools.lru_cache(maxsize=None)
def build_field(p: int, f: int = 1) -> FqField:
    return FqField(p, f)


def field_of_order(q: int) -> FqField:
    pf = prime_power(q)
    if pf is None or q % 2 == 0:
        raise ValueError(f"q must be an odd prime power, got {q}")
    return build_field(*pf)


def quadratic_character(field: FqField, x) -> int:
    return int(field.quad_table[field(x).index])


def squares(field: FqField) -> list[FqElement]:
    """The nonzero squares s_1 < ... < s_n in canonical order."""
    return [FqElement(field, int(i)) for i in field.square_indices]

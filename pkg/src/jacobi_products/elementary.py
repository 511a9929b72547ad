"""Elementary number theory behind the integrality and congruence results.

Jacobi symbols, the Jenkins and Pan floor identities, the parity lemma on the
sets X_j(a), class numbers h(-p) for p = 3 mod 4, and the Teichmuller-side
congruences for Jacobi sums and R_q modulo p.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .characters import Character, compute_Rq, jacobi_sum, quadratic_jacobi
from .cyclotomic import CycloRing, ReductionMap, teichmuller
from .finite_field import FqField, is_prime, prime_power
from .verdict import Verdict


def jacobi_symbol(a: int, m: int) -> int:
    if m <= 0 or m % 2 == 0:
        raise ValueError(f"m must be a positive odd integer, got {m}")
    a %= m
    sign = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if m % 8 in (3, 5):
                sign = -sign
        a, m = m, a
        if a % 4 == 3 and m % 4 == 3:
            sign = -sign
        a %= m
    return sign if m == 1 else 0


def legendre(a: int, p: int) -> int:
    return jacobi_symbol(a, p)


def _require_coprime(a: int, m: int):
    if math.gcd(a, m) != 1:
        raise ValueError(f"gcd({a}, {m}) != 1")


def jenkins_counts(a: int, m: int) -> tuple[int, int]:
    """(#{0 < k < m/2 : {ak}_m > m/2}, K_a = sum floor(2ak/m)).

    Both have parity matching the Jacobi symbol (a/m).
    """
    if m <= 0 or m % 2 == 0:
        raise ValueError(f"m must be a positive odd integer, got {m}")
    _require_coprime(a, m)
    ks = range(1, (m - 1) // 2 + 1)
    count = sum(1 for k in ks if 2 * ((a * k) % m) > m)
    return count, sum((2 * a * k) // m for k in ks)


def pan_identity_check(a: int, m: int, i: int, j: int) -> int:
    """floor(aj/m) - floor(ai/m) - floor(a(j-i)/m), checked against [{ai}_m > {aj}_m].

    Returns the floor combination; raises ArithmeticError if it disagrees with
    the indicator.
    """
    if m < 1:
        raise ValueError("m must be positive")
    _require_coprime(a, m)
    if not 1 <= i < j <= m - 1:
        raise ValueError(f"need 1 <= i < j <= m-1, got i={i}, j={j}, m={m}")
    value = (a * j) // m - (a * i) // m - (a * (j - i)) // m
    if value != int((a * i) % m > (a * j) % m):
        raise ArithmeticError(f"Pan identity fails at a={a}, m={m}, i={i}, j={j}")
    return value


@dataclass(frozen=True)
class ResidueClassData:
    """X_j(a) = {k in (0, n/2) : (j-1)n/2 < {ak}_2n < jn/2} and the folded sets U_j(a)."""

    q: int
    a: int
    X: tuple[tuple[int, ...], ...]
    U: tuple[tuple[int, ...], ...]

    @property
    def counts(self) -> tuple[int, ...]:
        return tuple(len(x) for x in self.X)


def residue_class_data(q: int, a: int) -> ResidueClassData:
    n = (q - 1) // 2
    if not 0 < a < q or math.gcd(a, q - 1) != 1:
        raise ValueError(f"need 0 < a < q with gcd(a, q-1) = 1, got a={a}, q={q}")
    X = [[], [], [], []]
    U = [[], [], [], []]
    for k in range(1, n):
        if 2 * k >= n:
            break
        r = (a * k) % (2 * n)
        for j in range(4):
            # (j) n/2 < r < (j+1) n/2, doubled to stay in integers
            if j * n < 2 * r < (j + 1) * n:
                X[j].append(k)
                U[j].append((r, n - r, r - n, 2 * n - r)[j])
    return ResidueClassData(q, a, tuple(map(tuple, X)), tuple(map(tuple, U)))


def x_parity_lemma(q: int, a: int) -> bool:
    """#X_2(a) + #X_3(a) is even (q = 3 mod 4)."""
    pf = prime_power(q)
    if pf is None or q % 4 != 3:
        raise ValueError(f"q must be a prime power = 3 mod 4, got {q}")
    c = residue_class_data(q, a).counts
    return (c[1] + c[2]) % 2 == 0


def _require_p_3_mod_4(p: int):
    if not is_prime(p) or p % 4 != 3 or p == 3:
        raise ValueError(f"p must be a prime = 3 mod 4 with p > 3, got {p}")


@dataclass(frozen=True)
class ClassNumberRecord:
    p: int
    s_l: int
    s_r: int
    s_w: int
    h: int
    eq_b: bool  # s_l == (1 + (2/p)) s_w / 2


def class_number(p: int) -> ClassNumberRecord:
    """h(-p) from s_w = (2 - (2/p)) h(-p), with the partial sums s_l, s_r."""
    _require_p_3_mod_4(p)
    s_l = sum(legendre(k, p) for k in range(1, (p - 1) // 4 + 1))
    s_r = sum(legendre(k, p) for k in range((p - 1) // 4 + 1, (p - 1) // 2 + 1))
    s_w = s_l + s_r
    two = legendre(2, p)
    h, rem = divmod(s_w, 2 - two)
    if rem or h < 1:
        raise ArithmeticError(f"s_w = {s_w} is not a positive multiple of {2 - two}")
    return ClassNumberRecord(p, s_l, s_r, s_w, h, 2 * s_l == (1 + two) * s_w)


def class_number_forms(p: int) -> int:
    """Count reduced binary quadratic forms of discriminant -p (p = 3 mod 4)."""
    D = -p
    h = 0
    a = 1
    while 3 * a * a <= -D:
        for b in range(-a + 1, a + 1):
            if (b - D) % 2:
                continue
            num = b * b - D
            if num % (4 * a):
                continue
            c = num // (4 * a)
            if c < a or (c == a and b < 0):
                continue
            if math.gcd(math.gcd(a, abs(b)), c) == 1:
                h += 1
        a += 1
    return h


def mordell_congruence(p: int) -> bool:
    """((p-1)/2)! = (-1)^((h(-p)+1)/2) mod p."""
    _require_p_3_mod_4(p)
    h = class_number(p).h
    fact = math.factorial((p - 1) // 2) % p
    return fact == (-1) ** ((h + 1) // 2) % p


def bp_product(p: int) -> int:
    """B_p = prod over 0 < k < p/4 of C(2k, k)."""
    return math.prod(math.comb(2 * k, k) for k in range(1, (p - 1) // 4 + 1))


def verify_bp_symbol(p: int) -> bool:
    if not is_prime(p) or p % 4 != 1:
        raise ValueError(f"p must be a prime = 1 mod 4, got {p}")
    fact = math.factorial((p - 1) // 2)
    return legendre(bp_product(p), p) == legendre(2, p) == legendre(fact, p)


def yz_counts(p: int) -> tuple[int, int]:
    _require_p_3_mod_4(p)
    # k < p/8  <=>  8k < p;  p/8 < k < p/4  <=>  p < 8k < 2p
    y = sum(1 for k in range(1, p) if 8 * k < p and legendre(k, p) == -1)
    z = sum(1 for k in range(1, p) if p < 8 * k < 2 * p and legendre(k, p) == 1)
    return y, z


def yz_parity(p: int) -> bool:
    y, z = yz_counts(p)
    if p % 8 == 3:
        return (y + z) % 2 == 0
    return (y + z) % 2 == ((1 + class_number(p).h) // 2) % 2


def lucas_binomial_mod_p(N: int, K: int, p: int) -> int:
    """C(N, K) mod p as the product of digit binomials in base p."""
    if N < 0 or K < 0:
        raise ValueError("N and K must be nonnegative")
    out = 1
    while N or K:
        n_d, k_d = N % p, K % p
        if k_d > n_d:
            return 0
        out = out * math.comb(n_d, k_d) % p
        N //= p
        K //= p
    return out


def _teichmuller_character(field: FqField, ring: CycloRing, rmap: ReductionMap, k: int) -> Character:
    """omega^k; omega is the character with omega(g) = zeta, whose lift reduces to g."""
    if rmap(teichmuller(rmap, field.generator)) != field.generator:
        raise ArithmeticError("reduction map does not invert the Teichmuller lift")
    return Character(field, ring, k)


def cohen_congruence_check(field: FqField, ring: CycloRing, rmap: ReductionMap, i: int, j: int) -> bool:
    """J(omega^-i, omega^-j) = -C(i+j, i) mod the prime ideal, and 0 when i+j >= q."""
    q, p = field.q, field.p
    if not (1 <= i <= q - 2 and 1 <= j <= q - 2):
        raise ValueError(f"need 1 <= i, j <= {q - 2}")
    J = jacobi_sum(
        _teichmuller_character(field, ring, rmap, -i),
        _teichmuller_character(field, ring, rmap, -j),
    )
    red = rmap(J)
    if red != field(-math.comb(i + j, i) % p):
        return False
    return i + j < q or red.is_zero()


def bew_identity_check(field: FqField, ring: CycloRing, rmap: ReductionMap, k: int) -> bool:
    """J(phi, omega^-k) = omega^-k(4) J(omega^-k, omega^-k), exactly."""
    if k % field.m == 0:
        raise ValueError("k must be nonzero mod q-1")
    w = _teichmuller_character(field, ring, rmap, -k)
    return quadratic_jacobi(field, ring, -k) == w(4) * jacobi_sum(w, w)


@dataclass(frozen=True)
class Thm13Verdict:
    q: int
    case: str
    R_mod_p: int
    expected: dict
    holds: dict
    legendre: int | None = None
    legendre_expected: int | None = None

    @property
    def ok(self) -> bool:
        if self.case != "f=1":
            return all(self.holds.values())
        return any(self.holds.values()) and self.legendre == self.legendre_expected

    def __bool__(self) -> bool:
        return self.ok


def thm13_prediction(p: int, E: int) -> int:
    """(-1)^E (1/4)^(E(E+1)/2) prod_{0<k<n/2} C(2k, k) mod p, with 1/4 inverted mod p."""
    n = (p - 1) // 2
    central = math.prod(math.comb(2 * k, k) for k in range(1, n) if 2 * k < n)
    inv4 = pow(4, -1, p)
    return (-1) ** E * pow(inv4, E * (E + 1) // 2, p) * central % p


def thm13_congruences(q: int, R: int | None = None) -> Thm13Verdict:
    """Local behaviour of R_q mod p.

    For f = 1 the exponent E is evaluated under both readings,
    floor(n/2) and e(q) = #{0 < k < n/2}, and both outcomes are reported.
    """
    pf = prime_power(q)
    if pf is None or q % 2 == 0:
        raise ValueError(f"q must be an odd prime power, got {q}")
    p, f = pf
    if R is None:
        R = compute_Rq(q).R
    r = R % p
    if f > 1 and q != 9:
        return Thm13Verdict(q, "f>1", r, {"divisible": 0}, {"divisible": r == 0})
    if q == 9:
        return Thm13Verdict(q, "q=9", r, {"R": -2}, {"R": R == -2})
    n = (p - 1) // 2
    readings = {"floor": n // 2, "e": (p - 2) // 4}
    expected = {name: thm13_prediction(p, E) for name, E in readings.items()}
    holds = {name: r == v for name, v in expected.items()}
    sym = legendre(R, p)
    sym_expected = (-1) ** ((p - 3) // 4) if p % 4 == 3 else 1
    return Thm13Verdict(q, "f=1", r, expected, holds, sym, sym_expected)

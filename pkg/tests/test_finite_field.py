import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from jacobi_products.finite_field import (
    MAX_ORDER,
    FqField,
    build_field,
    canonical_modulus,
    divides_cyclotomic,
    field_of_order,
    is_prime,
    odd_prime_powers,
    prime_power,
    quadratic_character,
    smallest_primitive_root,
    squares,
)

SMALL_Q = [3, 5, 7, 9, 11, 13, 25, 27, 49, 81, 125]


# -- naive polynomial arithmetic over Z/p, used as the oracle ----------------


def poly_mul_mod(a, b, modulus, p):
    """a*b mod (modulus, p); modulus is monic, all lists low -> high."""
    f = len(modulus) - 1
    prod = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            prod[i + j] = (prod[i + j] + x * y) % p
    for k in range(len(prod) - 1, f - 1, -1):
        c = prod[k]
        if c:
            for i in range(f + 1):
                prod[k - f + i] = (prod[k - f + i] - c * modulus[i]) % p
    return (prod + [0] * f)[:f]


def naive_order_of_x(modulus, p):
    f = len(modulus) - 1
    one = [1] + [0] * (f - 1)
    x = [0, 1] + [0] * (f - 2) if f > 1 else [0]
    v, k = x, 1
    while v != one:
        v = poly_mul_mod(v, x, modulus, p)
        k += 1
        if k > p**f:
            return None
    return k


def test_is_prime_and_prime_power():
    assert [n for n in range(30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert prime_power(27) == (3, 3)
    assert prime_power(12) is None
    assert prime_power(1) is None
    assert odd_prime_powers(3, 30) == [3, 5, 7, 9, 11, 13, 17, 19, 23, 25, 27, 29]


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13, 17, 19, 23, 31, 97])
def test_smallest_primitive_root_brute(p):
    g = smallest_primitive_root(p)
    assert len({pow(g, j, p) for j in range(p - 1)}) == p - 1
    for h in range(2, g):
        assert len({pow(h, j, p) for j in range(p - 1)}) < p - 1


@pytest.mark.parametrize("p,f", [(3, 2), (3, 3), (5, 2), (7, 2), (3, 4), (5, 3)])
def test_canonical_modulus_is_first_primitive(p, f):
    low = canonical_modulus(p, f)
    assert naive_order_of_x(list(low) + [1], p) == p**f - 1
    # every earlier candidate in the enumeration fails
    for t in range(sum(c * p**i for i, c in enumerate(low))):
        cand = [(t // p**i) % p for i in range(f)]
        if cand[0] == 0:
            continue
        assert naive_order_of_x(cand + [1], p) != p**f - 1
    assert divides_cyclotomic(low, p, p**f - 1)


def test_known_small_fields():
    assert build_field(5).generator.index == 2
    assert build_field(7).generator.index == 3
    F9 = build_field(3, 2)
    assert F9.modulus == (2, 1, 1)  # x^2 + x + 2
    assert [s.index for s in squares(build_field(7))] == [1, 2, 4]


@pytest.mark.parametrize("q", [9, 25, 27, 49, 81])
def test_multiplication_matches_polynomial_oracle(q):
    F = field_of_order(q)
    mod = list(F.modulus)
    for a, b in itertools.product(range(0, q, max(1, q // 11)), repeat=2):
        x, y = F.element_from_index(a), F.element_from_index(b)
        expect = poly_mul_mod(list(x.coeffs), list(y.coeffs), mod, F.p)
        assert (x * y).coeffs == tuple(expect)


@pytest.mark.parametrize("q", SMALL_Q)
def test_exp_log_tables(q):
    F = field_of_order(q)
    assert sorted(F.exp.tolist()) == list(range(1, q))
    assert F.log[0] == -1
    assert all(F.exp[F.log[i]] == i for i in range(1, q))
    one = F.one
    for t in range(F.m):
        g_t = F.power(t)
        assert F.one_minus_log[t] == (F.dlog(one - g_t) if g_t != one else -1)
        opl = one + g_t
        assert F.one_plus_log[t] == (F.dlog(opl) if not opl.is_zero() else -1)


@pytest.mark.parametrize("q", SMALL_Q)
def test_quadratic_character_euler(q):
    F = field_of_order(q)
    for x in F.elements():
        if x.is_zero():
            assert quadratic_character(F, x) == 0
            continue
        euler = x ** F.n
        assert euler == F.one or euler == -F.one
        assert quadratic_character(F, x) == (1 if euler == F.one else -1)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(SMALL_Q), st.data())
def test_field_axioms(q, data):
    F = field_of_order(q)
    idx = st.integers(0, q - 1)
    a, b, c = (F.element_from_index(data.draw(idx)) for _ in range(3))
    assert a + b == b + a
    assert a * (b + c) == a * b + a * c
    assert (a - b) + b == a
    if not b.is_zero():
        assert (a / b) * b == a
    assert a ** q == a  # Frobenius fixes F_q


def test_elements_canonical_order_and_coercion():
    F = build_field(3, 2)
    assert [e.index for e in F.elements()] == list(range(9))
    assert F([1, 2]).index == 1 + 2 * 3
    assert F(-1).index == 2
    assert F.element_from_index(5).coeffs == (2, 1)


def test_tables_read_only():
    F = build_field(7)
    with pytest.raises(ValueError):
        F.exp[0] = 5


@pytest.mark.parametrize("args", [(4, 1), (9, 1), (2, 3), (3, 0), (3.0, 1)])
def test_invalid_fields(args):
    with pytest.raises(ValueError):
        FqField(*args)


def test_size_bound():
    with pytest.raises(ValueError):
        FqField(1000003, 1)
    assert MAX_ORDER == 10**6


def test_zero_has_no_log():
    F = build_field(5)
    with pytest.raises(ValueError):
        F.dlog(F.zero)
    with pytest.raises(ZeroDivisionError):
        F.zero ** -1

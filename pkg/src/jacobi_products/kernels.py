"""Integer kernels behind the finite-field tables and character sums.

Every kernel exists twice: a numba ``@njit`` loop and a vectorised numpy
version.  The public names resolve to one of them according to
:mod:`jacobi_products._accel`.  All values handled here fit comfortably in
int64 (exponents below ``q**2``, counts below ``q``); arbitrary-precision
work lives in :mod:`jacobi_products.cyclotomic`.
"""

import numpy as np

from ._accel import USE_NUMBA, njit

# -- field power table ---------------------------------------------------------


@njit
def _nb_power_table(low, p, m):
    f = low.shape[0]
    out = np.empty(m, dtype=np.int64)
    v = np.zeros(f, dtype=np.int64)
    v[0] = 1
    for j in range(m):
        idx = 0
        w = 1
        for i in range(f):
            idx += v[i] * w
            w *= p
        out[j] = idx
        # multiply by x modulo x^f + low[f-1] x^(f-1) + ... + low[0]
        top = v[f - 1]
        for i in range(f - 1, 0, -1):
            v[i] = (v[i - 1] - top * low[i]) % p
        v[0] = (-top * low[0]) % p
    return out


def _np_power_table(low, p, m):
    f = low.shape[0]
    weights = p ** np.arange(f, dtype=np.int64)

    def mulmod(u, w):
        # rows of u times the single element w, reduced mod the field modulus
        prod = np.zeros((u.shape[0], 2 * f - 1), dtype=np.int64)
        for i in range(f):
            prod[:, i:i + f] += u[:, i:i + 1] * w[None, :]
        prod %= p
        for deg in range(2 * f - 2, f - 1, -1):
            top = prod[:, deg].copy()
            prod[:, deg - f:deg] -= top[:, None] * low[None, :]
            prod[:, deg] = 0
            prod %= p
        return prod[:, :f]

    coeffs = np.zeros((1, f), dtype=np.int64)
    coeffs[0, 0] = 1
    step = np.zeros(f, dtype=np.int64)
    if f == 1:
        step[0] = (-low[0]) % p
    else:
        step[1] = 1
    # doubling: powers[0:2L] = powers[0:L] ++ powers[0:L] * g^L
    while coeffs.shape[0] < m:
        coeffs = np.vstack([coeffs, mulmod(coeffs, step)])
        step = mulmod(step[None, :], step)[0]
    return (coeffs[:m] * weights[None, :]).sum(axis=1)


# -- digitwise arithmetic on base-p element indices ----------------------------


@njit
def _nb_index_axpy(a, b, alpha, p, f):
    out = np.empty(a.shape[0], dtype=np.int64)
    for t in range(a.shape[0]):
        x = a[t]
        y = b[t]
        r = 0
        w = 1
        for _ in range(f):
            r += ((x % p + alpha * (y % p)) % p) * w
            x //= p
            y //= p
            w *= p
        out[t] = r
    return out


def _np_index_axpy(a, b, alpha, p, f):
    out = np.zeros(a.shape[0], dtype=np.int64)
    w = 1
    for _ in range(f):
        out += ((a % p + alpha * (b % p)) % p) * w
        a = a // p
        b = b // p
        w *= p
    return out


# -- character-sum histograms --------------------------------------------------


@njit
def _nb_exponent_histogram(exps, weights, m):
    out = np.zeros(m, dtype=np.int64)
    for t in range(exps.shape[0]):
        out[exps[t] % m] += weights[t]
    return out


def _np_exponent_histogram(exps, weights, m):
    out = np.zeros(m, dtype=np.int64)
    np.add.at(out, exps % m, weights)
    return out


@njit
def _nb_jacobi_histogram(a, b, one_minus_log, m):
    out = np.zeros(m, dtype=np.int64)
    for t in range(1, m):
        out[(a * t + b * one_minus_log[t]) % m] += 1
    return out


def _np_jacobi_histogram(a, b, one_minus_log, m):
    t = np.arange(1, m, dtype=np.int64)
    return np.bincount((a * t + b * one_minus_log[1:]) % m, minlength=m).astype(np.int64)


# -- small-coefficient products in Z[x]/Phi_m ----------------------------------


@njit
def _nb_polymulmod(a, b, red):
    d = a.shape[0]
    c = np.zeros(2 * d - 1, dtype=np.int64)
    for i in range(d):
        ai = a[i]
        if ai == 0:
            continue
        for j in range(d):
            c[i + j] += ai * b[j]
    out = c[:d].copy()
    for k in range(d - 1):
        ck = c[d + k]
        if ck == 0:
            continue
        for j in range(d):
            out[j] += ck * red[k, j]
    return out


def _np_polymulmod(a, b, red):
    d = a.shape[0]
    c = np.convolve(a, b)
    return c[:d] + c[d:] @ red[:d - 1]


# -- Jenkins sweep: counts and K_a for every residue a mod m -------------------


@njit
def _nb_jenkins_sweep(m):
    half = (m - 1) // 2
    counts = np.zeros(m, dtype=np.int64)
    ks = np.zeros(m, dtype=np.int64)
    for a in range(m):
        c = 0
        s = 0
        for k in range(1, half + 1):
            if 2 * ((a * k) % m) > m:
                c += 1
            s += (2 * a * k) // m
        counts[a] = c
        ks[a] = s
    return counts, ks


def _np_jenkins_sweep(m):
    a = np.arange(m, dtype=np.int64)[:, None]
    k = np.arange(1, (m - 1) // 2 + 1, dtype=np.int64)[None, :]
    counts = (2 * ((a * k) % m) > m).sum(axis=1).astype(np.int64)
    ks = ((2 * a * k) // m).sum(axis=1).astype(np.int64)
    return counts, ks


NUMBA = {
    "power_table": _nb_power_table,
    "index_axpy": _nb_index_axpy,
    "exponent_histogram": _nb_exponent_histogram,
    "jacobi_histogram": _nb_jacobi_histogram,
    "polymulmod": _nb_polymulmod,
    "jenkins_sweep": _nb_jenkins_sweep,
}
NUMPY = {
    "power_table": _np_power_table,
    "index_axpy": _np_index_axpy,
    "exponent_histogram": _np_exponent_histogram,
    "jacobi_histogram": _np_jacobi_histogram,
    "polymulmod": _np_polymulmod,
    "jenkins_sweep": _np_jenkins_sweep,
}
_ACTIVE = NUMBA if USE_NUMBA else NUMPY


def _i64(x):
    return np.ascontiguousarray(x, dtype=np.int64)


def power_table(low, p: int, m: int) -> np.ndarray:
    """Base-p indices of g^0, ..., g^(m-1), where g is x modulo the monic
    polynomial ``x^f + sum(low[i] x^i)`` over Z/p."""
    return _ACTIVE["power_table"](_i64(low), int(p), int(m))


def index_axpy(a, b, alpha: int, p: int, f: int) -> np.ndarray:
    """Digitwise ``a + alpha*b`` on base-p element indices (any shape)."""
    a, b = np.broadcast_arrays(_i64(a), _i64(b))
    shape = a.shape
    out = _ACTIVE["index_axpy"](_i64(a.ravel()), _i64(b.ravel()), int(alpha), int(p), int(f))
    return out.reshape(shape)


def exponent_histogram(exps, weights, m: int) -> np.ndarray:
    return _ACTIVE["exponent_histogram"](_i64(exps), _i64(weights), int(m))


def jacobi_histogram(a: int, b: int, one_minus_log, m: int) -> np.ndarray:
    """Exponent counts of J(chi^a, chi^b) = sum over t != 0 of zeta^(a t + b L[t]),
    with L[t] the discrete log of 1 - g^t."""
    return _ACTIVE["jacobi_histogram"](int(a) % m, int(b) % m, _i64(one_minus_log), int(m))


def polymulmod(a, b, red) -> np.ndarray:
    return _ACTIVE["polymulmod"](_i64(a), _i64(b), _i64(red))


def jenkins_sweep(m: int):
    return _ACTIVE["jenkins_sweep"](int(m))

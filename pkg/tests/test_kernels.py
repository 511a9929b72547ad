"""Both kernel backends must return identical arrays."""

import os
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from jacobi_products import _accel, kernels
from jacobi_products.cyclotomic import cyclotomic_ring
from jacobi_products.finite_field import field_of_order

pytestmark = pytest.mark.skipif(not _accel.HAVE_NUMBA, reason="numba not installed")


def same(name, *args):
    a = kernels.NUMBA[name](*args)
    b = kernels.NUMPY[name](*args)
    if isinstance(a, tuple):
        assert all(np.array_equal(x, y) for x, y in zip(a, b))
    else:
        assert a.dtype == b.dtype == np.int64
        assert np.array_equal(a, b)


@pytest.mark.parametrize("q", [3, 9, 25, 27, 81, 125, 343, 729])
def test_power_table(q):
    F = field_of_order(q)
    same("power_table", np.array(F._low, dtype=np.int64), F.p, F.m)


@settings(max_examples=50, deadline=None)
@given(st.sampled_from([5, 9, 27, 49, 81]), st.integers(-3, 3), st.data())
def test_index_axpy(q, alpha, data):
    F = field_of_order(q)
    idx = st.lists(st.integers(0, q - 1), min_size=1, max_size=40)
    a = np.array(data.draw(idx), dtype=np.int64)
    b = np.resize(np.array(data.draw(idx), dtype=np.int64), a.shape)
    same("index_axpy", a, b, alpha, F.p, F.f)


@settings(max_examples=50, deadline=None)
@given(st.integers(1, 60), st.data())
def test_histograms(m, data):
    n = data.draw(st.integers(0, 50))
    exps = np.array(data.draw(st.lists(st.integers(0, 10**6), min_size=n, max_size=n)), dtype=np.int64)
    w = np.array(data.draw(st.lists(st.integers(-5, 5), min_size=n, max_size=n)), dtype=np.int64)
    same("exponent_histogram", exps, w, m)


@pytest.mark.parametrize("q", [5, 9, 13, 27, 49])
def test_jacobi_histogram(q):
    F = field_of_order(q)
    for a in range(F.m):
        for b in (0, 1, F.n, F.m - 1):
            same("jacobi_histogram", a, b, F.one_minus_log.astype(np.int64), F.m)


@settings(max_examples=50, deadline=None)
@given(st.sampled_from([4, 8, 12, 18, 24, 48]), st.data())
def test_polymulmod(m, data):
    R = cyclotomic_ring(m)
    coeffs = st.lists(st.integers(-10**4, 10**4), min_size=R.d, max_size=R.d)
    a = np.array(data.draw(coeffs), dtype=np.int64)
    b = np.array(data.draw(coeffs), dtype=np.int64)
    same("polymulmod", a, b, R._red_i64)


@pytest.mark.parametrize("m", [1, 3, 15, 99, 201])
def test_jenkins_sweep(m):
    same("jenkins_sweep", m)


def test_env_flag_selects_numpy():
    env = dict(os.environ, JACOBI_PRODUCTS_NUMBA="0")
    code = "from jacobi_products import backend, compute_Rq; print(backend(), compute_Rq(29).R)"
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.split() == ["numpy", "-5312"]

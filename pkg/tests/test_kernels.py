"""The compiled kernels must agree with the pure-Python reference bit for bit."""

import numpy as np
import pytest

from oracles import rank_mod_p
from rankcode import _pykernels as py
from rankcode import kernels
from rankcode.gfq import field

try:
    from rankcode import _ckernels as cy
except ImportError:  # extension not built
    cy = None

needs_ext = pytest.mark.skipif(cy is None, reason="compiled extension not built")


def bitset_rows(rng, count, width):
    return [int(x) for x in rng.integers(0, 1 << width, count)]


def test_backend_selected():
    assert kernels.BACKEND in {"cython", "python"}
    if cy is not None:
        assert kernels.BACKEND == "cython" or kernels.gf2_rank is py.gf2_rank


def test_reference_gf2_rank_against_oracle(rng):
    for _ in range(200):
        rows = bitset_rows(rng, int(rng.integers(0, 9)), 8)
        dense = [[(r >> j) & 1 for j in range(8)] for r in rows]
        assert py.gf2_rank(rows) == (rank_mod_p(dense, 2) if rows else 0)


def test_reference_modq_rank_against_oracle(rng):
    for q in (3, 5, 7):
        for _ in range(50):
            rows = rng.integers(0, q, (4, 5)).tolist()
            assert py.modq_rank(rows, q) == rank_mod_p(rows, q)


@needs_ext
def test_rank_and_rref_parity(rng):
    for width in (8, 40, 63, 64, 100):
        for _ in range(100):
            rows = [int.from_bytes(rng.bytes(16), "little") & ((1 << width) - 1) for _ in range(int(rng.integers(0, 12)))]
            assert cy.gf2_rank(rows) == py.gf2_rank(rows)
            assert cy.gf2_rref(rows, width) == py.gf2_rref(rows, width)


@needs_ext
def test_modq_parity(rng):
    for q in (3, 5):
        for _ in range(100):
            rows = rng.integers(0, q, (int(rng.integers(1, 6)), 6)).tolist()
            assert cy.modq_rref(rows, q) == py.modq_rref(rows, q)
            assert cy.modq_rank(rows, q) == py.modq_rank(rows, q)
    assert cy.modq_rref([], 3) == py.modq_rref([], 3)


@needs_ext
@pytest.mark.parametrize("m", [2, 4, 8, 16])
def test_field_kernel_parity(m, rng):
    F = field(2, m)
    tp, tc = py.tables(F._exp, F._log), cy.tables(F._exp, F._log)
    for _ in range(200):
        xs = [int(v) for v in rng.integers(0, 1 << m, 7)]
        ys = [int(v) for v in rng.integers(0, 1 << m, 7)]
        assert cy.gf2m_dot(tc, xs, ys) == py.gf2m_dot(tp, xs, ys)
        a = int(rng.integers(0, 1 << m))
        assert cy.gf2m_lin_eval(tc, xs, a, m) == py.gf2m_lin_eval(tp, xs, a, m)
        rows = [[int(v) for v in rng.integers(0, 1 << m, 5)] for _ in range(7)]
        assert cy.gf2m_combine(tc, xs, rows, 5) == py.gf2m_combine(tp, xs, rows, 5)


@needs_ext
def test_combine_wide_rows(rng):
    F = field(2, 6)
    tp, tc = py.tables(F._exp, F._log), cy.tables(F._exp, F._log)
    rows = [[int(v) for v in rng.integers(0, 64, 80)] for _ in range(3)]
    assert cy.gf2m_combine(tc, [1, 5, 9], rows, 80) == py.gf2m_combine(tp, [1, 5, 9], rows, 80)


@needs_ext
def test_select_xor_parity(rng):
    for _ in range(200):
        u, n = int(rng.integers(1, 6)), int(rng.integers(1, 20))
        cols = [int(v) for v in rng.integers(0, 1 << 16, u)]
        masks = [int(v) for v in rng.integers(0, 1 << n, u)]
        assert cy.gf2_select_xor(cols, masks, n) == py.gf2_select_xor(cols, masks, n)


def test_lin_eval_matches_field_arithmetic():
    F = field(2, 5)
    tab = py.tables(F._exp, F._log)
    coeffs = [3, 0, 7]
    for a in range(32):
        want = 0
        for i, c in enumerate(coeffs):
            want ^= F.mul(c, F.pow(a, 2**i))
        assert py.gf2m_lin_eval(tab, coeffs, a, 5) == want

# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the kernels in ``_pykernels``.

Bitset arguments are limited to 64 bits; wider inputs are handed to the
pure-Python implementation.
"""

import numpy as np

from rankcode import _pykernels

ctypedef unsigned long long u64


cdef inline bint _fits(rows):
    for v in rows:
        if v >> 64:
            return False
    return True


def gf2_rank(rows):
    if not _fits(rows):
        return _pykernels.gf2_rank(rows)
    cdef u64 basis[64]
    cdef int nb = 0, i
    cdef u64 v, w
    for obj in rows:
        v = <u64>obj
        for i in range(nb):
            w = v ^ basis[i]
            if w < v:
                v = w
        if v:
            # keep basis sorted by descending leading bit
            i = nb
            while i > 0 and basis[i - 1] < v:
                basis[i] = basis[i - 1]
                i -= 1
            basis[i] = v
            nb += 1
            if nb == 64:
                break
    return nb


def gf2_rref(rows, int ncols):
    if ncols > 64 or not _fits(rows):
        return _pykernels.gf2_rref(rows, ncols)
    cdef Py_ssize_t nrows = len(rows)
    cdef u64[::1] work = np.zeros(max(nrows, 1), dtype=np.uint64)
    cdef Py_ssize_t i, r = 0, piv, cnt = 0
    cdef int col
    cdef u64 bit, p, tmp
    for obj in rows:
        if obj:
            work[cnt] = <u64>obj
            cnt += 1
    pivots = []
    for col in range(ncols):
        if r == cnt:
            break
        bit = (<u64>1) << col
        piv = -1
        for i in range(r, cnt):
            if work[i] & bit:
                piv = i
                break
        if piv < 0:
            continue
        tmp = work[r]
        work[r] = work[piv]
        work[piv] = tmp
        p = work[r]
        for i in range(cnt):
            if i != r and (work[i] & bit):
                work[i] ^= p
        pivots.append(col)
        r += 1
    return [int(work[i]) for i in range(r)], pivots


def modq_rref(rows, int q):
    cdef Py_ssize_t nr = len(rows)
    if nr == 0:
        return [], []
    cdef Py_ssize_t nc = len(rows[0])
    cdef long[:, ::1] a = np.array(rows, dtype=np.int64).reshape(nr, nc) % q
    cdef Py_ssize_t i, j, r = 0, piv, col
    cdef long inv, c, tmp
    pivots = []
    for col in range(nc):
        if r == nr:
            break
        piv = -1
        for i in range(r, nr):
            if a[i, col]:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for j in range(nc):
                tmp = a[r, j]
                a[r, j] = a[piv, j]
                a[piv, j] = tmp
        inv = 1
        for j in range(q - 2):
            inv = (inv * a[r, col]) % q
        for j in range(nc):
            a[r, j] = (a[r, j] * inv) % q
        for i in range(nr):
            c = a[i, col]
            if i != r and c:
                for j in range(nc):
                    a[i, j] = (a[i, j] - c * a[r, j]) % q
                    if a[i, j] < 0:
                        a[i, j] += q
        pivots.append(col)
        r += 1
    return [[int(a[i, j]) for j in range(nc)] for i in range(r)], pivots


def modq_rank(rows, int q):
    return len(modq_rref(rows, q)[1])


cdef class Tables:
    """log/exp tables of GF(2^m) held as C arrays."""

    cdef object _exp_arr, _log_arr
    cdef const long *exp
    cdef const long *log

    def __cinit__(self, exp, log):
        cdef const long[::1] e = np.ascontiguousarray(exp, dtype=np.int64)
        cdef const long[::1] l = np.ascontiguousarray(log, dtype=np.int64)
        self._exp_arr = e.base
        self._log_arr = l.base
        self.exp = &e[0]
        self.log = &l[0]


def tables(exp, log):
    return Tables(exp, log)


def gf2m_dot(Tables tab, xs, ys):
    cdef const long *exp = tab.exp
    cdef const long *log = tab.log
    cdef long acc = 0, a, b
    for ox, oy in zip(xs, ys):
        a = ox
        b = oy
        if a and b:
            acc ^= exp[log[a] + log[b]]
    return acc


def gf2m_combine(Tables tab, coeffs, rows, int width):
    cdef const long *exp = tab.exp
    cdef const long *log = tab.log
    cdef long out[64]
    cdef long c, lc, v
    cdef Py_ssize_t j
    if width > 64:
        return _pykernels.gf2m_combine((tab._exp_arr, tab._log_arr), coeffs, rows, width)
    for j in range(width):
        out[j] = 0
    for oc, row in zip(coeffs, rows):
        c = oc
        if not c:
            continue
        lc = log[c]
        j = 0
        for ov in row:
            v = ov
            if v:
                out[j] ^= exp[lc + log[v]]
            j += 1
    return [out[j] for j in range(width)]


def gf2_select_xor(cols, masks, int n):
    if n > 64 or not _fits(cols) or not _fits(masks):
        return _pykernels.gf2_select_xor(cols, masks, n)
    cdef u64 out[64]
    cdef u64 a, mk
    cdef int j
    for j in range(n):
        out[j] = 0
    for oa, om in zip(cols, masks):
        a = <u64>oa
        mk = <u64>om
        j = 0
        while mk:
            if mk & 1:
                out[j] ^= a
            mk >>= 1
            j += 1
    return [int(out[j]) for j in range(n)]


def gf2m_lin_eval(Tables tab, coeffs, long a, int m):
    if not a:
        return 0
    cdef const long *exp = tab.exp
    cdef const long *log = tab.log
    cdef long n = (1 << m) - 1
    cdef long la = log[a]
    cdef long acc = 0, c
    for oc in coeffs:
        c = oc
        if c:
            acc ^= exp[log[c] + la]
        la = (la << 1) % n
    return acc

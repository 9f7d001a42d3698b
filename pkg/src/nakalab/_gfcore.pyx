# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled row reduction over F_p (same contract as ``_gf_fallback``)."""

import numpy as np
cimport numpy as cnp

cnp.import_array()


cdef long long _inv(long long x, long long p):
    cdef long long result = 1
    cdef long long e = p - 2
    x %= p
    while e > 0:
        if e & 1:
            result = (result * x) % p
        x = (x * x) % p
        e >>= 1
    return result


def rref(a, long long p):
    cdef cnp.ndarray[cnp.int64_t, ndim=2] arr = np.array(a, dtype=np.int64, copy=True)
    cdef long long[:, ::1] m = np.ascontiguousarray(arr)
    cdef Py_ssize_t nrows = m.shape[0]
    cdef Py_ssize_t ncols = m.shape[1]
    cdef Py_ssize_t r = 0, c, i, j, k
    cdef long long f, inv, t
    pivots = []
    for i in range(nrows):
        for j in range(ncols):
            t = m[i, j] % p
            if t < 0:
                t += p
            m[i, j] = t
    for c in range(ncols):
        if r == nrows:
            break
        k = -1
        for i in range(r, nrows):
            if m[i, c] != 0:
                k = i
                break
        if k < 0:
            continue
        if k != r:
            for j in range(c, ncols):
                t = m[r, j]
                m[r, j] = m[k, j]
                m[k, j] = t
        inv = _inv(m[r, c], p)
        if inv != 1:
            for j in range(c, ncols):
                m[r, j] = (m[r, j] * inv) % p
        for i in range(nrows):
            if i == r:
                continue
            f = m[i, c]
            if f == 0:
                continue
            for j in range(c, ncols):
                t = (m[i, j] - f * m[r, j]) % p
                if t < 0:
                    t += p
                m[i, j] = t
        pivots.append(c)
        r += 1
    return np.asarray(m)[:r].copy(), tuple(pivots)


def rank(a, long long p):
    return rref(a, p)[0].shape[0]

# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled GF(5) kernels.

Entries live one per byte.  Dot products accumulate in uint16 row buffers
(ikj loop order, so the compiler can vectorize the inner row sweep) and are
reduced mod 5 exactly once per entry, which is safe because 111 terms of at
most 4*4 stay below 2**16.
"""

import numpy as np

cimport numpy as cnp

cnp.import_array()

BACKEND = "cython"


cdef inline void _mul_into(const cnp.uint8_t[:, :] a, const cnp.uint8_t[:, :] b,
                           cnp.uint16_t[:] acc, cnp.uint8_t[:, :] out) nogil:
    cdef Py_ssize_t r = a.shape[0]
    cdef Py_ssize_t k = a.shape[1]
    cdef Py_ssize_t c = b.shape[1]
    cdef Py_ssize_t i, j, l
    cdef cnp.uint16_t coeff
    for i in range(r):
        for j in range(c):
            acc[j] = 0
        for l in range(k):
            coeff = a[i, l]
            if coeff:
                for j in range(c):
                    acc[j] += coeff * b[l, j]
        for j in range(c):
            out[i, j] = acc[j] % 5


def matmul(const cnp.uint8_t[:, :] a, const cnp.uint8_t[:, :] b):
    out = np.empty((a.shape[0], b.shape[1]), dtype=np.uint8)
    acc = np.empty(b.shape[1], dtype=np.uint16)
    cdef cnp.uint8_t[:, :] mv = out
    cdef cnp.uint16_t[:] accv = acc
    with nogil:
        _mul_into(a, b, accv, mv)
    return out


def matmul_stack(const cnp.uint8_t[:, :, :] stack, const cnp.uint8_t[:, :] b):
    cdef Py_ssize_t n = stack.shape[0]
    out = np.empty((n, stack.shape[1], b.shape[1]), dtype=np.uint8)
    acc = np.empty(b.shape[1], dtype=np.uint16)
    cdef cnp.uint8_t[:, :, :] mv = out
    cdef cnp.uint16_t[:] accv = acc
    cdef Py_ssize_t m
    with nogil:
        for m in range(n):
            _mul_into(stack[m], b, accv, mv[m])
    return out


def pack_digits(const cnp.uint8_t[:, :, :] stack):
    cdef Py_ssize_t n = stack.shape[0]
    cdef Py_ssize_t r = stack.shape[1]
    cdef Py_ssize_t c = stack.shape[2]
    cdef Py_ssize_t total = r * c
    cdef Py_ssize_t width = (total + 1) // 2
    out = np.zeros((n, width), dtype=np.uint8)
    cdef cnp.uint8_t[:, :] mv = out
    cdef const cnp.uint8_t[:] flat
    cdef Py_ssize_t m, t, j
    cdef cnp.uint8_t lo
    with nogil:
        for m in range(n):
            for t in range(width):
                j = 2 * t + 1
                lo = stack[m, j // c, j % c] if j < total else 0
                mv[m, t] = stack[m, (2 * t) // c, (2 * t) % c] * 5 + lo
    return out

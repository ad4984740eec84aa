# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled GF(2) elimination kernel.

Rows arrive as Python int bitmasks, are packed into 64-bit words, and
eliminated word-wise. Drop-in replacement for the pure-Python kernel.
"""

import numpy as np


def gf2_rank(rows, col_count):
    """Rank over GF(2) of a matrix whose rows are int bitmasks."""
    cdef Py_ssize_t nrows = len(rows)
    cdef Py_ssize_t nwords = (col_count + 63) // 64
    if nrows == 0 or nwords == 0:
        return 0
    packed = np.zeros((nrows, nwords), dtype=np.uint64)
    cdef unsigned long long[:, ::1] m = packed
    cdef Py_ssize_t i, w
    cdef object r
    for i in range(nrows):
        r = rows[i]
        w = 0
        while r and w < nwords:
            m[i, w] = r & 0xFFFFFFFFFFFFFFFF
            r >>= 64
            w += 1
    return _rank_words(m, nrows, nwords)


cdef int _rank_words(unsigned long long[:, ::1] m, Py_ssize_t nrows, Py_ssize_t nwords):
    cdef int rank = 0
    cdef Py_ssize_t top = 0, i, j, j2, w, pivot
    cdef unsigned long long bit, word
    for w in range(nwords):
        for j in range(64):
            bit = (<unsigned long long> 1) << j
            pivot = -1
            for i in range(top, nrows):
                if m[i, w] & bit:
                    pivot = i
                    break
            if pivot < 0:
                continue
            if pivot != top:
                for i in range(nwords):
                    word = m[top, i]
                    m[top, i] = m[pivot, i]
                    m[pivot, i] = word
            for i in range(nrows):
                if i != top and (m[i, w] & bit):
                    for j2 in range(nwords):
                        m[i, j2] ^= m[top, j2]
            rank += 1
            top += 1
            if top == nrows:
                return rank
    return rank


BACKEND = "cython"

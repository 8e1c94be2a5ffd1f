# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled GF(2) elimination kernel.

Matrices arrive as a flat little-endian uint64 buffer, `nwords` words per
row.  The elimination mutates the buffer in place (the caller passes a
fresh copy) and keeps one owner row per pivot column.
"""

from cpython.mem cimport PyMem_Free, PyMem_Malloc


cdef inline Py_ssize_t _top_bit(unsigned long long[::1] data,
                                Py_ssize_t off, Py_ssize_t nwords) noexcept:
    cdef Py_ssize_t w, b
    cdef unsigned long long x
    for w in range(nwords - 1, -1, -1):
        x = data[off + w]
        if x != 0:
            b = 63
            while ((x >> b) & 1) == 0:
                b -= 1
            return w * 64 + b
    return -1


def rank_words(unsigned long long[::1] data, Py_ssize_t nrows, Py_ssize_t nwords):
    cdef Py_ssize_t ncols = nwords * 64
    cdef Py_ssize_t* owner = <Py_ssize_t*> PyMem_Malloc(ncols * sizeof(Py_ssize_t))
    if owner == NULL:
        raise MemoryError()
    cdef Py_ssize_t i, w, t, other
    cdef Py_ssize_t rank = 0
    cdef Py_ssize_t off, ooff
    try:
        for i in range(ncols):
            owner[i] = -1
        for i in range(nrows):
            off = i * nwords
            while True:
                t = _top_bit(data, off, nwords)
                if t < 0:
                    break
                other = owner[t]
                if other < 0:
                    owner[t] = i
                    rank += 1
                    break
                ooff = other * nwords
                for w in range(nwords):
                    data[off + w] ^= data[ooff + w]
        return rank
    finally:
        PyMem_Free(owner)

# cython: language_level=3
# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled coefficient kernels for F_q[x]/(x^m - a).

Same contract as pykernel: length-m tuples of residues in, tuple out.
Restricted to q < 2^31 so every intermediate fits in 64 bits; the dispatcher
falls back to the pure-Python kernel above that bound.
"""

from cpython.mem cimport PyMem_Free, PyMem_Malloc
from libc.stdint cimport int64_t
from libc.string cimport memset

NAME = "compiled"

_MAX_Q = 1 << 31


def supports(q, m):
    return 2 <= q < _MAX_Q


cdef inline void _mul_core(const int64_t* x, const int64_t* y, int64_t* full,
                           int64_t* out, Py_ssize_t m, int64_t q, int64_t a,
                           bint guarded) noexcept nogil:
    # guarded=False requires (m + 1) * (q - 1)^2 < 2^63 (checked by callers)
    cdef Py_ssize_t i, j, d
    cdef int64_t xi
    memset(full, 0, (2 * m - 1) * sizeof(int64_t))
    for i in range(m):
        xi = x[i]
        if xi == 0:
            continue
        if guarded:
            for j in range(m):
                full[i + j] = (full[i + j] + xi * y[j]) % q
        else:
            for j in range(m):
                full[i + j] += xi * y[j]
    for d in range(m):
        out[d] = full[d]
    for d in range(m, 2 * m - 1):
        out[d - m] += a * (full[d] % q)
    for d in range(m):
        out[d] %= q


def _needs_guard(m, q):
    # exact Python-int arithmetic: the product may not fit in 64 bits
    return (m + 1) * (q - 1) * (q - 1) >= 1 << 63


cdef _as_tuple(int64_t* buf, Py_ssize_t m):
    return tuple([buf[d] for d in range(m)])


def mul(tuple xs, tuple ys, q, a):
    cdef Py_ssize_t m = len(xs)
    cdef int64_t cq = q, ca = a
    cdef bint guarded = _needs_guard(m, cq)
    cdef int64_t* arena = <int64_t*> PyMem_Malloc((5 * m - 1) * sizeof(int64_t))
    if arena == NULL:
        raise MemoryError()
    cdef int64_t* bx = arena
    cdef int64_t* by = arena + m
    cdef int64_t* out = arena + 2 * m
    cdef int64_t* full = arena + 3 * m
    cdef Py_ssize_t i
    try:
        for i in range(m):
            bx[i] = xs[i]
            by[i] = ys[i]
        with nogil:
            _mul_core(bx, by, full, out, m, cq, ca, guarded)
        return _as_tuple(out, m)
    finally:
        PyMem_Free(arena)


def power(tuple xs, n, q, a):
    """xs**n with the square-and-multiply chain running on C buffers."""
    if n < 0:
        raise ValueError("exponent must be non-negative")
    cdef Py_ssize_t m = len(xs)
    if n == 0:
        return (1,) + (0,) * (m - 1)
    cdef int64_t cq = q, ca = a
    cdef bint guarded = _needs_guard(m, cq)
    cdef Py_ssize_t nbits = n.bit_length()
    cdef bytes nbytes = n.to_bytes((nbits + 7) // 8, "little")
    cdef const unsigned char* bits = nbytes
    # acc + base + scratch (m each) + full (2m - 1)
    cdef int64_t* arena = <int64_t*> PyMem_Malloc((5 * m - 1) * sizeof(int64_t))
    if arena == NULL:
        raise MemoryError()
    cdef int64_t* acc = arena
    cdef int64_t* base = arena + m
    cdef int64_t* scratch = arena + 2 * m
    cdef int64_t* full = arena + 3 * m
    cdef int64_t* swap
    cdef Py_ssize_t i, bit
    try:
        memset(acc, 0, m * sizeof(int64_t))
        acc[0] = 1
        for i in range(m):
            base[i] = xs[i] % q
        for bit in range(nbits):
            if (bits[bit >> 3] >> (bit & 7)) & 1:
                with nogil:
                    _mul_core(acc, base, full, scratch, m, cq, ca, guarded)
                swap = acc
                acc = scratch
                scratch = swap
            if bit + 1 < nbits:
                with nogil:
                    _mul_core(base, base, full, scratch, m, cq, ca, guarded)
                swap = base
                base = scratch
                scratch = swap
        return _as_tuple(acc, m)
    finally:
        PyMem_Free(arena)

# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False, cdivision=True
"""Compiled stepping kernels: the hot loops behind reversibility scans.

Interface mirrors ``_kernels_py``. Each state is an n-bit word (bit i = cell
i); one step costs a constant number of word operations regardless of n, and
the injectivity check walks states in order with an early exit on the first
repeated successor.
"""

import numpy as np

from libc.stdint cimport uint8_t, uint32_t

BACKEND = "compiled"


cdef inline uint32_t _step_word(uint32_t value, int n, int rule,
                                bint periodic, uint32_t mask) nogil:
    cdef uint32_t left, right, out, term
    cdef int pattern
    if periodic:
        left = ((value << 1) | (value >> (n - 1))) & mask
        right = ((value >> 1) | ((value & 1) << (n - 1))) & mask
    else:
        left = (value << 1) & mask
        right = value >> 1
    out = 0
    for pattern in range(8):
        if (rule >> pattern) & 1:
            term = left if pattern & 4 else ~left
            term = term & (value if pattern & 2 else ~value)
            term = term & (right if pattern & 1 else ~right)
            out = out | term
    return out & mask


cdef bint _check(int rule, int n, bint periodic, uint8_t[::1] seen) nogil:
    cdef uint32_t size = <uint32_t> 1 << n
    cdef uint32_t mask = size - 1
    cdef uint32_t value, out
    for value in range(size):
        out = _step_word(value, n, rule, periodic, mask)
        if seen[out]:
            return False
        seen[out] = 1
    return True


def rule_outputs(int rule, int n, bint periodic):
    """Successor encoding for every state 0 .. 2**n - 1, as uint32."""
    result = np.empty(1 << n, dtype=np.uint32)
    cdef uint32_t[::1] res = result
    cdef uint32_t size = <uint32_t> 1 << n
    cdef uint32_t mask = size - 1
    cdef uint32_t value
    with nogil:
        for value in range(size):
            res[value] = _step_word(value, n, rule, periodic, mask)
    return result


def check_reversible(int rule, int n, bint periodic):
    """Whether the one-step map is injective on all 2**n states."""
    seen = np.zeros(1 << n, dtype=np.uint8)
    cdef uint8_t[::1] sv = seen
    cdef bint ok
    with nogil:
        ok = _check(rule, n, periodic, sv)
    return bool(ok)


def scan_rules(int n, bint periodic):
    """Reversibility verdict for all 256 rules at once; shape (256,) bool."""
    verdicts = np.zeros(256, dtype=bool)
    seen = np.zeros(1 << n, dtype=np.uint8)
    cdef uint8_t[::1] sv = seen
    cdef int rule
    cdef bint ok
    for rule in range(256):
        seen[:] = 0
        with nogil:
            ok = _check(rule, n, periodic, sv)
        verdicts[rule] = ok
    return verdicts

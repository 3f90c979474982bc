# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled geometric product kernel.

Same contract as products.mul_terms: keys are C-level bitmasks (dimension is
capped at 10, so they fit comfortably in 64 bits), coefficients stay Python
objects so exact Fractions and modular ints both work.  The win over the pure
version is the C loop, C popcount sign computation, and direct dict C-API use.
"""

from cpython.dict cimport PyDict_GetItem, PyDict_SetItem
from cpython.object cimport PyObject

cdef extern from *:
    """
    #if defined(__GNUC__) || defined(__clang__)
    #define GSPIN_POPCOUNT(x) __builtin_popcountll((unsigned long long)(x))
    #else
    static int GSPIN_POPCOUNT(unsigned long long x) {
        int c = 0;
        while (x) { x &= x - 1; c++; }
        return c;
    }
    #endif
    """
    int GSPIN_POPCOUNT(unsigned long long x) nogil


cdef inline int _merge_swaps(unsigned long long ka, unsigned long long kb) nogil:
    cdef unsigned long long shifted = ka >> 1
    cdef int swaps = 0
    while shifted:
        swaps += GSPIN_POPCOUNT(shifted & kb)
        shifted >>= 1
    return swaps


def mul_terms(dict xs, dict ys, tuple diag, long p):
    """Multiply coefficient maps.  p > 0 means arithmetic modulo p."""
    cdef dict out = {}
    cdef unsigned long long ka, kb, key, common, low
    cdef object va, vb, coeff, acc
    cdef PyObject* hit
    cdef int swaps

    for ka_obj, va in xs.items():
        ka = <unsigned long long> ka_obj
        for kb_obj, vb in ys.items():
            kb = <unsigned long long> kb_obj
            swaps = _merge_swaps(ka, kb)
            coeff = va * vb
            if swaps & 1:
                coeff = -coeff
            common = ka & kb
            while common:
                low = common & (~common + 1)
                coeff = coeff * diag[GSPIN_POPCOUNT(low - 1)]
                common ^= low
            key = ka ^ kb
            hit = PyDict_GetItem(out, key)
            if hit is NULL:
                PyDict_SetItem(out, key, coeff)
            else:
                PyDict_SetItem(out, key, <object>hit + coeff)
    if p:
        return {k: v % p for k, v in out.items() if v % p}
    return {k: v for k, v in out.items() if v}

"""Pure-Python geometric product on sparse bitmask-keyed multivectors.

Monomial keys are subsets of the orthogonal basis encoded as bitmasks; the
product of two monomials is computed by counting the transpositions of the
merge (sign), contracting repeated generators against the diagonal q-values,
and xor-ing the keys.
"""

from __future__ import annotations


def mul_terms(xs: dict, ys: dict, diag: tuple, p: int) -> dict:
    """Multiply coefficient maps.  p > 0 means arithmetic modulo p."""
    out: dict = {}
    for ka, va in xs.items():
        for kb, vb in ys.items():
            shifted = ka >> 1
            swaps = 0
            while shifted:
                swaps += (shifted & kb).bit_count()
                shifted >>= 1
            coeff = va * vb
            if swaps & 1:
                coeff = -coeff
            common = ka & kb
            while common:
                low = common & -common
                coeff *= diag[low.bit_length() - 1]
                common ^= low
            key = ka ^ kb
            if key in out:
                out[key] += coeff
            else:
                out[key] = coeff
    if p:
        return {k: v % p for k, v in out.items() if v % p}
    return {k: v for k, v in out.items() if v}

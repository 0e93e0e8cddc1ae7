# cython: language_level=3
# cython: boundscheck=False
"""Compiled dense-polynomial kernels.

Twin of fibl._kernels_py with identical signatures and exact integer
semantics.  Coefficients stay arbitrary-precision Python ints; the win is
C-level index bookkeeping and loop dispatch on the window recurrences.
"""

BACKEND = "c"


cdef list _trim(list coeffs):
    while coeffs and coeffs[len(coeffs) - 1] == 0:
        coeffs.pop()
    return coeffs


def trim(list coeffs):
    """Drop trailing zeros in place and return the list."""
    return _trim(coeffs)


def mul_qnumber(list coeffs, t, stride=1):
    """Multiply ``coeffs`` by 1 + q^s + q^{2s} + ... + q^{(t-1)s}."""
    cdef Py_ssize_t ct = t
    cdef Py_ssize_t cs = stride
    cdef Py_ssize_t plen = len(coeffs)
    cdef Py_ssize_t n, ts, i, j
    cdef object acc
    cdef list out
    if ct <= 0 or plen == 0:
        return []
    if ct == 1:
        return _trim(list(coeffs))
    n = plen + (ct - 1) * cs
    ts = ct * cs
    out = [0] * n
    for i in range(n):
        acc = out[i - cs] if i >= cs else 0
        if i < plen:
            acc = acc + coeffs[i]
        j = i - ts
        if 0 <= j < plen:
            acc = acc - coeffs[j]
        out[i] = acc
    return _trim(out)


def div_qnumber(list coeffs, t, stride=1):
    """Exactly divide by 1 + q^s + ... + q^{(t-1)s}; None when inexact."""
    cdef Py_ssize_t ct = t
    cdef Py_ssize_t cs = stride
    cdef Py_ssize_t rlen = len(coeffs)
    cdef Py_ssize_t ts, target, n, i, j
    cdef object acc
    cdef list p
    if ct <= 0:
        raise ZeroDivisionError("division by zero polynomial")
    if rlen == 0:
        return []
    if ct == 1:
        return _trim(list(coeffs))
    ts = ct * cs
    target = rlen - 1 - (ct - 1) * cs
    if target < 0:
        return None
    n = rlen + ts
    p = [0] * n
    for i in range(n):
        acc = coeffs[i] if i < rlen else 0
        j = i - cs
        if 0 <= j < rlen:
            acc = acc - coeffs[j]
        j = i - ts
        if j >= 0:
            acc = acc + p[j]
        p[i] = acc
    for i in range(target + 1, n):
        if p[i] != 0:
            return None
    del p[target + 1:]
    return _trim(p)


def mul_dense(list a, list b):
    """Schoolbook product of two dense coefficient lists."""
    cdef Py_ssize_t la = len(a), lb = len(b), i, j
    cdef object x, y
    cdef list out
    if la == 0 or lb == 0:
        return []
    out = [0] * (la + lb - 1)
    for i in range(la):
        x = a[i]
        if x != 0:
            for j in range(lb):
                y = b[j]
                if y != 0:
                    out[i + j] = out[i + j] + x * y
    return _trim(out)


def scan_unimodal(list coeffs):
    """True iff the dense sequence is non-decreasing then non-increasing."""
    cdef Py_ssize_t i, n = len(coeffs)
    cdef bint rising = True
    cdef object prev, c
    if n == 0:
        return True
    prev = coeffs[0]
    for i in range(1, n):
        c = coeffs[i]
        if rising:
            if c < prev:
                rising = False
        elif c > prev:
            return False
        prev = c
    return True


def coeff_min_max(list coeffs):
    """Return (min, max) over the dense coefficients, or None if empty."""
    cdef Py_ssize_t i, n = len(coeffs)
    cdef object lo, hi, c
    if n == 0:
        return None
    lo = coeffs[0]
    hi = coeffs[0]
    for i in range(1, n):
        c = coeffs[i]
        if c < lo:
            lo = c
        elif c > hi:
            hi = c
    return lo, hi

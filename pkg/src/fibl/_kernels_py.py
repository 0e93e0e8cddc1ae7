"""Pure-Python dense-polynomial kernels.

All functions operate on plain lists of Python ints indexed by exponent
(dense form, possibly with trailing zeros).  They are the hot loops behind
q-number products, exact factorial-ratio divisions and coefficient scans;
`fibl._kernels_c` is the compiled twin with the same contracts, and
`fibl.kernels` picks whichever is importable.

Everything here is exact integer arithmetic; no kernel ever rounds.
"""

from __future__ import annotations

BACKEND = "python"


def trim(coeffs):
    """Drop trailing zeros in place and return the list."""
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def mul_qnumber(coeffs, t, stride=1):
    """Multiply ``coeffs`` by 1 + q^s + q^{2s} + ... + q^{(t-1)s}.

    Sliding-window recurrence: r[i] = r[i-s] + p[i] - p[i-ts], which costs
    one add and one sub per output coefficient instead of a full convolution.
    Returns a new trimmed list; t = 0 gives the zero polynomial.
    """
    if t <= 0 or not coeffs:
        return []
    if t == 1:
        return trim(list(coeffs))
    n = len(coeffs) + (t - 1) * stride
    plen = len(coeffs)
    ts = t * stride
    out = [0] * n
    for i in range(n):
        acc = out[i - stride] if i >= stride else 0
        if i < plen:
            acc += coeffs[i]
        j = i - ts
        if 0 <= j < plen:
            acc -= coeffs[j]
        out[i] = acc
    return trim(out)


def div_qnumber(coeffs, t, stride=1):
    """Exactly divide ``coeffs`` by 1 + q^s + ... + q^{(t-1)s}.

    Returns the quotient list, or None when the division is not exact.
    Inverts the mul_qnumber window: p[i] = r[i] - r[i-s] + p[i-ts] is the
    power-series expansion of r / [t]_{q^s} (valid because the divisor has
    constant term 1); the input is divisible iff the series terminates, so
    it suffices to run the recurrence one divisor-length past deg(r) and
    demand zeros beyond the target degree.
    """
    if t <= 0:
        raise ZeroDivisionError("division by zero polynomial")
    if not coeffs:
        return []
    if t == 1:
        return trim(list(coeffs))
    rlen = len(coeffs)
    ts = t * stride
    target = rlen - 1 - (t - 1) * stride
    if target < 0:
        return None
    n = rlen + ts
    p = [0] * n
    for i in range(n):
        acc = coeffs[i] if i < rlen else 0
        j = i - stride
        if 0 <= j < rlen:
            acc -= coeffs[j]
        j = i - ts
        if j >= 0:
            acc += p[j]
        p[i] = acc
    for i in range(target + 1, n):
        if p[i] != 0:
            return None
    del p[target + 1:]
    return trim(p)


def mul_dense(a, b):
    """Schoolbook product of two dense coefficient lists."""
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return trim(out)


def scan_unimodal(coeffs):
    """True iff the dense sequence is non-decreasing then non-increasing."""
    rising = True
    prev = None
    for c in coeffs:
        if prev is not None:
            if rising:
                if c < prev:
                    rising = False
            elif c > prev:
                return False
        prev = c
    return True


def coeff_min_max(coeffs):
    """Return (min, max) over the dense coefficients, or None if empty."""
    if not coeffs:
        return None
    lo = hi = coeffs[0]
    for c in coeffs:
        if c < lo:
            lo = c
        elif c > hi:
            hi = c
    return lo, hi

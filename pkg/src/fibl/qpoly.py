"""Exact univariate polynomial arithmetic in the formal variable q.

IntPoly is an immutable dense coefficient vector over Python's
arbitrary-precision integers; every q-analog quantity in the package is one
of these.  The module provides the q-number [n] = 1 + q + ... + q^{n-1},
the Fibonacci q-factorial, the q-Fibonomial by two independent routes
(factorial-ratio division and the two-term recurrence), exact division
with polynomiality detection, and the polynomial identity checks.

Degrees are guarded by a configurable cap (default 10**7) so runaway
inputs fail fast with a ResourceLimitError instead of exhausting memory:
q-number degrees grow like Fibonacci numbers, i.e. exponentially in the
index.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from fibl import kernels
from fibl.errors import NotPolynomialError, ResourceLimitError
from fibl.fib import fib, spiral_exponent
from fibl.report import VerificationReport, exact_report

DEFAULT_DEGREE_CAP = 10**7
_degree_cap = DEFAULT_DEGREE_CAP

# factorial prefixes above this index are computed but not cached
_FACT_CACHE_LIMIT = 24


def degree_cap() -> int:
    return _degree_cap


def set_degree_cap(cap: int) -> int:
    """Set the global degree cap, returning the previous value."""
    global _degree_cap
    if cap < 1:
        raise ValueError("degree cap must be positive")
    old = _degree_cap
    _degree_cap = cap
    return old


def _ensure_cap(deg: int) -> None:
    if deg > _degree_cap:
        raise ResourceLimitError(
            f"polynomial degree {deg} exceeds the degree cap {_degree_cap}",
            cap=_degree_cap)


class IntPoly:
    """Immutable dense polynomial with exact integer coefficients.

    Canonical form: no trailing zero coefficients; the zero polynomial has
    empty support and degree -1.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        self._c = tuple(c)

    @classmethod
    def _wrap(cls, trimmed: list) -> "IntPoly":
        p = cls.__new__(cls)
        p._c = tuple(trimmed)
        return p

    @classmethod
    def zero(cls) -> "IntPoly":
        return _ZERO

    @classmethod
    def one(cls) -> "IntPoly":
        return _ONE

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "IntPoly":
        if exponent < 0:
            raise ValueError("exponent must be >= 0")
        _ensure_cap(exponent)
        if coeff == 0:
            return _ZERO
        return cls._wrap([0] * exponent + [coeff])

    @property
    def coeffs(self) -> tuple:
        return self._c

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial reported as -1."""
        return len(self._c) - 1

    def is_zero(self) -> bool:
        return not self._c

    def coeff(self, exponent: int) -> int:
        if 0 <= exponent < len(self._c):
            return self._c[exponent]
        return 0

    def __len__(self) -> int:
        return len(self._c)

    def __eq__(self, other) -> bool:
        if isinstance(other, IntPoly):
            return self._c == other._c
        if isinstance(other, int):
            return self._c == ((other,) if other else ())
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._c)

    def __bool__(self) -> bool:
        return bool(self._c)

    def __add__(self, other: "IntPoly") -> "IntPoly":
        a, b = self._c, other._c
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] += v
        return IntPoly._wrap(kernels.trim(out))

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        n = max(len(self._c), len(other._c))
        out = [self.coeff(i) - other.coeff(i) for i in range(n)]
        return IntPoly._wrap(kernels.trim(out))

    def __neg__(self) -> "IntPoly":
        return IntPoly._wrap([-v for v in self._c])

    def __mul__(self, other: "IntPoly") -> "IntPoly":
        if not self._c or not other._c:
            return _ZERO
        _ensure_cap(len(self._c) + len(other._c) - 2)
        return IntPoly._wrap(kernels.mul_dense(list(self._c), list(other._c)))

    def shift(self, exponent: int) -> "IntPoly":
        """Multiply by q^exponent."""
        if exponent < 0:
            raise ValueError("shift exponent must be >= 0")
        if not self._c:
            return _ZERO
        _ensure_cap(self.degree + exponent)
        return IntPoly._wrap([0] * exponent + list(self._c))

    def substitute_power(self, m: int) -> "IntPoly":
        """Replace q by q^m (each exponent multiplied by m), m >= 1."""
        if m < 1:
            raise ValueError("substitution power must be >= 1")
        if m == 1 or not self._c:
            return self
        _ensure_cap(self.degree * m)
        out = [0] * (self.degree * m + 1)
        for i, v in enumerate(self._c):
            if v:
                out[i * m] = v
        return IntPoly._wrap(out)

    def evaluate(self, x):
        """Horner evaluation; exact for int/Fraction arguments."""
        acc = 0
        for v in reversed(self._c):
            acc = acc * x + v
        return acc

    def eval_q1(self) -> int:
        """Value at q = 1 (the integer shadow of the q-analog)."""
        return sum(self._c)

    def __call__(self, x):
        return self.evaluate(x)

    def to_json(self) -> dict:
        """Sparse JSON form: exponents and coefficients as decimal strings."""
        return {
            "var": "q",
            "coeffs": [[str(i), str(v)] for i, v in enumerate(self._c) if v],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "IntPoly":
        if obj.get("var") != "q":
            raise ValueError("expected a polynomial in q")
        pairs = [(int(e), int(c)) for e, c in obj["coeffs"]]
        if not pairs:
            return _ZERO
        out = [0] * (max(e for e, _ in pairs) + 1)
        for e, c in pairs:
            if e < 0:
                raise ValueError("negative exponent in serialized polynomial")
            out[e] += c
        return cls(out)

    def __repr__(self) -> str:
        if not self._c:
            return "IntPoly(0)"
        terms = []
        for i, v in enumerate(self._c):
            if not v:
                continue
            if i == 0:
                terms.append(str(v))
            elif i == 1:
                terms.append("q" if v == 1 else f"{v}*q")
            else:
                terms.append(f"q^{i}" if v == 1 else f"{v}*q^{i}")
            if len(terms) > 8:
                return f"IntPoly(<{len(self._c)} coefficients, degree {self.degree}>)"
        return "IntPoly({})".format(" + ".join(terms))

    __str__ = __repr__


_ZERO = IntPoly()
_ONE = IntPoly([1])


@dataclass(frozen=True)
class DivisionResult:
    quotient: IntPoly
    remainder: IntPoly


def add(a: IntPoly, b: IntPoly) -> IntPoly:
    return a + b


def mul(a: IntPoly, b: IntPoly) -> IntPoly:
    return a * b


def shift(a: IntPoly, exponent: int) -> IntPoly:
    return a.shift(exponent)


def substitute_power(poly: IntPoly, m: int) -> IntPoly:
    return poly.substitute_power(m)


def q_number(n: int) -> IntPoly:
    """The q-analog [n] = 1 + q + ... + q^{n-1}; [0] is the zero polynomial."""
    if n < 0:
        raise ValueError(f"q_number needs n >= 0, got {n}")
    if n == 0:
        return _ZERO
    _ensure_cap(n - 1)
    return IntPoly._wrap([1] * n)


def q_number_base(n: int, base: int) -> IntPoly:
    """[n] with q replaced by q^base: ones at exponents 0, base, ..., (n-1)*base."""
    return q_number(n).substitute_power(base)


def long_division(num: IntPoly, den: IntPoly) -> DivisionResult:
    """Schoolbook division: num = den * quotient + remainder.

    The divisor must have leading coefficient +-1 (every divisor arising
    here is a product of q-numbers, hence monic), which keeps the whole
    computation inside the integers.
    """
    if den.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    if den._c[-1] not in (1, -1):
        raise ValueError("divisor must have leading coefficient +-1")
    if num.degree < den.degree:
        return DivisionResult(_ZERO, num)
    lead = den._c[-1]
    r = list(num._c)
    d = den._c
    dd = len(d) - 1
    qlen = len(r) - dd
    quot = [0] * qlen
    for i in range(qlen - 1, -1, -1):
        c = r[i + dd]
        if c == 0:
            continue
        c = c * lead            # lead is +-1, so this is exact
        quot[i] = c
        for j, dv in enumerate(d):
            if dv:
                r[i + j] -= c * dv
    return DivisionResult(IntPoly(quot), IntPoly(r[:dd]))


def exact_div(num: IntPoly, den: IntPoly) -> IntPoly:
    """Return num / den when the division is exact.

    A nonzero remainder raises NotPolynomialError carrying the remainder;
    for polynomiality experiments that error is a result, not a crash.
    """
    if den == _ONE:
        return num
    res = long_division(num, den)
    if not res.remainder.is_zero():
        raise NotPolynomialError(
            f"remainder of degree {res.remainder.degree} is nonzero",
            remainder=res.remainder)
    return res.quotient


# ---------------------------------------------------------------------------
# Fibonacci q-factorials and q-Fibonomials

_fact_lock = threading.Lock()
_fact_cache = [(1,)]  # _fact_cache[n] = coefficients of prod_{k<=n} [F_k]


def _fact_coeffs(n: int) -> list:
    """Dense coefficients of the q-Fibonacci factorial, as a fresh list."""
    if n < 0:
        raise ValueError("factorial index must be >= 0")
    top = min(n, _FACT_CACHE_LIMIT)
    if top >= len(_fact_cache):
        with _fact_lock:
            while len(_fact_cache) <= top:
                k = len(_fact_cache)
                _ensure_cap(len(_fact_cache[-1]) - 1 + fib(k) - 1)
                nxt = kernels.mul_qnumber(list(_fact_cache[-1]), fib(k))
                _fact_cache.append(tuple(nxt))
    out = list(_fact_cache[top])
    for k in range(top + 1, n + 1):
        _ensure_cap(len(out) - 1 + fib(k) - 1)
        out = kernels.mul_qnumber(out, fib(k))
    return out


def q_fib_factorial(n: int) -> IntPoly:
    """prod_{k=1}^{n} [F_k]; the Fibonacci q-analog of n!.  n = 0 gives 1."""
    return IntPoly._wrap(_fact_coeffs(n))


@lru_cache(maxsize=256)
def q_fibonomial(m: int, n: int) -> IntPoly:
    """The q-Fibonomial via the factorial-ratio (division) route.

    Computed as prod_{k=hi+1}^{m+n} [F_k] divided factor-by-factor by the
    q-factorial of lo = min(m, n); each window division is checked exact,
    which re-proves polynomiality on every call.
    """
    if m < 0 or n < 0:
        raise ValueError("q_fibonomial needs m, n >= 0")
    lo, hi = sorted((m, n))
    deg = _fibonomial_degree(m, n)
    _ensure_cap(deg)
    out = [1]
    for k in range(hi + 1, m + n + 1):
        out = kernels.mul_qnumber(out, fib(k))
    for k in range(lo, 0, -1):
        nxt = kernels.div_qnumber(out, fib(k))
        if nxt is None:
            raise NotPolynomialError(
                f"q_fibonomial({m},{n}) failed exact division by [F_{k}]; "
                "this signals an implementation bug")
        out = nxt
    return IntPoly._wrap(out)


def _fibonomial_degree(m: int, n: int) -> int:
    lo, hi = sorted((m, n))
    total = sum(fib(k) - 1 for k in range(hi + 1, m + n + 1))
    return total - sum(fib(k) - 1 for k in range(1, lo + 1))


def fibonomial_int(m: int, n: int) -> int:
    """The integer Fibonomial (the q = 1 shadow), computed exactly."""
    if m < 0 or n < 0:
        raise ValueError("fibonomial needs m, n >= 0")
    lo = min(m, n)
    num = 1
    for k in range(max(m, n) + 1, m + n + 1):
        num *= fib(k)
    den = 1
    for k in range(1, lo + 1):
        den *= fib(k)
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError("Fibonomial ratio is not an integer")
    return q


_rec_lock = threading.Lock()
_rec_cache: dict = {}


def q_fibonomial_recurrence(m: int, n: int) -> IntPoly:
    """The q-Fibonomial via the two-term recurrence over the (m, n) grid.

    G(m, n) = [F_{m+1}]_{q^{F_n}} G(m, n-1)
              + q^{F_n F_{m+1}} [F_{n-1}]_{q^{F_m}} G(m-1, n),
    with G(m, 0) = G(0, n) = 1.  Memoized; independent of the ratio route.
    """
    if m < 0 or n < 0:
        raise ValueError("q_fibonomial_recurrence needs m, n >= 0")
    if m == 0 or n == 0:
        return _ONE
    with _rec_lock:
        got = _rec_cache.get((m, n))
    if got is not None:
        return got
    _ensure_cap(_fibonomial_degree(m, n))
    for mm in range(1, m + 1):
        for nn in range(1, n + 1):
            with _rec_lock:
                if (mm, nn) in _rec_cache:
                    continue
            left = _rec_cache[(mm, nn - 1)] if nn > 1 else _ONE
            down = _rec_cache[(mm - 1, nn)] if mm > 1 else _ONE
            t1 = kernels.mul_qnumber(list(left._c), fib(mm + 1), fib(nn))
            t2 = kernels.mul_qnumber(list(down._c), fib(nn - 1), fib(mm))
            off = fib(nn) * fib(mm + 1)
            if t2:
                t2 = [0] * off + t2
            val = IntPoly._wrap(t1) + IntPoly._wrap(t2)
            with _rec_lock:
                _rec_cache[(mm, nn)] = val
    with _rec_lock:
        return _rec_cache[(m, n)]


def is_unimodal(poly: IntPoly) -> bool:
    """True iff the dense coefficient sequence (interior zeros included)
    rises then falls."""
    return kernels.scan_unimodal(list(poly._c))


# ---------------------------------------------------------------------------
# Identity checks

def spiral_identity_check(m: int) -> VerificationReport:
    """Exact check of [F_{m+2}][F_{m+1}] = sum_k q^{c_k^m} [F_k]^2.

    Both sides of the n = 2 tiling identity, expanded as polynomials.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    lhs = IntPoly._wrap(kernels.mul_qnumber([1] * fib(m + 2), fib(m + 1)))
    rhs = _ZERO
    for k in range(1, m + 2):
        sq = IntPoly._wrap(kernels.mul_qnumber([1] * fib(k), fib(k)))
        rhs = rhs + sq.shift(spiral_exponent(k, m))
    return exact_report("q-spiral", {"m": m}, lhs, rhs)


def spiral_identity_check_q1(m: int) -> VerificationReport:
    """Integer shadow of the spiral identity: F_{m+2} F_{m+1} = sum F_k^2."""
    if m < 1:
        raise ValueError("m must be >= 1")
    lhs = fib(m + 2) * fib(m + 1)
    rhs = sum(fib(k) ** 2 for k in range(1, m + 2))
    return exact_report("q-spiral-at-1", {"m": m}, lhs, rhs)


def convolution_identity_check_q(m: int, n: int) -> VerificationReport:
    """Exact polynomial check of the q-degenerated convolution formula.

    qFib(m, n) = sum_{j=0}^{n} (prod_{i<j} [F_{m+1}]_{q^{F_{n-i}}})
                 * [F_{n-1-j}]_{q^{F_m}} * q^{F_{m+1} F_{n-j}} * qFib(m-1, n-j)
    with the conventions [F_0] = 0 (the j = n-1 term vanishes) and, at
    j = n, weight exponent F_{m+1} F_0 = 0 and [F_{-1}] = [1] = 1.
    """
    if m < 1 or n < 1:
        raise ValueError("m, n must be >= 1")
    lhs = q_fibonomial(m, n)
    rhs = _ZERO
    prod = _ONE
    for j in range(n + 1):
        if j > 0:
            prod = prod * q_number_base(fib(m + 1), fib(n - j + 1))
        fterm = _ONE if j == n else q_number_base(fib(n - 1 - j), fib(m))
        if fterm.is_zero():
            continue
        term = prod * fterm * q_fibonomial(m - 1, n - j)
        rhs = rhs + term.shift(fib(m + 1) * fib(n - j))
    return exact_report("q-convolution", {"m": m, "n": n}, lhs, rhs)


def reset_caches() -> None:
    """Drop memoized factorials/fibonomials (mainly for tests)."""
    global _fact_cache
    with _fact_lock:
        _fact_cache = [(1,)]
    with _rec_lock:
        _rec_cache.clear()
    q_fibonomial.cache_clear()

"""fibl: exact q-analogs and numeric elliptic analogs of Fibonomial numbers.

Modules
-------
fib
    Arbitrary-precision Fibonacci numbers (index extended to -1) and the
    integer identities the rest of the package leans on.
qpoly
    Exact dense polynomial arithmetic in q: q-numbers, Fibonacci
    q-factorials, q-Fibonomials by ratio and by recurrence, unimodality,
    and the spiral/convolution identity checks.
tilings
    The two weighted tiling models (rectangle path-domino and staircase)
    whose generating functions realize the q-Fibonomials.
elliptic
    Truncated theta products, elliptic numbers and weights, the numeric
    verification checks, and the symbolic degeneration back to q.
catalan
    Rational q-Fibo-Catalan polynomiality verdicts, positivity sweeps and
    the Coxeter-type table.
kernels
    Hot-loop backend (compiled extension when built, pure Python otherwise).
cli
    The `fibl` command-line harness.
"""

from fibl.kernels import BACKEND as kernel_backend

__version__ = "0.1.0"
__all__ = ["kernel_backend", "__version__"]

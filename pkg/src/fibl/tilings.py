"""Weighted tiling models realizing the q-Fibonomials.

Two models are implemented:

* Rectangle model: a monotone lattice path from (0,0) to (m,n) splits the
  m x n rectangle; rows above the path are tiled with monominos and
  horizontal dominos, columns below with monominos and vertical dominos,
  and the tile touching the path from below in each column must be a
  vertical domino (the "special" domino).  A domino whose top-right corner
  sits at (i,j) weighs q^{F_i F_j}; the special one weighs q^{F_{i+1} F_j}.

* Staircase model: a W/N path from (k,0) to (0,n) inside the staircase
  Young diagram (n-1, n-2, ..., 1), every west step immediately followed
  by a north step.  Unforced rows tile the boxes left of the path, forced
  rows tile the boxes right of it starting with a special domino against
  the north step.  Weights come from per-tile floor/height statistics.

Coordinates: cell (c, r) is the unit square with top-right corner (c, r),
columns 1..m left to right, rows 1..n bottom to top.

Enumeration is streaming and deterministic: paths in lexicographic step
order (E < N, N < W), strip tilings in lexicographic tile order (D < M).
Counts are bounded by a configurable cap (default 10**8), rejected up
front by comparing the exact integer Fibonomial against the cap.
"""

from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from typing import Callable, Iterator, Optional

from fibl.errors import ResourceLimitError
from fibl.fib import fib
from fibl.qpoly import IntPoly, exact_div, fibonomial_int, q_fib_factorial, q_fibonomial
from fibl.report import VerificationReport, exact_report

DEFAULT_ENUMERATION_CAP = 10**8

MONOMINO = "M"
DOMINO = "D"
SPECIAL = "S"


@dataclass(frozen=True)
class PathDominoTiling:
    """A rectangle-model tiling.

    rows[r-1]: tiles of the above-path segment of row r, west to east.
    cols[c-1]: tiles of the below-path segment of column c, top to bottom,
    beginning with the special domino whenever the segment is nonempty.
    """

    m: int
    n: int
    path: str                 # over "E"/"N", length m+n
    rows: tuple[str, ...]
    cols: tuple[str, ...]

    def to_json(self) -> dict:
        return {"model": "rect", "m": self.m, "n": self.n, "path": self.path,
                "rows": list(self.rows), "cols": list(self.cols)}

    @classmethod
    def from_json(cls, obj: dict) -> "PathDominoTiling":
        if obj.get("model") != "rect":
            raise ValueError("expected a rectangle-model tiling")
        return cls(m=obj["m"], n=obj["n"], path=obj["path"],
                   rows=tuple(obj["rows"]), cols=tuple(obj["cols"]))


@dataclass(frozen=True)
class StaircaseTiling:
    """A staircase-model tiling of the size-n staircase with k west steps.

    rows[r-1]: tiles of row r's prescribed segment, west to east.  In a
    forced row the first tile is the special domino against the north step.
    """

    n: int
    k: int
    path: str                 # over "W"/"N", length n+k
    rows: tuple[str, ...]

    def to_json(self) -> dict:
        return {"model": "staircase", "n": self.n, "k": self.k,
                "path": self.path, "rows": list(self.rows)}

    @classmethod
    def from_json(cls, obj: dict) -> "StaircaseTiling":
        if obj.get("model") != "staircase":
            raise ValueError("expected a staircase-model tiling")
        return cls(n=obj["n"], k=obj["k"], path=obj["path"],
                   rows=tuple(obj["rows"]))


# ---------------------------------------------------------------------------
# Strips

@lru_cache(maxsize=128)
def _strip_options(length: int) -> tuple[str, ...]:
    """All monomino/domino tilings of a 1 x length strip, lex order (D < M)."""
    if length < 0:
        raise ValueError("strip length must be >= 0")
    if length == 0:
        return ("",)
    if length == 1:
        return ("M",)
    out = []
    for rest in _strip_options(length - 2):
        out.append(DOMINO + rest)
    for rest in _strip_options(length - 1):
        out.append(MONOMINO + rest)
    out.sort()
    return tuple(out)


def enumerate_strips(length: int, sink: Optional[Callable[[str], None]] = None) -> int:
    """Emit every strip tiling; the returned count equals F_{length+1}."""
    opts = _strip_options(length)
    if sink is not None:
        for s in opts:
            sink(s)
    return len(opts)


def q_strip_sum(length: int) -> IntPoly:
    """Sum of q-weights over strip tilings, with a domino ending at cell i
    weighing q^{F_i}; equals [F_{length+1}]."""
    total: dict[int, int] = {}
    for strip in _strip_options(length):
        e = 0
        i = 0
        for t in strip:
            if t == MONOMINO:
                i += 1
            else:
                i += 2
                e += fib(i)
        total[e] = total.get(e, 0) + 1
    return _poly_from_counts(total)


def _poly_from_counts(counts: dict[int, int]) -> IntPoly:
    if not counts:
        return IntPoly.zero()
    out = [0] * (max(counts) + 1)
    for e, c in counts.items():
        out[e] = c
    return IntPoly(out)


# ---------------------------------------------------------------------------
# Rectangle model

def _iter_rect_paths(m: int, n: int) -> Iterator[str]:
    """Monotone paths as E/N strings in lexicographic order (E < N)."""
    def rec(prefix: list, e_left: int, n_left: int):
        if e_left == 0 and n_left == 0:
            yield "".join(prefix)
            return
        if e_left:
            prefix.append("E")
            yield from rec(prefix, e_left - 1, n_left)
            prefix.pop()
        if n_left:
            prefix.append("N")
            yield from rec(prefix, e_left, n_left - 1)
            prefix.pop()
    return rec([], m, n)


def rect_path_profile(path: str, m: int, n: int) -> tuple[list, list]:
    """Per-row above-segment lengths and per-column below-segment heights."""
    if len(path) != m + n or path.count("E") != m or path.count("N") != n:
        raise ValueError(f"path {path!r} does not fit an {m} x {n} rectangle")
    x = y = 0
    row_len = [0] * n
    col_height = [0] * m
    for step in path:
        if step == "E":
            x += 1
            col_height[x - 1] = y
        else:
            y += 1
            row_len[y - 1] = x
    return row_len, col_height


def _product(options: list) -> Iterator[tuple]:
    """Cartesian product in lexicographic order, lazily."""
    if not options:
        yield ()
        return
    for first in options[0]:
        for rest in _product(options[1:]):
            yield (first,) + rest


def iter_rect_tilings(m: int, n: int) -> Iterator[PathDominoTiling]:
    if m < 0 or n < 0:
        raise ValueError("rectangle dimensions must be >= 0")
    for path in _iter_rect_paths(m, n):
        row_len, col_height = rect_path_profile(path, m, n)
        if any(h == 1 for h in col_height):
            continue       # a one-cell column cannot hold its special domino
        row_opts = [_strip_options(L) for L in row_len]
        col_opts = []
        for h in col_height:
            if h == 0:
                col_opts.append(("",))
            else:
                col_opts.append(tuple(SPECIAL + rest for rest in _strip_options(h - 2)))
        for rows in _product(row_opts):
            for cols in _product(col_opts):
                yield PathDominoTiling(m=m, n=n, path=path, rows=rows, cols=cols)


def enumerate_rect_tilings(m: int, n: int,
                           sink: Optional[Callable[[PathDominoTiling], None]] = None,
                           cap: int = DEFAULT_ENUMERATION_CAP) -> int:
    """Stream every path-domino tiling once; returns the count.

    The count equals the integer Fibonomial, which is computed first and
    checked against ``cap`` so oversized requests fail before enumeration.
    """
    expected = fibonomial_int(m, n)
    if expected > cap:
        raise ResourceLimitError(
            f"enumeration of {expected} tilings exceeds the cap {cap}", cap=cap)
    count = 0
    for t in iter_rect_tilings(m, n):
        count += 1
        if sink is not None:
            sink(t)
    return count


def rect_weight_exponent(t: PathDominoTiling) -> int:
    """The exponent e with q_weight_rect(t) = q^e."""
    row_len, col_height = rect_path_profile(t.path, t.m, t.n)
    e = 0
    for r in range(1, t.n + 1):
        i = 0
        for tile in t.rows[r - 1]:
            if tile == MONOMINO:
                i += 1
            else:
                i += 2
                e += fib(i) * fib(r)     # horizontal domino, top-right (i, r)
    for c in range(1, t.m + 1):
        j = col_height[c - 1]
        for tile in t.cols[c - 1]:
            if tile == SPECIAL:
                e += fib(c + 1) * fib(j)
                j -= 2
            elif tile == DOMINO:
                e += fib(c) * fib(j)     # vertical domino, top-right (c, j)
                j -= 2
            else:
                j -= 1
    return e


def q_weight_rect(t: PathDominoTiling) -> IntPoly:
    """The q-weight of one tiling: a single power of q."""
    return IntPoly.monomial(rect_weight_exponent(t))


def rect_generating_function(m: int, n: int, cap: int = DEFAULT_ENUMERATION_CAP,
                             workers: int = 1) -> IntPoly:
    """Sum of q-weights over all tilings of the m x n rectangle.

    Must coincide with q_fibonomial(m, n); keeping the sum enumeration-based
    makes it an oracle independent of the division and recurrence routes.
    Aggregation is a commutative exponent-count merge, so the result is
    identical for any worker count.
    """
    expected = fibonomial_int(m, n)
    if expected > cap:
        raise ResourceLimitError(
            f"enumeration of {expected} tilings exceeds the cap {cap}", cap=cap)
    paths = list(_iter_rect_paths(m, n))

    def handle(path: str) -> dict[int, int]:
        counts: dict[int, int] = {}
        row_len, col_height = rect_path_profile(path, m, n)
        if any(h == 1 for h in col_height):
            return counts
        row_opts = [_strip_options(L) for L in row_len]
        col_opts = [("",) if h == 0 else
                    tuple(SPECIAL + rest for rest in _strip_options(h - 2))
                    for h in col_height]
        for rows in _product(row_opts):
            for cols in _product(col_opts):
                e = rect_weight_exponent(PathDominoTiling(m, n, path, rows, cols))
                counts[e] = counts.get(e, 0) + 1
        return counts

    total: dict[int, int] = {}
    if workers <= 1:
        partials = map(handle, paths)
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            partials = list(pool.map(handle, paths))
    for part in partials:
        for e, c in part.items():
            total[e] = total.get(e, 0) + c
    return _poly_from_counts(total)


def validate_rect_tiling(t: PathDominoTiling) -> None:
    """Independent geometric checker; raises ValueError on any violation.

    Rebuilds the occupancy of the full rectangle from the tile lists and
    re-verifies every model rule rather than trusting the enumerator.
    """
    row_len, col_height = rect_path_profile(t.path, t.m, t.n)
    if len(t.rows) != t.n or len(t.cols) != t.m:
        raise ValueError("strip list lengths do not match the rectangle")
    covered = set()
    for r in range(1, t.n + 1):
        i = 0
        for tile in t.rows[r - 1]:
            if tile == MONOMINO:
                cells = [(i + 1, r)]
                i += 1
            elif tile == DOMINO:
                cells = [(i + 1, r), (i + 2, r)]
                i += 2
            else:
                raise ValueError("above-path tiles must be monominos or horizontal dominos")
            for c, rr in cells:
                if rr <= col_height[c - 1]:
                    raise ValueError(f"above-path tile dips below the path at {(c, rr)}")
                if (c, rr) in covered:
                    raise ValueError(f"cell {(c, rr)} covered twice")
                covered.add((c, rr))
        if i != row_len[r - 1]:
            raise ValueError(f"row {r} strip length {i} != {row_len[r - 1]}")
    for c in range(1, t.m + 1):
        h = col_height[c - 1]
        strip = t.cols[c - 1]
        if h == 1:
            raise ValueError(f"column {c} has below-height 1: no valid tiling exists")
        if h >= 2 and (not strip or strip[0] != SPECIAL):
            raise ValueError(f"column {c} must start with its special domino")
        j = h
        for pos, tile in enumerate(strip):
            if tile == SPECIAL:
                if pos != 0:
                    raise ValueError("special domino must touch the path")
                cells = [(c, j), (c, j - 1)]
                j -= 2
            elif tile == DOMINO:
                cells = [(c, j), (c, j - 1)]
                j -= 2
            elif tile == MONOMINO:
                cells = [(c, j)]
                j -= 1
            else:
                raise ValueError(f"unknown tile {tile!r}")
            for cc, rr in cells:
                if rr < 1 or rr > h:
                    raise ValueError(f"below-path tile leaves column {c}")
                if (cc, rr) in covered:
                    raise ValueError(f"cell {(cc, rr)} covered twice")
                covered.add((cc, rr))
        if j != 0:
            raise ValueError(f"column {c} strip does not fill its {h} cells")
    if len(covered) != t.m * t.n:
        raise ValueError("tiling does not cover the rectangle exactly")


# ---------------------------------------------------------------------------
# Staircase model

def _iter_staircase_paths(n: int, k: int) -> Iterator[str]:
    """W/N paths from (k,0) to (0,n), every W followed by N, inside the
    staircase; lexicographic step order (N < W)."""
    def rec(prefix: list, row: int, x: int, w_left: int):
        # row = next north step's row index (1-based); x = current x position
        if row > n:
            if w_left == 0:
                yield "".join(prefix)
            return
        # option N (unforced north step): stays at x; needs x <= n - row
        if x <= n - row:
            prefix.append("N")
            yield from rec(prefix, row + 1, x, w_left)
            prefix.pop()
        # option WN (west step, then its forced north step)
        if w_left and x - 1 >= 0 and x - 1 <= n - row:
            prefix.append("W")
            prefix.append("N")
            yield from rec(prefix, row + 1, x - 1, w_left - 1)
            prefix.pop()
            prefix.pop()
    if k < 0 or n < k:
        raise ValueError("need n >= k >= 0")
    return rec([], 1, k, k)


def staircase_path_profile(path: str, n: int, k: int) -> tuple[list, list]:
    """Per-row (x position of the north step, forced flag)."""
    if path.count("N") != n or path.count("W") != k or len(path) != n + k:
        raise ValueError(f"path {path!r} is not an ({n},{k}) staircase path")
    xs = []
    forced = []
    x = k
    prev_w = False
    for step in path:
        if step == "W":
            if prev_w:
                raise ValueError("west steps must be followed by north steps")
            x -= 1
            prev_w = True
        else:
            xs.append(x)
            forced.append(prev_w)
            prev_w = False
    if prev_w or x != 0:
        raise ValueError("path must end at (0, n) with a north step")
    for r, xr in enumerate(xs, start=1):
        if xr > n - r or xr < 0:
            raise ValueError(f"north step of row {r} at x={xr} leaves the staircase")
    return xs, forced


def iter_staircase_tilings(n: int, k: int) -> Iterator[StaircaseTiling]:
    if n < 0 or k < 0 or k > n:
        raise ValueError("need n >= k >= 0")
    for path in _iter_staircase_paths(n, k):
        xs, forced = staircase_path_profile(path, n, k)
        opts = []
        dead = False
        for r in range(1, n + 1):
            if forced[r - 1]:
                b = (n - r) - xs[r - 1]
                if b == 1:
                    dead = True     # one box cannot hold the special domino
                    break
                if b == 0:
                    opts.append(("",))
                else:
                    opts.append(tuple(SPECIAL + rest for rest in _strip_options(b - 2)))
            else:
                opts.append(_strip_options(xs[r - 1]))
        if dead:
            continue
        for rows in _product(opts):
            yield StaircaseTiling(n=n, k=k, path=path, rows=rows)


def enumerate_staircase_tilings(n: int, k: int,
                                sink: Optional[Callable[[StaircaseTiling], None]] = None,
                                cap: int = DEFAULT_ENUMERATION_CAP) -> int:
    """Stream every (n, k)-tiling once; the count equals the integer
    Fibonomial with parts (n - k, k)."""
    expected = fibonomial_int(n - k, k)
    if expected > cap:
        raise ResourceLimitError(
            f"enumeration of {expected} tilings exceeds the cap {cap}", cap=cap)
    count = 0
    for t in iter_staircase_tilings(n, k):
        count += 1
        if sink is not None:
            sink(t)
    return count


def staircase_tile_stats(t: StaircaseTiling) -> list[tuple[str, int, int]]:
    """Per-domino (kind, floor, height) statistics; monominos are skipped.

    Left of the path: floor counts boxes from the western border of the
    diagram to the tile's eastern border; height is 1 + boxes from the
    eastern border of the diagram to the row's north step.  Right of the
    path the statistics are mirrored (floor from the eastern border to the
    tile's western border; height is 1 + boxes from the western border to
    the forced north step).
    """
    xs, forced = staircase_path_profile(t.path, t.n, t.k)
    out = []
    for r in range(1, t.n + 1):
        row_len = t.n - r
        x = xs[r - 1]
        if forced[r - 1]:
            pos = x
            for tile in t.rows[r - 1]:
                if tile == MONOMINO:
                    pos += 1
                else:
                    pos += 2
                    floor = row_len - (pos - 2)
                    height = 1 + x
                    out.append((tile, floor, height))
        else:
            pos = 0
            for tile in t.rows[r - 1]:
                if tile == MONOMINO:
                    pos += 1
                else:
                    pos += 2
                    floor = pos
                    height = 1 + (row_len - x)
                    out.append((tile, floor, height))
    return out


def staircase_weight_exponent(t: StaircaseTiling) -> int:
    """Exponent of the q-weight: dominos give F_floor * F_height, special
    dominos F_floor * F_{height+1}."""
    e = 0
    for kind, floor, height in staircase_tile_stats(t):
        if kind == SPECIAL:
            e += fib(floor) * fib(height + 1)
        else:
            e += fib(floor) * fib(height)
    return e


def q_weight_staircase(t: StaircaseTiling) -> IntPoly:
    return IntPoly.monomial(staircase_weight_exponent(t))


def staircase_generating_function(n: int, k: int,
                                  cap: int = DEFAULT_ENUMERATION_CAP,
                                  workers: int = 1) -> IntPoly:
    """Sum of q-weights over all (n, k)-tilings; equals q_fibonomial(n-k, k)."""
    expected = fibonomial_int(n - k, k)
    if expected > cap:
        raise ResourceLimitError(
            f"enumeration of {expected} tilings exceeds the cap {cap}", cap=cap)
    paths = list(_iter_staircase_paths(n, k))

    def handle(path: str) -> dict[int, int]:
        counts: dict[int, int] = {}
        for t in _tilings_of_staircase_path(n, k, path):
            e = staircase_weight_exponent(t)
            counts[e] = counts.get(e, 0) + 1
        return counts

    total: dict[int, int] = {}
    if workers <= 1:
        partials = map(handle, paths)
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            partials = list(pool.map(handle, paths))
    for part in partials:
        for e, c in part.items():
            total[e] = total.get(e, 0) + c
    return _poly_from_counts(total)


def _tilings_of_staircase_path(n: int, k: int, path: str) -> Iterator[StaircaseTiling]:
    xs, forced = staircase_path_profile(path, n, k)
    opts = []
    for r in range(1, n + 1):
        if forced[r - 1]:
            b = (n - r) - xs[r - 1]
            if b == 1:
                return
            if b == 0:
                opts.append(("",))
            else:
                opts.append(tuple(SPECIAL + rest for rest in _strip_options(b - 2)))
        else:
            opts.append(_strip_options(xs[r - 1]))
    for rows in _product(opts):
        yield StaircaseTiling(n=n, k=k, path=path, rows=rows)


def validate_staircase_tiling(t: StaircaseTiling) -> None:
    """Independent geometric checker for the staircase model."""
    xs, forced = staircase_path_profile(t.path, t.n, t.k)
    if len(t.rows) != t.n:
        raise ValueError("need one strip per row")
    for r in range(1, t.n + 1):
        row_len = t.n - r
        x = xs[r - 1]
        strip = t.rows[r - 1]
        if forced[r - 1]:
            b = row_len - x
            if b < 0:
                raise ValueError(f"row {r} segment is negative")
            if b == 1:
                raise ValueError(f"row {r}: one box cannot hold the special domino")
            if b >= 2 and (not strip or strip[0] != SPECIAL):
                raise ValueError(f"row {r} must start with the special domino")
            seen = 0
            for pos, tile in enumerate(strip):
                if tile == SPECIAL and pos != 0:
                    raise ValueError("special domino must touch the north step")
                if tile in (DOMINO, SPECIAL):
                    seen += 2
                elif tile == MONOMINO:
                    seen += 1
                else:
                    raise ValueError(f"unknown tile {tile!r}")
            if seen != b:
                raise ValueError(f"row {r} strip covers {seen} of {b} boxes")
        else:
            if SPECIAL in strip:
                raise ValueError(f"row {r} is unforced but contains a special domino")
            seen = sum(2 if tile == DOMINO else 1 for tile in strip)
            if seen != x:
                raise ValueError(f"row {r} strip covers {seen} of {x} boxes")


# ---------------------------------------------------------------------------
# Cross-model checks

def model_bijection_check(m: int, n: int,
                          cap: int = DEFAULT_ENUMERATION_CAP) -> VerificationReport:
    """The weight multiset of rectangle (m, n) tilings equals that of
    staircase (m+n, n) tilings."""
    rect_ms: dict[int, int] = {}

    def rsink(t: PathDominoTiling):
        e = rect_weight_exponent(t)
        rect_ms[e] = rect_ms.get(e, 0) + 1

    stair_ms: dict[int, int] = {}

    def ssink(t: StaircaseTiling):
        e = staircase_weight_exponent(t)
        stair_ms[e] = stair_ms.get(e, 0) + 1

    enumerate_rect_tilings(m, n, rsink, cap=cap)
    enumerate_staircase_tilings(m + n, n, ssink, cap=cap)
    return exact_report("model-bijection", {"m": m, "n": n},
                        _poly_from_counts(rect_ms), _poly_from_counts(stair_ms))


def catalan_partial_tilings(size: int) -> Iterator[StaircaseTiling]:
    """Partial tilings whose bottom row stays blank except for the forced
    special domino: (size, size/2 - 1)-tilings with the modified first row.

    ``size`` must be even (size = 2n for the n-th Catalan analog).
    """
    if size < 2 or size % 2:
        raise ValueError("size must be an even integer >= 2")
    n, k = size, size // 2 - 1
    for path in _iter_staircase_paths(n, k):
        xs, forced = staircase_path_profile(path, n, k)
        opts = []
        dead = False
        for r in range(1, n + 1):
            if r == 1:
                if forced[0]:
                    b = (n - 1) - xs[0]
                    if b == 1:
                        dead = True
                        break
                    opts.append(("",) if b == 0 else (SPECIAL,))
                else:
                    opts.append(("",))  # blank row, untiled boxes allowed
            elif forced[r - 1]:
                b = (n - r) - xs[r - 1]
                if b == 1:
                    dead = True
                    break
                if b == 0:
                    opts.append(("",))
                else:
                    opts.append(tuple(SPECIAL + rest for rest in _strip_options(b - 2)))
            else:
                opts.append(_strip_options(xs[r - 1]))
        if dead:
            continue
        for rows in _product(opts):
            yield StaircaseTiling(n=n, k=k, path=path, rows=rows)


def catalan_partial_weight_exponent(t: StaircaseTiling) -> int:
    """Weight exponent of a Catalan partial tiling (row 1 contributes only
    its special domino, if present)."""
    xs, forced = staircase_path_profile(t.path, t.n, t.k)
    e = 0
    if forced[0] and t.rows[0] == SPECIAL:
        row_len = t.n - 1
        x = xs[0]
        floor = row_len - x
        height = 1 + x
        e += fib(floor) * fib(height + 1)
    trimmed = StaircaseTiling(n=t.n, k=t.k, path=t.path, rows=("",) + t.rows[1:])
    return e + staircase_weight_exponent(trimmed)


def catalan_partial_tiling_counterexample(size: int = 6) -> VerificationReport:
    """Compare the ordinary q-Fibo-Catalan polynomial against the weight sum
    over Catalan partial tilings of the given size; they are expected to
    DIFFER (the report passes when they do), while the q = 1 counts agree.
    """
    n = size // 2
    counts: dict[int, int] = {}
    total = 0
    for t in catalan_partial_tilings(size):
        e = catalan_partial_weight_exponent(t)
        counts[e] = counts.get(e, 0) + 1
        total += 1
    tiling_sum = _poly_from_counts(counts)
    catalan_poly = exact_div(
        q_fib_factorial(2 * n),
        q_fib_factorial(n + 1) * q_fib_factorial(n))
    rep = exact_report("catalan-partial-tiling-counterexample", {"size": size},
                       catalan_poly, tiling_sum, expected="unequal")
    rep.notes["catalan_poly_at_1"] = catalan_poly.eval_q1()
    rep.notes["tiling_count"] = total
    return rep


# ---------------------------------------------------------------------------
# Golden data

def load_golden(name: str) -> dict:
    """Load one of the JSON fixtures shipped under fibl/data/golden."""
    path = resources.files("fibl").joinpath(f"data/golden/{name}")
    return json.loads(path.read_text())

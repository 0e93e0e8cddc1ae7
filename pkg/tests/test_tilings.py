import json

import pytest

from fibl import tilings
from fibl.errors import ResourceLimitError
from fibl.fib import fib
from fibl.qpoly import IntPoly, fibonomial_int, q_fibonomial, q_number
from fibl.tilings import (PathDominoTiling, StaircaseTiling,
                          catalan_partial_tiling_counterexample,
                          enumerate_rect_tilings, enumerate_staircase_tilings,
                          enumerate_strips, iter_rect_tilings,
                          iter_staircase_tilings, load_golden,
                          model_bijection_check, q_strip_sum, q_weight_rect,
                          q_weight_staircase, rect_generating_function,
                          rect_weight_exponent, staircase_generating_function,
                          staircase_weight_exponent, validate_rect_tiling,
                          validate_staircase_tiling)


class TestStrips:
    def test_counts_are_fibonacci(self):
        for length in range(0, 13):
            assert enumerate_strips(length) == fib(length + 1)

    def test_explicit_listing(self):
        got = []
        enumerate_strips(3, got.append)
        assert got == ["DM", "MD", "MMM"]
        empty = []
        enumerate_strips(0, empty.append)
        assert empty == [""]

    def test_q_strip_sum(self):
        assert q_strip_sum(0) == IntPoly.one()
        assert q_strip_sum(2) == IntPoly([1, 1])
        assert q_strip_sum(7) == q_number(21)
        for length in range(0, 12):
            assert q_strip_sum(length) == q_number(fib(length + 1))


class TestRectEnumeration:
    def test_counts(self):
        assert enumerate_rect_tilings(2, 2) == 6
        assert enumerate_rect_tilings(4, 4) == 1820
        for m in range(0, 6):
            assert enumerate_rect_tilings(m, 0) == 1
            assert enumerate_rect_tilings(0, m) == 1

    def test_counts_match_integer_fibonomial(self):
        for m in range(0, 5):
            for n in range(0, 5):
                assert enumerate_rect_tilings(m, n) == fibonomial_int(m, n)

    def test_emitted_tilings_validate_and_are_distinct(self):
        seen = set()

        def sink(t):
            validate_rect_tiling(t)
            key = json.dumps(t.to_json(), sort_keys=True)
            assert key not in seen
            seen.add(key)

        count = enumerate_rect_tilings(3, 3, sink)
        assert count == len(seen) == fibonomial_int(3, 3)

    def test_weight_multiset_2_2(self):
        exps = sorted(rect_weight_exponent(t) for t in iter_rect_tilings(2, 2))
        assert exps == [0, 1, 1, 2, 2, 3]

    def test_cap(self):
        with pytest.raises(ResourceLimitError) as exc:
            enumerate_rect_tilings(5, 5, cap=1000)
        assert "1000" in str(exc.value)

    def test_n2_paths_are_double_north_blocks(self):
        # with two rows, realized paths are exactly E^{k-1} N N E^{m-k+1}
        for m in range(1, 6):
            realized = {t.path for t in iter_rect_tilings(m, 2)}
            expected = {"E" * (k - 1) + "NN" + "E" * (m - k + 1)
                        for k in range(1, m + 2)}
            assert realized == expected

    def test_below_height_one_obstruction(self):
        realized = {t.path for t in iter_rect_tilings(1, 1)}
        assert realized == {"EN"}          # the path NE needs a 1-cell column

    def test_validator_rejects_broken_tilings(self):
        good = next(iter_rect_tilings(2, 2))
        bad = PathDominoTiling(m=2, n=2, path=good.path,
                               rows=("MM", "M"), cols=good.cols)
        with pytest.raises(ValueError):
            validate_rect_tiling(bad)
        bad2 = PathDominoTiling(m=2, n=2, path="NNEE", rows=("", ""),
                                cols=("MM", "S"))
        with pytest.raises(ValueError):
            validate_rect_tiling(bad2)


class TestRectGeneratingFunction:
    def test_2_2(self):
        assert rect_generating_function(2, 2) == IntPoly([1, 2, 2, 1])

    def test_1_1(self):
        assert rect_generating_function(1, 1) == IntPoly.one()

    def test_matches_division_route(self):
        for m in range(0, 7):
            for n in range(0, 7):
                if m + n <= 6:
                    assert rect_generating_function(m, n) == q_fibonomial(m, n)

    def test_worker_count_invariant(self):
        assert rect_generating_function(3, 3, workers=4) == rect_generating_function(3, 3)
        assert (staircase_generating_function(6, 3, workers=4)
                == staircase_generating_function(6, 3))


class TestStaircaseEnumeration:
    def test_counts(self):
        assert enumerate_staircase_tilings(4, 2) == 6
        assert enumerate_staircase_tilings(5, 2) == 15
        for n in range(0, 7):
            assert enumerate_staircase_tilings(n, 0) == 1
            assert enumerate_staircase_tilings(n, n) == 1

    def test_emitted_tilings_validate(self):
        for n, k in ((4, 2), (5, 2), (6, 3)):
            seen = set()
            for t in iter_staircase_tilings(n, k):
                validate_staircase_tiling(t)
                key = json.dumps(t.to_json(), sort_keys=True)
                assert key not in seen
                seen.add(key)
            assert len(seen) == fibonomial_int(n - k, k)

    def test_generating_function(self):
        assert staircase_generating_function(4, 2) == IntPoly([1, 2, 2, 1])
        for n in range(0, 7):
            for k in range(0, n + 1):
                assert staircase_generating_function(n, k) == q_fibonomial(n - k, k)

    def test_every_west_step_followed_by_north(self):
        for t in iter_staircase_tilings(5, 3):
            assert "WW" not in t.path and not t.path.endswith("W")


class TestGoldenFiles:
    def test_rect_2x2(self):
        doc = load_golden("rect_2x2.json")
        got = list(iter_rect_tilings(2, 2))
        assert [t.to_json() for t in got] == \
            [{k: v for k, v in entry.items() if k != "exponent"}
             for entry in doc["tilings"]]
        for t, entry in zip(got, doc["tilings"]):
            assert rect_weight_exponent(t) == entry["exponent"]
            assert q_weight_rect(t) == IntPoly.monomial(entry["exponent"])
        assert rect_generating_function(2, 2) == IntPoly(doc["weight_polynomial"])

    def test_staircase_4_2(self):
        doc = load_golden("staircase_4_2.json")
        got = list(iter_staircase_tilings(4, 2))
        assert [t.to_json() for t in got] == \
            [{k: v for k, v in entry.items() if k != "exponent"}
             for entry in doc["tilings"]]
        for t, entry in zip(got, doc["tilings"]):
            assert staircase_weight_exponent(t) == entry["exponent"]
            assert q_weight_staircase(t) == IntPoly.monomial(entry["exponent"])

    def test_rect_5x4_example(self):
        doc = load_golden("rect_5x4_example.json")
        t = PathDominoTiling.from_json(doc["tiling"])
        validate_rect_tiling(t)
        assert rect_weight_exponent(t) == doc["weight_exponent"] == 51
        assert q_weight_rect(t) == IntPoly.monomial(51)


class TestBijection:
    def test_small_cases(self):
        assert model_bijection_check(1, 1).passed
        assert model_bijection_check(2, 2).passed
        assert model_bijection_check(3, 2).passed

    def test_report_shape(self):
        rep = model_bijection_check(2, 2)
        assert rep.lhs == IntPoly([1, 2, 2, 1])
        assert rep.tolerance is None


class TestCatalanCounterexample:
    def test_size_6_polynomials_differ(self):
        rep = catalan_partial_tiling_counterexample(6)
        assert rep.expected == "unequal"
        assert rep.passed                     # passes because the sides differ
        assert rep.lhs == IntPoly([1, 1, 2, 2, 3, 2, 3, 2, 2, 1, 1])
        assert rep.rhs == IntPoly([1, 2, 3, 3, 3, 2, 2, 1, 1, 1, 1])

    def test_q1_shadow_agrees(self):
        rep = catalan_partial_tiling_counterexample(6)
        assert rep.notes["tiling_count"] == 20
        assert rep.notes["catalan_poly_at_1"] == 20

    def test_size_2(self):
        rep = catalan_partial_tiling_counterexample(2)
        assert rep.lhs == IntPoly.one()       # trivial Catalan polynomial
        assert rep.rhs == IntPoly.one()       # single blank tiling
        assert not rep.passed                 # the sides agree, so "unequal" fails


class TestSerialization:
    def test_roundtrip(self):
        for t in iter_rect_tilings(2, 2):
            assert PathDominoTiling.from_json(t.to_json()) == t
        for t in iter_staircase_tilings(4, 2):
            assert StaircaseTiling.from_json(t.to_json()) == t

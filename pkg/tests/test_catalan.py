import math
import os

import pytest

from fibl import qpoly
from fibl.catalan import (CoxeterType, coxeter_catalan_q1, coxeter_exponents,
                          coxeter_q_fibo_catalan, q_fibo_catalan_divisibility_check,
                          q_fibo_catalan_ordinary, q_fibo_catalan_positivity_sweep,
                          q_fibo_catalan_rational, sweep_csv_lines)
from fibl.fib import fib
from fibl.qpoly import IntPoly


class TestExponentTable:
    def test_classical_families(self):
        assert coxeter_exponents("A", 5) == (1, 2, 3, 4, 5)
        assert coxeter_exponents("B", 4) == (1, 3, 5, 7)
        assert coxeter_exponents("D", 4) == (3, 1, 3, 5)
        assert coxeter_exponents("D", 6) == (5, 1, 3, 5, 7, 9)

    def test_exceptional_families(self):
        assert coxeter_exponents("E6") == (1, 4, 5, 7, 8, 11)
        assert coxeter_exponents("E7") == (1, 5, 7, 9, 11, 13, 17)
        assert coxeter_exponents("E8") == (1, 7, 11, 13, 17, 19, 23, 29)
        assert coxeter_exponents("F4") == (1, 5, 7, 11)
        assert coxeter_exponents("G2") == (1, 5)

    def test_rank_validation(self):
        with pytest.raises(ValueError):
            coxeter_exponents("E6", 6)
        with pytest.raises(ValueError):
            coxeter_exponents("D", 3)
        with pytest.raises(ValueError):
            coxeter_exponents("X", 2)

    def test_coxeter_number(self):
        assert CoxeterType("F4").coxeter_number == 12
        assert CoxeterType("A", 4).coxeter_number == 5
        assert CoxeterType("E8").coxeter_number == 30


class TestRational:
    def test_coprime_case(self):
        v = q_fibo_catalan_rational(3, 2)
        assert v.is_polynomial
        assert v.quotient == IntPoly([1, 1, 1])      # [F_4] = [3]

    def test_gcd_two_case(self):
        v = q_fibo_catalan_rational(4, 2)
        assert v.is_polynomial
        assert v.quotient == qpoly.q_number(5)       # [F_5] = [5]

    def test_unit_case(self):
        v = q_fibo_catalan_rational(1, 1)
        assert v.is_polynomial and v.quotient == IntPoly.one()

    def test_gcd_three_verdict_recorded(self):
        v = q_fibo_catalan_rational(3, 3)
        assert not v.is_polynomial
        assert v.quotient is None
        assert v.remainder_degree is not None

    def test_definition_matches_factorials(self):
        for (m, n) in ((2, 3), (4, 3), (5, 2), (5, 4)):
            v = q_fibo_catalan_rational(m, n)
            expected = qpoly.exact_div(
                qpoly.q_fib_factorial(m + n - 1),
                qpoly.q_fib_factorial(m) * qpoly.q_fib_factorial(n))
            assert v.quotient == expected


class TestSweep:
    def test_small_sweep_all_polynomial_nonnegative(self):
        rows = q_fibo_catalan_positivity_sweep(5)
        assert rows
        assert all(r.gcd in (1, 2) for r in rows)
        assert all(r.is_polynomial for r in rows)
        assert all(r.min_coeff >= 0 for r in rows)

    def test_sweep_covers_expected_pairs(self):
        rows = q_fibo_catalan_positivity_sweep(4)
        got = {(r.m, r.n) for r in rows}
        want = {(m, n) for m in range(1, 5) for n in range(1, 5)
                if math.gcd(m, n) in (1, 2)}
        assert got == want

    def test_csv_shape(self):
        lines = sweep_csv_lines(q_fibo_catalan_positivity_sweep(3))
        assert lines[0] == "m,n,gcd,is_polynomial,degree,min_coeff,max_coeff"
        assert all(len(line.split(",")) == 7 for line in lines)


class TestDivisibilityIdentity:
    def test_examples(self):
        assert q_fibo_catalan_divisibility_check(2, 2).passed
        assert q_fibo_catalan_divisibility_check(5, 3).passed
        for n in range(1, 8):
            assert q_fibo_catalan_divisibility_check(1, n).passed

    def test_grid_to_ten(self):
        for m in range(1, 11):
            for n in range(1, 11):
                assert q_fibo_catalan_divisibility_check(m, n).passed


class TestCoxeter:
    def test_f4_a2_is_not_polynomial(self):
        v = coxeter_q_fibo_catalan(CoxeterType("F4"), 2)
        assert not v.is_polynomial
        assert v.remainder_degree is not None

    def test_g2_a7_is_polynomial(self):
        v = coxeter_q_fibo_catalan(CoxeterType("G2"), 7)
        assert v.is_polynomial and v.all_coeffs_nonnegative

    def test_type_a_coprime_positive(self):
        v = coxeter_q_fibo_catalan(CoxeterType("A", 3), 3)
        assert v.is_polynomial and v.all_coeffs_nonnegative

    def test_a1_collapses_to_one(self):
        v = coxeter_q_fibo_catalan(CoxeterType("E8"), 1)
        assert v.is_polynomial and v.quotient == IntPoly.one()

    def test_q1_integrality_for_coprime_table(self):
        families = ([CoxeterType("A", n) for n in range(2, 9)]
                    + [CoxeterType("B", n) for n in range(2, 9)]
                    + [CoxeterType("D", n) for n in range(4, 9)]
                    + [CoxeterType(f) for f in ("E6", "E7", "E8", "F4", "G2")])
        for ct in families:
            h = ct.coxeter_number
            for a in range(1, 13):
                if math.gcd(a, h) != 1:
                    continue
                assert coxeter_catalan_q1(ct, a) > 0

    def test_q1_matches_polynomial_evaluation(self):
        for ct, a in ((CoxeterType("B", 3), 5), (CoxeterType("G2"), 5)):
            v = coxeter_q_fibo_catalan(ct, a)
            assert v.quotient.eval_q1() == coxeter_catalan_q1(ct, a)


@pytest.mark.skipif(not os.environ.get("FIBL_SLOW_TESTS"),
                    reason="multi-minute, ~2 GB; set FIBL_SLOW_TESTS=1 to run")
def test_e8_a7_polynomial_positive_slow():
    old = qpoly.set_degree_cap(2 * 10**7)
    try:
        v = coxeter_q_fibo_catalan(CoxeterType("E8"), 7)
        assert v.is_polynomial and v.all_coeffs_nonnegative
    finally:
        qpoly.set_degree_cap(old)


class TestOrdinary:
    def test_n1_is_one(self):
        v = q_fibo_catalan_ordinary(1)
        assert v.is_polynomial and v.quotient == IntPoly.one()

    def test_n3_polynomial_feeds_counterexample(self):
        v = q_fibo_catalan_ordinary(3)
        assert v.is_polynomial
        assert v.quotient == IntPoly([1, 1, 2, 2, 3, 2, 3, 2, 2, 1, 1])

    def test_n5_polynomial(self):
        v = q_fibo_catalan_ordinary(5)
        assert v.is_polynomial
        # equals the central q-Fibonomial (parts n, n) divided by [F_{n+1}]
        expected = qpoly.exact_div(qpoly.q_fibonomial(5, 5), qpoly.q_number(fib(6)))
        assert v.quotient == expected

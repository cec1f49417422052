"""Exit criteria for the package, one test per criterion.

Every check is exact.  Each test builds what it needs from scratch so that the
runtime budget covers the full computation, not a cached fixture.
A PASS/FAIL line per criterion is printed in the pytest terminal summary.
"""
import json
import random
import subprocess
import sys
import time
from fractions import Fraction as F
from math import gcd

import pytest

from powersum.faulhaber import (
    bernoulli_numbers,
    build_table,
    faulhaber_eval,
    faulhaber_poly_bernoulli,
    power_sum_direct,
)
from powersum.factorization import structural_factor
from powersum.polynomial import Polynomial, binomial_expand
from powersum.render import load_golden, render_factored

pytestmark = pytest.mark.acceptance

APPENDIX_DENOMINATORS = [2, 6, 4, 30, 12, 42, 24, 90, 20, 66, 24, 2730]


def powersum(*argv):
    return subprocess.run(
        [sys.executable, "-m", "powersum", *argv], capture_output=True, text=True
    )


@pytest.fixture
def criterion(record_property):
    def label(text):
        record_property("criterion", text)

    return label


def test_1_appendix_golden_reproduction(criterion):
    criterion("1 appendix reproduction N=0..20, byte-exact, < 5 s")
    start = time.perf_counter()
    golden = load_golden()
    assert set(range(21)) <= set(golden)
    table = build_table(20)
    rendered = {k: render_factored(structural_factor(table, k)) for k in range(21)}
    for k in range(21):
        assert rendered[k].encode("utf-8") == golden[k].encode("utf-8"), k
    for k, d in enumerate(APPENDIX_DENOMINATORS, start=1):
        assert rendered[k].endswith(f"/{d}")
        assert structural_factor(table, k).denominator == d
    assert "*(3*n^2+3*n-1)/" in rendered[4]
    assert "*(5*n^6+15*n^5+5*n^4-15*n^3-n^2+9*n-3)/" in rendered[8]
    elapsed = time.perf_counter() - start

    proc = powersum("reproduce-appendix")
    assert proc.returncode == 0, proc.stdout
    assert elapsed < 5.0


def test_2_factorization_claim_to_100(criterion):
    criterion("2 verify --max 100: every N in 2..100 passes, < 60 s")
    start = time.perf_counter()
    proc = powersum("verify", "--max", "100")
    elapsed = time.perf_counter() - start
    assert proc.returncode == 0, proc.stderr
    report = json.loads(proc.stdout)
    assert report["all_pass"] is True
    assert [r["N"] for r in report["results"]] == list(range(2, 101))
    for r in report["results"]:
        assert r["outcome"] == "pass"
        n = r["N"]
        assert r["residual_degree"] == (n - 2 if n % 2 == 0 else n - 3)
    assert report["asymptotic"]["failures"] == []
    # primitivity and exact divisibility, independently of the CLI
    table = build_table(100)
    for n in range(2, 101):
        form = structural_factor(table, n)
        assert form.reconstruct() == table[n]
        g = 0
        for c in form.residual.coefficients:
            g = gcd(g, c)
        assert g == 1 and form.residual.coefficients[-1] > 0
    assert elapsed < 60.0


def test_3_dual_oracle_coefficients(criterion):
    criterion("3 recursion == Bernoulli closed form, N=0..50, < 10 s")
    start = time.perf_counter()
    table = build_table(50)
    cache = bernoulli_numbers(50)
    for n in range(51):
        assert table[n].coeffs == faulhaber_poly_bernoulli(n, cache).coeffs, n
    assert time.perf_counter() - start < 10.0


def test_4_pointwise_oracle(criterion):
    criterion("4 polynomial eval == direct summation, 200 random + fixed cases, < 5 s")
    start = time.perf_counter()
    table = build_table(30)
    rng = random.Random(4)
    pairs = [(rng.randint(0, 30), rng.randint(0, 1000)) for _ in range(200)]
    for order, n in pairs:
        assert faulhaber_eval(table, order, n) == power_sum_direct(n, order), (order, n)
    for n, order, expected in [(3, 2, 14), (10, 1, 55), (10, 3, 3025)]:
        assert faulhaber_eval(table, order, n) == expected
        assert power_sum_direct(n, order) == expected
    assert time.perf_counter() - start < 5.0


def test_5_structural_invariants(criterion):
    criterion("5 degree N+1, lead 1/(N+1), n^N coeff 1/2, s(0)=0, s(-1)=0 for N=1..100, < 10 s")
    start = time.perf_counter()
    table = build_table(100)
    for n in range(1, 101):
        s = table[n]
        assert s.degree == n + 1
        assert s.coeff(n + 1) == F(1, n + 1)
        assert s.coeff(n) == F(1, 2)
        assert s.coeff(0) == 0
        assert s.evaluate(-1) == 0
    assert time.perf_counter() - start < 10.0


def test_6_telescoping(criterion):
    criterion("6 s_N(n) - s_N(n-1) == n^N as polynomials, N=1..50, < 10 s")
    start = time.perf_counter()
    table = build_table(50)
    for order in range(1, 51):
        s = table[order]
        shifted = Polynomial()
        for power, c in enumerate(s.coeffs):
            shifted = shifted + binomial_expand(-1, power).scale(c)
        assert s - shifted == Polynomial.monomial(order), order
    assert time.perf_counter() - start < 10.0


def test_7_bernoulli_spot_value(criterion):
    criterion("7 B_12 == -691/2730")
    b12 = bernoulli_numbers(12)[12]
    assert (b12.numerator, b12.denominator) == (-691, 2730)
    # the same value is the coefficient of n in s(n, 12)
    assert build_table(12)[12].coeff(1) == F(-691, 2730)


def test_8_determinism(criterion):
    criterion("8 two 'compute 100 --format json' runs are byte-identical")
    first = powersum("compute", "100", "--format", "json")
    second = powersum("compute", "100", "--format", "json")
    assert first.returncode == second.returncode == 0
    assert first.stdout.encode() == second.stdout.encode()
    assert json.loads(first.stdout)["N"] == 100


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v"]))

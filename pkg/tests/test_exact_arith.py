import threading
from fractions import Fraction
from math import factorial, gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from powersum.exact_arith import BinomialCache, binomial, rat_arith, rat_normalize

rationals = st.fractions(min_value=-1000, max_value=1000, max_denominator=1000)


def pascal_brute_force(m, k):
    row = [1]
    for _ in range(m):
        row = [a + b for a, b in zip([0] + row, row + [0])]
    return row[k]


@pytest.mark.parametrize("m,k,expected", [(0, 0, 1), (7, 7, 1), (5, 2, pascal_brute_force(5, 2))])
def test_binomial_examples(m, k, expected):
    assert binomial(m, k) == expected


def test_binomial_five_choose_two_is_ten():
    assert pascal_brute_force(5, 2) == 10


def test_binomial_k_above_m_is_zero():
    assert binomial(3, 5) == 0


def test_binomial_rejects_negative():
    with pytest.raises(ValueError):
        binomial(-1, 0)


@pytest.mark.parametrize("m", range(31))
def test_binomial_matches_factorial_formula_and_row_sum(m):
    row = [binomial(m, k) for k in range(m + 1)]
    assert row == [factorial(m) // (factorial(k) * factorial(m - k)) for k in range(m + 1)]
    assert sum(row) == 2**m
    assert row == row[::-1]


def test_cache_grows_lazily_and_monotonically():
    cache = BinomialCache()
    assert cache.max_row == 0
    assert cache(10, 3) == 120
    assert cache.max_row == 10
    cache(4, 2)
    assert cache.max_row == 10


def test_cache_handles_large_rows():
    cache = BinomialCache()
    assert cache(101, 50) == factorial(101) // (factorial(50) * factorial(51))


def test_concurrent_growth_gives_consistent_rows():
    cache = BinomialCache()
    results = []

    def work(m):
        results.append((m, cache.row(m)))

    threads = [threading.Thread(target=work, args=(m,)) for m in range(40, 80)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    for m, row in results:
        assert row == [pascal_brute_force(m, k) for k in range(m + 1)]


@pytest.mark.parametrize(
    "num,den,expected",
    [(4, 8, Fraction(1, 2)), (3, -6, Fraction(-1, 2)), (0, 5, Fraction(0, 1))],
)
def test_rat_normalize(num, den, expected):
    r = rat_normalize(num, den)
    assert (r.numerator, r.denominator) == (expected.numerator, expected.denominator)
    assert r.denominator > 0


def test_rat_normalize_zero_denominator():
    with pytest.raises(ZeroDivisionError, match="division by zero"):
        rat_normalize(1, 0)


def test_rat_arith_examples():
    assert rat_arith(Fraction(1, 2), Fraction(1, 3), "add") == Fraction(5, 6)
    assert rat_arith(Fraction(1, 5), Fraction(5), "mul") == Fraction(1, 1)
    total = rat_arith(Fraction(-691, 2730), Fraction(691, 2730), "add")
    assert (total.numerator, total.denominator) == (0, 1)


def test_rat_arith_div_by_zero():
    with pytest.raises(ZeroDivisionError):
        rat_arith(Fraction(1), Fraction(0), "div")


def test_rat_arith_rejects_floats_and_unknown_ops():
    with pytest.raises(TypeError):
        rat_arith(0.5, Fraction(1), "add")
    with pytest.raises(ValueError):
        rat_arith(Fraction(1), Fraction(1), "pow")


@given(rationals, rationals)
def test_add_sub_round_trip(a, b):
    assert rat_arith(rat_arith(a, b, "add"), b, "sub") == a


@given(rationals, rationals.filter(bool))
def test_mul_div_round_trip(a, b):
    assert rat_arith(rat_arith(a, b, "mul"), b, "div") == a


@given(st.integers(-10**30, 10**30), st.integers(-10**30, 10**30).filter(bool))
def test_normalize_is_canonical_and_idempotent(num, den):
    r = rat_normalize(num, den)
    assert r.denominator > 0
    assert gcd(abs(r.numerator), r.denominator) == 1
    again = rat_normalize(r.numerator, r.denominator)
    assert (again.numerator, again.denominator) == (r.numerator, r.denominator)

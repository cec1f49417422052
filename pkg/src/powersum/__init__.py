"""Exact Faulhaber power-sum polynomials via a Bernoulli-free recursion."""
from .exact_arith import BinomialCache, binomial, rat_arith, rat_normalize
from .factorization import (
    FactoredForm,
    VerificationReport,
    asymptotic_check,
    structural_factor,
    verify_factorization_range,
)
from .faulhaber import (
    BernoulliCache,
    FaulhaberTable,
    bernoulli_numbers,
    build_table,
    faulhaber_eval,
    faulhaber_poly,
    faulhaber_poly_bernoulli,
    power_sum_direct,
)
from .polynomial import (
    IntegerPolynomial,
    NotDivisibleError,
    Polynomial,
    binomial_expand,
    exact_divide,
    extract_content,
)

__version__ = "0.1.0"

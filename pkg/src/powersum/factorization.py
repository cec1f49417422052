"""Structural factorization of power-sum polynomials.

For even N >= 2 the polynomial s(n, N) is divisible by n(n+1)(2n+1), and for
odd N >= 3 by n^2 (n+1)^2.  After dividing, what remains is a rational
multiple 1/d of a primitive integer polynomial.  Nothing here assumes that
this holds: each order is checked, and failures are reported as data.
"""
from __future__ import annotations

import enum
import json
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .faulhaber import FaulhaberTable, faulhaber_poly
from .polynomial import (
    IntegerPolynomial,
    NotDivisibleError,
    Polynomial,
    exact_divide,
    extract_content,
)

__all__ = [
    "ParityClass",
    "MandatedFactor",
    "Outcome",
    "FactoredForm",
    "FactorizationError",
    "DivisibilityFailure",
    "DegreeMismatch",
    "NonPrimitiveResidual",
    "OrderResult",
    "VerificationReport",
    "parity_class",
    "structural_factor",
    "verify_factorization_range",
    "asymptotic_check",
]


class ParityClass(str, enum.Enum):
    SPECIAL_N0 = "special_N0"
    SPECIAL_N1 = "special_N1"
    EVEN_GE2 = "even_ge2"
    ODD_GE3 = "odd_ge3"


class MandatedFactor(enum.Enum):
    # declaration order is the canonical print order
    N = "n"
    N_PLUS_1 = "n+1"
    TWO_N_PLUS_1 = "2*n+1"

    @property
    def polynomial(self) -> Polynomial:
        return {
            MandatedFactor.N: Polynomial([0, 1]),
            MandatedFactor.N_PLUS_1: Polynomial([1, 1]),
            MandatedFactor.TWO_N_PLUS_1: Polynomial([1, 2]),
        }[self]


class Outcome(str, enum.Enum):
    PASS = "pass"
    DIVISIBILITY_FAILURE = "divisibility_failure"
    DEGREE_MISMATCH = "degree_mismatch"
    NON_PRIMITIVE_RESIDUAL = "non_primitive_residual"


_MANDATED: Dict[ParityClass, Tuple[Tuple[MandatedFactor, int], ...]] = {
    ParityClass.SPECIAL_N0: (),
    ParityClass.SPECIAL_N1: ((MandatedFactor.N, 1), (MandatedFactor.N_PLUS_1, 1)),
    ParityClass.EVEN_GE2: (
        (MandatedFactor.N, 1),
        (MandatedFactor.N_PLUS_1, 1),
        (MandatedFactor.TWO_N_PLUS_1, 1),
    ),
    ParityClass.ODD_GE3: ((MandatedFactor.N, 2), (MandatedFactor.N_PLUS_1, 2)),
}


def parity_class(order: int) -> ParityClass:
    if order < 0:
        raise ValueError("order must be nonnegative")
    if order == 0:
        return ParityClass.SPECIAL_N0
    if order == 1:
        return ParityClass.SPECIAL_N1
    return ParityClass.EVEN_GE2 if order % 2 == 0 else ParityClass.ODD_GE3


def expected_residual_degree(order: int) -> int:
    cls = parity_class(order)
    if cls is ParityClass.SPECIAL_N0:
        return 1
    if cls is ParityClass.SPECIAL_N1:
        return 0
    return order - 2 if cls is ParityClass.EVEN_GE2 else order - 3


class FactorizationError(ArithmeticError):
    outcome: Outcome

    def __init__(self, order: int, message: str):
        super().__init__(f"N={order}: {message}")
        self.order = order


class DivisibilityFailure(FactorizationError):
    outcome = Outcome.DIVISIBILITY_FAILURE


class DegreeMismatch(FactorizationError):
    outcome = Outcome.DEGREE_MISMATCH


class NonPrimitiveResidual(FactorizationError):
    """The quotient's content is not of the form 1/d."""

    outcome = Outcome.NON_PRIMITIVE_RESIDUAL


@dataclass(frozen=True)
class FactoredForm:
    order: int
    parity_class: ParityClass
    mandated_factors: Tuple[Tuple[MandatedFactor, int], ...]
    residual: IntegerPolynomial
    denominator: int

    def mandated_product(self) -> Polynomial:
        prod = Polynomial([1])
        for factor, mult in self.mandated_factors:
            prod = prod * factor.polynomial**mult
        return prod

    def reconstruct(self) -> Polynomial:
        return (self.mandated_product() * self.residual.primitive()).scale(
            Fraction(1, self.denominator)
        )


def structural_factor(table: FaulhaberTable, order: int) -> FactoredForm:
    """Divide out the factors mandated for ``order``'s parity and split off 1/d.

    Raises a FactorizationError subclass when the structure does not hold.
    """
    poly = faulhaber_poly(table, order)
    cls = parity_class(order)
    mandated = _MANDATED[cls]
    divisor = Polynomial([1])
    for factor, mult in mandated:
        divisor = divisor * factor.polynomial**mult
    try:
        quotient = exact_divide(poly, divisor)
    except NotDivisibleError:
        raise DivisibilityFailure(order, "mandated factors do not divide s(n, N)") from None

    residual = extract_content(quotient)
    want = expected_residual_degree(order)
    if residual.degree != want:
        raise DegreeMismatch(order, f"residual degree {residual.degree}, expected {want}")
    if residual.content.numerator != 1:
        raise NonPrimitiveResidual(order, f"quotient content is {residual.content}")
    primitive = IntegerPolynomial(residual.coefficients, Fraction(1))
    return FactoredForm(order, cls, mandated, primitive, residual.content.denominator)


@dataclass(frozen=True)
class OrderResult:
    order: int
    outcome: Outcome
    seconds: float
    residual_degree: Optional[int] = None
    denominator: Optional[int] = None
    detail: str = ""

    def to_dict(self) -> dict:
        out = {"N": self.order, "outcome": self.outcome.value, "seconds": round(self.seconds, 6)}
        if self.residual_degree is not None:
            out["residual_degree"] = self.residual_degree
        if self.denominator is not None:
            out["denominator"] = self.denominator
        if self.detail:
            out["detail"] = self.detail
        return out


@dataclass(frozen=True)
class VerificationReport:
    n_lo: int
    n_hi: int
    results: Tuple[OrderResult, ...] = field(default_factory=tuple)

    @property
    def all_pass(self) -> bool:
        return all(r.outcome is Outcome.PASS for r in self.results)

    def failures(self) -> List[OrderResult]:
        return [r for r in self.results if r.outcome is not Outcome.PASS]

    def to_dict(self) -> dict:
        return {
            "range": [self.n_lo, self.n_hi],
            "all_pass": self.all_pass,
            "results": [r.to_dict() for r in self.results],
        }

    def to_json(self, indent: Optional[int] = None) -> str:
        return json.dumps(self.to_dict(), indent=indent)


def _check_one(table: FaulhaberTable, order: int) -> OrderResult:
    start = time.perf_counter()
    try:
        form = structural_factor(table, order)
    except FactorizationError as exc:
        return OrderResult(order, exc.outcome, time.perf_counter() - start, detail=str(exc))
    return OrderResult(
        order,
        Outcome.PASS,
        time.perf_counter() - start,
        residual_degree=form.residual.degree,
        denominator=form.denominator,
    )


def verify_factorization_range(
    table: FaulhaberTable, n_lo: int, n_hi: int, workers: int = 1
) -> VerificationReport:
    """Check every order in ``n_lo..n_hi``; one failure never hides another."""
    if not 2 <= n_lo <= n_hi <= table.max_order:
        raise ValueError(
            f"need 2 <= N_lo <= N_hi <= {table.max_order}, got [{n_lo}, {n_hi}]"
        )
    orders = range(n_lo, n_hi + 1)
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(lambda k: _check_one(table, k), orders))
    else:
        results = [_check_one(table, k) for k in orders]
    return VerificationReport(n_lo, n_hi, tuple(results))


def asymptotic_check(table: FaulhaberTable, order: int) -> bool:
    """Leading terms are n^(N+1)/(N+1) + n^N/2."""
    if order < 1:
        raise ValueError("asymptotic_check needs N >= 1")
    poly = faulhaber_poly(table, order)
    return (
        poly.degree == order + 1
        and poly.coeff(order + 1) == Fraction(1, order + 1)
        and poly.coeff(order) == Fraction(1, 2)
    )

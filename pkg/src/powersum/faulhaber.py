"""Power-sum polynomials s(n, N) = sum_{k=0}^{n} k^N built without Bernoulli numbers.

Each order is obtained from all lower orders by

    s(n, N) = ((n+1)^(N+1) - sum_{j<N} C(N+1, j) s(n, j)) / (N+1),

starting from s(n, 0) = n + 1 (the k = 0 term counts, with 0^0 = 1).  For
N >= 1 the k = 0 term vanishes, so these are the usual sums from k = 1.

Two oracles live here as well and share nothing with the recursion beyond
the polynomial type: direct big-integer summation, and the classical closed
form in Bernoulli numbers.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, List, Tuple

from .exact_arith import binomial
from .polynomial import Polynomial, binomial_expand

__all__ = [
    "DEFAULT_MAX_ORDER",
    "FaulhaberTable",
    "BernoulliCache",
    "OrderOutOfRange",
    "ConsistencyError",
    "iter_build",
    "build_table",
    "faulhaber_poly",
    "faulhaber_eval",
    "power_sum_direct",
    "bernoulli_numbers",
    "faulhaber_poly_bernoulli",
]

DEFAULT_MAX_ORDER = 100


class OrderOutOfRange(IndexError):
    pass


class ConsistencyError(RuntimeError):
    """A value that must be an integer by construction came out fractional."""


@dataclass(frozen=True)
class FaulhaberTable:
    max_order: int
    entries: Tuple[Polynomial, ...]

    def __post_init__(self):
        if len(self.entries) != self.max_order + 1:
            raise ValueError("table must hold exactly orders 0..max_order")

    def __getitem__(self, order: int) -> Polynomial:
        return faulhaber_poly(self, order)

    def __len__(self) -> int:
        return len(self.entries)


def iter_build(max_order: int) -> Iterator[Polynomial]:
    """Yield s(n, 0), s(n, 1), ..., s(n, max_order) in order.

    The generator keeps every previous order, since each step needs them all.
    """
    if max_order < 0:
        raise ValueError("max_order must be nonnegative")
    done: List[Polynomial] = []
    for order in range(max_order + 1):
        if order == 0:
            entry = Polynomial([1, 1])
        else:
            acc = binomial_expand(1, order + 1)
            for j, lower in enumerate(done):
                acc = acc - lower.scale(binomial(order + 1, j))
            entry = acc.scale(Fraction(1, order + 1))
        done.append(entry)
        yield entry


def build_table(max_order: int, ceiling: int = DEFAULT_MAX_ORDER) -> FaulhaberTable:
    if max_order > ceiling:
        raise ValueError(f"max_order {max_order} exceeds the ceiling {ceiling}")
    return FaulhaberTable(max_order, tuple(iter_build(max_order)))


def faulhaber_poly(table: FaulhaberTable, order: int) -> Polynomial:
    if not 0 <= order <= table.max_order:
        raise OrderOutOfRange(f"order {order} outside table range 0..{table.max_order}")
    return table.entries[order]


def faulhaber_eval(table: FaulhaberTable, order: int, n: int) -> int:
    value = faulhaber_poly(table, order).evaluate(n)
    if value.denominator != 1:
        raise ConsistencyError(f"s({n}, {order}) evaluated to non-integer {value}")
    return value.numerator


def power_sum_direct(n: int, order: int) -> int:
    """Brute-force sum of k**order for k = 0..n (0**0 counts as 1)."""
    if n < 0 or order < 0:
        raise ValueError("n and order must be nonnegative")
    return sum(k**order for k in range(n + 1))


@dataclass(frozen=True)
class BernoulliCache:
    """B_0..B_max with B_1 = -1/2."""

    values: Tuple[Fraction, ...]

    @property
    def max_index(self) -> int:
        return len(self.values) - 1

    def __getitem__(self, j: int) -> Fraction:
        return self.values[j]


def bernoulli_numbers(max_index: int) -> BernoulliCache:
    if max_index < 0:
        raise ValueError("max_index must be nonnegative")
    values: List[Fraction] = [Fraction(1)]
    for m in range(1, max_index + 1):
        total = sum((binomial(m + 1, j) * values[j] for j in range(m)), Fraction(0))
        values.append(-total / (m + 1))
    return BernoulliCache(tuple(values))


def faulhaber_poly_bernoulli(order: int, cache: BernoulliCache) -> Polynomial:
    """Closed form (1/(N+1)) sum_j (-1)^j C(N+1, j) B_j n^(N+1-j)."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    if order > cache.max_index:
        raise ValueError(f"Bernoulli cache covers B_0..B_{cache.max_index}, need B_{order}")
    if order == 0:
        return Polynomial([1, 1])
    coeffs: List[Fraction] = [Fraction(0)] * (order + 2)
    for j in range(order + 1):
        term = binomial(order + 1, j) * cache[j] / (order + 1)
        coeffs[order + 1 - j] = -term if j % 2 else term
    return Polynomial(coeffs)

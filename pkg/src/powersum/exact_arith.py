"""Exact integers and rationals, plus a lazily grown Pascal-triangle cache.

Python ints are already arbitrary precision, and ``fractions.Fraction`` keeps
values in lowest terms with a positive denominator, which is exactly the
canonical form the rest of the package relies on.
"""
from __future__ import annotations

import operator
import threading
from fractions import Fraction
from typing import Callable, Dict, List

__all__ = [
    "BinomialCache",
    "binomial",
    "rat_normalize",
    "rat_arith",
    "as_rational",
]

Rational = Fraction


def as_rational(value) -> Fraction:
    """Coerce ints and Fractions to Fraction; reject floats outright."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected int or Fraction, got {type(value).__name__}")


def rat_normalize(num: int, den: int) -> Fraction:
    """Canonical ``num/den``: lowest terms, sign carried by the numerator."""
    if den == 0:
        raise ZeroDivisionError("division by zero")
    return Fraction(num, den)


_OPS: Dict[str, Callable[[Fraction, Fraction], Fraction]] = {
    "add": operator.add,
    "sub": operator.sub,
    "mul": operator.mul,
    "div": operator.truediv,
}


def rat_arith(a, b, op: str) -> Fraction:
    try:
        fn = _OPS[op]
    except KeyError:
        raise ValueError(f"unknown operation {op!r}; expected one of {sorted(_OPS)}") from None
    a, b = as_rational(a), as_rational(b)
    if op == "div" and b == 0:
        raise ZeroDivisionError("division by zero")
    return fn(a, b)


class BinomialCache:
    """Rows of Pascal's triangle, grown on demand by addition only.

    Growth is guarded by a lock; reading an already built row takes no lock.
    Call :meth:`ensure` up front before handing the cache to worker threads.
    """

    def __init__(self, rows: int = 0):
        self._rows: List[List[int]] = [[1]]
        self._lock = threading.Lock()
        self.ensure(rows)

    @property
    def max_row(self) -> int:
        return len(self._rows) - 1

    def ensure(self, m: int) -> None:
        if m <= self.max_row:
            return
        with self._lock:
            rows = self._rows
            while len(rows) <= m:
                prev = rows[-1]
                row = [1]
                row.extend(prev[k - 1] + prev[k] for k in range(1, len(prev)))
                row.append(1)
                # publish the finished row in one step
                rows.append(row)

    def row(self, m: int) -> List[int]:
        if m < 0:
            raise ValueError("row index must be nonnegative")
        self.ensure(m)
        return self._rows[m]

    def __call__(self, m: int, k: int) -> int:
        if m < 0 or k < 0:
            raise ValueError("binomial arguments must be nonnegative")
        if k > m:
            return 0
        return self.row(m)[k]


_default_cache = BinomialCache(101)


def binomial(m: int, k: int) -> int:
    """C(m, k) from the shared cache; zero when ``k > m``."""
    return _default_cache(m, k)

"""Dense univariate polynomials in ``n`` with exact rational coefficients."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Optional, Sequence, Tuple, Union

from .exact_arith import as_rational, binomial

__all__ = [
    "Polynomial",
    "IntegerPolynomial",
    "NotDivisibleError",
    "binomial_expand",
    "exact_divide",
    "extract_content",
    "common_denominator_form",
    "from_integer_coefficients",
]

Scalar = Union[int, Fraction]


class NotDivisibleError(ArithmeticError):
    """Exact polynomial division left a nonzero remainder."""


def _trim(coeffs: list) -> tuple:
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return tuple(coeffs)


class Polynomial:
    """Immutable polynomial; ``coeffs[i]`` is the coefficient of ``n**i``.

    The zero polynomial has an empty coefficient tuple and ``degree`` None.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        self.coeffs: Tuple[Fraction, ...] = _trim([as_rational(c) for c in coeffs])

    @classmethod
    def _raw(cls, coeffs: tuple) -> "Polynomial":
        # coeffs already Fractions with a nonzero tail
        obj = cls.__new__(cls)
        obj.coeffs = coeffs
        return obj

    @classmethod
    def monomial(cls, power: int, coeff: Scalar = 1) -> "Polynomial":
        if power < 0:
            raise ValueError("power must be nonnegative")
        return cls([0] * power + [coeff])

    @classmethod
    def constant(cls, value: Scalar) -> "Polynomial":
        return cls([value])

    @property
    def degree(self) -> Optional[int]:
        return len(self.coeffs) - 1 if self.coeffs else None

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, power: int) -> Fraction:
        if 0 <= power < len(self.coeffs):
            return self.coeffs[power]
        return Fraction(0)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Polynomial([other]).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Polynomial({[str(c) for c in self.coeffs]})"

    def __str__(self) -> str:
        from .render import render_expanded

        return render_expanded(self)

    # -- ring operations -------------------------------------------------

    def __add__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(other)
        elif not isinstance(other, Polynomial):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial._raw(_trim(out))

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw(tuple(-c for c in self.coeffs))

    def __sub__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(other)
        elif not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Polynomial":
        return (-self) + other

    def scale(self, c: Scalar) -> "Polynomial":
        c = as_rational(c)
        if not c:
            return Polynomial._raw(())
        return Polynomial._raw(tuple(x * c for x in self.coeffs))

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Polynomial._raw(())
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                out[i + j] += x * y
        return Polynomial._raw(_trim(out))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Polynomial":
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        result = Polynomial.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __divmod__(self, other: "Polynomial") -> Tuple["Polynomial", "Polynomial"]:
        if not isinstance(other, Polynomial):
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(other.coeffs) - 1
        lead = other.coeffs[-1]
        if len(rem) - 1 < dq:
            return Polynomial._raw(()), self
        quot = [Fraction(0)] * (len(rem) - dq)
        for k in range(len(rem) - 1, dq - 1, -1):
            c = rem[k]
            if not c:
                continue
            t = c / lead
            quot[k - dq] = t
            for i, d in enumerate(other.coeffs):
                rem[k - dq + i] -= t * d
        return Polynomial._raw(_trim(quot)), Polynomial._raw(_trim(rem[:dq]))

    def __floordiv__(self, other: "Polynomial") -> "Polynomial":
        return divmod(self, other)[0]

    def __mod__(self, other: "Polynomial") -> "Polynomial":
        return divmod(self, other)[1]

    # -- evaluation and composition --------------------------------------

    def evaluate(self, x: Scalar) -> Fraction:
        x = as_rational(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    __call__ = evaluate

    def shift(self, a: int) -> "Polynomial":
        """Return ``p(n + a)``."""
        total = Polynomial._raw(())
        for power, c in enumerate(self.coeffs):
            if c:
                total = total + binomial_expand(a, power).scale(c)
        return total

    def derivative(self) -> "Polynomial":
        return Polynomial(i * c for i, c in enumerate(self.coeffs) if i)


N = Polynomial([0, 1])


def binomial_expand(base_shift: int, power: int, max_power: int = 1000) -> Polynomial:
    """Expand ``(n + base_shift)**power`` using cached binomial coefficients."""
    if power < 0:
        raise ValueError("power must be nonnegative")
    if power > max_power:
        raise ValueError(f"power {power} exceeds the configured maximum {max_power}")
    return Polynomial(
        binomial(power, i) * base_shift ** (power - i) for i in range(power + 1)
    )


def exact_divide(p: Polynomial, q: Polynomial) -> Polynomial:
    """Quotient ``t`` with ``p == q * t``; raises NotDivisibleError otherwise."""
    quot, rem = divmod(p, q)
    if rem:
        raise NotDivisibleError("not divisible")
    return quot


@dataclass(frozen=True)
class IntegerPolynomial:
    """A primitive integer polynomial together with its rational content.

    ``content * primitive`` reproduces the source polynomial; the primitive
    part has coprime coefficients and a positive leading coefficient, so the
    sign of the source lives in ``content``.
    """

    coefficients: Tuple[int, ...]
    content: Fraction

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def primitive(self) -> Polynomial:
        return Polynomial(self.coefficients)

    def to_polynomial(self) -> Polynomial:
        return self.primitive().scale(self.content)


def _lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b


def extract_content(p: Polynomial) -> IntegerPolynomial:
    if p.is_zero():
        raise ValueError("the zero polynomial has no primitive part")
    common = 1
    for c in p.coeffs:
        common = _lcm(common, c.denominator)
    ints = [int(c * common) for c in p.coeffs]
    g = 0
    for v in ints:
        g = gcd(g, v)
    if ints[-1] < 0:
        g = -g
    return IntegerPolynomial(tuple(v // g for v in ints), Fraction(g, common))


def common_denominator_form(p: Polynomial) -> Tuple[Tuple[int, ...], int]:
    """Integer coefficient list and the positive denominator dividing it out."""
    common = 1
    for c in p.coeffs:
        common = _lcm(common, c.denominator)
    return tuple(int(c * common) for c in p.coeffs), common


def from_integer_coefficients(coefficients: Sequence[int], denominator: int = 1) -> Polynomial:
    if denominator <= 0:
        raise ValueError("denominator must be positive")
    return Polynomial(Fraction(c, denominator) for c in coefficients)

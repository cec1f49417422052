"""Canonical text and JSON forms of power-sum polynomials, and the golden corpus.

Factored text lists factors in the fixed order n, (n+1), (2*n+1), residual,
joined by ``*`` and followed by ``/d`` when d != 1, e.g.

    n*(n+1)*(2*n+1)*(3*n^2+3*n-1)/30
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .factorization import FactoredForm, FactorizationError, MandatedFactor, structural_factor
from .faulhaber import FaulhaberTable, faulhaber_poly
from .polynomial import Polynomial, common_denominator_form, from_integer_coefficients

__all__ = [
    "render_expanded",
    "render_int_poly",
    "render_factored",
    "PolynomialDocument",
    "GoldenFormatError",
    "GoldenMismatch",
    "load_golden",
    "compare_golden",
    "DEFAULT_GOLDEN",
    "render_document",
]

DEFAULT_GOLDEN = Path(__file__).with_name("data") / "appendix_golden.tsv"
JSON_SAFE_LIMIT = 2**63


def _power(power: int) -> str:
    return "n" if power == 1 else f"n^{power}"


def render_expanded(p: Polynomial) -> str:
    """Descending-power text with spaced operators, e.g. ``1/2*n^2 + 1/2*n``."""
    if p.is_zero():
        return "0"
    pieces: List[str] = []
    for power in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[power]
        if not c:
            continue
        mag = abs(c)
        if power == 0:
            body = str(mag)
        elif mag == 1:
            body = _power(power)
        else:
            body = f"{mag}*{_power(power)}"
        if not pieces:
            pieces.append(("-" if c < 0 else "") + body)
        else:
            pieces.append(("- " if c < 0 else "+ ") + body)
    return " ".join(pieces)


def render_int_poly(coeffs: Sequence[int]) -> str:
    """Compact descending text for an integer polynomial, e.g. ``3*n^2+3*n-1``."""
    out = ""
    for power in range(len(coeffs) - 1, -1, -1):
        c = coeffs[power]
        if not c:
            continue
        mag = abs(c)
        if power == 0:
            body = str(mag)
        else:
            body = _power(power) if mag == 1 else f"{mag}*{_power(power)}"
        if c < 0:
            out += "-" + body
        else:
            out += ("+" if out else "") + body
    return out or "0"


def _render_factor(factor: MandatedFactor, mult: int) -> str:
    text = factor.value if factor is MandatedFactor.N else f"({factor.value})"
    return text if mult == 1 else f"{text}^{mult}"


def render_factored(form: FactoredForm) -> str:
    parts = [_render_factor(f, m) for f, m in form.mandated_factors]
    coeffs = form.residual.coefficients
    residual = render_int_poly(coeffs)
    if residual != "1" or not parts:
        multi_term = sum(1 for c in coeffs if c) > 1
        parts.append(f"({residual})" if multi_term and parts else residual)
    text = "*".join(parts)
    if form.denominator != 1:
        text += f"/{form.denominator}"
    return text


# -- JSON document ---------------------------------------------------------


def _encode_int(v: int) -> Union[int, str]:
    return str(v) if abs(v) >= JSON_SAFE_LIMIT else v


def _decode_int(v) -> int:
    if isinstance(v, bool):
        raise ValueError("booleans are not integers here")
    if isinstance(v, int):
        return v
    if isinstance(v, str):
        return int(v)
    raise ValueError(f"expected integer or decimal string, got {v!r}")


@dataclass(frozen=True)
class PolynomialDocument:
    """``polynomial == coefficients / denominator`` with integer coefficients."""

    order: int
    denominator: int
    coefficients: Tuple[int, ...]
    factored: Optional[dict] = None

    @classmethod
    def from_polynomial(
        cls, order: int, p: Polynomial, form: Optional[FactoredForm] = None
    ) -> "PolynomialDocument":
        coeffs, den = common_denominator_form(p)
        coeffs = coeffs + (0,) * (order + 2 - len(coeffs))
        factored = None
        if form is not None:
            factored = {
                "factors": [[f.value, m] for f, m in form.mandated_factors],
                "residual": [_encode_int(c) for c in form.residual.coefficients],
                "denominator": _encode_int(form.denominator),
            }
        return cls(order, den, coeffs, factored)

    def to_polynomial(self) -> Polynomial:
        return from_integer_coefficients(self.coefficients, self.denominator)

    def to_dict(self) -> dict:
        out = {
            "N": self.order,
            "denominator": _encode_int(self.denominator),
            "coefficients": [_encode_int(c) for c in self.coefficients],
        }
        if self.factored is not None:
            out["factored"] = self.factored
        return out

    def dumps(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def loads(cls, text: str) -> "PolynomialDocument":
        data = json.loads(text)
        try:
            order = data["N"]
            den = _decode_int(data["denominator"])
            coeffs = tuple(_decode_int(c) for c in data["coefficients"])
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed polynomial document: {exc}") from exc
        if not isinstance(order, int) or order < 0:
            raise ValueError("N must be a nonnegative integer")
        if den <= 0:
            raise ValueError("denominator must be positive")
        if len(coeffs) != order + 2:
            raise ValueError(f"expected {order + 2} coefficients, got {len(coeffs)}")
        return cls(order, den, coeffs, data.get("factored"))


# -- golden corpus ---------------------------------------------------------


class GoldenFormatError(ValueError):
    pass


@dataclass(frozen=True)
class GoldenMismatch:
    order: int
    expected: str
    actual: str

    def describe(self) -> str:
        return f"N={self.order}\n  expected: {self.expected}\n  actual:   {self.actual}"


def load_golden(path: Union[str, Path] = DEFAULT_GOLDEN) -> Dict[int, str]:
    """Read ``N<TAB>factored-text`` records; blank lines are ignored."""
    path = Path(path)
    entries: Dict[int, str] = {}
    with path.open(encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.rstrip("\n")
            if not line.strip():
                continue
            key, sep, text = line.partition("\t")
            if not sep or not text or not key.isdigit():
                raise GoldenFormatError(f"{path}:{lineno}: expected 'N<TAB>text'")
            order = int(key)
            if order in entries:
                raise GoldenFormatError(f"{path}:{lineno}: duplicate entry for N={order}")
            entries[order] = text
    if not entries:
        raise GoldenFormatError(f"{path}: no entries")
    return entries


def compare_golden(table: FaulhaberTable, golden: Dict[int, str]) -> List[GoldenMismatch]:
    mismatches = []
    for order in sorted(golden):
        if order > table.max_order:
            actual = "<order beyond table>"
        else:
            try:
                actual = render_factored(structural_factor(table, order))
            except FactorizationError as exc:
                actual = f"<{exc.outcome.value}: {exc}>"
        if actual != golden[order]:
            mismatches.append(GoldenMismatch(order, golden[order], actual))
    return mismatches


def render_document(table: FaulhaberTable, order: int, factored: bool = False) -> str:
    form = structural_factor(table, order) if factored else None
    return PolynomialDocument.from_polynomial(order, faulhaber_poly(table, order), form).dumps()

"""Transcribe the MAPLE appendix of paper.md into the golden TSV corpus.

The appendix prints every s_{n,N} as a factored product over one integer
divisor.  This script parses that text with sympy (deliberately not with
``powersum`` itself), checks each parsed entry against the defining
property p(k) - p(k-1) = k^N, and writes the canonical factored rendering
used by ``powersum reproduce-appendix``.

Entries whose transcription fails the check are skipped and reported; the
extracted text is OCR output and the long entries carry line-break debris.

    python scripts/transcribe_appendix.py paper.md src/powersum/data/appendix_golden.tsv
"""
import argparse
import re
import sys

import sympy
from sympy.parsing.sympy_parser import (
    implicit_multiplication_application,
    parse_expr,
    standard_transformations,
)

n = sympy.Symbol("n")
TRANSFORMS = standard_transformations + (implicit_multiplication_application,)
HEADER = re.compile(r"s_\{n,\s*(\d+)\}\s*&?\s*:=\s*&?")


def appendix_chunks(text):
    text = text[text.index("[Appendix"):]
    heads = list(HEADER.finditer(text))
    for head, nxt in zip(heads, heads[1:] + [None]):
        end = nxt.start() if nxt else len(text)
        yield int(head.group(1)), text[head.end():end]


def clean(chunk, join_wrapped_digits=False):
    chunk = chunk.split("[>")[0]
    chunk = re.sub(r"\\(begin|end)\s*\{aligned\}", " ", chunk)
    for token in (r"\left", r"\right"):
        chunk = chunk.replace(token, " ")
    chunk = chunk.replace("$", " ")
    chunk = chunk.replace(r"\backslash", "@@").replace(r"\setminus", "@@")
    chunk = chunk.replace(r"\quad", " ").replace("\u2013", "-")
    chunk = chunk.replace("\\\\", " ")
    chunk = re.sub(r"\\\s", "@@", chunk)
    chunk = re.sub(r"@@[\s&]*", "", chunk)
    chunk = chunk.replace("&", " ").replace("\n", " ")
    if join_wrapped_digits:
        # wrapped long integers lose their continuation marker in places
        chunk = re.sub(r"(?<=\d)\s+(?=\d)", "", chunk)
    chunk = re.sub(r"\^\{\s*(\d+)\s*\}", r"**\1", chunk)
    chunk = re.sub(r"\^\s*(\d+)", r"**\1", chunk)
    chunk = re.sub(r"\\frac\{([^{}]*)\}\{([^{}]*)\}", r"(\1)/(\2)", chunk)
    if re.search(r"[^0-9n+\-*/() \t]", chunk):
        raise ValueError(f"unexpected characters in {chunk!r}")
    # a space between two digit runs means the line-joining heuristics failed
    if re.search(r"\d\s+\d", chunk):
        raise ValueError("split integer literal")
    return chunk.strip().rstrip(",;")


def satisfies_definition(poly, order):
    # degree <= N+1 plus N+3 matching differences pins the polynomial exactly
    if sympy.Poly(poly, n).degree() > order + 1:
        return False
    for k in range(1, order + 4):
        if poly.subs(n, k) - poly.subs(n, k - 1) != k**order:
            return False
    return poly.subs(n, 0) == (1 if order == 0 else 0)


def render_int_poly(coeffs):
    """Descending integer polynomial, e.g. ``3*n^2+3*n-1``."""
    out = []
    for power in range(len(coeffs) - 1, -1, -1):
        c = coeffs[power]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if power == 0:
            body = str(mag)
        else:
            var = "n" if power == 1 else f"n^{power}"
            body = var if mag == 1 else f"{mag}*{var}"
        out.append((sign, body))
    first_sign, first_body = out[0]
    text = ("-" if first_sign == "-" else "") + first_body
    return text + "".join(s + b for s, b in out[1:])


def canonical(poly, order):
    if order == 0:
        factors, divisor = [], sympy.Integer(1)
    elif order == 1:
        factors, divisor = ["n", "(n+1)"], n * (n + 1)
    elif order % 2 == 0:
        factors, divisor = ["n", "(n+1)", "(2*n+1)"], n * (n + 1) * (2 * n + 1)
    else:
        factors, divisor = ["n^2", "(n+1)^2"], n**2 * (n + 1) ** 2
    quotient, remainder = sympy.div(sympy.Poly(poly, n), sympy.Poly(divisor, n))
    if not remainder.is_zero:
        raise ValueError("mandated factors do not divide the entry")
    content, primitive = quotient.primitive()
    if primitive.LC() < 0:
        content, primitive = -content, -primitive
    num, den = sympy.fraction(sympy.nsimplify(content))
    if num != 1:
        raise ValueError(f"content {content} is not a unit fraction")
    coeffs = [int(c) for c in reversed(primitive.all_coeffs())]
    residual = render_int_poly(coeffs)
    if residual != "1":
        terms = sum(1 for c in coeffs if c)
        factors.append(residual if terms == 1 and not factors else
                       (f"({residual})" if terms > 1 and factors else residual))
    text = "*".join(factors)
    if den != 1:
        text += f"/{den}"
    return text


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("paper")
    parser.add_argument("output")
    args = parser.parse_args(argv)

    with open(args.paper, encoding="utf-8") as fh:
        text = fh.read()

    records, skipped = [], []
    for order, chunk in appendix_chunks(text):
        try:
            try:
                cleaned = clean(chunk)
            except ValueError as exc:
                if "split integer" not in str(exc):
                    raise
                cleaned = clean(chunk, join_wrapped_digits=True)
            expr = parse_expr(cleaned, local_dict={"n": n}, transformations=TRANSFORMS)
            poly = sympy.expand(expr)
            if not satisfies_definition(poly, order):
                raise ValueError("fails p(k) - p(k-1) = k^N")
            records.append((order, canonical(poly, order)))
        except Exception as exc:  # noqa: BLE001 - report and move on
            skipped.append((order, str(exc)[:100]))

    with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
        for order, rendered in sorted(records):
            fh.write(f"{order}\t{rendered}\n")
    print(f"wrote {len(records)} entries to {args.output}")
    for order, why in skipped:
        print(f"  skipped N={order}: {why}", file=sys.stderr)


if __name__ == "__main__":
    main()

"""The appendix transcription script: text cleanup and canonical rendering."""
import importlib.util
from pathlib import Path

import pytest

sympy = pytest.importorskip("sympy")

SCRIPT = Path(__file__).resolve().parents[1] / "scripts" / "transcribe_appendix.py"


@pytest.fixture(scope="module")
def tx():
    spec = importlib.util.spec_from_file_location("transcribe_appendix", SCRIPT)
    module = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(module)
    return module


def test_frac_and_exponents(tx):
    assert tx.clean(r"\frac{(n+1)(2n+1)n}{6}") == "((n+1)(2n+1)n)/(6)"


def test_continuation_markers_join_digits(tx):
    chunk = "(3n^{2} + 12\\backslash \\\\\n& 34n - 5\\setminus 6) n / 7 \\\\\n"
    assert tx.clean(chunk) == "(3n**2 + 1234n - 56) n / 7"


def test_split_literal_detected_then_joined(tx):
    chunk = "(n^2 + 12\n\n34) n"
    with pytest.raises(ValueError, match="split integer"):
        tx.clean(chunk)
    assert tx.clean(chunk, join_wrapped_digits=True) == "(n**2 + 1234) n"


def test_definition_check_and_canonical_form(tx):
    n = tx.n
    s4 = sympy.expand((n + 1) * (2 * n + 1) * (3 * n**2 + 3 * n - 1) * n / 30)
    assert tx.satisfies_definition(s4, 4)
    assert not tx.satisfies_definition(s4 + n**3, 4)
    assert tx.canonical(s4, 4) == "n*(n+1)*(2*n+1)*(3*n^2+3*n-1)/30"
    assert tx.canonical(sympy.expand(n * (n + 1) / 2), 1) == "n*(n+1)/2"
    assert tx.canonical(n + 1, 0) == "n+1"

"""Human-readable rendering of elements.

Coefficients are shown as signed products of brace brackets, for example
``-{3}_q{2}_q^2``, whenever such a factorization exists with ``k <= 8`` and
multiplicities ``<= 6``; anything else falls back to the raw Laurent form
in parentheses.
"""

from __future__ import annotations

from functools import lru_cache
from typing import List, Optional, Tuple

from .laurent import LaurentPoly, NonDivisibleError, exact_div, format_laurent, q_brace

MAX_BRACE = 8
MAX_MULT = 6


def _span(p: LaurentPoly) -> int:
    return p.degree - p.valuation


def brace_factorization(c: LaurentPoly, max_k: int = MAX_BRACE, max_mult: int = MAX_MULT) -> Optional[Tuple[int, List[Tuple[int, int]]]]:
    """Write ``c`` as ``sign * prod {k}_q^m``; returns ``(sign, [(k, m), ...])`` or None.

    Factors are listed with ``k`` descending.  The search tries large
    brackets first and backtracks, bounded by the degree span of ``c``.
    """
    if not c:
        return None
    return _factor(c, max_k, max_mult)


@lru_cache(maxsize=4096)
def _factor(c: LaurentPoly, max_k: int, max_mult: int):
    if c == 1:
        return 1, []
    if c == -1:
        return -1, []
    span = _span(c)
    for k in range(max_k, 1, -1):
        b = q_brace(k)
        step = _span(b)
        if step > span:
            continue
        rest = c
        for m in range(1, max_mult + 1):
            if step * m > span:
                break
            try:
                rest = exact_div(rest, b)
            except NonDivisibleError:
                break
            found = _factor(rest, k - 1, max_mult)
            if found is not None:
                sign, tail = found
                return sign, [(k, m)] + tail
    return None


def format_coefficient(c: LaurentPoly, braces: bool = True) -> Tuple[int, str]:
    """Split ``c`` into a sign and an unsigned body ("" means the body is 1)."""
    if braces:
        found = brace_factorization(c)
        if found is not None:
            sign, factors = found
            body = "".join(f"{{{k}}}_q" + (f"^{m}" if m > 1 else "") for k, m in factors)
            return sign, body
    if c.is_monomial():
        (e, a), = c.terms()
        sign = -1 if a < 0 else 1
        mag = abs(a)
        if e == 0:
            return sign, "" if mag == 1 else str(mag)
        return sign, format_laurent(LaurentPoly.monomial(e, mag))
    return 1, f"({format_laurent(c)})"


def format_element(e, braces: bool = True) -> str:
    """Terms in canonical word order, e.g. ``{2}_q^2 xyxy - {3}_q{2}_q^2 xxyy``."""
    if not e:
        return "0"
    parts = []
    for w, c in e.items():
        sign, body = format_coefficient(c, braces)
        word = w or "1"
        if body and w:
            term = f"{body} {word}"
        elif body:
            term = body
        else:
            term = word
        if not parts:
            parts.append(f"-{term}" if sign < 0 else term)
        else:
            parts.append(f"- {term}" if sign < 0 else f"+ {term}")
    return " ".join(parts)

"""Catalan coefficients and Catalan elements of the shuffle superalgebra.

The coefficient of a Catalan word ``w`` of length ``2n`` is defined
recursively over the Catalan words ``v`` of length ``2n - 2`` from which
``w`` arises by inserting an ``x`` at position ``i`` and appending ``y``::

    C(w) = sum over (v, i) of C(v) * (-1)^i * {2 + 2 * (weight of v[:i])}_q

with ``C(empty) = 1``.  The ``n``-th Catalan element is ``sum C(w) w`` over
Catalan words of length ``2n``.
"""

from __future__ import annotations

import enum
import threading
from typing import Dict, List, Tuple

from .freealg import ONE, FreeElement, X, Y, concat, fe_bilinear_form, linear_combination
from .laurent import ONE as LP_ONE
from .laurent import Q, Q_INV, Q_PLUS, LaurentPoly, q_brace, q_bracket
from .shuffle import SUPER, shuffle_elems
from .words import bar_prefix_sums, check_length, enumerate_catalan, is_balanced, is_catalan, validate_word, weight


class NotCatalanError(ValueError):
    """The word is not a Catalan word."""


class CatalanCache:
    """Append-only caches for coefficients and elements."""

    def __init__(self):
        self.coeffs: Dict[str, LaurentPoly] = {"": LP_ONE}
        self.elements: Dict[int, FreeElement] = {0: ONE}
        self._lock = threading.Lock()

    def clear(self) -> None:
        with self._lock:
            self.coeffs = {"": LP_ONE}
            self.elements = {0: ONE}


CACHE = CatalanCache()


def _require_catalan(w: str) -> None:
    validate_word(w)
    if not is_catalan(w):
        raise NotCatalanError(f"{w!r} is not a Catalan word")


def insertion_parents(w: str) -> List[Tuple[str, int]]:
    """All ``(v, i)`` with ``v`` Catalan and ``w == v[:i] + "x" + v[i:] + "y"``."""
    if not w or w[-1] != "y":
        return []
    out = []
    for i in range(len(w) - 1):
        if w[i] == "x":
            v = w[:i] + w[i + 1 : -1]
            if is_catalan(v):
                out.append((v, i))
    return out


def _insertion_scalar(v: str, i: int) -> LaurentPoly:
    s = 2 + 2 * weight(v[:i])
    b = q_brace(s)
    return -b if i % 2 else b


def catalan_coeff(w: str, cache: bool = True) -> LaurentPoly:
    """The Catalan coefficient of ``w`` via the insertion recursion."""
    _require_catalan(w)
    return _coeff(w, cache)


def _coeff(w: str, cache: bool) -> LaurentPoly:
    if cache:
        hit = CACHE.coeffs.get(w)
        if hit is not None:
            return hit
    elif not w:
        return LP_ONE
    total = LaurentPoly()
    # lengths shrink by 2 per level, so the recursion depth is at most n
    for v, i in insertion_parents(w):
        total = total + _coeff(v, cache) * _insertion_scalar(v, i)
    if cache:
        CACHE.coeffs[w] = total
    return total


def catalan_element(n: int, cache: bool = True) -> FreeElement:
    """The ``n``-th Catalan element, supported on the Catalan words of length ``2n``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    check_length(2 * n)
    if cache:
        hit = CACHE.elements.get(n)
        if hit is not None:
            return hit
    terms = {}
    for w in enumerate_catalan(n):
        c = _coeff(w, cache)
        if c:
            terms[w] = c
    e = FreeElement._wrap(terms)
    if cache:
        CACHE.elements[n] = e
    return e


class Flank(str, enum.Enum):
    X_LEFT = "x_left"
    Y_RIGHT = "y_right"
    BOTH = "both"


def catalan_flank(n: int, mode: Flank) -> FreeElement:
    mode = Flank(mode)
    check_length(2 * n + (2 if mode is Flank.BOTH else 1))
    c = catalan_element(n)
    if mode is Flank.X_LEFT:
        return concat(X, c)
    if mode is Flank.Y_RIGHT:
        return concat(c, Y)
    return concat(concat(X, c), Y)


def x_catalan(n: int) -> FreeElement:
    return catalan_flank(n, Flank.X_LEFT)


def catalan_y(n: int) -> FreeElement:
    return catalan_flank(n, Flank.Y_RIGHT)


def x_catalan_y(n: int) -> FreeElement:
    return catalan_flank(n, Flank.BOTH)


# -- insertion form -------------------------------------------------------------

def insertion_by_shuffle(v: str) -> FreeElement:
    """``(q x * (vy) + q^-1 (vy) * x) / (q + q^-1)`` under the super shuffle."""
    vy = FreeElement._wrap({v + "y": LP_ONE})
    num = shuffle_elems(X, vy, SUPER).scale(Q) + shuffle_elems(vy, X, SUPER).scale(Q_INV)
    return num.exact_div(Q_PLUS)


def insertion_closed_form(v: str) -> FreeElement:
    """``-q^-1 sum_i (-1)^i {2 + 2 weight(v[:i])}_q  v[:i] x v[i:] y`` for balanced ``v``."""
    validate_word(v)
    if not is_balanced(v):
        raise ValueError(f"{v!r} is not balanced")
    pairs = []
    for i in range(len(v) + 1):
        w = v[:i] + "x" + v[i:] + "y"
        pairs.append((_insertion_scalar(v, i), FreeElement._wrap({w: LP_ONE})))
    return linear_combination(pairs).scale(-Q_INV)


def catalan_coeff_via_form(w: str) -> LaurentPoly:
    """The Catalan coefficient through the bilinear form and the insertion shuffle."""
    _require_catalan(w)
    if not w:
        return LP_ONE
    n = len(w) // 2
    target = FreeElement._wrap({w: LP_ONE})
    total = LaurentPoly()
    for v in enumerate_catalan(n - 1):
        total = total + catalan_coeff(v) * fe_bilinear_form(insertion_by_shuffle(v), target)
    return -Q * total


def terwilliger_coeff(w: str) -> LaurentPoly:
    """Product of ``[1 + prefix weight]_q`` over all prefixes, including the empty one.

    Only provided for comparison with the non-super case; nothing here
    relies on it.
    """
    _require_catalan(w)
    result = q_bracket(1)
    for s in bar_prefix_sums(w):
        result = result * q_bracket(1 + s)
    return result

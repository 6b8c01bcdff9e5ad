"""Root vectors of Damiani and Beck type, as elements of the shuffle superalgebra.

Everything is expressed through the images ``A -> x`` and ``B -> y`` of the
two generators, with the super shuffle as the product.  Real roots
``n delta + alpha_i`` are odd and ``n delta`` is even, so every bracket in
the real-root recursion is a plain commutator.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Dict, List, Mapping, Sequence, Tuple

from .catalan import catalan_element, x_catalan, x_catalan_y, catalan_y
from .freealg import ONE, ZERO, FreeElement, X, Y, linear_combination
from .laurent import Q_MINUS, Q_PLUS, LaurentPoly, q_brace, q_power
from .shuffle import SUPER, shuffle_elems, shuffle_power
from .words import check_length

Q_INV2 = q_power(-2)


def _sh(a: FreeElement, b: FreeElement) -> FreeElement:
    return shuffle_elems(a, b, SUPER)


@dataclass
class RootVectorSet:
    """Generator families indexed by ``n``; ``imag`` and ``imag_beck`` start at 1."""

    real0: Dict[int, FreeElement] = field(default_factory=dict)
    real1: Dict[int, FreeElement] = field(default_factory=dict)
    imag: Dict[int, FreeElement] = field(default_factory=dict)
    imag_beck: Dict[int, FreeElement] = field(default_factory=dict)


def imaginary_delta() -> FreeElement:
    """The image of ``q^-2 BA + AB``."""
    return _sh(Y, X).scale(Q_INV2) + _sh(X, Y)


def damiani_generators(n_max: int) -> RootVectorSet:
    """Real roots up to ``n_max`` and imaginary roots ``1..n_max`` by recursion."""
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    check_length(2 * n_max + 1)
    out = RootVectorSet(real0={0: X}, real1={0: Y})
    if n_max == 0:
        return out
    ed = imaginary_delta()
    out.imag[1] = ed
    for n in range(1, n_max + 1):
        r0 = out.real0[n - 1]
        r1 = out.real1[n - 1]
        out.real0[n] = (_sh(r0, ed) - _sh(ed, r0)).exact_div(Q_MINUS)
        out.real1[n] = (_sh(ed, r1) - _sh(r1, ed)).exact_div(Q_MINUS)
        if n >= 2:
            r1 = out.real1[n - 1]
            out.imag[n] = _sh(r1, X).scale(Q_INV2) + _sh(X, r1)
    return out


def damiani_imag_alt(n: int, gens: RootVectorSet = None) -> FreeElement:
    """Imaginary root ``n`` through the alpha_0 family: ``q^-2 y * E + E * y``."""
    if n < 1:
        raise ValueError("imaginary roots start at n = 1")
    if gens is None or (n - 1) not in gens.real0:
        gens = damiani_generators(n - 1)
    r0 = gens.real0[n - 1]
    return _sh(Y, r0).scale(Q_INV2) + _sh(r0, Y)


# -- Schur relations ------------------------------------------------------------

def partitions_weighted(n: int) -> List[Tuple[int, ...]]:
    """Multiplicity vectors ``(p_1, ..., p_n)`` with ``sum i p_i = n``.

    Ordered by ``p_1`` descending, then ``p_2`` descending, and so on.
    """
    if n < 1:
        raise ValueError("n must be positive")
    out: List[Tuple[int, ...]] = []

    def walk(i: int, rest: int, acc: List[int]) -> None:
        if i > n:
            if rest == 0:
                out.append(tuple(acc))
            return
        for p in range(rest // i, -1, -1):
            acc.append(p)
            walk(i + 1, rest - i * p, acc)
            acc.pop()

    walk(1, n, [])
    return out


def _monomial_product(p: Sequence[int], family: Mapping[int, FreeElement]) -> FreeElement:
    result = ONE
    for i, k in enumerate(p, 1):
        if k:
            result = _sh(result, shuffle_power(family[i], k, SUPER))
    return result


def _schur_sum(n: int, family: Mapping[int, FreeElement], sign: int, with_factorial: bool) -> FreeElement:
    pairs = []
    base = Q_PLUS if sign > 0 else -Q_PLUS
    for p in partitions_weighted(n):
        s = sum(p)
        c = Fraction(factorial(s - 1) if with_factorial else 1)
        for k in p:
            c /= factorial(k)
        pairs.append((base ** (s - 1) * c, _monomial_product(p, family)))
    return linear_combination(pairs)


def beck_from_damiani(n: int, imag: Mapping[int, FreeElement]) -> FreeElement:
    """Beck imaginary root ``n`` as a polynomial in the Damiani ones."""
    return _schur_sum(n, imag, +1, True)


def damiani_from_beck(n: int, beck: Mapping[int, FreeElement]) -> FreeElement:
    """Inverse of :func:`beck_from_damiani`."""
    return _schur_sum(n, beck, -1, False)


def beck_generators(n_max: int) -> Dict[int, FreeElement]:
    gens = damiani_generators(n_max)
    return {n: beck_from_damiani(n, gens.imag) for n in range(1, n_max + 1)}


def shuffle_exp_truncated(series: Mapping[int, FreeElement], order: int) -> Dict[int, FreeElement]:
    """``exp`` of a series ``sum_k series[k] t^k`` (no constant term), cut at ``t^order``.

    Products of coefficients are super shuffles.  The result maps each
    ``t``-degree ``0..order`` to its coefficient.
    """
    if order < 0:
        raise ValueError("order must be nonnegative")
    if 0 in series and series[0]:
        raise ValueError("the exponent series must have no constant term")
    result: Dict[int, FreeElement] = {d: ZERO for d in range(order + 1)}
    result[0] = ONE
    power: Dict[int, FreeElement] = {0: ONE}
    for m in range(1, order + 1):
        nxt: Dict[int, FreeElement] = {}
        for d, a in power.items():
            for k, s in series.items():
                if k >= 1 and d + k <= order and s:
                    nxt[d + k] = nxt.get(d + k, ZERO) + _sh(a, s)
        power = nxt
        inv = Fraction(1, factorial(m))
        for d, a in power.items():
            result[d] = result[d] + a.scale(inv)
    return result


def exp_exponent_series(order: int) -> Dict[int, FreeElement]:
    """``k -> -({2k}_q / k) (-1)^k x C_{k-1} y``, the exponent whose exp gives the Catalan series."""
    out = {}
    for k in range(1, order + 1):
        c = q_brace(2 * k) * Fraction(-((-1) ** k), k)
        out[k] = x_catalan_y(k - 1).scale(c)
    return out


# -- closed forms -----------------------------------------------------------------

class RootKind(str, enum.Enum):
    REAL0 = "real0"
    REAL1 = "real1"
    IMAG = "imag"


def real_root_scalar(n: int) -> LaurentPoly:
    """``q^-2n (q + q^-1)^2n``."""
    return q_power(-2 * n) * Q_PLUS ** (2 * n)


def imag_root_scalar(n: int) -> LaurentPoly:
    """``-q^-2n (q + q^-1)^(2n-1)``."""
    return -(q_power(-2 * n) * Q_PLUS ** (2 * n - 1))


def beck_root_scalar(n: int) -> LaurentPoly:
    """``(-1)^n ({2n}_q / n) q^-2n (q + q^-1)^(2n-1)``."""
    return q_brace(2 * n) * Fraction((-1) ** n, n) * q_power(-2 * n) * Q_PLUS ** (2 * n - 1)


def theorem1_closed_form(n: int, kind: RootKind) -> FreeElement:
    """Catalan closed form of the Damiani root vectors."""
    kind = RootKind(kind)
    if n < 0:
        raise ValueError("n must be nonnegative")
    if kind is RootKind.REAL0:
        return x_catalan(n).scale(real_root_scalar(n))
    if kind is RootKind.REAL1:
        return catalan_y(n).scale(real_root_scalar(n))
    if n < 1:
        raise ValueError("imaginary roots start at n = 1")
    return catalan_element(n).scale(imag_root_scalar(n))


def theorem2_closed_form(n: int) -> FreeElement:
    """Catalan closed form of the Beck imaginary root vectors."""
    if n < 1:
        raise ValueError("Beck roots start at n = 1")
    return x_catalan_y(n - 1).scale(beck_root_scalar(n))

"""Exact Laurent polynomials in ``q`` over the rationals, plus q-bracket scalars.

A :class:`LaurentPoly` is an immutable sparse map ``exponent -> coefficient``.
Coefficients are Python ``int`` or :class:`fractions.Fraction`; integral
fractions are stored as ``int`` so that the common case stays fast.
"""

from __future__ import annotations

import numbers
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, Mapping, Tuple, Union

Rational = Union[int, Fraction]
Scalar = Union[int, Fraction, "LaurentPoly"]


class NonDivisibleError(ArithmeticError):
    """Raised when an exact division leaves a nonzero remainder.

    ``remainder`` holds what was left over (a :class:`LaurentPoly`, or a
    :class:`~qcatalan.freealg.FreeElement` when dividing an element).
    """

    def __init__(self, message: str, remainder=None):
        super().__init__(message)
        self.remainder = remainder


def _norm(c) -> Rational:
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, numbers.Rational):
        return _norm(Fraction(c.numerator, c.denominator))
    raise TypeError(f"coefficient must be rational, got {type(c).__name__}")


class LaurentPoly:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Union[Mapping[int, Rational], Rational, None] = None):
        if terms is None:
            t: Dict[int, Rational] = {}
        elif isinstance(terms, Mapping):
            t = {}
            for e, c in terms.items():
                c = _norm(c)
                if c:
                    t[int(e)] = c
        else:
            c = _norm(terms)
            t = {0: c} if c else {}
        self._terms = t
        self._hash = None

    @classmethod
    def _wrap(cls, terms: Dict[int, Rational]) -> "LaurentPoly":
        # trusted constructor: terms already normalized and zero-free
        p = object.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def monomial(cls, exponent: int, coeff: Rational = 1) -> "LaurentPoly":
        return cls({exponent: coeff})

    # -- inspection -----------------------------------------------------
    def terms(self) -> Tuple[Tuple[int, Rational], ...]:
        """Canonical form: ``(exponent, coefficient)`` pairs sorted by exponent."""
        return tuple(sorted(self._terms.items()))

    def coeff(self, exponent: int) -> Rational:
        return self._terms.get(exponent, 0)

    def as_dict(self) -> Dict[int, Rational]:
        return dict(self._terms)

    @property
    def degree(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return max(self._terms)

    @property
    def valuation(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no valuation")
        return min(self._terms)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self._terms.values())

    def evaluate(self, value: Rational) -> Fraction:
        """Exact value at a nonzero rational ``q``."""
        v = Fraction(value)
        return sum((Fraction(c) * v**e for e, c in self._terms.items()), Fraction(0))

    def substitute_neg_inverse(self) -> "LaurentPoly":
        """Apply ``q -> -q^{-1}``: exponent ``e`` goes to ``-e`` with sign ``(-1)^e``."""
        return LaurentPoly._wrap({-e: (-c if e % 2 else c) for e, c in self._terms.items()})

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by ``q^k``."""
        return LaurentPoly._wrap({e + k: c for e, c in self._terms.items()})

    # -- arithmetic -----------------------------------------------------
    @staticmethod
    def _coerce(other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, numbers.Rational):
            return LaurentPoly(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return LaurentPoly._wrap(_add(self._terms, other._terms))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return LaurentPoly._wrap(_add(self._terms, other._terms, -1))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __neg__(self):
        return LaurentPoly._wrap({e: -c for e, c in self._terms.items()})

    def __pos__(self):
        return self

    def __mul__(self, other):
        if isinstance(other, LaurentPoly):
            return LaurentPoly._wrap(_mul(self._terms, other._terms))
        if isinstance(other, numbers.Rational):
            c = _norm(other)
            if not c:
                return ZERO
            return LaurentPoly._wrap({e: _norm(v * c) for e, v in self._terms.items()})
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, numbers.Rational):
            if other == 0:
                raise ZeroDivisionError("division of a Laurent polynomial by zero")
            return self * (1 / Fraction(other))
        if isinstance(other, LaurentPoly):
            return exact_div(self, other)
        return NotImplemented

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("only nonnegative integer powers are supported")
        if self.is_monomial():
            (e, c), = self._terms.items()
            return LaurentPoly._wrap({e * k: _norm(c**k)})
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- comparison / hashing -------------------------------------------
    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self._terms == other._terms
        if isinstance(other, numbers.Rational):
            return self._terms == ({0: _norm(other)} if other else {})
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    def __repr__(self):
        return f"LaurentPoly({dict(self.terms())!r})"

    def __str__(self):
        return format_laurent(self)

    # -- serialization --------------------------------------------------
    def to_json(self) -> Dict[str, str]:
        """``{"<exponent>": "<num>/<den>"}`` in ascending exponent order."""
        out = {}
        for e, c in self.terms():
            f = Fraction(c)
            out[str(e)] = f"{f.numerator}/{f.denominator}"
        return out

    @classmethod
    def from_json(cls, data: Mapping[str, str]) -> "LaurentPoly":
        return cls({int(e): Fraction(v) for e, v in data.items()})


# -- raw-dict kernels (shared with freealg / shuffle) --------------------

def _add(a: Mapping[int, Rational], b: Mapping[int, Rational], sign: int = 1) -> Dict[int, Rational]:
    r = dict(a)
    for e, c in b.items():
        v = r.get(e, 0) + (c if sign == 1 else -c)
        if v:
            r[e] = _norm(v) if isinstance(v, Fraction) else v
        else:
            r.pop(e, None)
    return r


def _mul(a: Mapping[int, Rational], b: Mapping[int, Rational]) -> Dict[int, Rational]:
    if len(a) == 1:
        (e0, c0), = a.items()
        return {e0 + e: _norm(c0 * c) for e, c in b.items()}
    if len(b) == 1:
        (e0, c0), = b.items()
        return {e0 + e: _norm(c0 * c) for e, c in a.items()}
    r: Dict[int, Rational] = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            e = e1 + e2
            r[e] = r.get(e, 0) + c1 * c2
    return {e: _norm(c) for e, c in r.items() if c}


def exact_div(num: LaurentPoly, den: LaurentPoly) -> LaurentPoly:
    """Quotient of ``num`` by ``den`` in the Laurent ring.

    Raises :class:`NonDivisibleError` (carrying the remainder) when ``den``
    does not divide ``num``.
    """
    if not den:
        raise ZeroDivisionError("division by the zero Laurent polynomial")
    if not num:
        return ZERO
    # strip q-powers, then ordinary long division from the top degree
    vn, vd = num.valuation, den.valuation
    n = {e - vn: Fraction(c) for e, c in num._terms.items()}
    d = {e - vd: c for e, c in den._terms.items()}
    dd = max(d)
    lead = Fraction(d[dd])
    quot: Dict[int, Rational] = {}
    while n:
        top = max(n)
        if top < dd:
            break
        k = top - dd
        c = n[top] / lead
        quot[k] = _norm(c)
        for e, dc in d.items():
            v = n.get(e + k, 0) - c * dc
            if v:
                n[e + k] = v
            else:
                n.pop(e + k, None)
    if n:
        rem = LaurentPoly({e + vn: c for e, c in n.items()})
        raise NonDivisibleError(f"{format_laurent(den)} does not divide {format_laurent(num)}", rem)
    return LaurentPoly._wrap({e + vn - vd: c for e, c in quot.items()})


lp_exact_div = exact_div


def format_laurent(p: LaurentPoly, var: str = "q") -> str:
    """Plain text such as ``q^-2 - 1 + q^2`` (ascending exponents)."""
    if not p._terms:
        return "0"
    parts = []
    for i, (e, c) in enumerate(p.terms()):
        neg = c < 0
        a = -c if neg else c
        if e == 0:
            body = str(a)
        else:
            mono = var if e == 1 else f"{var}^{e}"
            if a == 1:
                body = mono
            elif isinstance(a, Fraction):
                body = f"({a})*{mono}"
            else:
                body = f"{a}*{mono}"
        if i == 0:
            parts.append(f"-{body}" if neg else body)
        else:
            parts.append(f"- {body}" if neg else f"+ {body}")
    return " ".join(parts)


ZERO = LaurentPoly()
ONE = LaurentPoly(1)
Q = LaurentPoly.monomial(1)
Q_INV = LaurentPoly.monomial(-1)
#: q + q^{-1}
Q_PLUS = Q + Q_INV
#: q - q^{-1}
Q_MINUS = Q - Q_INV


def q_power(e: int, coeff: Rational = 1) -> LaurentPoly:
    return LaurentPoly.monomial(e, coeff)


@lru_cache(maxsize=None)
def q_brace(n: int) -> LaurentPoly:
    """The brace bracket ``{n}_q = (q^{-n} - (-1)^n q^n) / (q + q^{-1})``.

    The formula makes sense for every integer ``n``; negative values show
    up when inserting letters into balanced words that dip below zero.
    """
    num = LaurentPoly({-n: 1}) - LaurentPoly({n: -1 if n % 2 else 1})
    return exact_div(num, Q_PLUS)


@lru_cache(maxsize=None)
def q_bracket(n: int) -> LaurentPoly:
    """The usual quantum integer ``[n]_q = (q^n - q^{-n}) / (q - q^{-1})``."""
    if n < 0:
        return -q_bracket(-n)
    num = LaurentPoly({n: 1}) - LaurentPoly({-n: 1})
    return exact_div(num, Q_MINUS)


def as_laurent(c: Scalar) -> LaurentPoly:
    if isinstance(c, LaurentPoly):
        return c
    return LaurentPoly(c)


def product(factors: Iterable[LaurentPoly]) -> LaurentPoly:
    r = ONE
    for f in factors:
        r = r * f
    return r

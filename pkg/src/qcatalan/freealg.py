"""Elements of the free algebra on {x, y} with Laurent coefficients.

``a * b`` between two :class:`FreeElement` objects is the concatenation
(free) product; multiplying by an ``int``, ``Fraction`` or
:class:`~qcatalan.laurent.LaurentPoly` scales.  Shuffle products live in
:mod:`qcatalan.shuffle`.
"""

from __future__ import annotations

import numbers
from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, List, Mapping, Tuple, Union

from .laurent import (
    LaurentPoly,
    NonDivisibleError,
    Scalar,
    ZERO as LP_ZERO,
    _add,
    _mul,
    as_laurent,
    exact_div,
)
from .words import check_length, reverse_swap, validate_word, word_order_key


class FreeElement:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Union[Mapping[str, Scalar], Iterable[Tuple[str, Scalar]], None] = None):
        t: Dict[str, LaurentPoly] = {}
        if terms is not None:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for w, c in items:
                validate_word(w)
                check_length(len(w))
                c = as_laurent(c)
                if w in t:
                    c = t[w] + c
                if c:
                    t[w] = c
                else:
                    t.pop(w, None)
        self._terms = t
        self._hash = None

    @classmethod
    def _wrap(cls, terms: Dict[str, LaurentPoly]) -> "FreeElement":
        e = object.__new__(cls)
        e._terms = terms
        e._hash = None
        return e

    @classmethod
    def word(cls, w: str, coeff: Scalar = 1) -> "FreeElement":
        return cls({w: coeff})

    # -- inspection -----------------------------------------------------
    def coefficient(self, w: str) -> LaurentPoly:
        return self._terms.get(w, LP_ZERO)

    def items(self) -> List[Tuple[str, LaurentPoly]]:
        """Terms in canonical word order."""
        return sorted(self._terms.items(), key=lambda kv: word_order_key(kv[0]))

    def support(self) -> List[str]:
        return sorted(self._terms, key=word_order_key)

    def terms_dict(self) -> Dict[str, LaurentPoly]:
        return dict(self._terms)

    def degrees(self) -> List[int]:
        return sorted({len(w) for w in self._terms})

    def is_homogeneous(self) -> bool:
        return len({len(w) for w in self._terms}) <= 1

    def __len__(self):
        return len(self._terms)

    def __iter__(self) -> Iterator[str]:
        return iter(self.support())

    def __contains__(self, w):
        return w in self._terms

    # -- linear structure -----------------------------------------------
    def __add__(self, other):
        if not isinstance(other, FreeElement):
            if isinstance(other, (numbers.Rational, LaurentPoly)):
                other = FreeElement({"": other})
            else:
                return NotImplemented
        return FreeElement._wrap(_merge(self._terms, other._terms, 1))

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, FreeElement):
            if isinstance(other, (numbers.Rational, LaurentPoly)):
                other = FreeElement({"": other})
            else:
                return NotImplemented
        return FreeElement._wrap(_merge(self._terms, other._terms, -1))

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return FreeElement._wrap({w: -c for w, c in self._terms.items()})

    def scale(self, c: Scalar) -> "FreeElement":
        c = as_laurent(c)
        if not c:
            return ZERO
        out = {}
        for w, p in self._terms.items():
            v = LaurentPoly._wrap(_mul(p._terms, c._terms))
            if v:
                out[w] = v
        return FreeElement._wrap(out)

    def __mul__(self, other):
        if isinstance(other, FreeElement):
            return concat(self, other)
        if isinstance(other, (numbers.Rational, LaurentPoly)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (numbers.Rational, LaurentPoly)):
            return self.scale(other)
        return NotImplemented

    def exact_div(self, den: Scalar) -> "FreeElement":
        """Divide every coefficient by ``den``.

        Raises :class:`NonDivisibleError` whose ``remainder`` is the element
        of per-word remainders.
        """
        den = as_laurent(den)
        out: Dict[str, LaurentPoly] = {}
        rem: Dict[str, LaurentPoly] = {}
        for w, p in self._terms.items():
            try:
                out[w] = exact_div(p, den)
            except NonDivisibleError as err:
                rem[w] = err.remainder
        if rem:
            raise NonDivisibleError(
                f"{len(rem)} coefficient(s) not divisible by {den}", FreeElement._wrap(rem)
            )
        return FreeElement._wrap(out)

    def __truediv__(self, den):
        if isinstance(den, (numbers.Rational, LaurentPoly)):
            return self.exact_div(den)
        return NotImplemented

    # -- structure maps ---------------------------------------------------
    def zeta(self) -> "FreeElement":
        return fe_zeta(self)

    def grade(self, n: int) -> "GradedComponent":
        return fe_grade_project(self, n)

    # -- comparison -------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, FreeElement):
            return self._terms == other._terms
        if isinstance(other, (numbers.Rational, LaurentPoly)):
            return self == FreeElement({"": other})
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    def __repr__(self):
        inner = ", ".join(f"{w or '1'!s}: {c}" for w, c in self.items())
        return f"FreeElement({{{inner}}})"

    def __str__(self):
        from .pretty import format_element

        return format_element(self, braces=False)

    # -- serialization ----------------------------------------------------
    def to_json(self) -> List[dict]:
        return [{"word": w, "coeff": c.to_json()} for w, c in self.items()]

    @classmethod
    def from_json(cls, data: Iterable[Mapping]) -> "FreeElement":
        return cls([(d["word"], LaurentPoly.from_json(d["coeff"])) for d in data])


def _merge(a: Mapping[str, LaurentPoly], b: Mapping[str, LaurentPoly], sign: int) -> Dict[str, LaurentPoly]:
    r = dict(a)
    for w, p in b.items():
        old = r.get(w)
        if old is None:
            r[w] = p if sign == 1 else -p
            continue
        v = _add(old._terms, p._terms, sign)
        if v:
            r[w] = LaurentPoly._wrap(v)
        else:
            del r[w]
    return r


def linear_combination(pairs: Iterable[Tuple[Scalar, FreeElement]]) -> FreeElement:
    """``sum(c * e for c, e in pairs)`` without the intermediate objects."""
    acc: Dict[str, Dict[int, object]] = {}
    for c, e in pairs:
        c = as_laurent(c)
        if not c:
            continue
        for w, p in e._terms.items():
            prod = _mul(p._terms, c._terms)
            old = acc.get(w)
            acc[w] = prod if old is None else _add(old, prod)
    return FreeElement._wrap({w: LaurentPoly._wrap(t) for w, t in acc.items() if t})


ZERO = FreeElement()
ONE = FreeElement({"": 1})
X = FreeElement({"x": 1})
Y = FreeElement({"y": 1})


def concat(a: FreeElement, b: FreeElement) -> FreeElement:
    """Bilinear extension of word concatenation."""
    if not a or not b:
        return ZERO
    check_length(max(map(len, a._terms)) + max(map(len, b._terms)))
    if len(a._terms) == 1 and len(b._terms) == 1:
        (u, p), = a._terms.items()
        (v, r), = b._terms.items()
        return FreeElement._wrap({u + v: p * r})
    out: Dict[str, Dict] = {}
    for u, p in a._terms.items():
        for v, r in b._terms.items():
            prod = _mul(p._terms, r._terms)
            w = u + v
            old = out.get(w)
            out[w] = prod if old is None else _add(old, prod)
    return FreeElement._wrap({w: LaurentPoly._wrap(t) for w, t in out.items() if t})


fe_concat_mul = concat


def fe_bilinear_form(a: FreeElement, b: FreeElement) -> LaurentPoly:
    """The form for which distinct words are orthonormal."""
    if len(a._terms) > len(b._terms):
        a, b = b, a
    acc: Dict[int, object] = {}
    for w, p in a._terms.items():
        r = b._terms.get(w)
        if r is not None:
            acc = _add(acc, _mul(p._terms, r._terms))
    return LaurentPoly._wrap(acc)


bilinear_form = fe_bilinear_form


def fe_zeta(a: FreeElement) -> FreeElement:
    """Reverse every word and swap x with y; coefficients unchanged."""
    return FreeElement._wrap({reverse_swap(w): p for w, p in a._terms.items()})


@dataclass(frozen=True)
class GradedComponent:
    degree: int
    element: FreeElement

    def __post_init__(self):
        if self.degree < 0:
            raise ValueError("degree must be nonnegative")
        off = [w for w in self.element._terms if len(w) != self.degree]
        if off:
            raise ValueError(f"words {off[:3]} do not have length {self.degree}")


def fe_grade_project(a: FreeElement, n: int) -> GradedComponent:
    if n < 0:
        raise ValueError("degree must be nonnegative")
    return GradedComponent(n, FreeElement._wrap({w: p for w, p in a._terms.items() if len(w) == n}))


grade_project = fe_grade_project

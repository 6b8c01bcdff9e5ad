"""Registry of machine-checked identities and the suite runner.

Each family evaluates ``LHS - RHS`` exactly, in the form the identity is
stated, without moving terms across or clearing denominators.  A family
may also evaluate alternative forms ("variants") of the same identity;
those are recorded in the report but only decide the outcome when the
family's policy is ``"unique"`` (pass iff exactly one variant vanishes).

Families whose statement holds for a whole list of inputs (every balanced
word, every pair of flanking words) fold the individual residuals into one
element by prefixing each with a tag word, so distinct inputs never cancel.
"""

from __future__ import annotations

import fnmatch
import itertools
import json
import re
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from . import catalan as cat
from . import pbw
from .freealg import ONE, ZERO, FreeElement, X, Y, concat, fe_bilinear_form, fe_zeta
from .laurent import ONE as LP_ONE
from .laurent import Q, Q_INV, Q_MINUS, Q_PLUS, LaurentPoly, NonDivisibleError, q_brace, q_power
from .shuffle import ADMISSIBLE, SUPER, shuffle, shuffle_elems
from .words import all_words, is_balanced

Q2_MINUS = q_power(2) - q_power(-2)
ADM_SERRE = LaurentPoly({0: 1, 2: -1, -2: -1})


class SelectorError(ValueError):
    """The selector names no known family or alias."""


@dataclass(frozen=True)
class IdentityCase:
    family: str
    params: Tuple
    braiding: str
    degree: int
    label: str

    @property
    def id(self) -> str:
        inner = ",".join(str(p) for p in self.params)
        return f"{self.family}({inner})"


@dataclass
class VerifyReport:
    """Outcome of one case.

    ``residual`` is ``LHS - RHS`` of the deciding form (the first vanishing
    variant under the ``"unique"`` policy); it is ``None`` only when the
    evaluation raised, in which case ``error`` says why.
    """

    case: IdentityCase
    passed: bool
    residual: Optional[FreeElement]
    elapsed: float
    variants: Dict[str, Optional[FreeElement]] = field(default_factory=dict)
    error: Optional[str] = None

    def to_json(self) -> dict:
        return {
            "id": self.case.id,
            "family": self.case.family,
            "params": list(self.case.params),
            "braiding": self.case.braiding,
            "degree": self.case.degree,
            "label": self.case.label,
            "passed": self.passed,
            "residual": None if self.residual is None else self.residual.to_json(),
            "variants": {
                name: {"passed": r is not None and not r, "residual": None if r is None else r.to_json()}
                for name, r in self.variants.items()
            },
            "elapsed_ms": round(self.elapsed * 1000, 3),
            "error": self.error,
        }


@dataclass
class Evaluation:
    residual: FreeElement
    variants: Dict[str, FreeElement] = field(default_factory=dict)


@dataclass(frozen=True)
class Family:
    name: str
    label: str
    evaluate: Callable[..., object]
    params: Callable[[int], Iterable[Tuple]]
    degree: Callable[..., int]
    braiding: str = "super"
    policy: str = "stated"
    variant_names: Tuple[str, ...] = ()


# -- shared building blocks -------------------------------------------------------

C = cat.catalan_element
xC = cat.x_catalan
Cy = cat.catalan_y
xCy = cat.x_catalan_y


def S(a: FreeElement, b: FreeElement) -> FreeElement:
    return shuffle_elems(a, b, SUPER)


def word(w: str) -> FreeElement:
    return FreeElement._wrap({w: LP_ONE})


def q(e: int, c: int = 1) -> LaurentPoly:
    return q_power(e, c)


@lru_cache(maxsize=None)
def damiani(n_max: int) -> pbw.RootVectorSet:
    return pbw.damiani_generators(n_max)


@lru_cache(maxsize=None)
def beck_normalized(k: int) -> FreeElement:
    """The Schur-sum Beck root ``k`` divided by its closed-form scalar."""
    gens = damiani(k)
    return pbw.beck_from_damiani(k, gens.imag).exact_div(pbw.beck_root_scalar(k))


def _attempt(fn: Callable[[], FreeElement]) -> FreeElement:
    """Evaluate a residual; a failed exact division yields its remainder."""
    try:
        return fn()
    except NonDivisibleError as err:
        rem = err.remainder
        if isinstance(rem, LaurentPoly):
            rem = FreeElement._wrap({"": rem})
        raise _DivisionFailure(str(err), rem) from err


class _DivisionFailure(Exception):
    def __init__(self, message: str, remainder: FreeElement):
        super().__init__(message)
        self.remainder = remainder


def _tagged(pieces: Iterable[Tuple[str, FreeElement]]) -> FreeElement:
    acc = ZERO
    for tag, r in pieces:
        if r:
            acc = acc + concat(word(tag), r)
    return acc


# -- families ---------------------------------------------------------------------

def serre(braid: str, which: int) -> FreeElement:
    b = ADMISSIBLE if braid == "admissible" else SUPER
    a, c = ("x", "y") if which == 1 else ("y", "x")
    if braid == "admissible":
        coeffs = [(LP_ONE, a * 3 + c), (ADM_SERRE, a * 2 + c + a), (ADM_SERRE, a + c + a * 2), (LP_ONE, c + a * 3)]
    else:
        b3 = q_brace(3)
        coeffs = [(LP_ONE, a * 3 + c), (b3, a * 2 + c + a), (-b3, a + c + a * 2), (-LP_ONE, c + a * 3)]
    total = ZERO
    for k, letters in coeffs:
        total = total + shuffle(*(word(ch) for ch in letters), braid=b).scale(k)
    return total


def cicj(i, j):
    return S(C(i), C(j)) - S(C(j), C(i))


def rec_cn_y(n):
    lhs = C(n).scale(Q_INV)
    rhs = -(S(Cy(n - 1), X).scale(Q_INV) + S(X, Cy(n - 1)).scale(Q)).exact_div(Q_PLUS)
    return lhs - rhs


def rec_cn_x(n):
    lhs = C(n).scale(Q_INV)
    rhs = -(S(xC(n - 1), Y).scale(Q) + S(Y, xC(n - 1)).scale(Q_INV)).exact_div(Q_PLUS)
    return lhs - rhs


def rec_xcn(n):
    xy = word("xy")
    return xC(n) - (S(xC(n - 1), xy) - S(xy, xC(n - 1))).exact_div(Q_PLUS)


def rec_cny(n):
    xy = word("xy")
    return Cy(n) - (S(xy, Cy(n - 1)) - S(Cy(n - 1), xy)).exact_div(Q_PLUS)


def mix(i, j):
    lhs = C(i + j + 1).scale(-Q_INV)
    rhs = (S(xC(i), Cy(j)).scale(Q) + S(Cy(j), xC(i)).scale(Q_INV)).exact_div(Q_PLUS)
    return lhs - rhs


def flank_x(k):
    return xC(k + 1) - (S(X, xCy(k)) - S(xCy(k), X)).exact_div(Q_PLUS)


def flank_y(k):
    return Cy(k + 1) - (S(xCy(k), Y) - S(Y, xCy(k))).exact_div(Q_PLUS)


def flank_mix_x(k, l):
    return xC(k + l + 1) - (S(xC(l), xCy(k)) - S(xCy(k), xC(l))).exact_div(Q_PLUS)


def flank_mix_y(k, l):
    num = S(xCy(k), Cy(l)) - S(Cy(l), xCy(k))
    out = {}
    for name, den in (("q-q^-1", Q_MINUS), ("q+q^-1", Q_PLUS)):
        out[name] = _variant(lambda den=den: Cy(k + l + 1) - num.exact_div(den))
    return Evaluation(out["q-q^-1"], out)


def _variant(fn):
    try:
        return fn()
    except NonDivisibleError as err:
        rem = err.remainder
        return rem if isinstance(rem, FreeElement) else FreeElement._wrap({"": rem})


def ri_x(i, j):
    lhs = (S(xC(i), C(j)) - S(C(j), xC(i))).exact_div(Q2_MINUS)
    rhs = ZERO
    for l in range(1, j + 1):
        rhs = rhs + S(xC(i + l), C(j - l)).scale(q(2 - 2 * l, (-1) ** l))
    return lhs - rhs


def ri_y(i, j):
    lhs = (S(C(j), Cy(i)) - S(Cy(i), C(j))).exact_div(Q2_MINUS)
    rhs = ZERO
    for l in range(1, j + 1):
        rhs = rhs + S(C(j - l), Cy(i + l)).scale(q(2 - 2 * l, (-1) ** l))
    return lhs - rhs


def _rr_pair(side: str, i: int, j: int):
    """``(first, second, product)`` accessors for the X or Y form of the real-real relations."""
    if side == "x":
        lead = S(xC(i), xC(j)).scale(Q) + S(xC(j), xC(i)).scale(Q_INV)
        term = lambda l: S(xC(j + l), xC(i - l))
    else:
        lead = S(Cy(j), Cy(i)).scale(Q) + S(Cy(i), Cy(j)).scale(Q_INV)
        term = lambda l: S(Cy(i - l), Cy(j + l))
    return lead, term


def rr_odd(side, i, j):
    r = (i - j) // 2
    lead, term = _rr_pair(side, i, j)
    lhs = lead.exact_div(Q2_MINUS)
    rhs = ZERO
    for l in range(1, r + 1):
        rhs = rhs + term(l).scale(q(1 - 2 * l, (-1) ** l))
    return lhs - rhs


def rr_even(side, i, j):
    r = (i - j) // 2
    lead, term = _rr_pair(side, i, j)
    rhs = ZERO
    for l in range(1, r):
        rhs = rhs + term(l).scale(q(1 - 2 * l, (-1) ** l))
    square = term(r)

    def form(sign):
        return lambda: lead.exact_div(Q2_MINUS) + square.scale(q(j - i + 2, sign)).exact_div(Q_MINUS) - rhs

    stated = _variant(form((-1) ** r))
    return Evaluation(stated, {"stated": stated, "sign (-1)^(r+1)": _variant(form((-1) ** (r + 1)))})


def rr2_x(i, j):
    lhs = S(xC(i), C(j + 1)) - S(C(j + 1), xC(i))
    rhs = S(xC(i + 1), C(j)).scale(q(2, -1)) + S(C(j), xC(i + 1)).scale(q(-2))
    return lhs - rhs


def rr2_y(i, j):
    lhs = S(C(j + 1), Cy(i)) - S(Cy(i), C(j + 1))
    rhs = S(C(j), Cy(i + 1)).scale(q(2, -1)) + S(Cy(i + 1), C(j)).scale(q(-2))
    return lhs - rhs


def rr3_eq_x(i):
    return S(xC(i + 1), xC(i)).scale(Q) + S(xC(i), xC(i + 1)).scale(Q_INV)


def rr3_eq_y(i):
    return S(Cy(i), Cy(i + 1)).scale(Q) + S(Cy(i + 1), Cy(i)).scale(Q_INV)


def rr3_mix_x(i, j):
    lhs = S(xC(i + 1), xC(j)).scale(Q) + S(xC(j), xC(i + 1)).scale(Q_INV)
    rhs = S(xC(i), xC(j + 1)).scale(-Q_INV) + S(xC(j + 1), xC(i)).scale(-Q)
    return lhs - rhs


def rr3_mix_y(i, j):
    lhs = S(Cy(j), Cy(i + 1)).scale(Q) + S(Cy(i + 1), Cy(j)).scale(Q_INV)
    rhs = S(Cy(j + 1), Cy(i)).scale(-Q_INV) + S(Cy(i), Cy(j + 1)).scale(-Q)
    return lhs - rhs


def serre_ideal_generators() -> Dict[str, FreeElement]:
    b3 = q_brace(3)
    plus = FreeElement({"xxxy": 1, "xxyx": b3, "xyxx": -b3, "yxxx": -1})
    minus = FreeElement({"yyyx": 1, "yyxy": b3, "yxyy": -b3, "xyyy": -1})
    return {"+": plus, "-": minus}


def j_orth(k, split):
    """Form of ``x C_k y`` against ``w1 J w2`` for every ``|w1| = split``.

    Each nonzero value is stored on the word ``w1 m w2`` with ``m = x`` for
    the ``+`` generator and ``m = y`` for the ``-`` one.
    """
    target = xCy(k)
    gens = serre_ideal_generators()
    out: Dict[str, LaurentPoly] = {}
    rest = 2 * k - 2 - split
    for sign, marker in (("+", "x"), ("-", "y")):
        g = gens[sign]
        for w1 in all_words(split):
            for w2 in all_words(rest):
                v = fe_bilinear_form(target, concat(concat(word(w1), g), word(w2)))
                if v:
                    out[w1 + marker + w2] = v
    return FreeElement._wrap(out)


def j_orth_count(k: int) -> int:
    """Number of form evaluations over all splits and both generators."""
    return 2 * sum(2 ** s * 2 ** (2 * k - 2 - s) for s in range(2 * k - 1))


def thm1(n, kind):
    gens = damiani(max(n, 1))
    kind = pbw.RootKind(kind)
    fam = {pbw.RootKind.REAL0: gens.real0, pbw.RootKind.REAL1: gens.real1, pbw.RootKind.IMAG: gens.imag}[kind]
    return fam[n] - pbw.theorem1_closed_form(n, kind)


def thm2(n):
    gens = damiani(n)
    return pbw.beck_from_damiani(n, gens.imag) - pbw.theorem2_closed_form(n)


def exp_identity(order):
    series = pbw.shuffle_exp_truncated(pbw.exp_exponent_series(order), order)
    total = ZERO
    for k in range(order + 1):
        total = total + series[k] - C(k)
    return total


def zeta_fix(n):
    return fe_zeta(C(n)) - C(n)


def beck_comm(i, j):
    gens = damiani(j)
    bi = pbw.beck_from_damiani(i, gens.imag)
    bj = pbw.beck_from_damiani(j, gens.imag)
    return S(bi, bj) - S(bj, bi)


def xcy_comm(i, j):
    return S(xCy(i), xCy(j)) - S(xCy(j), xCy(i))


def beck_real_x(k, l):
    ck = beck_normalized(k)
    return xC(k + l) - (S(xC(l), ck) - S(ck, xC(l))).exact_div(Q_PLUS)


def beck_real_y(k, l):
    ck = beck_normalized(k)
    return Cy(k + l) - (S(ck, Cy(l)) - S(Cy(l), ck)).exact_div(Q_PLUS)


def im_root_alt(n):
    gens = damiani(n)
    return pbw.damiani_imag_alt(n, gens) - gens.imag[n]


def com_real_root(i, j):
    gens = damiani(i + j + 1)
    a = gens.real1[i]
    b = gens.real0[j]
    lhs = S(a, b)
    top = gens.imag[i + j + 1].scale(q(2))
    stated = lhs - S(b, a).scale(q(2)) - top
    flipped = lhs + S(b, a).scale(q(2)) - top
    return Evaluation(stated, {"stated": stated, "-q^2 on the swapped product": flipped})


def insert_form(m):
    pieces = []
    for v in all_words(2 * m):
        if is_balanced(v):
            pieces.append((v, cat.insertion_by_shuffle(v) - cat.insertion_closed_form(v)))
    return _tagged(pieces)


# -- parameter domains -------------------------------------------------------------

def _upto(d_max: int, degree: Callable[..., int], ranges: Sequence[Callable[..., Iterable[int]]]) -> Iterator[Tuple]:
    """Lex-ordered tuples whose degree fits; ranges may depend on earlier entries.

    Each range is scanned upward and stops at the first value whose
    degree (with later entries at their minimum) exceeds the budget, which
    is safe because every family's degree is monotone in each parameter.
    """

    def walk(prefix: Tuple) -> Iterator[Tuple]:
        depth = len(prefix)
        if depth == len(ranges):
            if degree(*prefix) <= d_max:
                yield prefix
            return
        for v in ranges[depth](*prefix):
            probe = prefix + (v,)
            if _min_degree(probe) > d_max:
                break
            yield from walk(probe)

    def _min_degree(probe: Tuple) -> int:
        # complete with the smallest admissible later values
        full = probe
        for r in ranges[len(probe):]:
            first = next(iter(r(*full)), None)
            if first is None:
                return d_max + 1
            full = full + (first,)
        return degree(*full)

    yield from walk(())


def nat(start: int = 0):
    return lambda *prev: itertools.count(start)


FAMILIES: List[Family] = []


def register(name, label, evaluate, ranges, degree, fixed=False, **kw):
    """Add a family; ``fixed`` families have finitely many cases and ignore the degree budget."""
    if fixed:
        params = lambda d, ranges=ranges, degree=degree: _upto(float("inf"), degree, ranges)
    else:
        params = lambda d, ranges=ranges, degree=degree: _upto(d, degree, ranges)
    FAMILIES.append(Family(name, label, evaluate, params, degree, **kw))


register("SERRE_ADM", "admissible cubic relation: x*x*x*y + (1-q^2-q^-2)(x*x*y*x + x*y*x*x) + y*x*x*x = 0 and x<->y",
         lambda w: serre("admissible", w), [lambda: (1, 2)], lambda w: 4, fixed=True, braiding="admissible")
register("SERRE_SUPER", "super cubic relation: x*x*x*y + {3}x*x*y*x - {3}x*y*x*x - y*x*x*x = 0 and x<->y",
         lambda w: serre("super", w), [lambda: (1, 2)], lambda w: 4, fixed=True)
register("CICJ", "C_i * C_j = C_j * C_i",
         cicj, [nat(1), lambda i: itertools.count(i + 1)], lambda i, j: 2 * (i + j))
register("REC_CN_Y", "q^-1 C_n = -(q^-1 (C_{n-1}y)*x + q x*(C_{n-1}y)) / (q+q^-1)",
         rec_cn_y, [nat(1)], lambda n: 2 * n)
register("REC_CN_X", "q^-1 C_n = -(q (xC_{n-1})*y + q^-1 y*(xC_{n-1})) / (q+q^-1)",
         rec_cn_x, [nat(1)], lambda n: 2 * n)
register("REC_XCN", "xC_n = ((xC_{n-1})*(xy) - (xy)*(xC_{n-1})) / (q+q^-1)",
         rec_xcn, [nat(1)], lambda n: 2 * n + 1)
register("REC_CNY", "C_n y = ((xy)*(C_{n-1}y) - (C_{n-1}y)*(xy)) / (q+q^-1)",
         rec_cny, [nat(1)], lambda n: 2 * n + 1)
register("MIX", "-q^-1 C_{i+j+1} = (q (xC_i)*(C_j y) + q^-1 (C_j y)*(xC_i)) / (q+q^-1)",
         mix, [nat(), nat()], lambda i, j: 2 * (i + j + 1))
register("FLANK_X", "xC_{k+1} = (x*(xC_k y) - (xC_k y)*x) / (q+q^-1)",
         flank_x, [nat()], lambda k: 2 * k + 3)
register("FLANK_Y", "C_{k+1}y = ((xC_k y)*y - y*(xC_k y)) / (q+q^-1)",
         flank_y, [nat()], lambda k: 2 * k + 3)
register("FLANK_MIX_X", "xC_{k+l+1} = ((xC_l)*(xC_k y) - (xC_k y)*(xC_l)) / (q+q^-1)",
         flank_mix_x, [nat(), nat()], lambda k, l: 2 * (k + l) + 3)
register("FLANK_MIX_Y", "C_{k+l+1}y = ((xC_k y)*(C_l y) - (C_l y)*(xC_k y)) / D, D in {q-q^-1, q+q^-1}",
         flank_mix_y, [nat(), nat()], lambda k, l: 2 * (k + l) + 3,
         policy="unique", variant_names=("q-q^-1", "q+q^-1"))
register("RI_X", "((xC_i)*C_j - C_j*(xC_i)) / (q^2-q^-2) = sum_l (-1)^l q^(2-2l) (xC_{i+l})*C_{j-l}",
         ri_x, [nat(), nat()], lambda i, j: 2 * i + 1 + 2 * j)
register("RI_Y", "(C_j*(C_i y) - (C_i y)*C_j) / (q^2-q^-2) = sum_l (-1)^l q^(2-2l) C_{j-l}*(C_{i+l}y)",
         ri_y, [nat(), nat()], lambda i, j: 2 * i + 1 + 2 * j)
_odd = [nat(1), lambda i: range((i - 1) % 2, i, 2)]
_even = [nat(2), lambda i: range(i % 2, i - 1, 2)]
register("RR_ODD_X", "i-j=2r+1: (q xC_i*xC_j + q^-1 xC_j*xC_i)/(q^2-q^-2) = sum_{l<=r} (-1)^l q^(1-2l) xC_{j+l}*xC_{i-l}",
         lambda i, j: rr_odd("x", i, j), _odd, lambda i, j: 2 * (i + j) + 2)
register("RR_ODD_Y", "i-j=2r+1: (q C_jy*C_iy + q^-1 C_iy*C_jy)/(q^2-q^-2) = sum_{l<=r} (-1)^l q^(1-2l) C_{i-l}y*C_{j+l}y",
         lambda i, j: rr_odd("y", i, j), _odd, lambda i, j: 2 * (i + j) + 2)
register("RR_EVEN_X", "i-j=2r: (q xC_i*xC_j + q^-1 xC_j*xC_i)/(q^2-q^-2) + (-1)^r q^(j-i+2) xC_{j+r}*xC_{i-r}/(q-q^-1) = sum_{l<r} (-1)^l q^(1-2l) xC_{j+l}*xC_{i-l}",
         lambda i, j: rr_even("x", i, j), _even, lambda i, j: 2 * (i + j) + 2,
         variant_names=("stated", "sign (-1)^(r+1)"))
register("RR_EVEN_Y", "i-j=2r: (q C_jy*C_iy + q^-1 C_iy*C_jy)/(q^2-q^-2) + (-1)^r q^(j-i+2) C_{i-r}y*C_{j+r}y/(q-q^-1) = sum_{l<r} (-1)^l q^(1-2l) C_{i-l}y*C_{j+l}y",
         lambda i, j: rr_even("y", i, j), _even, lambda i, j: 2 * (i + j) + 2,
         variant_names=("stated", "sign (-1)^(r+1)"))
register("RR2_X", "(xC_i)*C_{j+1} - C_{j+1}*(xC_i) = -q^2 (xC_{i+1})*C_j + q^-2 C_j*(xC_{i+1})",
         rr2_x, [nat(), nat()], lambda i, j: 2 * (i + j) + 3)
register("RR2_Y", "C_{j+1}*(C_i y) - (C_i y)*C_{j+1} = -q^2 C_j*(C_{i+1}y) + q^-2 (C_{i+1}y)*C_j",
         rr2_y, [nat(), nat()], lambda i, j: 2 * (i + j) + 3)
register("RR3_EQ_X", "q (xC_{i+1})*(xC_i) = -q^-1 (xC_i)*(xC_{i+1})",
         rr3_eq_x, [nat()], lambda i: 4 * i + 4)
register("RR3_EQ_Y", "q (C_i y)*(C_{i+1}y) = -q^-1 (C_{i+1}y)*(C_i y)",
         rr3_eq_y, [nat()], lambda i: 4 * i + 4)
register("RR3_MIX_X", "i!=j: q xC_{i+1}*xC_j + q^-1 xC_j*xC_{i+1} = -q^-1 xC_i*xC_{j+1} - q xC_{j+1}*xC_i",
         rr3_mix_x, [nat(), nat()], lambda i, j: 2 * (i + j) + 4)
register("RR3_MIX_Y", "i!=j: q C_jy*C_{i+1}y + q^-1 C_{i+1}y*C_jy = -q^-1 C_{j+1}y*C_iy - q C_iy*C_{j+1}y",
         rr3_mix_y, [nat(), nat()], lambda i, j: 2 * (i + j) + 4)
register("J_ORTH", "(xC_k y, w1 J+ w2) = 0 = (xC_k y, w1 J- w2) for all |w1| = split, |w1|+|w2| = 2k-2",
         j_orth, [nat(1), lambda k: range(0, 2 * k - 1)], lambda k, s: 2 * k + 2)
register("THM1", "Damiani roots: x C_n, C_n y and C_n times q^-2n (q+q^-1)^2n, resp. -q^-2n (q+q^-1)^(2n-1)",
         thm1, [nat(), lambda n: [k.value for k in pbw.RootKind if not (n == 0 and k is pbw.RootKind.IMAG)]],
         lambda n, kind: 2 * n + (0 if kind == "imag" else 1))
register("THM2", "Beck root n = (-1)^n ({2n}/n) q^-2n (q+q^-1)^(2n-1) xC_{n-1}y",
         thm2, [nat(1)], lambda n: 2 * n)
register("EXP", "exp(sum_k -({2k}/k) xC_{k-1}y (-t)^k) = 1 + sum_k C_k t^k up to t^order",
         exp_identity, [nat(1)], lambda order: 2 * order)
register("ZETA_FIX", "zeta(C_n) = C_n", zeta_fix, [nat()], lambda n: 2 * n)
register("BECK_COMM", "Beck roots i and j commute", beck_comm,
         [nat(1), lambda i: itertools.count(i + 1)], lambda i, j: 2 * (i + j))
register("XCY_COMM", "xC_i y and xC_j y commute", xcy_comm,
         [nat(), lambda i: itertools.count(i + 1)], lambda i, j: 2 * (i + j) + 4)
register("BECK_REAL_X", "xC_{k+l} = ((xC_l)*B_k - B_k*(xC_l)) / (q+q^-1), B_k the normalized Beck root",
         beck_real_x, [nat(1), nat()], lambda k, l: 2 * (k + l) + 1)
register("BECK_REAL_Y", "C_{k+l}y = (B_k*(C_l y) - (C_l y)*B_k) / (q+q^-1), B_k the normalized Beck root",
         beck_real_y, [nat(1), nat()], lambda k, l: 2 * (k + l) + 1)
register("IM_ROOT_ALT", "imaginary root via q^-2 y*E0 + E0*y equals the one via q^-2 E1*x + x*E1",
         im_root_alt, [nat(1)], lambda n: 2 * n)
register("COM_REAL_ROOT", "E1_i * E0_j = q^2 E0_j * E1_i + q^2 E_{i+j+1} on the root vector images",
         com_real_root, [nat(), nat()], lambda i, j: 2 * (i + j) + 2,
         variant_names=("stated", "-q^2 on the swapped product"))
register("INSERT_FORM", "(q x*(vy) + q^-1 (vy)*x)/(q+q^-1) = -q^-1 sum_i (-1)^i {2+2 wt(v[:i])} v[:i] x v[i:] y, all balanced |v| = 2m",
         insert_form, [nat()], lambda m: 2 * m + 2)

FAMILY_BY_NAME: Dict[str, Family] = {f.name: f for f in FAMILIES}

# parameter preconditions: whole-family runs skip violators, explicit cases report them
_odd_gap = (lambda i, j: i > j >= 0 and (i - j) % 2 == 1, "needs i > j >= 0 with i - j odd")
_even_gap = (lambda i, j: i - 2 >= j >= 0 and (i - j) % 2 == 0, "needs i - j even and at least 2")
_distinct = (lambda i, j: i != j and min(i, j) >= 0, "needs i != j")
_PRECONDITIONS: Dict[str, Tuple[Callable[..., bool], str]] = {
    "RR_ODD_X": _odd_gap, "RR_ODD_Y": _odd_gap,
    "RR_EVEN_X": _even_gap, "RR_EVEN_Y": _even_gap,
    "RR3_MIX_X": _distinct, "RR3_MIX_Y": _distinct,
    "J_ORTH": (lambda k, split: k >= 1 and 0 <= split <= 2 * k - 2, "needs k >= 1 and 0 <= split <= 2k - 2"),
    "THM1": (lambda n, kind: n >= (1 if kind == "imag" else 0), "needs n >= 1 for the imaginary family"),
}


def check_precondition(case: IdentityCase) -> Optional[str]:
    """None when the parameters are admissible, else a short reason."""
    rule = _PRECONDITIONS.get(case.family)
    try:
        if rule is None or rule[0](*case.params):
            return None
    except TypeError:
        return f"expected different parameters, got {case.params}"
    return rule[1]

ALIASES: Dict[str, List[str]] = {
    "all": [f.name for f in FAMILIES],
    "serre": ["SERRE_ADM", "SERRE_SUPER"],
    "recursions": ["REC_CN_Y", "REC_CN_X", "REC_XCN", "REC_CNY", "MIX"],
    "flank": ["FLANK_X", "FLANK_Y", "FLANK_MIX_X", "FLANK_MIX_Y"],
    "relations": [f.name for f in FAMILIES if f.name.startswith(("RI_", "RR"))],
    "commute": ["CICJ", "BECK_COMM", "XCY_COMM"],
    "theorems": ["THM1", "THM2", "EXP"],
    "pbw": ["THM1", "THM2", "EXP", "BECK_COMM", "BECK_REAL_X", "BECK_REAL_Y", "IM_ROOT_ALT", "COM_REAL_ROOT"],
}


# -- selection ---------------------------------------------------------------------

# commas inside parentheses belong to a single case such as CICJ(1,2)
_TOKENS = re.compile(r"[^,(]+(?:\([^)]*\))?")


def _parse_case_token(tok: str) -> Optional[Tuple[str, Tuple]]:
    if "(" not in tok or not tok.endswith(")"):
        return None
    name, inner = tok[:-1].split("(", 1)
    params = []
    for p in inner.split(","):
        p = p.strip()
        if not p:
            continue
        params.append(int(p) if p.lstrip("-").isdigit() else p.lower())
    return name.upper(), tuple(params)


def resolve_selector(selector: str) -> Tuple[List[str], Dict[str, List[Tuple]]]:
    """Families named by a comma-separated selector, in registry order.

    Tokens may be aliases (``all``, ``serre``, ...), family names, globs
    such as ``RR_*``, prefixes such as ``RR3`` (matching ``RR3_*``), or
    single cases such as ``CICJ(1,2)``.  Returns the wholly selected
    families and the single cases requested per family.
    """
    chosen = set()
    explicit: Dict[str, List[Tuple]] = {}
    for tok in (t.strip() for t in _TOKENS.findall(selector)):
        if not tok:
            continue
        case = _parse_case_token(tok)
        if case is not None:
            name, params = case
            if name not in FAMILY_BY_NAME:
                raise SelectorError(f"unknown identity family {name!r}")
            explicit.setdefault(name, []).append(params)
            continue
        low = tok.lower()
        if low in ALIASES:
            chosen.update(ALIASES[low])
            continue
        up = tok.upper()
        hits = [n for n in FAMILY_BY_NAME if n == up or fnmatch.fnmatchcase(n, up) or n.startswith(up + "_")]
        if not hits:
            raise SelectorError(f"selector {tok!r} matches no identity family")
        chosen.update(hits)
    return [f.name for f in FAMILIES if f.name in chosen], explicit


def cases_for(family: Family, max_degree: int) -> List[IdentityCase]:
    cases = (make_case(family.name, params) for params in family.params(max_degree))
    return [c for c in cases if check_precondition(c) is None]


def make_case(name: str, params: Tuple) -> IdentityCase:
    family = FAMILY_BY_NAME[name]
    return IdentityCase(name, tuple(params), family.braiding, family.degree(*params), family.label)


def select_cases(selector: str, max_degree: int) -> List[IdentityCase]:
    """Whole families are bounded by ``max_degree``; single cases run as given."""
    whole, explicit = resolve_selector(selector)
    out: List[IdentityCase] = []
    for family in FAMILIES:
        if family.name in whole:
            out.extend(cases_for(family, max_degree))
        elif family.name in explicit:
            for params in sorted(set(explicit[family.name]), key=lambda p: tuple(map(str, p))):
                try:
                    out.append(make_case(family.name, params))
                except (TypeError, ValueError) as err:
                    raise SelectorError(f"bad parameters {params} for {family.name}: {err}") from None
    return out


# -- running -----------------------------------------------------------------------

def run_identity(case: IdentityCase) -> VerifyReport:
    family = FAMILY_BY_NAME[case.family]
    start = time.perf_counter()
    variants: Dict[str, Optional[FreeElement]] = {}
    error = None
    reason = check_precondition(case)
    if reason is not None:
        return VerifyReport(case, False, None, time.perf_counter() - start, {}, f"precondition violated: {reason}")
    try:
        result = _attempt(lambda: family.evaluate(*case.params))
        if isinstance(result, Evaluation):
            residual, variants = result.residual, dict(result.variants)
        else:
            residual = result
        if family.policy == "unique":
            zeros = [name for name, r in variants.items() if not r]
            passed = len(zeros) == 1
            if passed:
                residual = variants[zeros[0]]
        else:
            passed = not residual
    except _DivisionFailure as err:
        residual, passed, error = err.remainder, False, f"inexact division: {err}"
    except Exception as err:  # a failing case must not abort the suite
        residual, passed, error = None, False, f"{type(err).__name__}: {err}"
    return VerifyReport(case, passed, residual, time.perf_counter() - start, variants, error)


def run_suite(selector: str, max_degree: int = 10, parallel: bool = False, workers: Optional[int] = None) -> List[VerifyReport]:
    """Evaluate every selected case; reports come back in registry then parameter order."""
    cases = select_cases(selector, max_degree)
    if not parallel or len(cases) < 2:
        return [run_identity(c) for c in cases]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(run_identity, cases, chunksize=1))


def summary(reports: Sequence[VerifyReport], elapsed: Optional[float] = None) -> dict:
    failed = [r for r in reports if not r.passed]
    return {
        "total": len(reports),
        "passed": len(reports) - len(failed),
        "failed": len(failed),
        "errors": sum(1 for r in reports if r.error),
        "elapsed_ms": round((elapsed if elapsed is not None else sum(r.elapsed for r in reports)) * 1000, 3),
        "failed_ids": [r.case.id for r in failed],
    }


def write_jsonl(reports: Sequence[VerifyReport], stream, elapsed: Optional[float] = None) -> None:
    for r in reports:
        stream.write(json.dumps(r.to_json(), sort_keys=True) + "\n")
    stream.write(json.dumps({"summary": summary(reports, elapsed)}, sort_keys=True) + "\n")

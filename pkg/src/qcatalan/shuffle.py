"""Braided q-shuffle products on the free algebra.

A braiding assigns to each ordered letter pair ``(a, b)`` a signed monomial
``chi(a, b) = +-q^e``.  The product of nonempty words peels the first
letter of either factor::

    u * v = u1 (u2...ur * v) + chi(u1, v1) ... chi(ur, v1) v1 (u * v2...vs)

with the empty word as unit.  Two tables are built in: ``SUPER`` (all
crossings carry a minus sign, the product attached to both letters being
odd) and ``ADMISSIBLE`` (equal letters ``-q^2``, distinct letters
``+q^-2``).

:func:`shuffle_words` follows the recursion literally and memoizes on
``(braiding, u, v)``.  :func:`shuffle_elems` runs the same recursion on
whole elements at once: it walks pairs of prefix-trie nodes, so
coefficients of equal words are merged as early as possible, and it packs
each Laurent coefficient into one big integer (Kronecker substitution
``q -> 2^K``) so that coefficient additions and monomial multiplications
become single integer operations.
"""

from __future__ import annotations

import enum
import math
import threading
from contextlib import contextmanager
from fractions import Fraction
from typing import Dict, Iterator, Mapping, Optional, Tuple, Union

from .freealg import ONE, ZERO, FreeElement
from .laurent import LaurentPoly, _add, _norm
from .words import check_length, validate_word


class Braiding(str, enum.Enum):
    ADMISSIBLE = "admissible"
    SUPER = "super"


class BraidingTable:
    """Crossing scalars ``chi(a, b)`` for the ordered letter pairs."""

    __slots__ = ("name", "_chi")

    def __init__(self, name: str, chi: Mapping[Tuple[str, str], LaurentPoly]):
        pairs = {(a, b) for a in "xy" for b in "xy"}
        if set(chi) != pairs:
            raise ValueError("a braiding table needs exactly the four pairs over {x, y}")
        table = {}
        for key, val in chi.items():
            val = val if isinstance(val, LaurentPoly) else LaurentPoly(val)
            if not val.is_monomial():
                raise ValueError(f"chi{key} must be a single term, got {val}")
            (e, c), = val.terms()
            if c not in (1, -1):
                raise ValueError(f"chi{key} must have coefficient +-1, got {c}")
            table[key] = (e, c)
        self.name = name
        self._chi = table

    def chi(self, a: str, b: str) -> LaurentPoly:
        e, s = self._chi[(a, b)]
        return LaurentPoly.monomial(e, s)

    def crossing(self, a: str, b: str) -> Tuple[int, int]:
        """``(exponent, sign)`` of ``chi(a, b)``."""
        return self._chi[(a, b)]

    def __repr__(self):
        return f"BraidingTable({self.name!r})"

    def __eq__(self, other):
        return isinstance(other, BraidingTable) and self.name == other.name and self._chi == other._chi

    def __hash__(self):
        return hash(self.name)


def make_braiding(name: Union[str, Braiding]) -> BraidingTable:
    kind = Braiding(name.value if isinstance(name, Braiding) else str(name).lower())
    same = LaurentPoly.monomial(2, -1)
    if kind is Braiding.SUPER:
        cross = LaurentPoly.monomial(-2, -1)
    else:
        cross = LaurentPoly.monomial(-2, 1)
    return BraidingTable(
        kind.value,
        {("x", "x"): same, ("y", "y"): same, ("x", "y"): cross, ("y", "x"): cross},
    )


SUPER = make_braiding(Braiding.SUPER)
ADMISSIBLE = make_braiding(Braiding.ADMISSIBLE)

BraidingLike = Union[BraidingTable, Braiding, str]


def resolve_braiding(b: BraidingLike) -> BraidingTable:
    if isinstance(b, BraidingTable):
        return b
    return make_braiding(b)


# -- caches -------------------------------------------------------------------

class ShuffleCache:
    """Memo tables for word-level and element-level shuffles.

    Values are pure functions of their keys, so concurrent writers can only
    ever store equal values; the lock just keeps the dicts consistent when
    the cache is toggled or cleared from another thread.
    """

    def __init__(self):
        self.enabled = True
        self.words: Dict[Tuple[str, str, str], Dict[str, Dict[int, int]]] = {}
        self.elems: Dict[Tuple[str, FreeElement, FreeElement], FreeElement] = {}
        self._lock = threading.Lock()

    def clear(self) -> None:
        with self._lock:
            self.words.clear()
            self.elems.clear()

    def stats(self) -> Dict[str, int]:
        return {"words": len(self.words), "elements": len(self.elems)}


CACHE = ShuffleCache()


@contextmanager
def caching(enabled: bool) -> Iterator[ShuffleCache]:
    """Temporarily switch the shuffle memo tables on or off."""
    old = CACHE.enabled
    CACHE.enabled = enabled
    try:
        yield CACHE
    finally:
        CACHE.enabled = old


# -- word level ---------------------------------------------------------------

def _chi_run(braid: BraidingTable, u: str, b: str) -> Tuple[int, int]:
    e, s = 0, 1
    for a in u:
        de, ds = braid._chi[(a, b)]
        e += de
        s *= ds
    return e, s


def _shuffle_words_raw(u: str, v: str, braid: BraidingTable, memo: Optional[dict]) -> Dict[str, Dict[int, int]]:
    if not u:
        return {v: {0: 1}}
    if not v:
        return {u: {0: 1}}
    key = (braid.name, u, v)
    if memo is not None:
        hit = memo.get(key)
        if hit is not None:
            return hit
    out: Dict[str, Dict[int, int]] = {}
    head = u[0]
    for w, p in _shuffle_words_raw(u[1:], v, braid, memo).items():
        out[head + w] = p
    e, s = _chi_run(braid, u, v[0])
    head = v[0]
    for w, p in _shuffle_words_raw(u, v[1:], braid, memo).items():
        moved = {k + e: c * s for k, c in p.items()}
        w = head + w
        old = out.get(w)
        if old is None:
            out[w] = moved
        else:
            t = _add(old, moved)
            if t:
                out[w] = t
            else:
                del out[w]
    if memo is not None:
        memo[key] = out
    return out


def shuffle_words(u: str, v: str, braid: BraidingLike = SUPER) -> FreeElement:
    """Braided shuffle of two words."""
    braid = resolve_braiding(braid)
    validate_word(u)
    validate_word(v)
    check_length(len(u) + len(v))
    memo = CACHE.words if CACHE.enabled else None
    raw = _shuffle_words_raw(u, v, braid, memo)
    return FreeElement._wrap({w: LaurentPoly._wrap(dict(p)) for w, p in raw.items()})


# -- element level ------------------------------------------------------------

def _content(w: str) -> Tuple[int, int]:
    nx = w.count("x")
    return nx, len(w) - nx


def _split_by_content(terms: Mapping[str, LaurentPoly]) -> Dict[Tuple[int, int], Dict[str, LaurentPoly]]:
    parts: Dict[Tuple[int, int], Dict[str, LaurentPoly]] = {}
    for w, p in terms.items():
        parts.setdefault(_content(w), {})[w] = p
    return parts


def _integerize(terms: Mapping[str, LaurentPoly]) -> Tuple[Dict[str, Dict[int, int]], int]:
    den = 1
    for p in terms.values():
        for c in p._terms.values():
            if isinstance(c, Fraction):
                den = den * c.denominator // math.gcd(den, c.denominator)
    if den == 1:
        return {w: p._terms for w, p in terms.items()}, 1
    return {w: {e: int(c * den) for e, c in p._terms.items()} for w, p in terms.items()}, den


def _encode(p: Mapping[int, int], off: int, K: int) -> int:
    v = 0
    for e, c in p.items():
        v += c << (K * (e + off))
    return v


def _decode(v: int, off: int, K: int, den: int) -> Dict[int, object]:
    out = {}
    mask = (1 << K) - 1
    half = 1 << (K - 1)
    full = 1 << K
    e = -off
    while v:
        d = v & mask
        if d >= half:
            d -= full
        if d:
            out[e] = d if den == 1 else _norm(Fraction(d, den))
        v = (v - d) >> K
        e += 1
    return out


def _prefix_quotients(enc: Dict[str, int], depth: int) -> Dict[str, Dict[str, int]]:
    """Map each prefix ``p`` to the left quotient ``{s: c}`` of words ``p + s``."""
    quots = {"": enc}
    level = [""]
    for _ in range(depth):
        nxt = []
        for pre in level:
            groups: Dict[str, Dict[str, int]] = {}
            for w, c in quots[pre].items():
                groups.setdefault(w[0], {})[w[1:]] = c
            for a, g in groups.items():
                quots[pre + a] = g
                nxt.append(pre + a)
        level = nxt
    return quots


def _homogeneous_kernel(A: Mapping[str, LaurentPoly], B: Mapping[str, LaurentPoly], braid: BraidingTable) -> Dict[str, LaurentPoly]:
    # A and B are nonconstant and each has a single letter content
    ia, den_a = _integerize(A)
    ib, den_b = _integerize(B)
    da = len(next(iter(ia)))
    db = len(next(iter(ib)))
    ax, ay = _content(next(iter(ia)))

    norm_a = sum(abs(c) for p in ia.values() for c in p.values())
    norm_b = sum(abs(c) for p in ib.values() for c in p.values())
    K = (norm_a * norm_b * math.comb(da + db, da)).bit_length() + 2
    max_chi = max(abs(e) for e, _ in braid._chi.values())
    off_a = max(0, -min(min(p) for p in ia.values())) + max_chi * da * db
    off_b = max(0, -min(min(p) for p in ib.values()))

    qa = _prefix_quotients({w: _encode(p, off_a, K) for w, p in ia.items()}, da)
    qb = _prefix_quotients({w: _encode(p, off_b, K) for w, p in ib.items()}, db)
    kids_a = {pre: sorted({s[0] for s in g}) for pre, g in qa.items() if len(pre) < da}
    kids_b = {pre: sorted({s[0] for s in g}) for pre, g in qb.items() if len(pre) < db}

    # chi of the remaining content of A against each letter, keyed by (#x, #y) left
    crossing_cache: Dict[Tuple[int, int, str], Tuple[int, int]] = {}

    def crossing(nx: int, ny: int, b: str) -> Tuple[int, int]:
        key = (nx, ny, b)
        hit = crossing_cache.get(key)
        if hit is None:
            ex, sx = braid._chi[("x", b)]
            ey, sy = braid._chi[("y", b)]
            hit = (K * (ex * nx + ey * ny), (sx**nx) * (sy**ny))
            crossing_cache[key] = hit
        return hit

    memo: Dict[Tuple[str, str], Dict[str, int]] = {}

    def rec(pa: str, pb: str) -> Dict[str, int]:
        key = (pa, pb)
        r = memo.get(key)
        if r is not None:
            return r
        if len(pa) == da:
            a = qa[pa][""]
            r = {w: a * v for w, v in qb[pb].items()}
        elif len(pb) == db:
            b = qb[pb][""]
            r = {w: v * b for w, v in qa[pa].items()}
        else:
            r = {}
            for c in kids_a[pa]:
                for w, v in rec(pa + c, pb).items():
                    r[c + w] = v
            nx = ax - pa.count("x")
            ny = ay - pa.count("y")
            for c in kids_b[pb]:
                shift, sign = crossing(nx, ny, c)
                for w, v in rec(pa, pb + c).items():
                    v = (v << shift) if shift >= 0 else (v >> -shift)
                    if sign < 0:
                        v = -v
                    k = c + w
                    t = r.get(k, 0) + v
                    if t:
                        r[k] = t
                    else:
                        r.pop(k, None)
        memo[key] = r
        return r

    packed = rec("", "")
    den = den_a * den_b
    out = {}
    for w, v in packed.items():
        t = _decode(v, off_a + off_b, K, den)
        if t:
            out[w] = LaurentPoly._wrap(t)
    return out


def shuffle_elems(a: FreeElement, b: FreeElement, braid: BraidingLike = SUPER) -> FreeElement:
    """Bilinear extension of :func:`shuffle_words`."""
    braid = resolve_braiding(braid)
    if not a or not b:
        return ZERO
    check_length(max(map(len, a._terms)) + max(map(len, b._terms)))
    key = (braid.name, a, b)
    if CACHE.enabled:
        hit = CACHE.elems.get(key)
        if hit is not None:
            return hit
    acc: Dict[str, LaurentPoly] = {}

    def accumulate(terms: Mapping[str, LaurentPoly]) -> None:
        for w, p in terms.items():
            old = acc.get(w)
            if old is None:
                acc[w] = p
            else:
                t = _add(old._terms, p._terms)
                if t:
                    acc[w] = LaurentPoly._wrap(t)
                else:
                    del acc[w]

    parts_a = _split_by_content(a._terms)
    parts_b = _split_by_content(b._terms)
    for ca, pa in parts_a.items():
        for cb, pb in parts_b.items():
            if ca == (0, 0):
                accumulate(FreeElement._wrap(pb).scale(pa[""])._terms)
            elif cb == (0, 0):
                accumulate(FreeElement._wrap(pa).scale(pb[""])._terms)
            else:
                accumulate(_homogeneous_kernel(pa, pb, braid))
    result = FreeElement._wrap(acc)
    if CACHE.enabled:
        CACHE.elems[key] = result
    return result


def shuffle(*factors: FreeElement, braid: BraidingLike = SUPER) -> FreeElement:
    """Left-to-right shuffle product of any number of factors."""
    result = ONE
    for f in factors:
        result = shuffle_elems(result, f, braid)
    return result


def shuffle_power(a: FreeElement, k: int, braid: BraidingLike = SUPER) -> FreeElement:
    if k < 0:
        raise ValueError("shuffle powers need k >= 0")
    if k and a:
        check_length(k * max(map(len, a._terms)))
    result = ONE
    for _ in range(k):
        result = shuffle_elems(result, a, braid)
    return result


def shuffle_commutator(a: FreeElement, b: FreeElement, braid: BraidingLike = SUPER) -> FreeElement:
    """``a * b - b * a`` for the shuffle product."""
    return shuffle_elems(a, b, braid) - shuffle_elems(b, a, braid)

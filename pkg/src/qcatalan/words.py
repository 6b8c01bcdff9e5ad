"""Words over the alphabet {x, y}: weights, balance, Catalan words.

Words are plain ``str`` objects over ``"x"`` and ``"y"``; the empty string is
the unit of the free algebra.  Catalan words are enumerated in length-lex
order with ``x < y`` (for a fixed length this is ordinary lexicographic
order on the strings).
"""

from __future__ import annotations

import os
from functools import lru_cache
from typing import List, Tuple

X = "x"
Y = "y"
LETTERS = (X, Y)
BAR = {X: 1, Y: -1}

DEFAULT_WORD_CAP = 24


class WordCapError(ValueError):
    """A computation would produce words longer than the configured cap."""


def _cap_from_env() -> int:
    raw = os.environ.get("QCATALAN_CAP")
    if raw is None or raw.strip() == "":
        return DEFAULT_WORD_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise ValueError(f"QCATALAN_CAP must be an integer, got {raw!r}") from None
    if cap < 0:
        raise ValueError("QCATALAN_CAP must be nonnegative")
    return cap


_word_cap = _cap_from_env()


def get_word_cap() -> int:
    return _word_cap


def set_word_cap(cap: int) -> int:
    """Set the maximum word length; returns the previous value."""
    global _word_cap
    if cap < 0:
        raise ValueError("word cap must be nonnegative")
    old, _word_cap = _word_cap, int(cap)
    return old


def check_length(length: int) -> None:
    if length > _word_cap:
        raise WordCapError(f"word length {length} exceeds the cap {_word_cap}")


def validate_word(w: str) -> str:
    if not isinstance(w, str):
        raise TypeError(f"a word must be a str, got {type(w).__name__}")
    bad = set(w) - {X, Y}
    if bad:
        raise ValueError(f"word {w!r} has letters outside {{x, y}}: {sorted(bad)}")
    return w


def word_order_key(w: str) -> Tuple[int, str]:
    """Sort key for the canonical order: length first, then lex with x < y."""
    return (len(w), w)


def bar_prefix_sums(w: str) -> Tuple[int, ...]:
    """Running weights with ``x -> +1`` and ``y -> -1``."""
    out = []
    s = 0
    for a in w:
        s += BAR[a]
        out.append(s)
    return tuple(out)


def weight(w: str) -> int:
    return w.count(X) - w.count(Y)


def is_balanced(w: str) -> bool:
    return weight(w) == 0


def is_catalan(w: str) -> bool:
    s = 0
    for a in w:
        s += BAR[a]
        if s < 0:
            return False
    return s == 0


def enumerate_catalan(n: int) -> List[str]:
    """All Catalan words of length ``2n`` in lexicographic order (x < y)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    check_length(2 * n)
    return list(_catalan_words(n))


@lru_cache(maxsize=None)
def _catalan_words(n: int) -> Tuple[str, ...]:
    out: List[str] = []
    buf: List[str] = []

    def walk(opened: int, height: int) -> None:
        if len(buf) == 2 * n:
            out.append("".join(buf))
            return
        if opened < n:
            buf.append(X)
            walk(opened + 1, height + 1)
            buf.pop()
        if height > 0:
            buf.append(Y)
            walk(opened, height - 1)
            buf.pop()

    walk(0, 0)
    return tuple(out)


_SWAP = str.maketrans({X: Y, Y: X})


def reverse_swap(w: str) -> str:
    """Reverse ``w`` and exchange x and y (the word-level antiautomorphism)."""
    return w[::-1].translate(_SWAP)


def all_words(length: int) -> List[str]:
    """Every word of the given length, lexicographic with x < y."""
    out = [""]
    for _ in range(length):
        out = [w + a for w in out for a in LETTERS]
    return out

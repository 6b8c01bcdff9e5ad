"""Strategies and small builders shared by the test modules."""

import re
from fractions import Fraction

from hypothesis import strategies as st

from qcatalan.freealg import FreeElement
from qcatalan.laurent import LaurentPoly, q_brace

small_fractions = st.fractions(min_value=-5, max_value=5, max_denominator=4)
laurent_polys = st.dictionaries(st.integers(-6, 6), small_fractions, max_size=5).map(LaurentPoly)
nonzero_laurent = laurent_polys.filter(bool)


def words_of(min_size=0, max_size=6):
    return st.text(alphabet="xy", min_size=min_size, max_size=max_size)


def elements(min_len=0, max_len=4, max_terms=4):
    return st.dictionaries(words_of(min_len, max_len), nonzero_laurent, max_size=max_terms).map(FreeElement)


def homogeneous(length, max_terms=4):
    return st.dictionaries(words_of(length, length), nonzero_laurent, max_size=max_terms).map(FreeElement)


_FACTOR = re.compile(r"\{(\d+)\}(?:_q)?(?:\^(\d+))?")


def braces(text: str) -> LaurentPoly:
    """Parse a signed product like ``-{3}_q^2{2}_q`` into a Laurent polynomial."""
    text = text.replace(" ", "")
    sign = -1 if text.startswith("-") else 1
    out = LaurentPoly(sign)
    for k, m in _FACTOR.findall(text):
        out = out * q_brace(int(k)) ** int(m or 1)
    return out


def element(pairs) -> FreeElement:
    return FreeElement([(w, braces(c) if isinstance(c, str) else c) for w, c in pairs])


def frac(a, b=1) -> Fraction:
    return Fraction(a, b)


# Catalan elements of degree 0..4 as displayed term by term in the worked example
CATALAN_GOLDEN = {
    0: [("", "1")],
    1: [("xy", "{2}")],
    2: [("xyxy", "{2}^2"), ("xxyy", "-{3}{2}^2")],
    3: [
        ("xyxyxy", "{2}^3"), ("xxyyxy", "-{3}{2}^3"), ("xyxxyy", "-{3}{2}^3"),
        ("xxyxyy", "{3}^2{2}^3"), ("xxxyyy", "-{4}{3}^2{2}^2"),
    ],
    4: [
        ("xyxyxyxy", "{2}^4"), ("xyxyxxyy", "-{2}^4{3}"), ("xyxxyxyy", "{2}^4{3}^2"),
        ("xxyxyxyy", "-{2}^4{3}^3"), ("xxyyxyxy", "-{2}^4{3}"), ("xxyyxxyy", "{2}^4{3}^2"),
        ("xxxyyxyy", "{2}^3{3}^3{4}"), ("xxyxxyyy", "{2}^3{3}^3{4}"), ("xyxxyyxy", "-{2}^4{3}"),
        ("xyxxxyyy", "-{2}^3{3}^2{4}"), ("xxyxyyxy", "{2}^4{3}^2"), ("xxxyxyyy", "-{2}^2{3}^3{4}^2"),
        ("xxxyyyxy", "-{2}^3{3}^2{4}"), ("xxxxyyyy", "{2}^2{3}^2{4}^2{5}"),
    ],
}

from itertools import combinations

import pytest
from hypothesis import given

from qcatalan.catalan import catalan_element
from qcatalan.freealg import ONE, ZERO, FreeElement, X, Y, fe_zeta, linear_combination
from qcatalan.laurent import ONE as LP_ONE
from qcatalan.laurent import LaurentPoly, q_brace, q_power
from qcatalan.shuffle import (
    ADMISSIBLE,
    CACHE,
    SUPER,
    Braiding,
    BraidingTable,
    caching,
    make_braiding,
    shuffle,
    shuffle_commutator,
    shuffle_elems,
    shuffle_power,
    shuffle_words,
)
from qcatalan.words import WordCapError, all_words, set_word_cap

from support import element, elements, words_of

BRAIDINGS = [SUPER, ADMISSIBLE]
PAIRING = {("x", "x"): 2, ("y", "y"): 2, ("x", "y"): -2, ("y", "x"): -2}


def interleavings(u, v, braid):
    """Sum over every placement of u's letters among v's; a v-letter before a u-letter costs chi(u_i, v_j)."""
    n = len(u) + len(v)
    acc = {}
    for slots in combinations(range(n), len(u)):
        chosen = set(slots)
        word, coeff = [], LP_ONE
        iu = iv = 0
        for pos in range(n):
            if pos in chosen:
                word.append(u[iu])
                for b in v[:iv]:
                    coeff = coeff * braid.chi(u[iu], b)
                iu += 1
            else:
                word.append(v[iv])
                iv += 1
        w = "".join(word)
        acc[w] = acc.get(w, 0) + coeff
    return FreeElement(acc)


def letter_left(a, v):
    """x * v for a single letter, summing signs and pairing exponents position by position."""
    terms = []
    for i in range(len(v) + 1):
        e = sum(PAIRING[(b, a)] for b in v[:i])
        terms.append((v[:i] + a + v[i:], q_power(e, (-1) ** i)))
    return FreeElement(terms)


def letter_right(v, a):
    terms = []
    n = len(v)
    for i in range(n + 1):
        e = sum(PAIRING[(b, a)] for b in v[i:])
        terms.append((v[:i] + a + v[i:], q_power(e, (-1) ** (n - i))))
    return FreeElement(terms)


def right_peeling(u, v, braid):
    """The recursion that splits off the last letters instead of the first."""
    if not u or not v:
        return FreeElement.word(u + v)
    last = LP_ONE
    for b in v:
        last = last * braid.chi(u[-1], b)
    with_v = right_peeling(u, v[:-1], braid)
    left = FreeElement({w + v[-1]: c for w, c in with_v.items()})
    rest = right_peeling(u[:-1], v, braid)
    right = FreeElement({w + u[-1]: c * last for w, c in rest.items()})
    return left + right


def test_braiding_tables():
    assert SUPER.chi("y", "x") == q_power(-2, -1)
    assert ADMISSIBLE.chi("y", "x") == q_power(-2)
    for b in BRAIDINGS:
        assert b.chi("x", "x") == q_power(2, -1) == b.chi("y", "y")
    assert make_braiding("SUPER") == SUPER
    assert make_braiding(Braiding.ADMISSIBLE) == ADMISSIBLE
    assert SUPER != ADMISSIBLE


def test_braiding_table_validation():
    with pytest.raises(ValueError):
        BraidingTable("half", {("x", "x"): 1})
    with pytest.raises(ValueError):
        BraidingTable("wide", {(a, b): LaurentPoly({0: 1, 1: 1}) for a in "xy" for b in "xy"})
    with pytest.raises(ValueError):
        make_braiding("classical")


def test_length_one_products():
    assert shuffle_words("x", "y", SUPER) == FreeElement({"xy": 1, "yx": q_power(-2, -1)})
    assert shuffle_words("x", "y", ADMISSIBLE) == FreeElement({"xy": 1, "yx": q_power(-2)})
    for b in BRAIDINGS:
        assert shuffle_words("x", "x", b) == FreeElement({"xx": 1 - q_power(2)})
        assert shuffle_words("y", "y", b) == FreeElement({"yy": 1 - q_power(2)})


def test_worked_products():
    q = q_power
    assert shuffle_words("x", "yyy") == FreeElement({"xyyy": 1, "yxyy": q(-2, -1), "yyxy": q(-4), "yyyx": q(-6, -1)})
    assert shuffle_words("xyx", "y") == FreeElement({"xyxy": 1, "xyyx": 1 - q(-2), "yxyx": q(-2, -1)})
    ten = FreeElement({
        "xxyyy": 1, "xyxyy": q(-2, -1), "xyyxy": q(-4), "xyyyx": q(-6, -1), "yxxyy": q(-4),
        "yxyxy": q(-6, -1), "yxyyx": q(-8), "yyxxy": q(-8), "yyxyx": q(-10, -1), "yyyxx": q(-12),
    })
    assert shuffle_words("xx", "yyy") == ten
    assert shuffle_words("xy", "xxyy") == element([("xyxxyy", 1), ("xxyyxy", 1), ("xxyxyy", "-{2}^2"), ("xxxyyy", "{3}^2")])


def test_units_and_zero():
    for b in BRAIDINGS:
        assert shuffle_words("", "xyy", b) == FreeElement.word("xyy")
        assert shuffle_words("yx", "", b) == FreeElement.word("yx")
        assert shuffle_elems(catalan_element(2), ZERO, b) == ZERO
        assert shuffle_elems(ONE, catalan_element(2), b) == catalan_element(2)


def test_catalan_one_squared():
    c1 = catalan_element(1)
    assert shuffle_elems(c1, c1) == shuffle_words("xy", "xy").scale(q_brace(2) ** 2)
    assert shuffle_power(c1, 2) == shuffle_elems(c1, c1)
    assert shuffle_power(c1, 0) == ONE
    assert shuffle_power(c1, 1) == c1
    with pytest.raises(ValueError):
        shuffle_power(c1, -1)


@pytest.mark.parametrize("braid", BRAIDINGS, ids=lambda b: b.name)
@given(u=words_of(0, 4), v=words_of(0, 4))
def test_matches_interleaving_sum(braid, u, v):
    assert shuffle_words(u, v, braid) == interleavings(u, v, braid)


@pytest.mark.parametrize("braid", BRAIDINGS, ids=lambda b: b.name)
@given(u=words_of(0, 4), v=words_of(0, 4))
def test_matches_right_peeling(braid, u, v):
    assert shuffle_words(u, v, braid) == right_peeling(u, v, braid)


@pytest.mark.parametrize("a", "xy")
@pytest.mark.parametrize("length", range(7))
def test_letter_insertion_formulas(a, length):
    for v in all_words(length):
        assert shuffle_words(a, v, SUPER) == letter_left(a, v)
        assert shuffle_words(v, a, SUPER) == letter_right(v, a)


@pytest.mark.parametrize("braid", BRAIDINGS, ids=lambda b: b.name)
@given(u=words_of(0, 3), v=words_of(0, 3), w=words_of(0, 3))
def test_associative_on_words(braid, u, v, w):
    a, b, c = FreeElement.word(u), FreeElement.word(v), FreeElement.word(w)
    assert shuffle_elems(shuffle_elems(a, b, braid), c, braid) == shuffle_elems(a, shuffle_elems(b, c, braid), braid)


@pytest.mark.parametrize("braid", BRAIDINGS, ids=lambda b: b.name)
@given(a=elements(0, 3, 3), b=elements(0, 3, 3), c=elements(0, 3, 3))
def test_associative_on_elements(braid, a, b, c):
    assert shuffle(shuffle(a, b, braid=braid), c, braid=braid) == shuffle(a, shuffle(b, c, braid=braid), braid=braid)


@pytest.mark.parametrize("braid", BRAIDINGS, ids=lambda b: b.name)
@given(u=words_of(0, 5), v=words_of(0, 4))
def test_degree_additive(braid, u, v):
    assert all(len(w) == len(u) + len(v) for w in shuffle_words(u, v, braid))


@pytest.mark.parametrize("braid", BRAIDINGS, ids=lambda b: b.name)
@given(a=elements(0, 4), b=elements(0, 4))
def test_zeta_reverses_shuffle(braid, a, b):
    assert fe_zeta(shuffle_elems(a, b, braid)) == shuffle_elems(fe_zeta(b), fe_zeta(a), braid)


@pytest.mark.parametrize("braid", BRAIDINGS, ids=lambda b: b.name)
@given(a=elements(0, 4, 5), b=elements(0, 4, 5))
def test_element_kernel_matches_word_sums(braid, a, b):
    expected = linear_combination(
        (ca * cb, shuffle_words(u, v, braid)) for u, ca in a.items() for v, cb in b.items()
    )
    with caching(False):
        assert shuffle_elems(a, b, braid) == expected


def test_cache_does_not_change_results():
    CACHE.clear()
    a, b = catalan_element(3), catalan_element(2)
    with caching(False):
        cold = shuffle_elems(a, b)
        assert CACHE.stats() == {"words": 0, "elements": 0}
    warm = shuffle_elems(a, b)
    assert CACHE.stats()["elements"] >= 1
    assert shuffle_elems(a, b) is warm
    assert cold == warm


def test_super_cubic_relations():
    b3 = q_brace(3)
    for a, c in (("x", "y"), ("y", "x")):
        A, C = FreeElement.word(a), FreeElement.word(c)
        rel = (shuffle(A, A, A, C) + shuffle(A, A, C, A).scale(b3)
               - shuffle(A, C, A, A).scale(b3) - shuffle(C, A, A, A))
        assert rel == ZERO


def test_admissible_cubic_relations():
    k = 1 - q_power(2) - q_power(-2)
    for A, C in ((X, Y), (Y, X)):
        rel = (shuffle(A, A, A, C, braid=ADMISSIBLE)
               + (shuffle(A, A, C, A, braid=ADMISSIBLE) + shuffle(A, C, A, A, braid=ADMISSIBLE)).scale(k)
               + shuffle(C, A, A, A, braid=ADMISSIBLE))
        assert rel == ZERO


def test_commutator():
    assert shuffle_commutator(X, Y) == shuffle_words("x", "y") - shuffle_words("y", "x")
    c2, c3 = catalan_element(2), catalan_element(3)
    assert shuffle_commutator(c2, c3) == ZERO


def test_cap_enforced():
    old = set_word_cap(5)
    try:
        with pytest.raises(WordCapError):
            shuffle_words("xyx", "yxy")
        with pytest.raises(WordCapError):
            shuffle_power(FreeElement.word("xy"), 3)
    finally:
        set_word_cap(old)


def test_string_braiding_names():
    assert shuffle_words("xy", "y", "super") == shuffle_words("xy", "y", SUPER)
    assert shuffle_elems(X, Y, "admissible") == shuffle_words("x", "y", ADMISSIBLE)

import json
from fractions import Fraction

import pytest
from hypothesis import given

from qcatalan.catalan import catalan_element, x_catalan_y
from qcatalan.freealg import (
    ONE,
    ZERO,
    FreeElement,
    GradedComponent,
    X,
    Y,
    fe_bilinear_form,
    fe_concat_mul,
    fe_grade_project,
    fe_zeta,
)
from qcatalan.laurent import ONE as LP_ONE
from qcatalan.laurent import Q, Q_PLUS, LaurentPoly, NonDivisibleError, q_brace
from qcatalan.words import WordCapError, set_word_cap

from support import elements, homogeneous


def test_concat_examples():
    c1 = catalan_element(1)
    assert fe_concat_mul(X, c1) == FreeElement({"xxy": q_brace(2)})
    b = FreeElement({"xy": 3, "yyx": Q})
    assert fe_concat_mul(ONE, b) == b
    assert fe_concat_mul(FreeElement.word("xy"), FreeElement.word("yx")) == FreeElement.word("xyyx")
    assert fe_concat_mul(ZERO, b) == ZERO


@given(elements(), elements())
def test_concat_is_degree_additive(a, b):
    prod = fe_concat_mul(a, b)
    for w in prod:
        assert any(len(w) == len(u) + len(v) for u in a for v in b)


@given(elements(), elements(), elements())
def test_concat_associative(a, b, c):
    assert (a * b) * c == a * (b * c)


def test_form_examples():
    xy, yx = FreeElement.word("xy"), FreeElement.word("yx")
    assert fe_bilinear_form(xy, xy) == LP_ONE
    assert fe_bilinear_form(xy, yx) == 0
    assert fe_bilinear_form(x_catalan_y(1), FreeElement.word("xxyy")) == q_brace(2)


@given(elements(), elements())
def test_form_symmetric(a, b):
    assert fe_bilinear_form(a, b) == fe_bilinear_form(b, a)


@given(homogeneous(2), homogeneous(3))
def test_form_vanishes_across_degrees(a, b):
    assert fe_bilinear_form(a, b) == 0


@given(homogeneous(2), homogeneous(2), homogeneous(3), homogeneous(3))
def test_form_multiplicative_on_split_degrees(a, a2, b, b2):
    assert fe_bilinear_form(a * b, a2 * b2) == fe_bilinear_form(a, a2) * fe_bilinear_form(b, b2)


def test_zeta_examples():
    assert fe_zeta(FreeElement.word("xxy")) == FreeElement.word("xyy")
    c2 = catalan_element(2)
    assert fe_zeta(c2) == c2


@given(elements(max_len=5))
def test_zeta_involution(a):
    assert fe_zeta(fe_zeta(a)) == a


@given(elements(), elements())
def test_zeta_reverses_concat(a, b):
    assert fe_zeta(a * b) == fe_zeta(b) * fe_zeta(a)


def test_grade_projection():
    c1 = catalan_element(1)
    assert fe_grade_project(ONE + c1, 2).element == c1
    assert fe_grade_project(catalan_element(2), 3).element == ZERO
    assert fe_grade_project(ZERO, 4).element == ZERO
    assert fe_grade_project(ONE + c1, 0).degree == 0
    with pytest.raises(ValueError):
        fe_grade_project(c1, -1)
    with pytest.raises(ValueError):
        GradedComponent(3, c1)


@given(elements(max_len=5))
def test_grades_partition_an_element(a):
    total = ZERO
    for n in range(6):
        piece = fe_grade_project(a, n)
        assert all(len(w) == n for w in piece.element)
        total = total + piece.element
    assert total == a


def test_zero_terms_are_dropped():
    e = FreeElement({"xy": 1}) - FreeElement({"xy": 1})
    assert e == ZERO and len(e) == 0
    assert FreeElement([("xy", 1), ("xy", -1)]) == ZERO
    assert (FreeElement({"xy": Q}).scale(0)) == ZERO


def test_linear_structure():
    a = FreeElement({"x": 1, "xy": Fraction(1, 2)})
    assert a + a == a.scale(2) == 2 * a
    assert a - a == ZERO
    assert -(-a) == a
    assert a + 1 == FreeElement({"": 1, "x": 1, "xy": Fraction(1, 2)})
    assert a.coefficient("yy") == 0


def test_exact_division():
    a = FreeElement({"xy": Q_PLUS * Q, "yx": Q_PLUS})
    assert a.exact_div(Q_PLUS) == FreeElement({"xy": Q, "yx": 1})
    with pytest.raises(NonDivisibleError) as err:
        FreeElement({"xy": Q, "yx": Q_PLUS}).exact_div(Q_PLUS)
    assert err.value.remainder.support() == ["xy"]


def test_canonical_order():
    e = FreeElement({"yx": 1, "xxy": 1, "xy": 2, "": 1})
    assert e.support() == ["", "xy", "yx", "xxy"]
    assert [w for w, _ in e.items()] == e.support()
    assert e.degrees() == [0, 2, 3]
    assert not e.is_homogeneous()


@given(elements(max_len=5))
def test_json_round_trip(a):
    assert FreeElement.from_json(json.loads(json.dumps(a.to_json()))) == a


def test_json_shape():
    e = FreeElement({"xy": LaurentPoly({-1: 1, 1: -1})})
    assert e.to_json() == [{"word": "xy", "coeff": {"-1": "1/1", "1": "-1/1"}}]


def test_rejects_bad_words_and_long_words():
    with pytest.raises(ValueError):
        FreeElement({"xa": 1})
    old = set_word_cap(3)
    try:
        with pytest.raises(WordCapError):
            FreeElement.word("xyxy")
        with pytest.raises(WordCapError):
            fe_concat_mul(FreeElement.word("xy"), FreeElement.word("xy"))
    finally:
        set_word_cap(old)


def test_hash_and_equality():
    a = FreeElement({"xy": 2, "x": 1})
    b = FreeElement([("x", 1), ("xy", 1), ("xy", 1)])
    assert a == b and hash(a) == hash(b)
    assert ONE == 1

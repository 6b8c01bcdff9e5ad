from fractions import Fraction

import pytest

from qcatalan.catalan import catalan_element, x_catalan_y
from qcatalan.freealg import ONE, FreeElement, X, Y
from qcatalan.laurent import Q_PLUS, q_brace, q_power
from qcatalan.pbw import (
    RootKind,
    beck_from_damiani,
    beck_generators,
    damiani_from_beck,
    damiani_generators,
    damiani_imag_alt,
    exp_exponent_series,
    imaginary_delta,
    partitions_weighted,
    shuffle_exp_truncated,
    theorem1_closed_form,
    theorem2_closed_form,
)
from qcatalan.shuffle import SUPER, shuffle_elems, shuffle_power

GENS = damiani_generators(5)
DELTA = FreeElement({"xy": 1 - q_power(-4)})


def sh(a, b):
    return shuffle_elems(a, b, SUPER)


def test_first_root_vectors():
    assert GENS.real0[0] == X and GENS.real1[0] == Y
    assert imaginary_delta() == DELTA
    assert GENS.imag[1] == DELTA
    assert DELTA == catalan_element(1).scale(-(q_power(-2) * Q_PLUS))


def test_imag_alt_small():
    assert damiani_imag_alt(1) == DELTA
    assert damiani_imag_alt(2) == GENS.imag[2]
    assert damiani_imag_alt(3, GENS) == GENS.imag[3]


@pytest.mark.parametrize("n", range(1, 6))
def test_imag_alt_agrees(n):
    assert damiani_imag_alt(n, GENS) == GENS.imag[n]


def test_partitions():
    assert partitions_weighted(1) == [(1,)]
    assert partitions_weighted(2) == [(2, 0), (0, 1)]
    assert partitions_weighted(3) == [(3, 0, 0), (1, 1, 0), (0, 0, 1)]
    assert [len(partitions_weighted(n)) for n in range(1, 9)] == [1, 2, 3, 5, 7, 11, 15, 22]
    for n in range(1, 8):
        for p in partitions_weighted(n):
            assert sum(i * k for i, k in enumerate(p, 1)) == n
    with pytest.raises(ValueError):
        partitions_weighted(0)


def test_beck_from_damiani_small_degrees():
    e1, e2, e3 = GENS.imag[1], GENS.imag[2], GENS.imag[3]
    half = Q_PLUS * Fraction(1, 2)
    assert beck_from_damiani(1, GENS.imag) == e1
    assert beck_from_damiani(2, GENS.imag) == e2 + shuffle_power(e1, 2).scale(half)
    expected3 = e3 + sh(e1, e2).scale(Q_PLUS) + shuffle_power(e1, 3).scale(Q_PLUS**2 * Fraction(1, 3))
    assert beck_from_damiani(3, GENS.imag) == expected3


def test_damiani_from_beck_small_degrees():
    beck = beck_generators(3)
    b1, b2, b3 = beck[1], beck[2], beck[3]
    half = Q_PLUS * Fraction(1, 2)
    assert damiani_from_beck(1, beck) == b1
    assert damiani_from_beck(2, beck) == b2 - shuffle_power(b1, 2).scale(half)
    expected3 = b3 - sh(b1, b2).scale(Q_PLUS) + shuffle_power(b1, 3).scale(Q_PLUS**2 * Fraction(1, 6))
    assert damiani_from_beck(3, beck) == expected3


@pytest.mark.parametrize("n", range(1, 6))
def test_schur_round_trip(n):
    beck = {k: beck_from_damiani(k, GENS.imag) for k in range(1, n + 1)}
    assert damiani_from_beck(n, beck) == GENS.imag[n]


@pytest.mark.parametrize("n", range(6))
def test_real_roots_closed_form(n):
    assert GENS.real0[n] == theorem1_closed_form(n, RootKind.REAL0)
    assert GENS.real1[n] == theorem1_closed_form(n, RootKind.REAL1)


@pytest.mark.parametrize("n", range(1, 6))
def test_imaginary_roots_closed_form(n):
    assert GENS.imag[n] == theorem1_closed_form(n, "imag")


@pytest.mark.parametrize("n", range(1, 6))
def test_beck_closed_form(n):
    assert beck_from_damiani(n, GENS.imag) == theorem2_closed_form(n)


def test_closed_form_small_cases():
    assert theorem1_closed_form(0, RootKind.REAL0) == X
    assert theorem1_closed_form(0, RootKind.REAL1) == Y
    assert theorem1_closed_form(1, RootKind.IMAG) == DELTA
    assert theorem2_closed_form(1) == DELTA
    with pytest.raises(ValueError):
        theorem1_closed_form(0, RootKind.IMAG)
    with pytest.raises(ValueError):
        theorem2_closed_form(0)


@pytest.mark.parametrize("n", range(1, 5))
def test_beck_roots_commute(n):
    beck = beck_generators(4)
    for m in range(1, n):
        assert sh(beck[m], beck[n]) == sh(beck[n], beck[m])


def test_exp_series():
    series = exp_exponent_series(4)
    assert series[1] == catalan_element(1)
    out = shuffle_exp_truncated(series, 4)
    assert out[0] == ONE
    for k in range(1, 5):
        assert out[k] == catalan_element(k)


def test_exp_low_orders():
    assert shuffle_exp_truncated(exp_exponent_series(0), 0) == {0: ONE}
    assert shuffle_exp_truncated(exp_exponent_series(1), 1)[1] == catalan_element(1)
    assert shuffle_exp_truncated({1: X}, 2)[2] == shuffle_power(X, 2).scale(Fraction(1, 2))


def test_exp_rejects_bad_input():
    with pytest.raises(ValueError):
        shuffle_exp_truncated({0: ONE}, 2)
    with pytest.raises(ValueError):
        shuffle_exp_truncated({}, -1)


def test_exponent_coefficients():
    series = exp_exponent_series(3)
    assert series[2] == x_catalan_y(1).scale(q_brace(4) * Fraction(-1, 2))
    assert series[3] == x_catalan_y(2).scale(q_brace(6) * Fraction(1, 3))


def test_generator_bounds():
    with pytest.raises(ValueError):
        damiani_generators(-1)
    with pytest.raises(ValueError):
        damiani_imag_alt(0)
    assert damiani_generators(0).imag == {}

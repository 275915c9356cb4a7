import cmath
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tribsed.triseq import (
    SEQUENCE_NAMES,
    Matrix3,
    RootRegimeError,
    SequenceError,
    TriParams,
    binet_scalar,
    companion_matrix,
    cubic_roots,
    delta,
    det_D,
    howard_addition_check,
    matrix_o,
    matrix_power_entries,
    matrix_power_formula,
    named_params,
    named_sequence,
    seq_term,
    seq_term_matrix,
    seq_terms,
    sum_scalar,
    u_term,
)

TRIB = named_params("tribonacci")

ints = st.integers(-4, 4)
params = st.builds(TriParams, ints, ints, ints, ints, ints, st.integers(1, 4) | st.integers(-4, -1))


def test_catalog():
    assert len(SEQUENCE_NAMES) == 12
    assert named_sequence("padovan").params == TriParams(1, 1, 1, 0, 1, 1)
    with pytest.raises(SequenceError, match="tribonacci"):
        named_sequence("fibonacci")


def test_params_are_exact():
    p = TriParams(0, 1, 1, Fraction(1, 2), 1, 1)
    assert p.r == Fraction(1, 2)
    assert str(TriParams(0, 1, 1, 1, 1, 1)) == "V(0,1,1;1,1,1)"
    assert str(p) == "V(0,1,1;1/2,1,1)"
    with pytest.raises(TypeError, match="not floats"):
        TriParams(0.5, 1, 1, 1, 1, 1)


def test_known_values():
    assert seq_terms(TRIB, 0, 10) == [0, 1, 1, 2, 4, 7, 13, 24, 44, 81, 149]
    assert seq_terms(TRIB, -6, -1) == [-3, 2, 0, -1, 1, 0]
    assert u_term(1, 1, 1, 10) == 81
    assert u_term(1, 1, 1, 6) == 7
    assert seq_term(TRIB, 200) == seq_term(TRIB, 199) + seq_term(TRIB, 198) + seq_term(TRIB, 197)


def test_rational_terms():
    p = TriParams(1, 1, 1, 1, 1, 2)
    assert seq_term(p, -1) == Fraction(-1, 2)


def test_negative_needs_t():
    p = TriParams(1, 2, 3, 1, 1, 0)
    assert seq_term(p, 5) == seq_term(p, 4) + seq_term(p, 3)
    with pytest.raises(SequenceError, match="t = 0"):
        seq_term(p, -1)


@given(params, st.integers(-15, 15))
def test_recurrence_holds_everywhere(p, n):
    r, s, t = p.coefficients
    assert seq_term(p, n + 3) == r * seq_term(p, n + 2) + s * seq_term(p, n + 1) + t * seq_term(p, n)


def test_summation_scalar():
    assert sum_scalar(TRIB, 4) == 8
    assert sum_scalar(named_params("perrin"), 5) == 15
    with pytest.raises(SequenceError, match="singular"):
        sum_scalar(TriParams(0, 1, 1, 1, 1, -1), 3)


@given(params, st.integers(0, 25))
def test_summation_matches_direct(p, n):
    if sum(p.coefficients) == 1:
        return
    assert sum_scalar(p, n) == sum(seq_terms(p, 0, n))


def test_delta_values():
    assert delta(1, 1, 1) == Fraction(11, 27)
    assert delta(0, 2, 1) == Fraction(-5, 108)
    assert delta(1, 0, 1) == Fraction(31, 108)


def test_roots_tribonacci():
    rd = cubic_roots(TRIB)
    assert abs(rd.alpha - 1.839286755214161) < 1e-15
    assert rd.gamma == rd.beta.conjugate()
    for x in rd.roots:
        assert abs(x ** 3 - x ** 2 - x - 1) < 1e-12


def test_rational_root():
    rd = cubic_roots(named_params("third-order-jacobsthal"))
    assert abs(rd.alpha - 2) < 1e-15
    assert abs(rd.beta - cmath.exp(2j * cmath.pi / 3)) < 1e-14


def test_root_regime_rejected():
    with pytest.raises(RootRegimeError, match="-5/108"):
        cubic_roots(named_params("pell-padovan"))
    with pytest.raises(RootRegimeError):
        cubic_roots(named_params("pell-perrin"))


@pytest.mark.parametrize("name", ["tribonacci", "perrin", "narayana", "padovan-perrin"])
def test_binet_scalar(name):
    p = named_params(name)
    rd = cubic_roots(p)
    for n in range(-10, 41):
        exact = float(seq_term(p, n))
        assert abs(binet_scalar(p, n, rd) - exact) <= 1e-9 * max(1.0, abs(exact))


def test_matrix_basics():
    m = companion_matrix(1, 1, 1)
    assert m.det() == 1
    assert (m ** 0) == Matrix3.identity()
    assert m ** 5 == m @ m @ m @ m @ m
    assert tuple(m.charpoly()) == (1, -1, -1, -1)
    assert tuple(matrix_o(2, 3, 5).charpoly()) == (1, -2, -3, -5)
    assert tuple(matrix_o(2, 3, 5, as_printed=True).charpoly()) == (1, -5, -3, -2)


@given(ints, ints, st.integers(1, 3), st.integers(0, 20))
def test_matrix_power_formula(r, s, t, n):
    assert matrix_power_entries(r, s, t, n) == matrix_power_formula(r, s, t, n)
    assert matrix_power_entries(r, s, t, n).det() == t ** n


@given(params, st.integers(0, 40))
def test_matrix_sequence(p, n):
    assert seq_term_matrix(p, n) == seq_term(p, n)


def test_det_D_and_howard():
    trib, lucas = named_params("tribonacci"), named_params("tribonacci-lucas")
    for n in range(-10, 11):
        assert det_D(trib, lucas, n) == 0
    with pytest.raises(SequenceError):
        det_D(trib, named_params("padovan"), 0)
    for n in range(-3, 8):
        for m in range(6):
            assert howard_addition_check(trib, n, m) == 0

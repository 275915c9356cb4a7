from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tribsed.cdalg import CdElement
from tribsed.sedseq import (
    gf_coefficients,
    gf_denominator,
    gf_numerator,
    hat,
    sed_binet,
    sed_conjugate,
    sed_norm_closed,
    sed_norm_direct,
    sed_norm_via_product,
    sed_sum,
    sed_sum_direct,
    sed_term,
    sed_value,
    series_divide,
    summation_constants,
)
from tribsed.triseq import SequenceError, TriParams, cubic_roots, named_params, seq_term

TRIB = named_params("tribonacci")
PADOVAN = named_params("padovan")

ints = st.integers(-3, 3)
params = st.builds(TriParams, ints, ints, ints, ints, ints, st.sampled_from([-2, -1, 1, 2]))


def test_term_layout():
    x = sed_term(TRIB, 0)
    assert x.n == 0
    assert x.coeffs[:6] == (0, 1, 1, 2, 4, 7)
    assert x.coeffs[15] == seq_term(TRIB, 15)
    assert sed_term(TRIB, -3).coeffs[:4] == (-1, 1, 0, 0)


def test_conjugate():
    c = sed_conjugate(sed_term(TRIB, 2))
    assert c.coeffs[0] == 1 and c.coeffs[1] == -2 and c.coeffs[15] == -seq_term(TRIB, 17)


def test_norm_frozen():
    assert sed_norm_direct(sed_term(PADOVAN, 0)) == 5586


@settings(max_examples=40)
@given(params, st.integers(-5, 10))
def test_norm_routes_agree(p, n):
    x = sed_term(p, n)
    assert sed_norm_direct(x) == sed_norm_via_product(x) == sum(c * c for c in x.coeffs)


def test_hat():
    h = hat(2)
    assert h.coeffs[0] == 1 and h.coeffs[10] == 1024


@pytest.mark.parametrize("form", ["main", "alternative"])
def test_binet_forms(form):
    rd = cubic_roots(TRIB)
    for n in range(-8, 25):
        got = sed_binet(TRIB, n, form, rd)
        want = sed_value(TRIB, n)
        for g, w in zip(got.coeffs, want.coeffs):
            assert abs(g.real - float(w)) <= 1e-8 * max(1.0, abs(float(w)))


def test_binet_form_errors():
    with pytest.raises(ValueError, match="unknown Binet form"):
        sed_binet(TRIB, 0, "other")


def test_series_divide_geometric():
    one = CdElement(0, (1,))
    out = series_divide([one], [1, -1], 5)
    assert [x.coeffs[0] for x in out] == [1] * 5
    with pytest.raises(ZeroDivisionError):
        series_divide([one], [0, 1], 3)


def test_gf_pieces():
    num = gf_numerator(TRIB)
    assert num[2] == sed_value(TRIB, -1).scale(TRIB.t)
    assert gf_denominator(TRIB) == [1, -1, -1, -1]


@settings(max_examples=30)
@given(params)
def test_gf_matches_terms(p):
    for term in gf_coefficients(p, 12):
        assert term.value == sed_value(p, term.n)


def test_gf_handles_t_zero():
    p = TriParams(2, 1, 3, 1, 1, 0)
    for term in gf_coefficients(p, 10):
        assert term.value == sed_value(p, term.n)


def test_summation_constants():
    eps, mu, phi = summation_constants(TRIB)
    assert eps == 2 and mu == -1
    assert phi.coeffs[:4] == (-1, -1, -3, -5)


def test_summation_exact():
    for n in range(20):
        assert sed_sum(TRIB, n) == sed_sum_direct(TRIB, n)
    assert sed_sum(TRIB, 4).coeffs[0] == 8
    assert sed_sum(named_params("perrin"), 5).coeffs[0] == 15


def test_summation_singular():
    with pytest.raises(SequenceError, match="singular"):
        sed_sum(TriParams(0, 1, 1, 1, 1, -1), 3)
    with pytest.raises(SequenceError):
        sed_sum(TRIB, -1)


@settings(max_examples=30)
@given(params, st.integers(0, 15))
def test_summation_property(p, n):
    if sum(p.coefficients) == 1:
        return
    assert sed_sum(p, n) == sed_sum_direct(p, n)


@pytest.mark.parametrize("name", ["tribonacci", "padovan", "narayana", "third-order-jacobsthal"])
def test_closed_norm(name):
    p = named_params(name)
    rd = cubic_roots(p)
    for n in range(21):
        exact = float(sed_norm_direct(sed_term(p, n)))
        assert abs(sed_norm_closed(p, n, rd) - exact) <= 1e-8 * exact


def test_statement_norm_disagrees():
    exact = float(sed_norm_direct(sed_term(TRIB, 3)))
    assert abs(sed_norm_closed(TRIB, 3, form="statement") - exact) > 1e-3 * exact


def test_rational_coefficients():
    p = TriParams(1, 0, 1, Fraction(1, 2), 1, Fraction(1, 3))
    assert sed_sum(p, 6) == sed_sum_direct(p, 6)
    assert gf_coefficients(p, 5)[4].value == sed_value(p, 4)

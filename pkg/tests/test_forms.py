import math
from fractions import Fraction

import pytest

from congruence_forge.errors import DenominatorDivisibleByEll, InsufficientPrecision
from congruence_forge.forms import (
    CuspMonomial,
    GradedForm,
    basis,
    eisenstein,
    filtration,
    fit,
    fit_with_vanishing,
    generator,
    generator_series,
    r_op,
    sturm_bound,
    sturm_precision,
)
from congruence_forge.qseries import QSeries, eta_quotient

from oracles import naive_product, sigma, theta0_coeffs

THETA_FE = CuspMonomial(1, 1, 1)


@pytest.mark.parametrize("name", ["E", "F", "theta0", "G"])
def test_eta_and_classical_generators_agree(name):
    a = generator_series(name, 120, method="eta")
    b = generator_series(name, 120, method="classical")
    assert a == b


def test_generator_expansions():
    assert generator_series("theta0", 50).coeffs == theta0_coeffs(50)
    f = generator_series("F", 30).extend_start(0)
    # F = sum over odd n of sigma(n) q^n
    assert f.coeffs == [sigma(n, 1) if n % 2 else 0 for n in range(30)]
    assert generator_series("E", 5).coeffs == [1, -8, 24, -32, 24]


def test_sturm_numbers():
    assert sturm_bound(9) == 4
    assert sturm_precision(36) == 19
    assert sturm_bound(-2) == 0


def test_cusp_monomial_eta_round_trip():
    for m in (THETA_FE, CuspMonomial(2, 1, 1), CuspMonomial(0, 3, 0), CuspMonomial(5, 0, 7)):
        assert CuspMonomial.from_eta_spec(m.eta_spec()) == m
        n = 60
        assert eta_quotient(m.eta_spec(), n).extend_start(0).truncate(n) == m.series(n)
    assert CuspMonomial.from_eta_spec({1: 6, 2: -3, 4: 6}) == THETA_FE
    assert CuspMonomial.from_eta_spec({2: 1, 1: -2}) is None
    assert THETA_FE.weight2 == 9
    assert THETA_FE.cusp_orders() == (1, 1, Fraction(1, 4))
    assert str(CuspMonomial(2, 1, 1)) == "theta0*F*E^2"


def _convolve(a, b):
    n = min(len(a), len(b))
    return [sum(a[i] * b[k - i] for i in range(k + 1)) for k in range(n)]


def test_theta_fe_expansion():
    n = 40
    theta = theta0_coeffs(n)
    f = [sigma(k, 1) if k % 2 else 0 for k in range(n)]
    e = naive_product({1: 8, 2: -4}, n)
    expect = _convolve(_convolve(theta, f), e)
    assert THETA_FE.series(n).extend_start(0).coeffs == expect
    assert expect[:5] == [0, 1, -6, 12, -8]


def test_basis_is_triangular():
    for w2 in (8, 9, 13, 24):
        b = basis(w2, 20)
        assert len(b) == w2 // 4 + 1
        for i, v in enumerate(b):
            assert v[i] == 1 and all(v[j] == 0 for j in range(i))


def test_fit_recovers_combination():
    e = generator_series("E", 40)
    f = generator_series("F", 40)
    target = (e * e).scale(3) + (e * f).scale(-5) + (f * f).scale(7)
    assert fit(target.extend_start(0), 8) == [3, -5, 7]
    assert fit(generator_series("theta0", 40), 8) is None
    with pytest.raises(InsufficientPrecision) as info:
        fit(QSeries([1, 2, 3]), 24)
    assert info.value.needed == sturm_precision(24)


def test_fit_mod_ell_lower_weight():
    g = generator_series("G", 40, 7)
    # G = theta0^4 = E + 16F lives in weight 2, so mod 7 also in weight 2 + 6.
    assert fit(g, 4) == [1, 2]
    assert fit(g, 4 + 12) is not None
    assert fit(g, 4 + 6) is None


def test_fit_with_vanishing():
    f = generator_series("F", 60)
    e = generator_series("E", 60)
    target = (f * f * e).scale(2) + (f * f * f).scale(-1)
    assert fit_with_vanishing(target, 12, (2, 0, 0)) == [2, -1]
    assert fit_with_vanishing(target, 12, (2, 1, 0)) is None


def test_eisenstein_coefficients():
    e4 = eisenstein(4, 20)
    assert e4.coeffs == [1] + [240 * sigma(n, 3) for n in range(1, 20)]
    e2 = eisenstein(2, 20)
    assert e2.coeffs == [1] + [-24 * sigma(n, 1) for n in range(1, 20)]
    e12 = eisenstein(12, 5)
    assert e12[1] == Fraction(65520, 691)
    with pytest.raises(DenominatorDivisibleByEll):
        eisenstein(12, 5, ell=691)


@pytest.mark.parametrize("ell", [5, 7, 13])
def test_eisenstein_congruences(ell):
    assert eisenstein(ell - 1, 100, ell) == QSeries.one(100, ell)
    assert eisenstein(ell + 1, 100, ell) == eisenstein(2, 100, ell)


@pytest.mark.parametrize("ell", [5, 7])
def test_r_operator_reduces_to_theta(ell):
    f = THETA_FE.form(101) ** 2
    r = r_op(f, ell)
    assert r.weight2 == f.weight2 + 2 * (ell + 1)
    assert r.series.reduce_mod(ell) == f.series.theta().reduce_mod(ell)


def test_filtration_examples():
    f = (THETA_FE ** 4).series(60, 5)
    assert filtration(f, 36, 5) == 36
    assert filtration(f.theta(), 36 + 12, 5) == 48
    assert filtration(QSeries.zero(30, 0, 5), 36, 5) == math.inf
    g = generator_series("G", 60, 7)
    assert filtration(g, 4 + 24, 7) == 4


def test_graded_form_products():
    e = generator("E", 30)
    f = generator("F", 30)
    ef = e * f
    assert ef.weight2 == 8 and ef.weight == 4
    assert (ef ** 2).weight2 == 16
    assert isinstance(ef.reduce(5), GradedForm) and ef.reduce(5).series.mod == 5

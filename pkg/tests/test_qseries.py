import random
from fractions import Fraction

import pytest

from congruence_forge.errors import (
    BadCharacteristic,
    DenominatorDivisibleByEll,
    FractionalExponent,
    NonUnitLeadingCoefficient,
    OffsetMismatch,
)
from congruence_forge.qseries import QSeries, eta_offset24, eta_power, eta_quotient, pentagonal_product

from oracles import naive_product, overpartition_count, partition_count


def random_series(rng, n, mod=None, unit=False):
    bound = 50 if mod is None else mod
    cs = [rng.randrange(-bound, bound) for _ in range(n)]
    if unit:
        cs[0] = 1
    return QSeries(cs, 0, mod)


def naive_mul(a, b, n):
    return [sum(a[i] * b[k - i] for i in range(k + 1)) for k in range(n)]


def test_pentagonal_product_matches_naive():
    assert pentagonal_product(60).coeffs == naive_product({1: 1}, 60)


def test_eta_inverse_gives_partitions():
    s = eta_quotient({1: -1}, 40)
    assert s.offset24 == -1
    assert s.coeffs == [partition_count(n) for n in range(40)]


def test_overpartition_expansion():
    s = eta_quotient({2: 1, 1: -2}, 9)
    assert s.coeffs == [overpartition_count(n) for n in range(9)]
    assert s.coeffs == [1, 2, 4, 8, 14, 24, 40, 64, 100]


@pytest.mark.parametrize("spec", [{1: 3, 2: -2}, {1: 6, 2: -3, 4: 6}, {2: 5, 1: -2, 4: -2},
                                  {1: -7, 4: 3}])
def test_eta_quotients_match_naive_products(spec):
    n = 80
    s = eta_quotient(spec, n)
    assert s.offset24 == eta_offset24(spec)
    assert s.coeffs == naive_product(spec, n)


def test_mod_arithmetic_agrees_with_exact():
    rng = random.Random(3)
    for p in (2, 3, 5, 7, 53):
        a = random_series(rng, 300, unit=True)
        b = random_series(rng, 300)
        am, bm = a.reduce_mod(p), b.reduce_mod(p)
        assert (a * b).reduce_mod(p) == am * bm
        assert (a + b).reduce_mod(p) == am + bm
        assert a.invert().reduce_mod(p) == am.invert()
        assert a.pow(7).reduce_mod(p) == am.pow(7)
        assert a.pow(-3).reduce_mod(p) == am.pow(-3)


def test_large_power_mod_matches_repeated_products():
    s = eta_quotient({1: 1}, 200, 7)
    direct = QSeries.one(200, 7)
    for _ in range(57):
        direct = direct * s
    assert s.pow(57) == direct


def test_exact_multiplication_large_coefficients():
    rng = random.Random(5)
    a = QSeries([rng.randrange(-10**30, 10**30) for _ in range(120)])
    b = QSeries([rng.randrange(-10**25, 10**25) for _ in range(120)])
    assert (a * b).coeffs == naive_mul(a.coeffs, b.coeffs, 120)


def test_inverse_times_series_is_one():
    s = eta_quotient({1: 6, 2: -3, 4: 6}, 50).normalized()
    inv = s.invert()
    prod = (s * inv).extend_start(0)
    assert prod.coeffs[:49] == [1] + [0] * 48


def test_rational_coefficients():
    s = QSeries([1, Fraction(1, 2), Fraction(1, 3)])
    assert (s * s)[2] == Fraction(1, 4) + Fraction(2, 3)
    assert s.reduce_mod(7)[1] == 4
    with pytest.raises(DenominatorDivisibleByEll):
        s.reduce_mod(3)


def test_operators():
    s = QSeries(list(range(1, 13)))
    assert s.theta().coeffs == [n * (n + 1) for n in range(12)]
    assert s.u_op(3).coeffs == [1, 4, 7, 10]
    assert s.v_op(2)[4] == 3 and s.v_op(2)[3] == 0
    twisted = QSeries([1, 1, 1, 1, 1, 1], 0, 5).legendre_twist(5)
    assert twisted.coeffs == [0, 1, 4, 4, 1, 0]


def test_theta_of_fractional_exponents_mod_ell():
    s = eta_quotient({1: -1}, 30, 5)
    # Theta acts through (24n - 1)/24 mod 5.
    inv24 = pow(24, -1, 5)
    expect = [(n - inv24) * c % 5 for n, c in enumerate(eta_quotient({1: -1}, 30).coeffs)]
    assert [int(c) % 5 for c in s.theta().coeffs] == expect
    with pytest.raises(BadCharacteristic):
        eta_quotient({1: -1}, 10, 3).theta()


def test_fermat_identity_for_u_operator():
    for p in (5, 7):
        f = eta_quotient({1: 6, 2: -3, 4: 6}, 100, p)
        u = f.u_op(p)
        assert u.pow(p) == u.v_op(p)
        assert f - f.theta(p - 1) == u.v_op(p)


def test_errors():
    with pytest.raises(OffsetMismatch):
        QSeries([1, 2]) + QSeries([1, 2], offset24=1)
    with pytest.raises(NonUnitLeadingCoefficient):
        QSeries([2, 1]).invert()
    with pytest.raises(NonUnitLeadingCoefficient):
        QSeries([0, 0], 0, 5).invert()
    with pytest.raises(FractionalExponent):
        QSeries([1], offset24=5).start
    with pytest.raises(ValueError):
        QSeries([1]) + QSeries([1], mod=5)


def test_indexing_and_precision():
    s = eta_quotient({1: -1}, 10)
    assert s[Fraction(-1, 24)] == 1
    assert s[Fraction(-1, 24) + 3] == 3
    assert s[Fraction(-2, 24)] == 0
    with pytest.raises(IndexError):
        s[Fraction(-1, 24) + 10]
    assert QSeries([0, 0, 3, 1]).normalized().offset24 == 48


def test_text_and_record_round_trip():
    s = eta_quotient({1: 3, 2: -2}, 6)
    assert s.to_text() == "q^(-1/24) * (1 - 3*q + 2*q^2 - q^3 + 5*q^4 - 5*q^5 + O(q^6))"
    assert QSeries.from_record(s.to_record()) == s
    r = QSeries([1, 2, 3], 0, 7)
    back = QSeries.from_record(r.to_record())
    assert back.mod == 7 and back == r
    assert "..." in s.to_text(max_terms=2)
    assert QSeries([1, -1]).to_text() == "1 - q + O(q^2)"
    assert QSeries([3], offset24=48).to_text() == "q^2 * (3 + O(q^1))"
    assert QSeries([1], offset24=-12).to_text() == "q^(-1/2) * (1 + O(q^1))"


def test_eta_power_dilation():
    s = eta_power(4, 2, 30)
    assert s.offset24 == 8
    assert s.coeffs == naive_product({4: 2}, 30)

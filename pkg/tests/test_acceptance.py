"""End-to-end acceptance criteria; each prints one pass/fail line in the summary."""

import time
from contextlib import contextmanager

import pytest

from congruence_forge.arith import primes_up_to
from congruence_forge.finder import (
    CERTIFIED,
    DISPROVED,
    EMPIRICAL,
    FinderConfig,
    SearchTarget,
    check_class,
    direct_check,
    frontend,
    full_search,
    lowpoint_constraint_search,
    screen_nonzero_residue,
    screen_zero_residue,
    sign_enumeration_search,
)
from congruence_forge.forms import CuspMonomial, eisenstein, r_op, sturm_precision
from congruence_forge.qseries import eta_quotient
from congruence_forge.tate import required_precision, tate_cycle, validate_cycle

from oracles import colored_frobenius_count, overpartition_count

criterion = pytest.mark.criterion
THETA_FE = CuspMonomial(1, 1, 1)
THETA_E2F = CuspMonomial(2, 1, 1)


@contextmanager
def within(seconds):
    start = time.perf_counter()
    yield
    elapsed = time.perf_counter() - start
    assert elapsed < seconds, f"took {elapsed:.1f}s, limit {seconds}s"


def _statuses(report):
    return {(v.prime, v.residue): v.status for v in report.verdicts if v.status != DISPROVED}


@criterion(1, "inversion golden data")
def test_inversion_golden_data():
    with within(1):
        s = SearchTarget.inverse(THETA_FE).index_series(10)
    assert s.start == -1
    assert s.coeffs == [1, 6, 24, 80, 240, 660, 1696, 4128, 9615, 21560]


@criterion(2, "theta0*F*E inverse end-to-end")
def test_theta_fe_end_to_end():
    with within(120):
        report = full_search(SearchTarget.inverse(THETA_FE))
    assert _statuses(report) == {(2, 0): EMPIRICAL, (3, 0): CERTIFIED, (3, 1): CERTIFIED,
                                 (5, 2): CERTIFIED, (5, 3): CERTIFIED}
    for ell, index in ((7, 7), (11, 22), (13, 13)):
        verdict = report.verdict(ell, 0)
        assert verdict.status == DISPROVED and verdict.witness.index == index


@criterion(3, "theta0*E^2*F inverse end-to-end")
def test_theta_e2f_end_to_end():
    target = SearchTarget.inverse(THETA_E2F)
    with within(120):
        report = full_search(target)
    assert _statuses(report) == {(2, 0): EMPIRICAL, (7, 1): CERTIFIED, (7, 2): CERTIFIED,
                                 (7, 4): CERTIFIED}
    for b in (1, 2, 4):
        cert = report.verdict(7, b).certification
        assert "Theta^4 F* = -Theta F*" in cert.route
        assert target.transform(7) == THETA_E2F ** 6
        assert cert.weight2 == (THETA_E2F ** 6).weight2 + 64
        assert cert.sturm_depth == sturm_precision(cert.weight2)


@criterion(4, "sign-enumeration internals")
def test_sign_enumeration_internals():
    target = SearchTarget.inverse(THETA_FE)
    result = sign_enumeration_search(target)
    (tup,) = [t for t in result.tuples if t.signs == {-1: 1, 2: 1, 3: -1, 5: -1}]
    assert tup.a == [1, 42, 612, 8656, -76608, 1074912, -15155584]
    by_index = {d.index: d for d in tup.differences}
    assert {p for p, _ in by_index[6].factors} == {2, 3, 11, 13, 2963}
    assert {p for p, _ in by_index[8].factors} == {2, 5, 7, 117133}
    assert len(result.tuples) == 16 and target.threshold == 120
    assert all(not [p for p in t.primes if p > 120] for t in result.tuples)
    assert result.candidates == []


@criterion(5, "crank pipeline")
def test_crank_pipeline():
    crank = frontend("crank")
    with within(60):
        constraints = lowpoint_constraint_search(crank)
        report = full_search(crank)
    assert constraints.raw_candidates == [5, 13, 53, 71]
    assert constraints.candidates == [5, 53]
    assert report.verdict(5, 4).status == CERTIFIED
    verdict = report.verdict(53, 42)
    assert verdict.status == DISPROVED and verdict.witness.index == 42


@criterion(6, "cphi2 pipeline")
def test_cphi2_pipeline():
    cphi2 = frontend("cphi2")
    constraints = lowpoint_constraint_search(cphi2)
    assert constraints.raw_candidates == [5, 13, 19, 31, 59, 97, 131, 601, 6701]
    assert constraints.candidates == [5]
    assert check_class(cphi2, 5, 3, FinderConfig()).status == CERTIFIED
    report = check_class(cphi2, 2, 1, FinderConfig(empirical_depth=2000))
    assert report.status == EMPIRICAL and report.depth >= 2000
    assert direct_check(cphi2, 2, 1, 2000) is None
    assert cphi2.index_series(9).coeffs == [colored_frobenius_count(n) for n in range(9)]


@criterion(7, "overpartition screens")
def test_overpartitions():
    over = frontend("overpartition")
    for ell in primes_up_to(97)[2:]:
        zero = screen_zero_residue(over, ell)
        assert not zero.possible and "cusp-order" in zero.rule
        nonzero = screen_nonzero_residue(over, ell)
        assert not nonzero.possible and nonzero.B == (ell - 1) // 2 and nonzero.rule
    for b in range(3):
        witness = direct_check(over, 3, b, 50)
        assert witness is not None and witness.index < 3 * 50
    assert full_search(over).verdict(3, 0).status == DISPROVED
    expect = [1, 2, 4, 8, 14, 24, 40, 64, 100]
    assert [overpartition_count(n) for n in range(9)] == expect
    assert over.index_series(9).coeffs == expect


@criterion(8, "Tate-cycle structure")
def test_tate_cycles():
    with within(300):
        for m, ell in ((THETA_FE, 5), (THETA_E2F, 7), (THETA_FE, 13)):
            f = m ** (ell - 1)
            report = tate_cycle(f.form(required_precision(f.weight2, ell), ell), ell)
            # f = m^(ell-1) keeps its full weight: omega = k (ell - 1) / 2 with weight k/2.
            assert report.base_filtration / 2 == m.weight2 * (ell - 1) / 2
            assert len(report.low_points) in (1, 2)
            assert sum(report.drops) == ell + 1
            true_weights = [w / 2 for w in report.filtrations]
            assert all(b - a != 2 for a, b in zip(true_weights, true_weights[1:]))
            assert validate_cycle(report) == []
            if ell == 5:
                assert true_weights[:4] == [24, 30, 24, 30]


@criterion(9, "operator identities")
@pytest.mark.parametrize("ell", [5, 7])
def test_operator_identities(ell):
    depth = 100
    f = (THETA_FE ** 2).form(depth)
    assert r_op(f, ell).series.reduce_mod(ell) == f.series.theta().reduce_mod(ell)
    g = f.series.reduce_mod(ell)
    u = g.u_op(ell)
    assert u.pow(ell).truncate(depth) == (g - g.theta(ell - 1)).truncate(depth)
    assert eisenstein(ell - 1, depth, ell).coeffs == [1] + [0] * (depth - 1)
    assert eisenstein(ell + 1, depth, ell) == eisenstein(2, depth, ell)


@criterion(10, "Ramanujan partition congruences")
def test_ramanujan_sanity():
    with within(10):
        p = eta_quotient({1: -1}, 11 * 1000 + 7).coeffs
    for ell, b in ((5, 4), (7, 5), (11, 6)):
        assert all(p[ell * n + b] % ell == 0 for n in range(1001))
    assert p[:8] == [1, 1, 2, 3, 5, 7, 11, 15]

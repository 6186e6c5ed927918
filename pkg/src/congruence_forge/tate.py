"""Tate cycles: the filtrations of Theta f, Theta^2 f, ..., Theta^ell f mod ell."""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field

from .errors import InsufficientPrecision, ThetaKillsForm
from .forms import GradedForm, filtration, sturm_precision

DEFAULT_MAX_ELL = 13


@dataclass
class TateCycleReport:
    """Filtrations are doubled weights; indices count applications of Theta.

    ``filtrations[i-1]`` is the filtration of Theta^i f for i = 1..ell, so the
    last entry repeats the first.  ``drops`` lists the fall sizes s_j in
    cycle order, one per high point.
    """

    ell: int
    base_weight2: int
    base_filtration: int
    filtrations: list[int]
    high_points: list[int] = field(default_factory=list)
    low_points: list[int] = field(default_factory=list)
    drops: list[int] = field(default_factory=list)
    in_own_cycle: bool = False

    def to_dict(self) -> dict:
        return asdict(self)


def required_precision(base_weight2: int, ell: int) -> int:
    """Coefficients from q^0 needed to run :func:`tate_cycle` for this weight."""
    return sturm_precision(base_weight2 + 2 * ell * (ell + 1))


def _half_mod(w2: int, ell: int) -> int:
    """The true weight w2/2 as a residue mod ell."""
    return w2 * pow(2, -1, ell) % ell


def tate_cycle(f: GradedForm, ell: int, precision: int | None = None) -> TateCycleReport:
    """Compute the filtration sequence of the Tate cycle of ``f`` mod ``ell``."""
    series = f.series if f.series.mod == ell else f.series.reduce_mod(ell)
    series = series.extend_start(0) if series.offset24 >= 0 else series
    needed = required_precision(f.weight2, ell)
    if precision is not None:
        needed = max(needed, precision)
    if series.stop < needed:
        raise InsufficientPrecision(
            f"Tate cycle mod {ell} at weight2 {f.weight2} needs {needed} coefficients, "
            f"have {series.stop}", needed=needed)
    series = series.truncate(needed)
    base = f.weight2
    step = 2 * (ell + 1)
    omega0 = filtration(series, base, ell)

    iterates = []
    g = series
    for _ in range(ell):
        g = g.theta()
        iterates.append(g)
    if iterates[0].is_zero():
        raise ThetaKillsForm(f"Theta f vanishes mod {ell}")
    omegas = [filtration(h, base + (i + 1) * step, ell) for i, h in enumerate(iterates)]

    # The cycle has ell - 1 distinct positions; position ell equals position 1.
    highs, lows, drops = [], [], []
    for i in range(1, ell):
        w = omegas[i - 1]
        if w % ell == 0:
            nxt = omegas[i] if i < ell else omegas[0]
            highs.append(i)
            lows.append(i + 1 if i + 1 < ell else 1)
            drops.append((w + step - nxt) // (2 * (ell - 1)))

    own_depth = sturm_precision(base + 2 * (ell * ell - 1))
    own = (series.truncate(own_depth) - iterates[ell - 2].truncate(own_depth)).is_zero()
    return TateCycleReport(ell, base, omega0, omegas, highs, sorted(set(lows)), drops, own)


def validate_cycle(report: TateCycleReport) -> list[str]:
    """Return the structural laws the report violates (empty means consistent)."""
    ell = report.ell
    w = report.filtrations
    step = 2 * (ell + 1)
    fall_unit = 2 * (ell - 1)
    problems = []

    if len(w) != ell:
        problems.append(f"expected {ell} filtrations, got {len(w)}")
        return problems
    if any(x == math.inf for x in w):
        problems.append("a Theta iterate vanished inside the cycle")
        return problems
    if w[-1] != w[0]:
        problems.append("periodicity: filtration of Theta^ell f differs from Theta f")

    n_low = len(report.low_points)
    if not 1 <= n_low <= 2:
        problems.append(f"cycle has {n_low} low points; must be one or two")
    if len(report.drops) > 2:
        problems.append(f"cycle has {len(report.drops)} drops; at most two are possible")
    if sum(report.drops) != ell + 1:
        problems.append(f"drop sizes sum to {sum(report.drops)}, not ell + 1 = {ell + 1}")

    for i in range(1, ell):
        a, b = w[i - 1], w[i]
        diff = b - a
        if diff == 4:
            problems.append(f"filtration rises by two (weight) from Theta^{i} to Theta^{i + 1}")
        if a % ell:
            if diff != step:
                problems.append(
                    f"Theta^{i} is not a high point but the filtration changes by {diff}")
        else:
            s, rem = divmod(step - diff, fall_unit)
            if rem or s < 1:
                problems.append(f"high point Theta^{i} falls by a non-admissible amount {diff}")

    for low in report.low_points:
        residue = _half_mod(w[low - 1], ell)
        one_drop = len(report.drops) == 1
        if (residue == 2) != one_drop:
            problems.append(
                f"low point Theta^{low} has weight {residue} mod {ell} "
                f"but the cycle has {len(report.drops)} drop(s)")

    # Closed forms when f is its own low point and there are two drops.
    omega = report.base_filtration
    if (report.in_own_cycle and len(report.drops) == 2 and report.high_points
            and report.high_points[-1] == ell - 2 and omega != math.inf):
        B = _half_mod(omega, ell)
        i1, i2 = report.high_points
        s1, s2 = report.drops
        expect = {"i1": ell - B, "i2": ell - 2, "s1": ell - B + 2, "s2": B - 1}
        got = {"i1": i1, "i2": i2, "s1": s1, "s2": s2}
        for key in expect:
            if expect[key] != got[key]:
                problems.append(f"own-cycle closed form: {key} = {got[key]}, expected {expect[key]}")
        if w[i1 - 1] != omega + i1 * step:
            problems.append("own-cycle closed form: first high point filtration")
        if w[i1] != omega + (i1 + 1) * step - s1 * fall_unit:
            problems.append("own-cycle closed form: first low point filtration")
        if w[i2 - 1] != omega + i2 * step - s1 * fall_unit:
            problems.append("own-cycle closed form: second high point filtration")
        if w[ell - 2] != omega:
            problems.append("own-cycle closed form: Theta^(ell-1) f must return to omega(f)")
    return problems

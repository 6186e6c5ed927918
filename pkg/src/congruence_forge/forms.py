"""Modular forms on Gamma_1(4) through their expansions at infinity.

Weights are stored doubled (``weight2``) so the half-integral weights of
theta-type forms are plain integers.  The graded ring is generated by

* ``E = eta(z)^8 / eta(2z)^4``  (weight2 4, a simple zero at the cusp 0),
* ``F = eta(4z)^8 / eta(2z)^4`` (weight2 4, a simple zero at infinity),
* ``theta0 = sum_n q^(n^2)``    (weight2 1, order 1/4 at the cusp 1/2),

and the space of weight2 ``w = 4k + r`` (``0 <= r < 4``) has the triangular
basis ``theta0^r * E^(k-i) * F^i`` whose i-th element starts at ``q^i``.
All membership questions are answered at infinity with that basis.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import DenominatorDivisibleByEll, InsufficientPrecision
from .qseries import QSeries, eta_quotient

GENERATOR_WEIGHT2 = {"E": 4, "F": 4, "G": 4, "theta0": 1, "theta0sq": 2}

GENERATOR_ETA = {
    "E": ((1, 8), (2, -4)),
    "F": ((4, 8), (2, -4)),
    "theta0": ((2, 5), (1, -2), (4, -2)),
    "theta0sq": ((2, 10), (1, -4), (4, -4)),
    "G": ((2, 20), (1, -8), (4, -8)),
}


def sturm_bound(weight2: int) -> int:
    """Largest exponent a form of this weight must vanish through to be zero.

    The valence of a weight2 ``w`` form is ``w/4``; we use ``w/2`` as a
    deliberately conservative margin.
    """
    return max(weight2, 0) // 2


def sturm_precision(weight2: int) -> int:
    """Number of coefficients (from q^0) needed to certify vanishing."""
    return sturm_bound(weight2) + 1


# ---------------------------------------------------------------------------
# Types


@dataclass(frozen=True)
class GradedForm:
    weight2: int
    series: QSeries
    cusp_orders: tuple | None = None

    @property
    def weight(self) -> Fraction:
        return Fraction(self.weight2, 2)

    def reduce(self, ell: int) -> "GradedForm":
        return GradedForm(self.weight2, self.series.reduce_mod(ell), self.cusp_orders)

    def __mul__(self, other: "GradedForm") -> "GradedForm":
        orders = None
        if self.cusp_orders is not None and other.cusp_orders is not None:
            orders = tuple(a + b for a, b in zip(self.cusp_orders, other.cusp_orders))
        return GradedForm(self.weight2 + other.weight2, self.series * other.series, orders)

    def __pow__(self, e: int) -> "GradedForm":
        orders = None if self.cusp_orders is None else tuple(e * o for o in self.cusp_orders)
        return GradedForm(self.weight2 * e, self.series.pow(e), orders)


@dataclass(frozen=True, order=True)
class CuspMonomial:
    """The form E^m0 * F^m_inf * theta0^t, nonvanishing away from the cusps."""

    m0: int
    m_inf: int
    t: int

    def __post_init__(self):
        if min(self.m0, self.m_inf, self.t) < 0:
            raise ValueError("cusp monomial exponents must be non-negative")

    @property
    def weight2(self) -> int:
        return 4 * self.m0 + 4 * self.m_inf + self.t

    def cusp_orders(self) -> tuple[int, int, Fraction]:
        """(ord at infinity, ord at 0, ord at 1/2)."""
        return (self.m_inf, self.m0, Fraction(self.t, 4))

    def eta_spec(self) -> list[tuple[int, int]]:
        a = 8 * self.m0 - 2 * self.t
        b = -4 * self.m0 - 4 * self.m_inf + 5 * self.t
        c = 8 * self.m_inf - 2 * self.t
        return [(d, r) for d, r in ((1, a), (2, b), (4, c)) if r]

    @classmethod
    def from_eta_spec(cls, spec) -> "CuspMonomial | None":
        """Inverse of :meth:`eta_spec`; None if the quotient is not such a monomial."""
        exps = {1: 0, 2: 0, 4: 0}
        items = spec.items() if isinstance(spec, dict) else spec
        for d, r in items:
            if d not in exps:
                return None
            exps[d] += r
        a, b, c = exps[1], exps[2], exps[4]
        if (a + 2 * b + c) % 6:
            return None
        t = (a + 2 * b + c) // 6
        if (a + 2 * t) % 8 or (c + 2 * t) % 8:
            return None
        m0, m_inf = (a + 2 * t) // 8, (c + 2 * t) // 8
        if min(m0, m_inf, t) < 0:
            return None
        mono = cls(m0, m_inf, t)
        # The three linear equations are overdetermined; confirm the middle one.
        if dict(mono.eta_spec()) != {d: r for d, r in exps.items() if r}:
            return None
        return mono

    def __mul__(self, other: "CuspMonomial") -> "CuspMonomial":
        return CuspMonomial(self.m0 + other.m0, self.m_inf + other.m_inf, self.t + other.t)

    def __pow__(self, e: int) -> "CuspMonomial":
        return CuspMonomial(self.m0 * e, self.m_inf * e, self.t * e)

    def series(self, precision: int, mod: int | None = None) -> QSeries:
        """Expansion from q^0 with ``precision`` coefficients."""
        out = QSeries.one(precision, mod)
        for name, e in (("E", self.m0), ("F", self.m_inf), ("theta0", self.t)):
            if e:
                out = out * generator_series(name, precision, mod).pow(e)
        return out

    def form(self, precision: int, mod: int | None = None) -> GradedForm:
        return GradedForm(self.weight2, self.series(precision, mod), self.cusp_orders())

    def __str__(self) -> str:
        parts = []
        for name, e in (("theta0", self.t), ("F", self.m_inf), ("E", self.m0)):
            if e == 1:
                parts.append(name)
            elif e:
                parts.append(f"{name}^{e}")
        return "*".join(parts) or "1"


def cusp_orders(m: CuspMonomial) -> tuple[int, int, Fraction]:
    return m.cusp_orders()


# ---------------------------------------------------------------------------
# Generators


def _sigma_table(n: int, power: int) -> list[int]:
    """sigma_power(m) for 0 <= m < n (entry 0 unused)."""
    sig = [0] * n
    for d in range(1, n):
        dp = d**power
        for m in range(d, n, d):
            sig[m] += dp
    return sig


def _classical(name: str, precision: int) -> QSeries:
    if name == "theta0":
        cs = [0] * precision
        for m in range(math.isqrt(max(precision - 1, 0)) + 1):
            cs[m * m] += 1 if m == 0 else 2
        return QSeries(cs)
    if name == "theta0sq":
        return _classical("theta0", precision) ** 2
    if name == "F":
        sig = _sigma_table(precision, 1)
        return QSeries([sig[m] if m % 2 else 0 for m in range(precision)])
    if name == "G":
        return _classical("theta0", precision) ** 4
    if name == "E":
        return _classical("G", precision) - _classical("F", precision).scale(16)
    raise KeyError(name)


@lru_cache(maxsize=256)
def generator_series(name: str, precision: int, mod: int | None = None,
                     method: str = "eta") -> QSeries:
    """q-expansion of a generator from q^0 with ``precision`` coefficients.

    ``method="eta"`` uses the eta quotient; ``method="classical"`` uses the
    theta series and divisor sums.  The two are compared in the tests.
    """
    if name not in GENERATOR_ETA:
        raise KeyError(f"unknown generator {name!r}")
    if method == "eta":
        s = eta_quotient(GENERATOR_ETA[name], precision, mod)
        return s.extend_start(0).truncate(precision)
    if method == "classical":
        s = _classical(name, precision)
        return s if mod is None else s.reduce_mod(mod)
    raise ValueError(f"unknown method {method!r}")


def generator(name: str, precision: int, mod: int | None = None) -> GradedForm:
    orders = {
        "E": (0, 1, Fraction(0)),
        "F": (1, 0, Fraction(0)),
        "G": (0, 0, Fraction(1)),
        "theta0": (0, 0, Fraction(1, 4)),
        "theta0sq": (0, 0, Fraction(1, 2)),
    }[name]
    return GradedForm(GENERATOR_WEIGHT2[name], generator_series(name, precision, mod), orders)


def bernoulli(k: int) -> Fraction:
    from sympy import bernoulli as _b

    b = _b(k)
    return Fraction(int(b.p), int(b.q))


def eisenstein(k: int, precision: int, ell: int | None = None) -> QSeries:
    """Normalized E_k = 1 - (2k/B_k) sum sigma_{k-1}(n) q^n (k = 2 gives E_2).

    With ``ell`` the result is reduced mod ell, raising
    :class:`DenominatorDivisibleByEll` if 2k/B_k is not ell-integral.
    """
    if k < 2 or k % 2:
        raise ValueError("Eisenstein series need an even weight k >= 2")
    c = -Fraction(2 * k) / bernoulli(k)
    sig = _sigma_table(precision, k - 1)
    if ell is None:
        return QSeries([1] + [c * s for s in sig[1:]])
    if c.denominator % ell == 0:
        raise DenominatorDivisibleByEll(
            f"E_{k} has the denominator {c.denominator}, divisible by {ell}")
    cm = c.numerator * pow(c.denominator, -1, ell) % ell
    return QSeries([1] + [cm * s % ell for s in sig[1:]], 0, ell)


# ---------------------------------------------------------------------------
# Bases and membership


@lru_cache(maxsize=512)
def _basis_tuple(weight2: int, precision: int, mod: int | None) -> tuple[QSeries, ...]:
    k, r = divmod(weight2, 4)
    pre = generator_series("theta0", precision, mod).pow(r) if r else QSeries.one(precision, mod)
    e = generator_series("E", precision, mod)
    f = generator_series("F", precision, mod)
    epow = [QSeries.one(precision, mod)]
    fpow = [pre]
    for _ in range(k):
        epow.append(epow[-1] * e)
        fpow.append(fpow[-1] * f)
    return tuple((epow[k - i] * fpow[i]).extend_start(0).truncate(precision)
                 for i in range(k + 1))


def basis(weight2: int, precision: int, mod: int | None = None) -> list[QSeries]:
    """Triangular basis theta0^r E^(k-i) F^i of the weight2 space, i = 0..k."""
    if weight2 < 0:
        raise ValueError("weight2 must be non-negative")
    return list(_basis_tuple(weight2, precision, mod))


def _prepare(series: QSeries, needed: int) -> QSeries | None:
    """Series re-based at q^0; None if a negative exponent carries a nonzero coefficient."""
    series._require_integral()
    if series.offset24 < 0:
        head = -series.offset24 // 24
        if any(series.coeffs[:head]):
            return None
        series = QSeries(series.array[head:] if series.mod else series.coeffs[head:],
                         0, series.mod)
    else:
        series = series.extend_start(0)
    if series.precision < needed:
        raise InsufficientPrecision(
            f"{needed} coefficients from q^0 are needed, only {series.precision} known",
            needed=needed)
    return series


def _triangular_fit(series: QSeries, vectors: list[QSeries], pivots: list[int]):
    residual = series
    coeffs = []
    for v, piv in zip(vectors, pivots):
        c = residual[piv]
        coeffs.append(c)
        if c:
            residual = residual - v.scale(c)
    return coeffs, residual


def fit(series: QSeries, weight2: int, ambient_weight2: int | None = None):
    """Express a mod-ell series in the weight2 basis.

    Returns the coefficient list on ``basis(weight2)`` or ``None`` when the
    series is not congruent to a form of that weight.  The residual must
    vanish on every known coefficient, and at least the Sturm precision of
    the ambient weight (default ``weight2``) must be available so that
    vanishing there certifies it.
    """
    if weight2 < 0:
        return None
    ambient = weight2 if ambient_weight2 is None else max(weight2, ambient_weight2)
    prepared = _prepare(series, sturm_precision(ambient))
    if prepared is None:
        return None
    n = prepared.precision
    vecs = basis(weight2, n, series.mod)
    coeffs, residual = _triangular_fit(prepared, vecs, list(range(len(vecs))))
    if not residual.is_zero():
        return None
    return coeffs


def fit_with_vanishing(series: QSeries, weight2: int, min_orders,
                       ambient_weight2: int | None = None):
    """Fit against the subspace with ord_inf >= m_inf, ord_0 >= m0, ord_1/2 >= m_half.

    ``min_orders = (m_inf, m0, m_half)``; the basis is
    ``theta0^r E^(k-m_inf-m_half-i) F^(m_inf+i) G^m_half``.
    Returns coefficients on that basis or None.
    """
    m_inf, m0, m_half = min_orders
    k, r = divmod(weight2, 4)
    if m_inf + m0 + m_half > k:
        raise ValueError("requested cusp orders exceed the valence")
    ambient = weight2 if ambient_weight2 is None else max(weight2, ambient_weight2)
    prepared = _prepare(series, sturm_precision(ambient))
    if prepared is None:
        return None
    n = prepared.precision
    mod = series.mod
    e = generator_series("E", n, mod)
    f = generator_series("F", n, mod)
    base = generator_series("G", n, mod).pow(m_half)
    if r:
        base = base * generator_series("theta0", n, mod).pow(r)
    vecs, pivots = [], []
    for i in range(k - m_inf - m_half - m0 + 1):
        v = base * e.pow(k - m_inf - m_half - i) * f.pow(m_inf + i)
        vecs.append(v.extend_start(0).truncate(n))
        pivots.append(m_inf + i)
    coeffs, residual = _triangular_fit(prepared, vecs, pivots)
    if not residual.is_zero():
        return None
    return coeffs


def filtration(series: QSeries, weight2_hint: int, ell: int):
    """Smallest weight2 in the class of ``weight2_hint`` mod 2(ell-1) holding the series.

    Returns ``math.inf`` for the zero series.  Raises ``ValueError`` if the
    series does not even fit at the hinted weight.
    """
    if series.mod != ell:
        series = series.reduce_mod(ell)
    prepared = _prepare(series, sturm_precision(weight2_hint))
    if prepared is not None and prepared.is_zero():
        return math.inf
    step = 2 * (ell - 1)
    if fit(series, weight2_hint) is None:
        raise ValueError(f"series is not the reduction of a weight2 {weight2_hint} form")
    best = weight2_hint
    w = weight2_hint - step
    while w >= 0 and fit(series, w, ambient_weight2=weight2_hint) is not None:
        best = w
        w -= step
    return best


def r_op(f: GradedForm, ell: int) -> GradedForm:
    """R(f) = (Theta f - (k/12) E_2 f) E_(ell-1) + (k/12) E_(ell+1) f.

    R(f) is a genuine form of weight2 + 2(ell+1) whose reduction equals
    Theta f mod ell.
    """
    if ell < 5:
        raise ValueError("the R operator needs ell >= 5")
    k12 = Fraction(f.weight2, 24)
    if k12.denominator % ell == 0:
        raise DenominatorDivisibleByEll(f"k/12 = {k12} is not {ell}-integral")
    s = f.series
    n = s.stop
    e2 = eisenstein(2, n)
    elm1 = eisenstein(ell - 1, n)
    elp1 = eisenstein(ell + 1, n)
    out = (s.theta() - (e2 * s).scale(k12)) * elm1 + (elp1 * s).scale(k12)
    return GradedForm(f.weight2 + 2 * (ell + 1), out.truncate(s.precision), f.cusp_orders)

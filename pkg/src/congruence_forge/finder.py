"""Search for, certify, and disprove Ramanujan congruences a(ell n + b) = 0 mod ell.

A target is a generating series ``A``.  Two kinds are supported:

* the inverse ``f^-1`` of a cusp monomial ``f = E^m0 F^m_inf theta0^t``;
  indices are exponents of ``f^-1``;
* an eta front-end ``A = prod eta(d z)^r_d * theta0^t`` (overpartitions,
  the crank difference, 2-colored Frobenius partitions, partitions);
  ``A = q^(c/24) sum a(n) q^n`` and indices are the ``n``.

For ``ell >= 5`` the congruences of ``A`` are those of a transformed form
``F*`` (``f^(ell-1)``, or the eta quotient with ``eta^-1 -> eta^(ell^2-1)``
and ``eta -> eta^((ell-1)(ell^2-1))``), shifted by a fixed amount mod ell.
``F*`` vanishes only at the cusps, so its filtration is its weight and the
screens below apply.  Everything rests on the single number ``beta``, the
doubled weight of ``A``: the true weight of ``F*`` is ``beta/2 mod ell``.
"""

from __future__ import annotations

import itertools
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .arith import (
    DEFAULT_FACTOR_BUDGET,
    factor,
    is_prime,
    legendre,
    primes_up_to,
    squarefree_kernel,
)
from .errors import AllDifferencesZero
from .forms import CuspMonomial, generator_series, sturm_precision
from .qseries import QSeries, eta_quotient

CERTIFIED = "Certified"
DISPROVED = "Disproved"
EMPIRICAL = "EmpiricalOnly"

ETA_THRESHOLD = 100


# ---------------------------------------------------------------------------
# Targets


@dataclass(frozen=True)
class SearchTarget:
    name: str
    kind: str  # "inverse" or "eta"
    monomial: CuspMonomial | None = None
    eta: tuple[tuple[int, int], ...] = ()
    theta_power: int = 0

    # -- constructors ----------------------------------------------------------

    @classmethod
    def inverse(cls, m: CuspMonomial, name: str | None = None) -> "SearchTarget":
        if m.weight2 == 0:
            raise ValueError("the constant form has no interesting inverse")
        return cls(name or f"({m})^-1", "inverse", monomial=m)

    @classmethod
    def eta_product(cls, spec, theta_power: int = 0, name: str | None = None) -> "SearchTarget":
        items = spec.items() if isinstance(spec, dict) else spec
        merged: dict[int, int] = {}
        for d, r in items:
            merged[d] = merged.get(d, 0) + r
        eta = tuple(sorted((d, r) for d, r in merged.items() if r))
        if any(d not in (1, 2, 4) for d, _ in eta):
            raise ValueError("eta front-ends must use eta(z), eta(2z), eta(4z)")
        return cls(name or "eta-product", "eta", eta=eta, theta_power=theta_power)

    # -- basic invariants ------------------------------------------------------

    @property
    def beta(self) -> int:
        """Doubled weight of the generating series."""
        if self.kind == "inverse":
            return -self.monomial.weight2
        return sum(r for _, r in self.eta) + self.theta_power

    @property
    def c24(self) -> int:
        """24 times the leading exponent of the modular generating series."""
        if self.kind == "inverse":
            return -24 * self.monomial.m_inf
        return sum(d * r for d, r in self.eta)

    @property
    def first_index(self) -> int:
        return -self.monomial.m_inf if self.kind == "inverse" else 0

    @property
    def threshold(self) -> int:
        """All primes up to this bound are checked individually."""
        if self.kind == "inverse":
            w = self.monomial.weight2
            if w % 2:
                return (w + 1) * (w + 3)
            return w + 3
        return ETA_THRESHOLD

    def legendre_argument(self, n: int) -> tuple[int, int]:
        """(y, scale): Theta acts on index n mod ell like y/scale."""
        # Inverse targets index by exponent, so the argument is n itself.
        if self.kind == "inverse":
            return n, 1
        g = math.gcd(self.c24, 24)
        return (self.c24 + 24 * n) // g, 24 // g

    def to_dict(self) -> dict:
        out = {"name": self.name, "kind": self.kind, "beta": self.beta}
        if self.monomial is not None:
            out["monomial"] = {"m0": self.monomial.m0, "m_inf": self.monomial.m_inf,
                               "t": self.monomial.t}
        if self.kind == "eta":
            out["eta"] = [list(p) for p in self.eta]
            out["theta_power"] = self.theta_power
        return out

    # -- expansions ------------------------------------------------------------

    def index_series(self, count: int, mod: int | None = None) -> QSeries:
        """The coefficients a(n) for n = first_index .. first_index + count - 1.

        The returned series has integral exponents equal to the indices.
        """
        if self.kind == "inverse":
            m = self.monomial
            f = m.series(count + m.m_inf, mod).normalized()
            return f.invert().truncate(count)
        body = QSeries.one(count, mod)
        if self.eta:
            body = eta_quotient(self.eta, count, mod).shift(-self.c24)
        if self.theta_power:
            body = body * generator_series("theta0", count, mod).pow(self.theta_power)
        return body.truncate(count)

    # -- transformation to a form ----------------------------------------------

    def transform(self, ell: int) -> CuspMonomial:
        """The cusp monomial F* whose congruences mod ell match those of A."""
        if self.kind == "inverse":
            return self.monomial ** (ell - 1)
        if ell < 5:
            raise ValueError("eta front-ends are transformed only for ell >= 5")
        big = ell * ell - 1
        spec = {}
        for d, r in self.eta:
            spec[d] = -r * big if r < 0 else r * (ell - 1) * big
        m = CuspMonomial.from_eta_spec(spec)
        if m is None:
            raise ValueError(f"{self.name}: transformed eta quotient is not a cusp monomial")
        if self.theta_power:
            m = m * CuspMonomial(0, 0, self.theta_power * (ell - 1) * big)
        return m

    def shift(self, ell: int) -> int:
        """Index b of A corresponds to exponent residue b + shift of F*."""
        if self.kind == "inverse":
            return 0
        return self.transform(ell).m_inf % ell


def frontend(name: str) -> SearchTarget:
    specs = {
        "overpartition": ({2: 1, 1: -2}, 0),
        "crank": ({1: 3, 2: -2}, 0),
        "cphi2": ({1: -2}, 1),
        "partition": ({1: -1}, 0),
    }
    if name not in specs:
        raise KeyError(f"unknown front-end {name!r}; choose from {', '.join(sorted(specs))}")
    spec, t = specs[name]
    return SearchTarget.eta_product(spec, t, name=name)


FRONTENDS = ("overpartition", "crank", "cphi2", "partition")


# ---------------------------------------------------------------------------
# Screens


@dataclass
class ScreenResult:
    possible: bool
    rule: str
    B: int | None = None


def filtration_residue(target: SearchTarget, ell: int) -> int:
    """B: the true weight of F* reduced mod ell."""
    return target.transform(ell).weight2 * pow(2, -1, ell) % ell


def nonzero_screen_primes(target: SearchTarget) -> list[int] | None:
    """Odd primes where a congruence at a nonzero residue is not excluded.

    The filtration residue is (ell + beta)/2, which hits (ell+1)/2 or (ell+3)/2
    only when ell divides (beta - 1)(beta - 3).  ``None`` means every prime.
    """
    n = (target.beta - 1) * (target.beta - 3)
    if n == 0:
        return None
    return [p for p in factor(n).primes() if p >= 3]


def screen_nonzero_residue(target: SearchTarget, ell: int) -> ScreenResult:
    B = filtration_residue(target, ell)
    allowed = ((ell + 1) // 2, (ell + 3) // 2)
    if B in allowed:
        return ScreenResult(True, f"B = {B} is (ell+1)/2 or (ell+3)/2; not excluded", B)
    return ScreenResult(
        False, f"nonzero residues impossible: B = {B} is neither (ell+1)/2 = {allowed[0]} "
        f"nor (ell+3)/2 = {allowed[1]}", B)


def screen_zero_residue(target: SearchTarget, ell: int) -> ScreenResult:
    """Rule out a congruence of F* at 0 mod ell when possible."""
    m = target.transform(ell)
    orders = m.cusp_orders()
    for name, o in zip(("infinity", "0", "1/2"), orders):
        o = Fraction(o)
        if o.denominator == 1 and o % ell == 0:
            return ScreenResult(False, f"cusp-order rule: ord_{name} F* = {o} is 0 mod {ell}")
    B = filtration_residue(target, ell)
    if not 2 <= B <= (ell + 3) // 2:
        return ScreenResult(
            False, f"low-point rule: B = {B} lies outside [2, (ell+3)/2 = {(ell + 3) // 2}]", B)
    return ScreenResult(True, f"B = {B} admits F* as lowest low point", B)


# ---------------------------------------------------------------------------
# Sign enumeration


@dataclass
class Difference:
    """One comparison: ``rhs`` from the fit, ``lhs`` = y^p a(n) before its sign.

    ``value`` is rhs - sign*lhs when the tuple fixes the sign, otherwise
    (rhs - lhs)(rhs + lhs).
    """

    index: int
    value: int
    determined: bool
    factors: list[list[int]]
    complete: bool = True
    rhs: int = 0
    lhs: int = 0


@dataclass
class TupleOutcome:
    signs: dict[int, int]
    a: list[int]
    differences: list[Difference]
    gcd: int
    raw_primes: list[int]
    primes: list[int]

    @property
    def resolved_by(self) -> int | None:
        """First comparison index whose difference is nonzero."""
        return next((d.index for d in self.differences if d.value != 0), None)


@dataclass
class EnumerationResult:
    atoms: list[int]
    fit_weight2: int
    fitted_indices: list[int]
    extension_indices: list[int]
    exceptional: list[int]
    tuples: list[TupleOutcome] = field(default_factory=list)

    @property
    def raw_candidates(self) -> list[int]:
        return sorted({p for t in self.tuples for p in t.raw_primes})

    @property
    def candidates(self) -> list[int]:
        return sorted({p for t in self.tuples for p in t.primes})


def _sign_of(y: int, signs: dict[int, int], budget: int) -> int | None:
    """Legendre symbol of y predicted by the tuple, or None if not determined."""
    if y == 0:
        return 0
    sign, primes = squarefree_kernel(y, budget)
    s = signs[-1] if sign < 0 else 1
    for p in primes:
        if p not in signs:
            return None
        s *= signs[p]
    return s


def _factor_pairs(values: list[int], budget: int) -> tuple[list[list[int]], bool]:
    merged: dict[int, int] = {}
    complete = True
    for v in values:
        if v == 0:
            continue
        f = factor(v, budget, strict=False)
        complete &= f.complete
        for p, e in f.factors.items():
            merged[p] = merged.get(p, 0) + e
    return [[p, merged[p]] for p in sorted(merged)], complete


def default_extension(target: SearchTarget) -> int:
    if target.kind == "inverse":
        return -(-target.monomial.weight2 // 2) + 3
    return 1


def sign_enumeration_search(target: SearchTarget, window_extension: int | None = None,
                            budget: int = DEFAULT_FACTOR_BUDGET,
                            factor_differences: bool = True) -> EnumerationResult:
    """Bound the primes ell where F* can have a congruence at 0 mod ell.

    If F* is the lowest low point of its Tate cycle then
    Theta^((ell-1)/2 + p) A = A * g mod ell for g of doubled weight 2(3 - beta)
    with p = (3 - beta)/2.  Theta^((ell-1)/2) twists by Legendre symbols, so
    each choice of signs for the squarefree parts of the arguments in the
    fitted window determines g over the integers; every later coefficient
    then yields an integer that ell must divide.
    """
    beta = target.beta
    if (3 - beta) % 2:
        raise ValueError("sign enumeration needs an odd doubled weight")
    p = (3 - beta) // 2
    fit_w2 = 2 * (3 - beta)
    dim = fit_w2 // 4 + 1
    ext = default_extension(target) if window_extension is None else window_extension
    if ext < 1:
        raise ValueError("window_extension must be at least 1")
    n0 = target.first_index
    total = dim + ext
    A = target.index_series(total)
    x = A.coeffs
    if x[0] not in (1, -1):
        raise ValueError("generating series must have a unit leading coefficient")
    indices = list(range(n0, n0 + total))
    ys = [target.legendre_argument(n)[0] for n in indices]

    atoms = {-1}
    for y in ys[:dim]:
        if y:
            atoms.update(squarefree_kernel(y, budget)[1])
    atom_list = sorted(atoms)
    exceptional = sorted({q for y in ys if y for q in factor(y, budget).primes()})

    size = total + 1
    E = generator_series("E", size)
    F = generator_series("F", size)
    k = fit_w2 // 4
    blocks = [(E.pow(k - i) * F.pow(i)).extend_start(0).truncate(size) for i in range(dim)]
    Ablocks = []
    for b in blocks:
        prod = A * b
        Ablocks.append([prod[n] for n in indices])

    result = EnumerationResult(atom_list, fit_w2, indices[:dim], indices[dim:], exceptional)
    lead = x[0]
    for choice in itertools.product((1, -1), repeat=len(atom_list)):
        signs = dict(zip(atom_list, choice))
        t = []
        for y, xn in zip(ys, x):
            s = _sign_of(y, signs, budget)
            t.append(None if s is None else s * y**p * xn)
        a = []
        rhs = [0] * total
        for j in range(dim):
            target_val = t[j]
            coef = Fraction(target_val - rhs[j], lead)
            aj = int(coef)
            a.append(aj)
            if aj:
                cs = Ablocks[j]
                for i in range(total):
                    rhs[i] += aj * cs[i]
        diffs = []
        constraint_values = []
        for j in range(dim, total):
            L = ys[j]**p * x[j]
            if t[j] is not None:
                v = rhs[j] - t[j]
                pieces = [v]
                det = True
            else:
                v = (rhs[j] - L) * (rhs[j] + L)
                pieces = [rhs[j] - L, rhs[j] + L]
                det = False
            constraint_values.append(v)
            if factor_differences and v:
                facs, complete = _factor_pairs(pieces, budget)
            else:
                facs, complete = [], v == 0
            diffs.append(Difference(indices[j], v, det, facs, complete, rhs[j], L))
        nonzero = [v for v in constraint_values if v]
        if not nonzero:
            raise AllDifferencesZero(
                f"every comparison coefficient vanishes for signs {signs}; "
                "increase the window extension")
        g = 0
        for v in nonzero:
            g = math.gcd(g, v)
        g_primes = factor(g, budget).primes() if g > 1 else []
        raw = [q for q in g_primes if q >= 5]
        kept = [q for q in raw if _passes_filters(target, q, signs, ys, x, rhs, dim, p, exceptional)]
        result.tuples.append(TupleOutcome(signs, a, diffs, g, raw, kept))
    return result


def _passes_filters(target, ell, signs, ys, x, rhs, dim, p, exceptional) -> bool:
    if ell <= (target.threshold if target.kind == "inverse" else 3):
        return False
    for atom, s in signs.items():
        if legendre(atom, ell) != s:
            return False
    for j in range(dim, len(ys)):
        lhs = legendre(ys[j], ell) * ys[j]**p * x[j]
        if (rhs[j] - lhs) % ell:
            return False
    return True


def lowpoint_constraint_search(target: SearchTarget, window_extension: int | None = None,
                               budget: int = DEFAULT_FACTOR_BUDGET) -> EnumerationResult:
    """The eta front-end form of the enumeration (fit weight 2(3 - beta))."""
    if target.kind != "eta":
        raise ValueError("lowpoint_constraint_search expects an eta front-end")
    return sign_enumeration_search(target, window_extension, budget)


# ---------------------------------------------------------------------------
# Direct checks and certification


@dataclass
class Witness:
    index: int
    residue: int

    def to_dict(self) -> dict:
        return {"index": self.index, "coefficient_mod": self.residue}


def _scan_order(n0: int, stop: int, ell: int, b: int) -> list[int]:
    """Indices = b mod ell below ``stop``: positive ones first, then the rest."""
    first_pos = 1 + (b - 1) % ell
    pos = list(range(first_pos, stop, ell))
    start = n0 + (b - n0) % ell
    rest = list(range(start, min(1, stop), ell))
    return pos + rest


class _Expansion:
    """Cache of A mod ell grown on demand."""

    def __init__(self, target: SearchTarget, ell: int):
        self.target = target
        self.ell = ell
        self.series: QSeries | None = None

    def upto(self, stop: int) -> QSeries:
        n0 = self.target.first_index
        if self.series is None or self.series.stop < stop:
            count = max(stop - n0, 1)
            if self.series is not None:
                count = max(count, 2 * self.series.precision)
            self.series = self.target.index_series(count, self.ell)
        return self.series


@lru_cache(maxsize=32)
def _expansion(target: SearchTarget, ell: int) -> _Expansion:
    return _Expansion(target, ell)


def direct_check(target: SearchTarget, ell: int, b: int, depth: int,
                 _cache: _Expansion | None = None) -> Witness | None:
    """First index n = b mod ell (n = b + ell*j, j < depth) with a(n) nonzero mod ell.

    Positive indices are scanned first, in increasing order, then the
    non-positive ones.
    """
    if depth < 1:
        raise ValueError("depth must be at least 1")
    cache = _cache or _expansion(target, ell)
    stop = 1 + (b - 1) % ell + ell * depth
    s = cache.upto(stop)
    arr = s.array
    n0 = s.start
    for n in _scan_order(target.first_index, stop, ell, b % ell):
        if arr[n - n0]:
            return Witness(n, int(arr[n - n0]))
    return None


@dataclass
class Certification:
    certified: bool
    route: str
    sturm_depth: int
    weight2: int

    def to_dict(self) -> dict:
        return {"route": self.route, "sturm_depth": self.sturm_depth}


def _form_series(target: SearchTarget, ell: int, count: int) -> tuple[QSeries, int]:
    m = target.transform(ell)
    return m.series(count, ell), m.weight2


def certify_zero_residue(target: SearchTarget, ell: int) -> Certification:
    """Check F* = Theta^(ell-1) F* mod ell, i.e. (F*|U_ell)^ell = 0."""
    if ell < 3:
        raise ValueError("certification needs ell >= 3")
    w2 = target.transform(ell).weight2
    ambient = w2 + 2 * (ell * ell - 1)
    depth = sturm_precision(ambient)
    s, _ = _form_series(target, ell, depth)
    d = s - s.theta(ell - 1)
    route = "ZeroResidue: F* - Theta^(ell-1) F* vanishes (U_ell)"
    if ell == 3:
        route += " [ell = 3 weight bookkeeping]"
    return Certification(d.is_zero(), route, depth, ambient)


def certify_nonzero_residue(target: SearchTarget, ell: int, b: int) -> Certification:
    """Check Theta^((ell+1)/2) F* = -(a/ell) Theta F* with a = b + shift."""
    if ell < 3:
        raise ValueError("certification needs ell >= 3")
    a = (b + target.shift(ell)) % ell
    if a == 0:
        raise ValueError("residue maps to 0; use certify_zero_residue")
    w2 = target.transform(ell).weight2
    ambient = w2 + (ell + 1) ** 2
    depth = sturm_precision(ambient)
    s, _ = _form_series(target, ell, depth)
    th = s.theta()
    d = th.theta((ell - 1) // 2) + th.scale(legendre(a, ell))
    sign = "-" if legendre(a, ell) == 1 else ""
    route = f"NonzeroResidue: Theta^{(ell + 1) // 2} F* = {sign}Theta F*"
    if ell == 3:
        route += " [ell = 3 weight bookkeeping]"
    return Certification(d.is_zero(), route, depth, ambient)


def certify(target: SearchTarget, ell: int, b: int) -> Certification:
    if (b + target.shift(ell)) % ell == 0:
        return certify_zero_residue(target, ell)
    return certify_nonzero_residue(target, ell, b)


def can_certify(target: SearchTarget, ell: int) -> bool:
    if ell >= 5:
        return True
    return ell == 3 and target.kind == "inverse"


# ---------------------------------------------------------------------------
# Full search


@dataclass
class FinderConfig:
    window_extension: int | None = None
    disproof_depth: int = 500
    empirical_depth: int = 10_000
    small_prime_threshold: int | None = None
    factor_budget: int = DEFAULT_FACTOR_BUDGET
    jobs: int = 1


@dataclass
class CongruenceReport:
    prime: int
    residue: int
    status: str
    witness: Witness | None = None
    certification: Certification | None = None
    depth: int | None = None
    evidence: list[str] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return self.status in (CERTIFIED, EMPIRICAL)

    def to_dict(self) -> dict:
        out = {"prime": self.prime, "residue": self.residue, "status": self.status}
        if self.witness is not None:
            out["witness"] = self.witness.to_dict()
        if self.certification is not None:
            out["certification"] = self.certification.to_dict()
        if self.depth is not None:
            out["depth"] = self.depth
        if self.evidence:
            out["evidence"] = list(self.evidence)
        return out


def check_class(target: SearchTarget, ell: int, b: int, config: FinderConfig,
                cache: _Expansion | None = None) -> CongruenceReport:
    """Decide one residue class: witness search, then certification."""
    cache = cache or _Expansion(target, ell)
    if not can_certify(target, ell):
        w = direct_check(target, ell, b, config.empirical_depth, cache)
        if w is not None:
            return CongruenceReport(ell, b, DISPROVED, witness=w)
        return CongruenceReport(ell, b, EMPIRICAL, depth=config.empirical_depth,
                                evidence=[f"no nonzero coefficient mod {ell} among "
                                          f"{config.empirical_depth} terms of the class"])
    depth = 32
    while True:
        w = direct_check(target, ell, b, depth, cache)
        if w is not None:
            return CongruenceReport(ell, b, DISPROVED, witness=w)
        if depth >= config.disproof_depth:
            break
        depth = min(depth * 4, config.disproof_depth)
    cert = certify(target, ell, b)
    if cert.certified:
        return CongruenceReport(ell, b, CERTIFIED, certification=cert,
                                evidence=[f"no witness among {depth} terms of the class"])
    # The identity fails, so a witness exists; look further for one.
    for deeper in (4 * depth, 16 * depth, 64 * depth):
        w = direct_check(target, ell, b, deeper, cache)
        if w is not None:
            return CongruenceReport(ell, b, DISPROVED, witness=w,
                                    evidence=["certification identity fails"])
    return CongruenceReport(ell, b, DISPROVED, certification=cert,
                            evidence=["certification identity fails; no witness located "
                                      f"within {64 * depth} terms"])


def check_prime(target: SearchTarget, ell: int, config: FinderConfig) -> list[CongruenceReport]:
    cache = _Expansion(target, ell)
    return [check_class(target, ell, b, config, cache) for b in range(ell)]


def _check_prime_job(args):
    target, ell, config = args
    return check_prime(target, ell, config)


@dataclass
class SearchReport:
    target: SearchTarget
    parameters: dict
    screens: list[dict]
    enumeration: EnumerationResult | None
    verdicts: list[CongruenceReport]

    def congruences(self) -> list[tuple[int, int]]:
        return sorted((v.prime, v.residue) for v in self.verdicts if v.holds)

    def verdict(self, ell: int, b: int) -> CongruenceReport:
        for v in self.verdicts:
            if v.prime == ell and v.residue == b:
                return v
        raise KeyError((ell, b))

    def candidates_json(self) -> list[dict]:
        if self.enumeration is None:
            return []
        out = []
        for t in self.enumeration.tuples:
            for q in t.raw_primes:
                out.append({
                    "prime": q,
                    "signs": {str(k): v for k, v in sorted(t.signs.items())},
                    "legendre_consistent": q in t.primes,
                    "resolved_by": t.resolved_by,
                    "differences": [{"index": d.index, "value": d.value,
                                     "factors": d.factors} for d in t.differences],
                })
        out.sort(key=lambda c: (c["prime"], sorted(c["signs"].items())))
        return out

    def to_dict(self) -> dict:
        return {
            "target": self.target.to_dict(),
            "parameters": self.parameters,
            "screens": self.screens,
            "candidates": self.candidates_json(),
            "verdicts": [v.to_dict() for v in sorted(self.verdicts,
                                                      key=lambda v: (v.prime, v.residue))],
        }


def full_search(target: SearchTarget, config: FinderConfig | None = None) -> SearchReport:
    config = config or FinderConfig()
    threshold = config.small_prime_threshold or target.threshold
    small = primes_up_to(threshold)
    screens = [{"rule": f"small primes: every prime <= {threshold} is checked class by class",
                "primes": small}]

    nz = nonzero_screen_primes(target)
    if nz is None:
        screens.append({"rule": "nonzero residues unresolved for every prime: "
                                "B = (ell+1)/2 always; checked individually up to the "
                                "threshold, quadratic-class closure beyond",
                        "primes": []})
    else:
        screens.append({"rule": "nonzero residues possible only for primes dividing "
                                "(beta-1)(beta-3)", "primes": nz})

    enumeration = None
    extra: set[int] = set(nz or [])
    beta = target.beta
    if (3 - beta) % 2 == 0 and 3 - beta > 0:
        zero_possible = _zero_residue_possible_generically(target)
        if zero_possible:
            enumeration = sign_enumeration_search(target, config.window_extension,
                                                  config.factor_budget)
            extra.update(enumeration.candidates)
            extra.update(q for q in enumeration.exceptional if q >= 5)
            screens.append({"rule": "zero residue: sign-enumeration candidates above the "
                                    "threshold", "primes": enumeration.candidates})
        else:
            screens.append({"rule": "zero residue impossible above the threshold "
                                    "(cusp-order rule)", "primes": []})
    else:
        screens.append({"rule": "zero residue impossible above the threshold: "
                                "B lies above (ell+3)/2", "primes": []})

    primes = sorted(set(small) | extra)
    if config.jobs > 1:
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            chunks = list(pool.map(_check_prime_job, [(target, p, config) for p in primes]))
    else:
        chunks = [check_prime(target, p, config) for p in primes]
    verdicts = sorted((v for chunk in chunks for v in chunk), key=lambda v: (v.prime, v.residue))
    params = {
        "threshold": threshold,
        "window_extension": config.window_extension or default_extension(target),
        "disproof_depth": config.disproof_depth,
        "empirical_depth": config.empirical_depth,
        "factor_budget": config.factor_budget,
    }
    return SearchReport(target, params, screens, enumeration, verdicts)


def _zero_residue_possible_generically(target: SearchTarget) -> bool:
    """Whether the cusp-order rule fails to exclude zero residues for large ell."""
    if target.kind == "inverse":
        m = target.monomial
        return m.m_inf > 0 and m.m0 > 0 and m.t > 0
    probe = next(p for p in range(1009, 2000) if is_prime(p))
    return screen_zero_residue(target, probe).possible


def overview(report: SearchReport) -> str:
    lines = [f"target: {report.target.name}"]
    for s in report.screens:
        shown = s["primes"] if len(s["primes"]) <= 12 else s["primes"][:12] + ["..."]
        lines.append(f"screen: {s['rule']} {shown}")
    held = [v for v in report.verdicts if v.holds]
    lines.append("congruences:")
    for v in held:
        extra = ""
        if v.certification is not None:
            extra = f" ({v.certification.route}; Sturm depth {v.certification.sturm_depth})"
        if v.status == EMPIRICAL:
            extra = f" (checked to depth {v.depth})"
        lines.append(f"  a({v.prime}n + {v.residue}) = 0 mod {v.prime}: {v.status}{extra}")
    if not held:
        lines.append("  none")
    return "\n".join(lines)


__all__ = [
    "SearchTarget", "frontend", "FRONTENDS", "ScreenResult", "screen_zero_residue",
    "screen_nonzero_residue", "nonzero_screen_primes", "sign_enumeration_search",
    "lowpoint_constraint_search", "direct_check", "certify_zero_residue",
    "certify_nonzero_residue", "full_search", "FinderConfig", "CongruenceReport",
    "SearchReport", "Witness", "Certification", "EnumerationResult",
]

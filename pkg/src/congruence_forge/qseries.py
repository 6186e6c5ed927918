"""Truncated Laurent q-series over the integers or a prime field.

A :class:`QSeries` stands for ``q^(offset24/24) * (c0 + c1*q + ... + O(q^N))``
where ``N = len(coeffs)``.  Exponents therefore live on the lattice
``offset24/24 + Z``; this is enough for every eta quotient.

Over the integers coefficients are Python ints (``Fraction`` values are
tolerated so Eisenstein series with awkward Bernoulli denominators can be
represented before reduction).  Over ``GF(ell)`` coefficients are stored as a
read-only ``numpy.int64`` array with entries in ``[0, ell)``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .arith import legendre
from .errors import (
    BadCharacteristic,
    DenominatorDivisibleByEll,
    FractionalExponent,
    NonUnitLeadingCoefficient,
    OffsetMismatch,
)

# Largest |result coefficient| for which a float64 FFT convolution is exact.
_FFT_SAFE = 2**46
_SMALL_CONV = 64


# ---------------------------------------------------------------------------
# Low level convolution helpers


def _conv_mod(a: np.ndarray, b: np.ndarray, p: int, n: int) -> np.ndarray:
    """First ``n`` coefficients of the product of two residue arrays mod p."""
    a = a[:n]
    b = b[:n]
    if len(a) == 0 or len(b) == 0:
        return np.zeros(0, dtype=np.int64)
    m = min(len(a), len(b))
    half = p // 2
    # Centered residues shrink the magnitudes by a factor of four.
    ac = np.where(a > half, a - p, a)
    bc = np.where(b > half, b - p, b)
    bound = half * half * m
    if m <= _SMALL_CONV and bound < 2**62:
        out = np.convolve(ac, bc)[:n]
    elif bound <= _FFT_SAFE:
        size = len(a) + len(b) - 1
        nfft = 1 << (size - 1).bit_length()
        fa = np.fft.rfft(ac.astype(np.float64), nfft)
        fb = np.fft.rfft(bc.astype(np.float64), nfft)
        out = np.rint(np.fft.irfft(fa * fb, nfft)[:min(size, n)]).astype(np.int64)
    else:
        prod = _conv_int([int(x) for x in ac], [int(x) for x in bc], n)
        return np.array([x % p for x in prod], dtype=np.int64)
    return np.mod(out, p).astype(np.int64)


def _pack(vals: Sequence[int], width: int) -> int:
    return int.from_bytes(b"".join(v.to_bytes(width, "little") for v in vals), "little")


def _unpack(x: int, width: int, count: int) -> list[int]:
    raw = x.to_bytes(width * count, "little")
    return [int.from_bytes(raw[i * width:(i + 1) * width], "little") for i in range(count)]


def _kronecker(a: Sequence[int], b: Sequence[int], n: int) -> list[int]:
    """Exact integer convolution via Kronecker substitution into one big product."""
    ma = max(abs(x) for x in a)
    mb = max(abs(x) for x in b)
    bits = (ma * mb * min(len(a), len(b))).bit_length() + 1
    width = (bits + 7) // 8
    ap = [x if x > 0 else 0 for x in a]
    an = [-x if x < 0 else 0 for x in a]
    bp = [x if x > 0 else 0 for x in b]
    bn = [-x if x < 0 else 0 for x in b]
    Ap, An, Bp, Bn = (_pack(v, width) for v in (ap, an, bp, bn))
    count = min(len(a) + len(b) - 1, n)
    # Each of the two sums has nonnegative coefficients below 2**(8*width).
    pos = _unpack((Ap * Bp + An * Bn) % (1 << (8 * width * count)), width, count)
    neg = _unpack((Ap * Bn + An * Bp) % (1 << (8 * width * count)), width, count)
    return [x - y for x, y in zip(pos, neg)]


def _conv_int(a: Sequence, b: Sequence, n: int) -> list:
    """First ``n`` coefficients of an exact product (ints or Fractions)."""
    a = list(a[:n])
    b = list(b[:n])
    if not a or not b:
        return []
    size = min(len(a) + len(b) - 1, n)
    all_int = all(type(x) is int for x in a) and all(type(x) is int for x in b)
    if all_int and min(len(a), len(b)) > 48 and any(a) and any(b):
        return _kronecker(a, b, n)
    out = [0] * size
    nzb = [(j, y) for j, y in enumerate(b) if y]
    for i, x in enumerate(a):
        if not x or i >= size:
            continue
        for j, y in nzb:
            if i + j >= size:
                break
            out[i + j] += x * y
    return [_normalize_number(v) for v in out]


def _normalize_number(v):
    if isinstance(v, Fraction) and v.denominator == 1:
        return int(v.numerator)
    return v


def _exact_div(x, y):
    if type(x) is int and type(y) is int and x % y == 0:
        return x // y
    return _normalize_number(Fraction(x) / y)


def _inv_mod_array(u: np.ndarray, p: int, n: int) -> np.ndarray:
    """Power-series inverse mod p by Newton iteration; u[0] must be nonzero."""
    g = np.array([pow(int(u[0]), -1, p)], dtype=np.int64)
    k = 1
    while k < n:
        k = min(2 * k, n)
        ug = _conv_mod(u, g, p, k)
        corr = np.mod(-ug, p)
        corr[0] = (corr[0] + 2) % p
        g = _conv_mod(g, corr, p, k)
    return g[:n]


def _pow_mod_array(u: np.ndarray, e: int, p: int, n: int) -> np.ndarray:
    """u**e truncated to n terms mod p, for u[0] != 0 and e >= 0.

    Uses the Frobenius identity h(q)^p = h(q^p) mod p on the base-p digits of
    ``e`` so only small exponents need genuine multiplication.
    """
    result = np.zeros(n, dtype=np.int64)
    result[0] = 1
    stride = 1
    while e and stride < n:
        digit = e % p
        e //= p
        if digit:
            m = -(-n // stride)
            h = _binary_pow_mod(u[:m], digit, p, m)
            spread = np.zeros(n, dtype=np.int64)
            spread[::stride] = h[:len(spread[::stride])]
            result = _conv_mod(result, spread, p, n)
        stride *= p
    if e:
        # Remaining digits only affect the constant term.
        result = np.mod(result * pow(int(u[0]), e * stride, p), p)
    return result


def _binary_pow_mod(u: np.ndarray, e: int, p: int, n: int) -> np.ndarray:
    result = None
    base = u[:n]
    while e:
        if e & 1:
            result = base.copy() if result is None else _conv_mod(result, base, p, n)
        e >>= 1
        if e:
            base = _conv_mod(base, base, p, n)
    if result is None:
        result = np.zeros(n, dtype=np.int64)
        result[0] = 1
    if len(result) < n:
        result = np.concatenate([result, np.zeros(n - len(result), dtype=np.int64)])
    return result


def _miller_pow(u: Sequence, alpha: int, n: int) -> list:
    """u**alpha for a series with nonzero constant term, via Miller's recurrence.

    g_0 = u_0^alpha,  n u_0 g_n = sum_{k=1}^n ((alpha+1)k - n) u_k g_{n-k}.
    Cost is O(n * nnz(u)), which is what makes eta powers cheap.
    """
    u0 = u[0]
    g = [0] * n
    g[0] = u0**alpha if alpha >= 0 else _exact_div(1, u0**(-alpha))
    nz = [(k, c) for k, c in enumerate(u[:n]) if k and c]
    for m in range(1, n):
        acc = 0
        for k, c in nz:
            if k > m:
                break
            acc += ((alpha + 1) * k - m) * c * g[m - k]
        g[m] = _exact_div(acc, m * u0)
    return g


# ---------------------------------------------------------------------------
# The series type


class QSeries:
    """Immutable truncated q-series; see the module docstring for the model."""

    __slots__ = ("_coeffs", "offset24", "mod")

    def __init__(self, coeffs: Iterable, offset24: int = 0, mod: int | None = None):
        self.offset24 = int(offset24)
        self.mod = mod
        if mod is None:
            self._coeffs = tuple(_normalize_number(c) for c in coeffs)
        else:
            if isinstance(coeffs, np.ndarray) and coeffs.dtype == np.int64:
                arr = np.mod(coeffs, mod)
            else:
                arr = np.array([_reduce_scalar(c, mod) for c in coeffs], dtype=np.int64)
            arr.setflags(write=False)
            self._coeffs = arr

    # -- construction helpers -------------------------------------------------

    @classmethod
    def one(cls, precision: int, mod: int | None = None) -> "QSeries":
        return cls.monomial(0, precision, mod=mod)

    @classmethod
    def monomial(cls, exponent: int, precision: int, coeff=1, mod: int | None = None,
                 offset24: int | None = None) -> "QSeries":
        """coeff * q^exponent known to relative precision ``precision``."""
        if offset24 is None:
            offset24 = 24 * exponent
        cs = [0] * precision
        if precision:
            cs[0] = coeff
        return cls(cs, offset24, mod)

    @classmethod
    def zero(cls, precision: int, offset24: int = 0, mod: int | None = None) -> "QSeries":
        return cls([0] * precision, offset24, mod)

    def _new(self, coeffs, offset24: int | None = None) -> "QSeries":
        return QSeries(coeffs, self.offset24 if offset24 is None else offset24, self.mod)

    # -- basic accessors ------------------------------------------------------

    @property
    def coeffs(self) -> list:
        """Coefficients as a plain list (ints, or Fractions over the rationals)."""
        if self.mod is None:
            return list(self._coeffs)
        return [int(x) for x in self._coeffs]

    @property
    def array(self) -> np.ndarray:
        if self.mod is None:
            raise TypeError("array view is only available for series mod ell")
        return self._coeffs

    @property
    def precision(self) -> int:
        """Number of known coefficients counted from the first stored exponent."""
        return len(self._coeffs)

    @property
    def leading_exponent(self) -> Fraction:
        return Fraction(self.offset24, 24)

    @property
    def end(self) -> Fraction:
        """Exponents strictly below this bound are known."""
        return Fraction(self.offset24 + 24 * len(self._coeffs), 24)

    @property
    def integral(self) -> bool:
        return self.offset24 % 24 == 0

    @property
    def start(self) -> int:
        """First stored exponent for integral series."""
        self._require_integral()
        return self.offset24 // 24

    @property
    def stop(self) -> int:
        """Exclusive precision bound for integral series."""
        self._require_integral()
        return self.offset24 // 24 + len(self._coeffs)

    def _require_integral(self):
        if self.offset24 % 24:
            raise FractionalExponent(
                f"series has fractional exponents (offset {self.offset24}/24)")

    def __len__(self) -> int:
        return len(self._coeffs)

    def __getitem__(self, exponent) -> int | Fraction:
        """Coefficient at a given exponent (int or Fraction); zero below the start."""
        steps = Fraction(exponent) * 24 - self.offset24
        if steps.denominator != 1 or steps % 24:
            if steps < 0:
                return 0
            raise FractionalExponent(f"exponent {exponent} is not on this series' lattice")
        i = int(steps) // 24
        if i < 0:
            return 0
        if i >= len(self._coeffs):
            raise IndexError(f"coefficient at q^{exponent} is beyond the known precision")
        c = self._coeffs[i]
        return int(c) if self.mod is not None else c

    def is_zero(self) -> bool:
        return not any(self._coeffs)

    def valuation(self) -> Fraction | None:
        """Exponent of the first nonzero coefficient, or None if all known ones vanish."""
        for i, c in enumerate(self._coeffs):
            if c:
                return Fraction(self.offset24 + 24 * i, 24)
        return None

    def normalized(self) -> "QSeries":
        """Strip leading zero coefficients (absolute precision is unchanged)."""
        for i, c in enumerate(self._coeffs):
            if c:
                if i == 0:
                    return self
                return self._new(self._coeffs[i:], self.offset24 + 24 * i)
        return self

    def truncate(self, precision: int) -> "QSeries":
        """Keep at most ``precision`` coefficients from the first stored exponent."""
        return self._new(self._coeffs[:max(precision, 0)])

    def truncate_at(self, stop) -> "QSeries":
        """Keep coefficients at exponents strictly below ``stop``."""
        n = -(-(Fraction(stop) * 24 - self.offset24) // 24)
        return self.truncate(int(n))

    def extend_start(self, exponent24: int) -> "QSeries":
        """Re-express with a lower first exponent by padding zeros in front."""
        diff = self.offset24 - exponent24
        if diff < 0 or diff % 24:
            raise OffsetMismatch("can only pad by whole exponent steps")
        pad = diff // 24
        if pad == 0:
            return self
        if self.mod is None:
            return self._new((0,) * pad + self._coeffs, exponent24)
        return self._new(np.concatenate([np.zeros(pad, dtype=np.int64), self._coeffs]),
                         exponent24)

    # -- ring operations ------------------------------------------------------

    def _check_ring(self, other: "QSeries"):
        if self.mod != other.mod:
            raise ValueError(f"ring mismatch: mod {self.mod} vs mod {other.mod}")

    def __add__(self, other) -> "QSeries":
        if not isinstance(other, QSeries):
            return self + self._scalar_series(other)
        self._check_ring(other)
        if (self.offset24 - other.offset24) % 24:
            raise OffsetMismatch(
                f"cannot add series with offsets {self.offset24}/24 and {other.offset24}/24")
        lo = min(self.offset24, other.offset24)
        hi = min(self.offset24 + 24 * len(self), other.offset24 + 24 * len(other))
        n = (hi - lo) // 24
        a = self.extend_start(lo).truncate(n)._coeffs
        b = other.extend_start(lo).truncate(n)._coeffs
        if self.mod is None:
            la, lb = len(a), len(b)
            out = [(a[i] if i < la else 0) + (b[i] if i < lb else 0) for i in range(n)]
        else:
            out = np.zeros(n, dtype=np.int64)
            out[:len(a)] += a
            out[:len(b)] += b
        return self._new(out, lo)

    __radd__ = __add__

    def __neg__(self) -> "QSeries":
        if self.mod is None:
            return self._new([-c for c in self._coeffs])
        return self._new(np.mod(-self._coeffs, self.mod))

    def __sub__(self, other) -> "QSeries":
        if not isinstance(other, QSeries):
            return self + (-self._scalar_series(other))
        return self + (-other)

    def __rsub__(self, other) -> "QSeries":
        return (-self) + other

    def _scalar_series(self, c) -> "QSeries":
        """A constant known to the same absolute precision as self."""
        if self.offset24 % 24:
            raise OffsetMismatch("cannot add a constant to a series with fractional exponents")
        stop = self.offset24 // 24 + len(self)
        if stop <= 0:
            return QSeries.zero(0, self.offset24, self.mod)
        return QSeries.monomial(0, stop, c, self.mod)

    def scale(self, c) -> "QSeries":
        if self.mod is None:
            return self._new([c * x for x in self._coeffs])
        return self._new(np.mod(self._coeffs * (_reduce_scalar(c, self.mod)), self.mod))

    def shift(self, exponent24: int) -> "QSeries":
        """Multiply by q^(exponent24/24)."""
        return self._new(self._coeffs, self.offset24 + exponent24)

    def __mul__(self, other) -> "QSeries":
        if not isinstance(other, QSeries):
            return self.scale(other)
        self._check_ring(other)
        f = self.normalized()
        g = other.normalized()
        off = f.offset24 + g.offset24
        fz, gz = f.is_zero(), g.is_zero()
        if fz or gz:
            # An all-zero factor is O(q^end); the product is O(q^(end + lead)).
            n = (len(f) if fz else 0) + (len(g) if gz else 0)
            return QSeries.zero(n, off, self.mod)
        n = min(len(f), len(g))
        if self.mod is None:
            out = _conv_int(f._coeffs, g._coeffs, n)
        else:
            out = _conv_mod(f._coeffs, g._coeffs, self.mod, n)
        return self._new(out, off)

    def __rmul__(self, other) -> "QSeries":
        return self.scale(other)

    def __pow__(self, e: int) -> "QSeries":
        return self.pow(e)

    def pow(self, e: int) -> "QSeries":
        if e < 0:
            return self.invert().pow(-e)
        f = self.normalized()
        if e == 0:
            return QSeries.one(max(len(f), 1), self.mod)
        if f.is_zero():
            # f = O(q^end) so f^e = O(q^(e*end)).
            n = len(f)
            return QSeries.zero(n, e * (f.offset24 + 24 * n) - 24 * n, self.mod)
        n = len(f)
        if self.mod is None:
            lead = f._coeffs[0]
            if lead in (1, -1) or not all(type(c) is int for c in f._coeffs):
                out = _miller_pow(f._coeffs, e, n)
            else:
                out = _binary_pow_exact(f._coeffs, e, n)
        else:
            out = _pow_mod_array(f._coeffs, e, self.mod, n)
        return self._new(out, f.offset24 * e)

    def invert(self) -> "QSeries":
        """Multiplicative inverse; the leading coefficient must be a unit."""
        f = self.normalized()
        if f.is_zero():
            raise NonUnitLeadingCoefficient("cannot invert a series that vanishes to its precision")
        lead = f._coeffs[0]
        if self.mod is None:
            if lead not in (1, -1) and type(lead) is int:
                raise NonUnitLeadingCoefficient(
                    f"leading coefficient {lead} is not a unit in the integers")
            out = _miller_pow(f._coeffs, -1, len(f))
        else:
            out = _inv_mod_array(f._coeffs, self.mod, len(f))
        return self._new(out, -f.offset24)

    # -- operators -------------------------------------------------------------

    def _exponents_mod(self) -> np.ndarray:
        """Exponent of each stored coefficient, reduced mod ell."""
        p = self.mod
        n = len(self)
        if self.offset24 % 24 == 0:
            return np.mod(np.arange(n, dtype=np.int64) + self.offset24 // 24, p)
        if 24 % p == 0:
            raise BadCharacteristic(
                f"exponents with denominator 24 are not defined mod {p}")
        inv24 = pow(24, -1, p)
        return np.mod((np.arange(n, dtype=np.int64) * 24 + self.offset24) % p * inv24, p)

    def theta(self, times: int = 1) -> "QSeries":
        """Apply Theta = q d/dq ``times`` times."""
        if times == 0:
            return self
        if self.mod is None:
            base = Fraction(self.offset24, 24)
            out = [_normalize_number(c * (base + i) ** times) for i, c in enumerate(self._coeffs)]
            return self._new(out)
        e = self._exponents_mod()
        factor = np.array([pow(int(x), times, self.mod) for x in range(self.mod)],
                          dtype=np.int64)[e]
        return self._new(np.mod(self._coeffs * factor, self.mod))

    def u_op(self, ell: int) -> "QSeries":
        """U_ell: keep exponents divisible by ell and divide them by ell."""
        self._require_integral()
        a, b = self.start, self.stop
        lo = -(-a // ell)
        hi = -(-b // ell)
        idx = [ell * m - a for m in range(lo, hi)]
        if self.mod is None:
            out = [self._coeffs[i] for i in idx]
        else:
            out = self._coeffs[np.array(idx, dtype=np.int64)] if idx else np.zeros(0, np.int64)
        return self._new(out, 24 * lo)

    def v_op(self, d: int) -> "QSeries":
        """V_d: substitute q -> q^d."""
        if d < 1:
            raise ValueError("V_d needs d >= 1")
        if d == 1:
            return self
        n = len(self) * d
        if self.mod is None:
            out = [0] * n
            out[::d] = self._coeffs
        else:
            out = np.zeros(n, dtype=np.int64)
            out[::d] = self._coeffs
        return self._new(out, self.offset24 * d)

    def legendre_twist(self, ell: int) -> "QSeries":
        """Multiply the coefficient of q^n by the Legendre symbol (n/ell)."""
        self._require_integral()
        a = self.start
        chi = [legendre(a + i, ell) for i in range(len(self))]
        if self.mod is None:
            return self._new([c * s for c, s in zip(self._coeffs, chi)])
        return self._new(np.mod(self._coeffs * np.array(chi, dtype=np.int64), self.mod))

    def reduce_mod(self, ell: int) -> "QSeries":
        """Coefficientwise reduction to GF(ell)."""
        if self.mod is not None:
            if self.mod != ell:
                raise ValueError(f"series is already reduced mod {self.mod}")
            return self
        return QSeries([_reduce_scalar(c, ell) for c in self._coeffs], self.offset24, ell)

    def lift(self) -> "QSeries":
        """Integer series with the residues in [0, ell) as coefficients."""
        if self.mod is None:
            return self
        return QSeries(self.coeffs, self.offset24, None)

    # -- comparison and display ------------------------------------------------

    def agrees_with(self, other: "QSeries") -> bool:
        """Equality on the exponents where both series are known."""
        if not isinstance(other, QSeries) or self.mod != other.mod:
            return False
        if (self.offset24 - other.offset24) % 24:
            return self.normalized().is_zero() and other.normalized().is_zero()
        d = self - other
        return d.is_zero()

    def __eq__(self, other) -> bool:
        return self.agrees_with(other)

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        ring = "ZZ" if self.mod is None else f"GF({self.mod})"
        return f"QSeries<{ring}>({self.to_text(max_terms=8)})"

    def to_text(self, max_terms: int | None = None) -> str:
        cs = self.coeffs
        shown = cs if max_terms is None else cs[:max_terms]
        parts = []
        for i, c in enumerate(shown):
            if not c:
                continue
            mono = "" if i == 0 else ("q" if i == 1 else f"q^{i}")
            if mono:
                coef = "" if c == 1 else ("-" if c == -1 else f"{c}*")
                parts.append(f"{coef}{mono}")
            else:
                parts.append(str(c))
        if len(shown) < len(cs):
            parts.append("...")
        parts.append(f"O(q^{len(cs)})")
        body = " + ".join(parts).replace("+ -", "- ")
        lead = Fraction(self.offset24, 24)
        if lead == 0:
            return body
        power = str(lead) if lead.denominator == 1 else f"({lead})"
        return f"q^{power} * ({body})"

    def to_record(self) -> dict:
        lead = self.leading_exponent
        return {
            "ring": "ZZ" if self.mod is None else f"GF({self.mod})",
            "offset24": self.offset24,
            "leading_exponent": int(lead) if lead.denominator == 1 else str(lead),
            "coeffs": [c if isinstance(c, int) else str(c) for c in self.coeffs],
            "precision": self.precision,
        }

    @classmethod
    def from_record(cls, record: dict) -> "QSeries":
        ring = record["ring"]
        mod = None if ring == "ZZ" else int(ring[3:-1])
        cs = [Fraction(c) if isinstance(c, str) else c for c in record["coeffs"]]
        return cls(cs, record["offset24"], mod)


def _binary_pow_exact(u: Sequence[int], e: int, n: int) -> list[int]:
    result = None
    base = list(u[:n])
    while e:
        if e & 1:
            result = list(base) if result is None else _conv_int(result, base, n)
        e >>= 1
        if e:
            base = _conv_int(base, base, n)
    return result if result is not None else [1] + [0] * (n - 1)


def _reduce_scalar(c, ell: int) -> int:
    if isinstance(c, Fraction):
        if c.denominator % ell == 0:
            raise DenominatorDivisibleByEll(
                f"coefficient {c} has a denominator divisible by {ell}")
        return c.numerator * pow(c.denominator, -1, ell) % ell
    return int(c) % ell


# ---------------------------------------------------------------------------
# Eta products


def pentagonal_product(precision: int, mod: int | None = None) -> QSeries:
    """prod_{n>=1} (1 - q^n) via Euler's pentagonal number theorem."""
    cs = [0] * precision
    if precision:
        cs[0] = 1
    k = 1
    while True:
        g1 = k * (3 * k - 1) // 2
        if g1 >= precision:
            break
        s = -1 if k % 2 else 1
        cs[g1] += s
        g2 = k * (3 * k + 1) // 2
        if g2 < precision:
            cs[g2] += s
        k += 1
    return QSeries(cs, 0, mod)


def eta_power(d: int, r: int, precision: int, mod: int | None = None) -> QSeries:
    """eta(d z)^r to ``precision`` coefficients, including its q^(d r/24) prefactor."""
    if d < 1:
        raise ValueError("eta(d z) needs d >= 1")
    m = -(-precision // d)
    base = pentagonal_product(m, mod)
    if mod is None:
        body = QSeries(_miller_pow(base.coeffs, r, m), 0) if m else base
    else:
        body = base.pow(r) if r >= 0 else base.invert().pow(-r)
    return body.v_op(d).truncate(precision).shift(d * r)


def eta_quotient(spec, precision: int, mod: int | None = None) -> QSeries:
    """prod eta(d z)^r over (d, r) pairs, known to ``precision`` coefficients."""
    if precision < 1:
        raise ValueError("precision must be at least 1")
    items = spec.items() if isinstance(spec, dict) else spec
    result = QSeries.one(precision, mod)
    for d, r in items:
        if r == 0:
            continue
        result = result * eta_power(d, r, precision, mod)
    return result


def eta_offset24(spec) -> int:
    items = spec.items() if isinstance(spec, dict) else spec
    return sum(d * r for d, r in items)

"""Surface syntax for eta quotients and monomials in E, F, theta0, G.

Grammar (whitespace is ignored)::

    expr   := factor (('*' | '/') factor)*
    factor := atom ['^' int]
    atom   := 'eta' '(' posint ')' | 'theta0' | 'E' | 'F' | 'G' | '1'
            | 'q' '^' (int | '(' int '/' posint ')')
    int    := ['-' | '+'] digits  |  '(' ['-' | '+'] digits ')'

Expressions are kept in a canonical form (exponents merged per atom), so
printing and re-parsing returns an equal object.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ExprSyntaxError
from .forms import GENERATOR_ETA, CuspMonomial, sturm_precision
from .qseries import QSeries, eta_quotient

_ORDER = {"theta0": 0, "F": 1, "E": 2, "G": 3, "eta": 4}


@dataclass(frozen=True)
class FormExpr:
    """A product of atoms with integer exponents times q^(qshift24/24).

    ``factors`` holds ((name, arg), exponent) pairs, sorted and merged;
    ``arg`` is the eta dilation d and 0 for the named generators.
    """

    factors: tuple[tuple[tuple[str, int], int], ...] = ()
    qshift24: int = 0

    @classmethod
    def build(cls, items, qshift24: int = 0) -> "FormExpr":
        merged: dict[tuple[str, int], int] = {}
        for key, e in items:
            merged[key] = merged.get(key, 0) + e
        ordered = sorted(((k, e) for k, e in merged.items() if e),
                         key=lambda p: (_ORDER[p[0][0]], p[0][1]))
        return cls(tuple(ordered), qshift24)

    def __mul__(self, other: "FormExpr") -> "FormExpr":
        return FormExpr.build(self.factors + other.factors, self.qshift24 + other.qshift24)

    def __pow__(self, e: int) -> "FormExpr":
        return FormExpr.build([(k, x * e) for k, x in self.factors], self.qshift24 * e)

    def inverse(self) -> "FormExpr":
        return self ** -1

    # -- conversions -----------------------------------------------------------

    def eta_spec(self, keep_theta: bool = False) -> tuple[dict[int, int], int]:
        """(eta exponents by dilation, theta0 power); theta0 and G fold into eta
        unless ``keep_theta``."""
        spec: dict[int, int] = {}
        theta = 0
        for (name, arg), e in self.factors:
            if name == "eta":
                pairs = [(arg, 1)]
            elif keep_theta and name in ("theta0", "G"):
                theta += e * (4 if name == "G" else 1)
                continue
            else:
                pairs = GENERATOR_ETA[name]
            for d, r in pairs:
                spec[d] = spec.get(d, 0) + r * e
        return {d: r for d, r in sorted(spec.items()) if r}, theta

    def monomial(self) -> CuspMonomial | None:
        """The cusp monomial equal to this expression, if there is one."""
        if self.qshift24:
            return None
        spec, _ = self.eta_spec()
        return CuspMonomial.from_eta_spec(spec)

    def series(self, precision: int, mod: int | None = None) -> QSeries:
        spec, _ = self.eta_spec()
        out = eta_quotient(spec, precision, mod) if spec else QSeries.one(precision, mod)
        return out.shift(self.qshift24) if self.qshift24 else out

    def __str__(self) -> str:
        return to_text(self)


def _atom_text(name: str, arg: int) -> str:
    return f"eta({arg})" if name == "eta" else name


def to_text(e: FormExpr) -> str:
    pos = [(k, x) for k, x in e.factors if x > 0]
    neg = [(k, -x) for k, x in e.factors if x < 0]
    parts = [_atom_text(*k) + (f"^{x}" if x != 1 else "") for k, x in pos]
    if e.qshift24:
        frac = Fraction(e.qshift24, 24)
        parts.append(f"q^{frac.numerator}" if frac.denominator == 1
                     else f"q^({frac.numerator}/{frac.denominator})")
    text = "*".join(parts)
    for k, x in neg:
        if text:
            text += "/" + _atom_text(*k) + (f"^{x}" if x != 1 else "")
        else:
            text = _atom_text(*k) + f"^-{x}"
    return text or "1"


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, expected, message: str | None = None):
        found = self.text[self.pos] if self.pos < len(self.text) else "end of input"
        exp = tuple(sorted(expected))
        msg = message or f"expected {' or '.join(exp)}, found {found!r}"
        raise ExprSyntaxError(msg, self.pos, exp)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def accept(self, token: str) -> bool:
        self.skip()
        if self.text.startswith(token, self.pos):
            self.pos += len(token)
            return True
        return False

    def expect(self, token: str):
        if not self.accept(token):
            self.error({repr(token)})

    def integer(self, signed: bool = True) -> int:
        if self.accept("("):
            v = self.integer(signed)
            self.expect(")")
            return v
        self.skip()
        start = self.pos
        if signed and self.pos < len(self.text) and self.text[self.pos] in "+-":
            self.pos += 1
        digits = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == digits:
            self.pos = start
            self.error({"integer"})
        return int(self.text[start:self.pos])

    def q_exponent(self) -> int:
        """Exponent of q as a multiple of 1/24."""
        self.skip()
        start = self.pos
        if self.accept("("):
            num = self.integer()
            if self.accept("/"):
                den = self.integer(signed=False)
            else:
                den = 1
            self.expect(")")
        else:
            num, den = self.integer(), 1
        if den == 0 or (24 * num) % den:
            self.pos = start
            self.error({"exponent with denominator dividing 24"},
                       f"q exponent must be a multiple of 1/24 (position {start})")
        return 24 * num // den

    def atom(self) -> tuple[str, int] | int:
        self.skip()
        if self.accept("eta"):
            self.expect("(")
            start = self.pos
            d = self.integer(signed=False)
            if d <= 0:
                self.pos = start
                self.error({"positive integer"})
            self.expect(")")
            return ("eta", d)
        for name in ("theta0", "E", "F", "G"):
            if self.accept(name):
                return (name, 0)
        if self.accept("1"):
            return ("one", 0)
        if self.accept("q"):
            self.expect("^")
            return self.q_exponent()
        self.error({"eta(d)", "theta0", "E", "F", "G", "q^(a/24)", "1"})

    def factor(self, sign: int):
        a = self.atom()
        if isinstance(a, int):
            return [], sign * a
        e = 1
        if self.accept("^"):
            e = self.integer()
        if a[0] == "one":
            return [], 0
        return [(a, sign * e)], 0

    def parse(self) -> FormExpr:
        items, shift = self.factor(1)
        while True:
            c = self.peek()
            if c == "*":
                self.pos += 1
                more, s = self.factor(1)
            elif c == "/":
                self.pos += 1
                more, s = self.factor(-1)
            elif c == "":
                break
            else:
                self.error({"'*'", "'/'", "end of input"})
            items += more
            shift += s
        return FormExpr.build(items, shift)


def parse(text: str) -> FormExpr:
    """Parse an expression such as ``eta(1)^6*eta(4)^6/eta(2)^3``."""
    return _Parser(text).parse()


def as_monomial(e: FormExpr, check: bool = True) -> CuspMonomial | None:
    """Match an expression against a cusp monomial.

    The match is symbolic; with ``check`` both sides are also expanded and
    compared up to the Sturm depth of the monomial's weight.
    """
    m = e.monomial()
    if m is None or not check:
        return m
    depth = sturm_precision(m.weight2)
    if not e.series(depth).agrees_with(m.series(depth)):
        return None
    return m

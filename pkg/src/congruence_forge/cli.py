"""Command-line interface: ``congruence-forge <command> ...``.

Exit status is 0 on success, 2 when ``verify`` refutes a congruence, and 1 on
any error.  Settings come from flags, then from the key=value file named by
``CONGRUENCE_FORGE_CONFIG``, then from built-in defaults.
"""

from __future__ import annotations

import argparse
import configparser
import json
import math
import os
import sys

from . import __version__
from .arith import DEFAULT_FACTOR_BUDGET, check_prime_modulus
from .errors import CongruenceForgeError, InsufficientPrecision
from .expr import FormExpr, as_monomial, parse
from .finder import (
    CERTIFIED,
    DISPROVED,
    EMPIRICAL,
    FRONTENDS,
    CongruenceReport,
    FinderConfig,
    SearchTarget,
    can_certify,
    certify,
    direct_check,
    frontend,
    full_search,
    overview,
)
from .forms import filtration, sturm_precision
from .tate import required_precision, tate_cycle, validate_cycle

CONFIG_ENV = "CONGRUENCE_FORGE_CONFIG"

DEFAULTS = {
    "terms": 200,
    "factor_budget": DEFAULT_FACTOR_BUDGET,
    "threshold": None,
    "extension": None,
    "disproof_depth": 500,
    "empirical_depth": 10_000,
    "jobs": 1,
}


class UsageError(CongruenceForgeError):
    pass


def load_config(path: str | None = None) -> dict:
    """Defaults overlaid with the key=value file from the environment."""
    settings = dict(DEFAULTS)
    path = path or os.environ.get(CONFIG_ENV)
    if not path:
        return settings
    if not os.path.exists(path):
        raise UsageError(f"config file {path!r} (from {CONFIG_ENV}) does not exist")
    parser = configparser.ConfigParser()
    with open(path) as fh:
        parser.read_string("[forge]\n" + fh.read())
    for key, raw in parser["forge"].items():
        key = key.replace("-", "_")
        if key not in DEFAULTS:
            raise UsageError(f"unknown config key {key!r} in {path}")
        try:
            settings[key] = int(float(raw)) if raw.strip().lower() != "none" else None
        except ValueError as exc:
            raise UsageError(f"config key {key!r} needs an integer, got {raw!r}") from exc
    return settings


def _setting(args, settings: dict, key: str):
    value = getattr(args, key, None)
    return settings[key] if value is None else value


def _emit(data, as_json: bool, text: str) -> None:
    if as_json:
        print(json.dumps(data, sort_keys=True, indent=2, default=str))
    else:
        print(text)


# -- target resolution ---------------------------------------------------------


def _expression(args) -> FormExpr:
    if not args.expr:
        raise UsageError("an expression is required (or use --frontend)")
    return parse(args.expr)


def _monomial_or_fail(e: FormExpr, purpose: str):
    m = as_monomial(e)
    if m is None:
        raise UsageError(
            f"{e} is not a monomial E^a F^b theta0^c; {purpose} needs cusp orders, "
            "so rewrite it in E, F, theta0 or as a matching eta quotient")
    return m


def resolve_target(args) -> SearchTarget:
    if getattr(args, "frontend", None):
        if args.expr:
            raise UsageError("give either an expression or --frontend, not both")
        return frontend(args.frontend)
    e = _expression(args)
    if args.invert:
        m = _monomial_or_fail(e, "find --invert")
        return SearchTarget.inverse(m, name=f"({e})^-1")
    spec, theta = e.eta_spec(keep_theta=True)
    return SearchTarget.eta_product(spec, theta, name=str(e))


# -- commands ------------------------------------------------------------------


def cmd_expand(args, settings) -> int:
    e = _expression(args)
    terms = _setting(args, settings, "terms")
    if args.mod is not None:
        check_prime_modulus(args.mod, minimum=2)
    s = e.series(terms + (1 if args.invert else 0), args.mod)
    if args.invert:
        s = s.normalized().invert()
    s = s.truncate(terms)
    label = f"({e})^-1" if args.invert else str(e)
    record = {"expression": label, "series": s.to_record()}
    _emit(record, args.json, f"{label} = {s.to_text()}")
    return 0


def cmd_filtration(args, settings) -> int:
    e = _expression(args)
    m = _monomial_or_fail(e, "filtration")
    ell = check_prime_modulus(args.mod, minimum=5)
    f = m ** args.power
    form = f.form(sturm_precision(f.weight2), ell)
    w = filtration(form.series, f.weight2, ell)
    record = {"expression": str(e), "power": args.power, "mod": ell,
              "weight2": f.weight2, "filtration2": None if w == math.inf else w}
    if w == math.inf:
        text = f"({e})^{args.power} vanishes mod {ell}"
    else:
        text = (f"filtration of ({e})^{args.power} mod {ell}: weight {w / 2:g} "
                f"(doubled {w}); ambient weight {f.weight2 / 2:g}")
    _emit(record, args.json, text)
    return 0


def cmd_tate_cycle(args, settings) -> int:
    e = _expression(args)
    m = _monomial_or_fail(e, "tate-cycle")
    ell = check_prime_modulus(args.mod, minimum=5)
    f = m ** args.power
    form = f.form(required_precision(f.weight2, ell), ell)
    report = tate_cycle(form, ell)
    problems = validate_cycle(report)
    record = report.to_dict()
    record["violations"] = problems
    lines = [
        f"Tate cycle of ({e})^{args.power} mod {ell}",
        f"  filtration of f: {report.base_filtration / 2:g}",
        "  filtrations of Theta^i f (i = 1..ell): "
        + ", ".join(f"{w / 2:g}" for w in report.filtrations),
        f"  high points {report.high_points}, low points {report.low_points}, "
        f"drops {report.drops}",
        f"  f in its own cycle: {report.in_own_cycle}",
        "  structure: " + ("consistent" if not problems else "; ".join(problems)),
    ]
    _emit(record, args.json, "\n".join(lines))
    return 0 if not problems else 1


def _finder_config(args, settings) -> FinderConfig:
    return FinderConfig(
        window_extension=_setting(args, settings, "extension"),
        disproof_depth=_setting(args, settings, "disproof_depth"),
        empirical_depth=_setting(args, settings, "empirical_depth"),
        small_prime_threshold=_setting(args, settings, "threshold"),
        factor_budget=_setting(args, settings, "factor_budget"),
        jobs=_setting(args, settings, "jobs"),
    )


def cmd_find(args, settings) -> int:
    target = resolve_target(args)
    report = full_search(target, _finder_config(args, settings))
    _emit(report.to_dict(), args.json, overview(report))
    return 0


def cmd_verify(args, settings) -> int:
    target = resolve_target(args)
    ell = check_prime_modulus(args.mod, minimum=2)
    b = args.residue % ell
    witness = direct_check(target, ell, b, args.depth)
    if witness is not None:
        verdict = CongruenceReport(ell, b, DISPROVED, witness=witness)
    elif args.certify:
        if not can_certify(target, ell):
            raise UsageError(f"no certification route for {target.name} at ell = {ell}; "
                             "drop --certify for an empirical check")
        cert = certify(target, ell, b)
        status = CERTIFIED if cert.certified else DISPROVED
        evidence = [] if cert.certified else [
            f"certification identity fails, so a nonzero coefficient exists beyond depth "
            f"{args.depth}"]
        verdict = CongruenceReport(ell, b, status, certification=cert, evidence=evidence)
    else:
        verdict = CongruenceReport(ell, b, EMPIRICAL, depth=args.depth)
    text = f"a({ell}n + {b}) = 0 mod {ell} for {target.name}: {verdict.status}"
    if verdict.witness is not None:
        text += (f" (coefficient of index {verdict.witness.index} is "
                 f"{verdict.witness.residue} mod {ell})")
    elif verdict.certification is not None:
        text += (f" ({verdict.certification.route}; Sturm depth "
                 f"{verdict.certification.sturm_depth})")
    else:
        text += f" (no counterexample among {args.depth} terms)"
    data = verdict.to_dict()
    data["target"] = target.to_dict()
    _emit(data, args.json, text)
    return 2 if verdict.status == DISPROVED else 0


# -- argument parsing ----------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="congruence-forge",
        description="Modular forms mod ell and Ramanujan congruences of their inverses.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, expr_required=True):
        if expr_required:
            p.add_argument("expr", help="expression, e.g. 'theta0*F*E' or 'eta(2)/eta(1)^2'")
        p.add_argument("--json", action="store_true", help="emit JSON")

    p = sub.add_parser("expand", help="print a q-expansion")
    common(p)
    p.add_argument("--terms", type=int, help="number of coefficients (default 200)")
    p.add_argument("--mod", type=int, help="reduce modulo this prime")
    p.add_argument("--invert", action="store_true", help="expand the inverse")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("filtration", help="filtration of a power of a monomial mod ell")
    common(p)
    p.add_argument("--mod", type=int, required=True)
    p.add_argument("--power", type=int, default=1)
    p.set_defaults(func=cmd_filtration)

    p = sub.add_parser("tate-cycle", help="Tate cycle of a power of a monomial mod ell")
    common(p)
    p.add_argument("--mod", type=int, required=True)
    p.add_argument("--power", type=int, default=1)
    p.set_defaults(func=cmd_tate_cycle)

    def target_options(p):
        p.add_argument("expr", nargs="?", help="expression (omit with --frontend)")
        p.add_argument("--json", action="store_true", help="emit JSON")
        group = p.add_mutually_exclusive_group()
        group.add_argument("--invert", action="store_true",
                           help="search the inverse of a cusp monomial")
        group.add_argument("--frontend", choices=FRONTENDS,
                           help="use a shipped generating function")

    p = sub.add_parser("find", help="find and certify all Ramanujan congruences")
    target_options(p)
    p.add_argument("--threshold", type=int, help="check every prime up to this bound")
    p.add_argument("--extension", type=int, help="comparison coefficients past the fit")
    p.add_argument("--disproof-depth", dest="disproof_depth", type=int)
    p.add_argument("--empirical-depth", dest="empirical_depth", type=int)
    p.add_argument("--factor-budget", dest="factor_budget", type=int)
    p.add_argument("--jobs", type=int, help="worker processes")
    p.set_defaults(func=cmd_find)

    p = sub.add_parser("verify", help="test one congruence a(ell n + b) = 0 mod ell")
    target_options(p)
    p.add_argument("--mod", type=int, required=True)
    p.add_argument("--residue", type=int, required=True)
    p.add_argument("--depth", type=int, default=500, help="terms of the class to scan")
    p.add_argument("--certify", action="store_true", help="attempt a Sturm certificate")
    p.set_defaults(func=cmd_verify)
    return parser


def _hint(exc: Exception) -> str:
    if isinstance(exc, InsufficientPrecision) and exc.needed:
        return f" (hint: rerun with --terms {exc.needed} or more)"
    return ""


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        settings = load_config()
        return args.func(args, settings)
    except (CongruenceForgeError, ValueError, KeyError) as exc:
        message = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"error: {message}{_hint(exc)}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

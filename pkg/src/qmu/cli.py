"""Command-line surface: point evaluation, identity verification, tables.

Exit codes: 0 success; 2 argument/parse error; 3 pole or domain error;
4 divergent series or exhausted term budget; 5 failing verification case.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from . import modular, mufun, qhermite, qtransform
from .errors import BudgetExceeded, Divergent, DomainError, PoleHit, UnknownIdentity
from .idsuite import register_all, run
from .qcore import (
    EvalResult,
    ModularPoint,
    Truncation,
    qpoch,
    qpoch_inf,
    theta11,
    theta_q,
)
from .qhyper import phi_f, psi_f, q_appell_phi1, q_bessel_J2

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_POLE = 3
EXIT_DIVERGE = 4
EXIT_VERIFY_FAIL = 5

REPORT_SCHEMA_ID = "qmu-report/1"

#: JSON schema for the verify report (validated in the test suite).
REPORT_SCHEMA = {
    "type": "object",
    "required": ["schema", "run", "cases"],
    "properties": {
        "schema": {"const": REPORT_SCHEMA_ID},
        "run": {
            "type": "object",
            "required": ["seed", "samples", "tol"],
            "properties": {
                "seed": {"type": "integer"},
                "samples": {"type": "integer"},
                "tol": {"type": ["number", "null"]},
            },
        },
        "cases": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["name", "seed", "tol", "pass",
                             "max_rel_residual", "samples"],
                "properties": {
                    "name": {"type": "string"},
                    "seed": {"type": "integer"},
                    "tol": {"type": "number"},
                    "pass": {"type": "boolean"},
                    "max_rel_residual": {"type": "number"},
                    "rejections": {"type": "integer"},
                    "samples": {
                        "type": "array",
                        "items": {
                            "type": "object",
                            "required": ["inputs", "lhs", "rhs",
                                         "abs_residual", "rel_residual"],
                        },
                    },
                },
            },
        },
    },
}

_NUM = r"[+-]?(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?"
_COMPLEX_RE = re.compile(
    rf"^(?:(?P<re>{_NUM})(?P<im>[+-](?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?)[iI]"
    rf"|(?P<imonly>{_NUM})[iI]"
    rf"|(?P<reonly>{_NUM}))$"
)


def parse_complex(text: str) -> complex:
    """Parse the CLI complex literal grammar: 'a', 'bi', 'a+bi', 'a-bi'."""
    m = _COMPLEX_RE.match(text.strip())
    if not m:
        raise ValueError(f"not a complex literal: {text!r}")
    if m.group("reonly") is not None:
        return complex(float(m.group("reonly")), 0.0)
    if m.group("imonly") is not None:
        return complex(0.0, float(m.group("imonly")))
    return complex(float(m.group("re")), float(m.group("im")))


def _fmt_real(v: float) -> str:
    out = repr(float(v))
    if "e" in out or "E" in out:
        out = f"{v:.17f}"
    return out


def format_complex(z: complex) -> str:
    """Inverse of parse_complex: format(parse(s)) parses to the same value."""
    z = complex(z)
    if z.imag == 0.0:
        return _fmt_real(z.real)
    if z.real == 0.0:
        return _fmt_real(z.imag) + "i"
    sign = "+" if z.imag >= 0 else "-"
    return f"{_fmt_real(z.real)}{sign}{_fmt_real(abs(z.imag))}i"


def _complex_list(text: str) -> tuple:
    text = text.strip()
    if not text:
        return ()
    return tuple(parse_complex(part) for part in text.split(","))


# --------------------------------------------------------------------------
# eval dispatch
# --------------------------------------------------------------------------

def _wrap_mu(a, t):
    return mufun.mu_zwegers(a["u"], a["v"], ModularPoint(a["tau"]), t)


def _wrap_mu_alpha(a, t):
    return mufun.mu_alpha(a["u"], a["v"], a["alpha"], a["tau"], t)


def _wrap_qpoch(a, t):
    if a["n"] is None:
        return qpoch_inf(a["x"], a["q"], t)
    return qpoch(a["x"], a["q"], a["n"], t)


def _wrap_hermite(a, t):
    val = qhermite.hermite_cq(a["n"], qhermite.HermiteArg(a["w"], a["q"]))
    return EvalResult(val, 0.0, a["n"] + 1)


def _wrap_S(a, t):
    return qhermite.gen_S(a["r"], a["u"], a["v"], ModularPoint(a["tau"]), t,
                          method=a["method"])


def _wrap_f0(a, t):
    p = qtransform.HWParams(a["alpha"], ModularPoint(a["tau"]), a["lam"])
    return qtransform.f0_solution(a["x"], p, t)


def _wrap_g0(a, t):
    p = qtransform.HWParams(a["alpha"], ModularPoint(a["tau"]), a["lam"] or 1.0)
    return qtransform.g0_solution(a["x"], p, t)


def _wrap_nu_tilde(a, t):
    return modular.nu_tilde(a["u"], a["v"], a["k"], ModularPoint(a["tau"]), t)


# flag name -> parser
C = parse_complex
F = float
I = int  # noqa: E741

EVAL_FUNCTIONS = {
    "mu": ({"u": C, "v": C, "tau": C}, _wrap_mu),
    "mu_alpha": ({"u": C, "v": C, "alpha": C, "tau": C}, _wrap_mu_alpha),
    "theta11": ({"u": C, "tau": C},
                lambda a, t: theta11(a["u"], ModularPoint(a["tau"]), t)),
    "theta_q": ({"x": C, "q": C}, lambda a, t: theta_q(a["x"], a["q"], t)),
    "qpoch": ({"x": C, "q": C, ("n", None): I}, _wrap_qpoch),
    "phi": ({"upper": _complex_list, "lower": _complex_list, "q": C, "z": C},
            lambda a, t: phi_f(a["upper"], a["lower"], a["q"], a["z"], t)),
    "psi": ({"upper": _complex_list, "lower": _complex_list, "q": C, "z": C},
            lambda a, t: psi_f(a["upper"], a["lower"], a["q"], a["z"], t)),
    "appell_phi1": ({"a": C, "b1": C, "b2": C, "c": C, "q": C, "x": C, "y": C},
                    lambda a, t: q_appell_phi1(a["a"], a["b1"], a["b2"], a["c"],
                                               a["q"], a["x"], a["y"], t)),
    "bessel_j2": ({"nu": C, "x": C, "q": C},
                  lambda a, t: q_bessel_J2(a["nu"], a["x"], a["q"], t)),
    "hermite": ({"n": I, "w": C, "q": C}, _wrap_hermite),
    "g3": ({"x": C, "q": C}, lambda a, t: mufun.g3(a["x"], a["q"], t)),
    "mock_theta": ({"which": str, "q": C},
                   lambda a, t: mufun.mock_theta(a["which"], a["q"], t)),
    "S": ({"r": C, "u": C, "v": C, "tau": C, ("method", "direct"): str}, _wrap_S),
    "f0": ({"x": C, "alpha": C, "tau": C, "lam": C}, _wrap_f0),
    "g0": ({"x": C, "alpha": C, "tau": C, ("lam", None): C}, _wrap_g0),
    "R": ({"u": C, "tau": C},
          lambda a, t: modular.R_func(a["u"], ModularPoint(a["tau"]), t)),
    "mu_tilde": ({"u": C, "v": C, "tau": C},
                 lambda a, t: modular.mu_tilde(a["u"], a["v"],
                                               ModularPoint(a["tau"]), t)),
    "nu_tilde": ({"u": C, "v": C, "k": I, "tau": C}, _wrap_nu_tilde),
    "kronecker": ({"x": C, "y": C, "q": C},
                  lambda a, t: mufun.kronecker_k(a["x"], a["y"], a["q"], t)),
}


def _gauss_table_row(n: int):
    s, p = qhermite.gauss_sum_product(n)
    return EvalResult(s, abs(s - p), 2 * n + 1)


def _flag_items(spec: dict):
    for key, ktype in spec.items():
        if isinstance(key, tuple):
            yield key[0], key[1], ktype, False
        else:
            yield key, None, ktype, True


def _build_eval_parser(sub):
    p = sub.add_parser("eval", help="evaluate one function at a point")
    p.add_argument("function", choices=sorted(EVAL_FUNCTIONS))
    p.add_argument("--tol", type=float, default=None,
                   help="relative series tolerance (default 1e-12)")
    p.add_argument("--json", action="store_true", help="emit a JSON object")
    # flags of every function are accepted; requiredness checked at dispatch
    seen = set()
    for spec, _fn in EVAL_FUNCTIONS.values():
        for name, default, _type, _req in _flag_items(spec):
            if name not in seen:
                seen.add(name)
                p.add_argument(f"--{name}", type=str, default=None)
    return p


def _cmd_eval(args) -> int:
    spec, fn = EVAL_FUNCTIONS[args.function]
    trunc = Truncation(rel_tol=args.tol) if args.tol else Truncation()
    parsed = {}
    inputs = {}
    for name, default, typ, required in _flag_items(spec):
        raw = getattr(args, name, None)
        if raw is None:
            if required:
                print(f"eval {args.function}: missing --{name}", file=sys.stderr)
                return EXIT_PARSE
            parsed[name] = default
            continue
        try:
            parsed[name] = typ(raw)
        except (ValueError, TypeError) as exc:
            print(f"eval {args.function}: bad --{name}: {exc}", file=sys.stderr)
            return EXIT_PARSE
        inputs[name] = raw
    try:
        res = fn(parsed, trunc)
    except (PoleHit, DomainError) as exc:
        print(f"eval {args.function}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_POLE
    except (Divergent, BudgetExceeded) as exc:
        print(f"eval {args.function}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DIVERGE
    if args.json:
        print(json.dumps({
            "function": args.function,
            "inputs": inputs,
            "value": {"re": res.value.real, "im": res.value.imag},
            "err": res.err_estimate,
            "terms": res.terms_used,
        }, sort_keys=True))
    else:
        print(f"value = {format_complex(res.value)}")
        print(f"err_estimate = {res.err_estimate:.3e}")
        print(f"terms_used = {res.terms_used}")
    return EXIT_OK


# --------------------------------------------------------------------------
# verify
# --------------------------------------------------------------------------

def _cmd_verify(args) -> int:
    registry = register_all()
    names = registry.names() if args.suite == "all" else [args.suite]
    try:
        reports = run(registry, names, args.samples, args.seed, args.tol)
    except UnknownIdentity as exc:
        print(f"verify: unknown suite {exc}", file=sys.stderr)
        return EXIT_PARSE
    width = max(len(r.name) for r in reports)
    all_ok = True
    for r in reports:
        status = "PASS" if r.passed else "FAIL"
        note = " (expected-fail variant)" if r.expect_fail else ""
        all_ok &= r.passed
        print(f"{status}  {r.name:<{width}}  max_rel={r.max_rel_residual:.3e}"
              f"  tol={r.tol:.1e}  rejections={r.rejections}{note}")
    print(f"{len(reports)} cases, "
          f"{sum(1 for r in reports if r.passed)} passed, "
          f"{sum(1 for r in reports if not r.passed)} failed")
    if args.report:
        doc = {
            "schema": REPORT_SCHEMA_ID,
            "run": {"seed": args.seed, "samples": args.samples, "tol": args.tol},
            "cases": [r.to_json_dict() for r in reports],
        }
        with open(args.report, "w") as fh:
            json.dump(doc, fh, sort_keys=True, indent=1)
            fh.write("\n")
    return EXIT_OK if all_ok else EXIT_VERIFY_FAIL


# --------------------------------------------------------------------------
# table
# --------------------------------------------------------------------------

_INT_RANGE = re.compile(r"^(-?\d+)\.\.(-?\d+)$")
_FLOAT_RANGE = re.compile(rf"^({_NUM}):({_NUM}):({_NUM})$")


def _parse_range(text: str):
    m = _INT_RANGE.match(text)
    if m:
        lo, hi = int(m.group(1)), int(m.group(2))
        if hi < lo:
            raise ValueError(f"empty range {text!r}")
        return [int(v) for v in range(lo, hi + 1)]
    m = _FLOAT_RANGE.match(text)
    if m:
        lo, hi, step = (float(m.group(i)) for i in (1, 2, 3))
        if step <= 0 or hi < lo:
            raise ValueError(f"bad range {text!r}")
        out = []
        k = 0
        while True:
            v = lo + k * step
            if v > hi + 1e-12:
                break
            out.append(v)
            k += 1
        return out
    raise ValueError(f"not a range: {text!r}")


def _cmd_table(args) -> int:
    if args.function == "gauss_sum":
        spec = {"N": I}
        fn = lambda a, t: _gauss_table_row(a["N"])  # noqa: E731
    elif args.function in EVAL_FUNCTIONS:
        spec, fn = EVAL_FUNCTIONS[args.function]
    else:
        print(f"table: unknown function {args.function!r}", file=sys.stderr)
        return EXIT_PARSE
    trunc = Truncation()
    fixed = {}
    sweep_name = None
    sweep_values = None
    for name, default, typ, required in _flag_items(spec):
        raw = getattr(args, name, None)
        if raw is None:
            if required:
                print(f"table {args.function}: missing --{name}", file=sys.stderr)
                return EXIT_PARSE
            fixed[name] = default
            continue
        try:
            values = _parse_range(raw)
        except ValueError:
            values = None
        if values is not None:
            if sweep_name is not None:
                print("table: exactly one flag may be a range", file=sys.stderr)
                return EXIT_PARSE
            sweep_name, sweep_values = name, values
            continue
        try:
            fixed[name] = typ(raw)
        except (ValueError, TypeError) as exc:
            print(f"table {args.function}: bad --{name}: {exc}", file=sys.stderr)
            return EXIT_PARSE
    if sweep_name is None:
        print("table: one flag must be a range (n0..n1 or lo:hi:step)",
              file=sys.stderr)
        return EXIT_PARSE
    rows = []
    for v in sweep_values:
        params = dict(fixed)
        params[sweep_name] = v
        try:
            res = fn(params, trunc)
        except (PoleHit, DomainError) as exc:
            print(f"table {args.function}: {type(exc).__name__}: {exc}", file=sys.stderr)
            return EXIT_POLE
        except (Divergent, BudgetExceeded) as exc:
            print(f"table {args.function}: {type(exc).__name__}: {exc}", file=sys.stderr)
            return EXIT_DIVERGE
        rows.append((v, res))
    if args.format == "csv":
        print("param,re,im,err")
        for v, res in rows:
            print(f"{v},{res.value.real!r},{res.value.imag!r},{res.err_estimate!r}")
    else:
        print(json.dumps([
            {"param": v, "re": res.value.real, "im": res.value.imag,
             "err": res.err_estimate}
            for v, res in rows
        ], sort_keys=True))
    return EXIT_OK


# --------------------------------------------------------------------------
# entry point
# --------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="qmu",
        description="Evaluate the mu-function family and verify its identities.")
    sub = ap.add_subparsers(dest="command", required=True)
    _build_eval_parser(sub)

    v = sub.add_parser("verify", help="run identity suites and report residuals")
    v.add_argument("--suite", default="all",
                   help="case name or prefix, or 'all' (default)")
    v.add_argument("--samples", type=int, default=20)
    v.add_argument("--seed", type=int, default=42)
    v.add_argument("--tol", type=float, default=None,
                   help="override every case tolerance")
    v.add_argument("--report", default=None, help="write the JSON report here")

    t = sub.add_parser("table", help="sweep one parameter and print a table")
    t.add_argument("function", help="eval function name or gauss_sum")
    t.add_argument("--format", choices=("csv", "json"), default="csv")
    seen = {"format"}
    specs = list(EVAL_FUNCTIONS.values()) + [({"N": I}, None)]
    for spec, _fn in specs:
        for name, default, _type, _req in _flag_items(spec):
            if name not in seen:
                seen.add(name)
                t.add_argument(f"--{name}", type=str, default=None)
    return ap


def _merge_negative_values(argv: list) -> list:
    """Join '--flag' with a following value that begins with '-'.

    argparse would otherwise read '-0.1+0.02i' as an option string; merging
    to '--flag=-0.1+0.02i' keeps the documented flag grammar working.
    """
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        nxt = argv[i + 1] if i + 1 < len(argv) else None
        if (tok.startswith("--") and "=" not in tok and nxt is not None
                and nxt.startswith("-") and not nxt.startswith("--")
                and len(nxt) > 1 and (nxt[1].isdigit() or nxt[1] == ".")):
            out.append(f"{tok}={nxt}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def main(argv=None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    args = build_parser().parse_args(_merge_negative_values(list(argv)))
    if args.command == "eval":
        return _cmd_eval(args)
    if args.command == "verify":
        return _cmd_verify(args)
    return _cmd_table(args)


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

Every value crossing the boundary is exact: rationals travel as num/den
strings and big counts as decimal strings. Output is deterministic for
fixed flags. Plotting is deliberately not here; `detmult-plot` consumes
the sweep CSV instead.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from importlib import resources

from . import identities, staircase
from .counting import t_closed, t_oracle, u_closed, u_oracle
from .exactmath import Polynomial, binom, format_fraction, interpolate, parse_fraction
from .length import LengthQuery, length_closed, r_term, regular_length, s_term
from .multiplicity import (
    analyze,
    e_s_value,
    fit_length_polynomial,
    h_s_value,
    nonpolynomial_demo,
    normalizer,
)

OUTPUT_DIR_ENV = "DETMULT_OUTPUT_DIR"

_REQUIRED = object()

_DEFAULTS = {
    "length": {"m": _REQUIRED, "n": _REQUIRED, "s": _REQUIRED, "q": _REQUIRED, "route": "closed"},
    "tu": {"m": _REQUIRED, "n": _REQUIRED, "r": _REQUIRED, "q": _REQUIRED},
    "es": {"m": _REQUIRED, "n": _REQUIRED, "s": _REQUIRED, "p": _REQUIRED},
    "fit": {"m": _REQUIRED, "n": _REQUIRED, "s": _REQUIRED, "p": _REQUIRED},
    "reduce": {"matrix": None},
    "verify-identities": {"max": 8},
    "demo-nonpoly": {"p": _REQUIRED, "s": _REQUIRED, "emax": 10, "format": "json"},
    "reproduce-examples": {"golden": None},
    "sweep": {
        "m": _REQUIRED,
        "n": _REQUIRED,
        "s": _REQUIRED,
        "q": None,
        "p": None,
        "emin": None,
        "emax": None,
        "route": "closed",
        "format": "json",
        "out": None,
    },
}


class RouteDisagreement(Exception):
    """Raised when --route all finds the three length routes disagreeing."""

    def __init__(self, cell, values):
        self.cell = cell
        self.values = values
        super().__init__(f"length routes disagree at {cell}")


def _print_error(kind, message, **extra):
    payload = {"error": {"type": kind, "message": message, **extra}}
    print(json.dumps(payload), file=sys.stderr)


def _resolve_output_path(path):
    base = os.environ.get(OUTPUT_DIR_ENV)
    if base and not os.path.isabs(path):
        return os.path.join(base, path)
    return path


def _emit(text, out_path):
    if out_path is None:
        print(text)
    else:
        resolved = _resolve_output_path(out_path)
        with open(resolved, "w", encoding="utf-8") as fh:
            fh.write(text)
        print(resolved)


def _apply_config(args, command):
    defaults = _DEFAULTS[command]
    cfg = {}
    if getattr(args, "config", None):
        with open(args.config, encoding="utf-8") as fh:
            cfg = json.load(fh)
        if not isinstance(cfg, dict):
            raise ValueError("config file must contain a JSON object")
    for dest, fallback in defaults.items():
        if getattr(args, dest, None) is None:
            value = cfg.get(dest, fallback)
            if value is _REQUIRED:
                raise ValueError(f"missing required option --{dest}")
            setattr(args, dest, value)


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def _cmd_length(args):
    s = parse_fraction(str(args.s))
    query = LengthQuery(int(args.m), int(args.n), s, int(args.q))
    route = args.route
    if route == "all":
        values = {name: query.evaluate(name) for name in ("closed", "tu", "oracle")}
        if len(set(values.values())) != 1:
            raise RouteDisagreement(
                {"m": query.m, "n": query.n, "s": format_fraction(s), "q": query.q},
                {name: str(v) for name, v in values.items()},
            )
        value = values["closed"]
    else:
        value = query.evaluate(route)
    payload = {
        "m": query.m,
        "n": query.n,
        "s": format_fraction(s),
        "q": query.q,
        "r": query.r,
        "length": str(value),
        "route": route,
    }
    print(json.dumps(payload))
    return 0


def _cmd_tu(args):
    m, n, r, q = int(args.m), int(args.n), int(args.r), int(args.q)
    payload = {
        "m": m,
        "n": n,
        "r": r,
        "q": q,
        "T": str(t_closed(m, n, r, q)),
        "U": str(u_closed(m, n, r, q)),
        "T_oracle": str(t_oracle(m, n, r, q)),
        "U_oracle": str(u_oracle(m, n, r, q)),
    }
    print(json.dumps(payload))
    return 0


def _cmd_es(args):
    s = parse_fraction(str(args.s))
    result = analyze(int(args.m), int(args.n), s, int(args.p))
    payload = {
        "m": int(args.m),
        "n": int(args.n),
        "s": format_fraction(result.s),
        "p": int(args.p),
        "fitted_polynomial": result.fitted_polynomial.to_json_dict(),
        "h_s": format_fraction(result.h_s),
        "normalizer": format_fraction(result.normalizer),
        "e_s": format_fraction(result.e_s),
    }
    print(json.dumps(payload))
    return 0


def _cmd_fit(args):
    s = parse_fraction(str(args.s))
    poly = fit_length_polynomial(int(args.m), int(args.n), s, int(args.p))
    payload = {
        "m": int(args.m),
        "n": int(args.n),
        "s": format_fraction(s),
        "p": int(args.p),
        "polynomial": poly.to_json_dict(),
        "display": str(poly),
    }
    print(json.dumps(payload))
    return 0


def _cmd_reduce(args):
    raw = args.matrix if args.matrix else sys.stdin.read()
    rows = json.loads(raw)
    reduced = staircase.reduce_to_staircase(rows)
    prof = staircase.profile(reduced)
    payload = {
        "input": [list(map(int, row)) for row in rows],
        "staircase": [list(row) for row in reduced],
        "profile": {"rows": list(prof.rows), "cols": list(prof.cols)},
    }
    print(json.dumps(payload))
    return 0


def identity_report(max_value: int) -> dict:
    """Sweep every identity up to `max_value` and collect witnesses."""
    report = {"max": max_value, "identities": [], "all_pass": True}

    def add(name, sweep_range, checked, failures, **extra):
        entry = {
            "name": name,
            "range": sweep_range,
            "checked": checked,
            "pass": not failures,
            "failures": failures,
            **extra,
        }
        report["identities"].append(entry)
        if failures:
            report["all_pass"] = False

    top = max_value + 1

    failures = []
    for a in range(top):
        for b in range(top):
            for c in range(top):
                if identities.product_identity_lhs(a, b, c) != binom(c, a) * binom(c, b):
                    failures.append([a, b, c])
    add("product-of-binomials", f"a,b,c <= {max_value}", top ** 3, failures)

    failures = []
    for a in range(top):
        for b in range(top):
            for c in range(top):
                if not identities.hockeystick_corollary_check(a, b, c):
                    failures.append([a, b, c])
    add("hockeystick-corollary", f"a,b <= {max_value}, c <= {max_value}", top ** 3, failures)

    general_cap = min(max_value, 6)
    failures = []
    for t in range(general_cap + 1):
        for u in range(general_cap + 1):
            for v in range(general_cap + 1):
                for w in range(general_cap + 1):
                    for c in range(general_cap + 1):
                        if not identities.general_corollary_check(t, u, v, w, c):
                            failures.append([t, u, v, w, c])
    add(
        "general-corollary",
        f"t,u,v,w,c <= {general_cap} (capped at 6)",
        (general_cap + 1) ** 5,
        failures,
    )

    failures = []
    checked = skipped = 0
    for b in range(top):
        for c in range(top):
            result = identities.check_wz_certificate((0, max_value), (0, max_value), b, c)
            skipped += len(result.skipped)
            checked += top * top - len(result.skipped)
            failures.extend([w, a, b, c] for w, a in result.failures)
    add(
        "wz-certificate",
        f"w,a in [0, {max_value}]; b,c <= {max_value}",
        checked,
        failures,
        skipped=skipped,
    )

    failures = []
    checked = 0
    for a in range(4):
        for b in range(4):
            for c in range(5):
                for chain in identities.iter_chains(a, b, c):
                    checked += 1
                    code = identities.encode_chain(chain)
                    if identities.decode_chain(code, a, b, c) != chain:
                        failures.append(str(chain))
    add("chain-bijection-roundtrip", "a,b <= 3, c <= 4 (fixed)", checked, failures)

    return report


def _cmd_verify_identities(args):
    report = identity_report(int(args.max))
    print(json.dumps(report, indent=2))
    return 0 if report["all_pass"] else 1


def _cmd_demo_nonpoly(args):
    s = parse_fraction(str(args.s))
    report = nonpolynomial_demo(int(args.p), s, int(args.emax))
    if args.format == "csv":
        buf = io.StringIO()
        fields = ["e", "q", "r", "length"]
        if report["branch_formulas_checked"]:
            fields += ["branch", "formula", "match"]
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(fields)
        for row in report["rows"]:
            writer.writerow([row[f] for f in fields])
        print(buf.getvalue(), end="")
    else:
        payload = dict(report)
        payload["s"] = format_fraction(report["s"])
        payload["rows"] = [
            {**row, "length": str(row["length"])} for row in report["rows"]
        ]
        print(json.dumps(payload, indent=2))
    if report["branch_formulas_checked"] and not report["all_match"]:
        return 1
    return 0


# ---------------------------------------------------------------------------
# golden-file reproduction
# ---------------------------------------------------------------------------

def load_golden(path=None) -> dict:
    if path:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    text = resources.files("detmult").joinpath("data/golden_examples.json").read_text("utf-8")
    return json.loads(text)


def _compute_golden_case(case):
    kind = case["kind"]
    if kind == "binom":
        m, n = case["args"]
        return str(binom(m, n))
    if kind == "poly_eval":
        poly = Polynomial.from_json_dict({"coeffs": case["coeffs"]})
        return format_fraction(poly(case["q"]))
    if kind == "interpolate":
        points = [(x, parse_fraction(y)) for x, y in case["points"]]
        return interpolate(points).to_json_dict()
    if kind == "encode_chain":
        chain = identities.ColoredChain.from_string(case["chain"], case["bound"])
        code = identities.encode_chain(chain)
        return {
            "w": code.w,
            "A": sorted(code.A),
            "B": sorted(code.B),
            "C": sorted(code.C),
        }
    if kind == "decode_chain":
        code = identities.ChainCode(
            case["w"], frozenset(case["A"]), frozenset(case["B"]), frozenset(case["C"])
        )
        return str(identities.decode_chain(code, case["a"], case["b"], case["c"]))
    if kind == "reduce_matrix":
        return [list(row) for row in staircase.reduce_to_staircase(case["matrix"])]
    if kind == "basis_count":
        m, n, r, q = case["args"]
        return str(staircase.count_staircase_basis(m, n, r, q))
    if kind == "r_term":
        m, n, sq = case["args"]
        return str(r_term(m, n, sq))
    if kind == "s_term":
        m, n, sq, q = case["args"]
        return str(s_term(m, n, sq, q))
    if kind == "length_closed":
        return str(
            length_closed(case["m"], case["n"], parse_fraction(case["s"]), case["q"])
        )
    if kind == "regular_length":
        d, r, q = case["args"]
        return str(regular_length(d, r, q))
    if kind == "fit_polynomial":
        poly = fit_length_polynomial(case["m"], case["n"], parse_fraction(case["s"]), case["p"])
        return poly.to_json_dict()
    if kind == "h_s":
        return format_fraction(
            h_s_value(case["m"], case["n"], parse_fraction(case["s"]), case["p"])
        )
    if kind == "e_s":
        return format_fraction(
            e_s_value(case["m"], case["n"], parse_fraction(case["s"]), case["p"])
        )
    if kind == "normalizer":
        return format_fraction(normalizer(parse_fraction(case["s"]), case["d"]))
    if kind == "nonpoly_length":
        p = case["p"]
        s = parse_fraction(case["s"])
        q = p ** case["e"]
        return str(regular_length(2, math.ceil(s * q), q))
    if kind == "nonpoly_branches":
        report = nonpolynomial_demo(case["p"], parse_fraction(case["s"]), case["e_max"])
        return bool(report["all_match"])
    raise ValueError(f"unknown golden case kind {kind!r}")


def _cmd_reproduce_examples(args):
    golden = load_golden(args.golden)
    results = []
    failed = 0
    for case in golden["cases"]:
        got = _compute_golden_case(case)
        ok = got == case["expected"]
        entry = {"id": case["id"], "ok": ok}
        if not ok:
            entry["expected"] = case["expected"]
            entry["got"] = got
            failed += 1
        results.append(entry)
    payload = {
        "golden_version": golden["version"],
        "total": len(results),
        "failed": failed,
        "cases": results,
    }
    print(json.dumps(payload, indent=2))
    return 1 if failed else 0


# ---------------------------------------------------------------------------
# sweeps
# ---------------------------------------------------------------------------

def _parse_span(text):
    """'2' or '1:3' (inclusive)."""
    text = str(text)
    if ":" in text:
        lo, hi = text.split(":", 1)
        lo, hi = int(lo), int(hi)
        if hi < lo:
            raise ValueError(f"empty range {text!r}")
        return range(lo, hi + 1)
    v = int(text)
    return range(v, v + 1)


def sweep_rows(config) -> list:
    """Evaluate the sweep grid in input order; one row per (cell, route)."""
    routes = ("closed", "tu", "oracle") if config["route"] == "all" else (config["route"],)
    rows = []
    for m in config["m"]:
        for n in config["n"]:
            for s in config["s"]:
                for q in config["q"]:
                    query = LengthQuery(m, n, s, q)
                    values = {name: query.evaluate(name) for name in routes}
                    if len(set(values.values())) != 1:
                        raise RouteDisagreement(
                            {"m": m, "n": n, "s": format_fraction(s), "q": q},
                            {name: str(v) for name, v in values.items()},
                        )
                    for name in routes:
                        rows.append(
                            {
                                "m": m,
                                "n": n,
                                "s": format_fraction(s),
                                "q": q,
                                "r": query.r,
                                "route": name,
                                "length": str(values[name]),
                            }
                        )
    return rows


SWEEP_FIELDS = ["m", "n", "s", "q", "r", "route", "length"]


def _cmd_sweep(args):
    if args.q is not None and args.p is not None:
        raise ValueError("give either --q or --p with --emin/--emax, not both")
    if args.q is not None:
        qs = [int(x) for x in str(args.q).split(",")]
    elif args.p is not None:
        if args.emin is None or args.emax is None:
            raise ValueError("--p requires --emin and --emax")
        qs = [int(args.p) ** e for e in range(int(args.emin), int(args.emax) + 1)]
    else:
        raise ValueError("missing required option --q (or --p with --emin/--emax)")
    config = {
        "m": _parse_span(args.m),
        "n": _parse_span(args.n),
        "s": [parse_fraction(x) for x in str(args.s).split(",")],
        "q": qs,
        "route": args.route,
    }
    rows = sweep_rows(config)
    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=SWEEP_FIELDS, lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
        text = buf.getvalue().rstrip("\n")
    else:
        text = json.dumps(rows, indent=2)
    _emit(text, args.out)
    return 0


# ---------------------------------------------------------------------------
# parser and entry point
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="detmult",
        description="Exact lengths and s-multiplicities of 2x2 determinantal rings.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_command(name, handler, help_text):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(handler=handler, command=name)
        p.add_argument("--config", help="JSON file supplying defaults for any flag")
        return p

    p = add_command("length", _cmd_length, "one length evaluation")
    p.add_argument("--m", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--s", help="exact rational NUM/DEN")
    p.add_argument("--q", type=int)
    p.add_argument("--route", choices=["closed", "tu", "oracle", "all"])

    p = add_command("tu", _cmd_tu, "T and U counts with their oracles")
    p.add_argument("--m", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--q", type=int)

    p = add_command("es", _cmd_es, "s-multiplicity report for one s")
    p.add_argument("--m", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--s", help="exact rational NUM/DEN")
    p.add_argument("--p", type=int)

    p = add_command("fit", _cmd_fit, "recover the length polynomial in q")
    p.add_argument("--m", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--s", help="exact rational NUM/DEN")
    p.add_argument("--p", type=int)

    p = add_command("reduce", _cmd_reduce, "staircase normal form of an exponent matrix")
    p.add_argument("--matrix", help="JSON rows, e.g. [[1,0],[0,1]]; stdin if omitted")

    p = add_command("verify-identities", _cmd_verify_identities, "sweep the binomial identities")
    p.add_argument("--max", type=int)

    p = add_command("demo-nonpoly", _cmd_demo_nonpoly, "non-polynomial length demonstration")
    p.add_argument("--p", type=int)
    p.add_argument("--s", help="exact rational NUM/DEN")
    p.add_argument("--emax", type=int)
    p.add_argument("--format", choices=["json", "csv"])

    p = add_command("reproduce-examples", _cmd_reproduce_examples, "recompute the golden worked examples")
    p.add_argument("--golden", help="alternate golden JSON file")

    p = add_command("sweep", _cmd_sweep, "evaluate a grid of length queries")
    p.add_argument("--m", help="value or inclusive range lo:hi")
    p.add_argument("--n", help="value or inclusive range lo:hi")
    p.add_argument("--s", help="comma list of NUM/DEN rationals")
    p.add_argument("--q", help="comma list of integers")
    p.add_argument("--p", type=int, help="prime; build q = p^e over --emin..--emax")
    p.add_argument("--emin", type=int)
    p.add_argument("--emax", type=int)
    p.add_argument("--route", choices=["closed", "tu", "oracle", "all"])
    p.add_argument("--format", choices=["json", "csv"])
    p.add_argument("--out", help=f"output file; relative paths honor ${OUTPUT_DIR_ENV}")

    return parser


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _apply_config(args, args.command)
        return args.handler(args)
    except RouteDisagreement as exc:
        _print_error("RouteDisagreement", str(exc), cell=exc.cell, routes=exc.values)
        return 1
    except (ValueError, ArithmeticError, KeyError, OSError) as exc:
        _print_error(type(exc).__name__, str(exc))
        return 1


def main():
    sys.exit(run())

"""Command-line front end: ``apnforge <subcommand> [function options]``."""

from __future__ import annotations

import argparse
import csv
import hashlib
import json
import os
import sys
import time
from dataclasses import asdict, dataclass

import numpy as np

from . import _kernels
from .catalog import Family, FamilySpec, build
from .exclude import FULL_TABLE_MAX_N, ON_GRAPH, exclude_spectrum_fast, oracle_spectrum
from .field import MAX_N, FieldSpec
from .spectral import is_ab, plateau_profile, walsh_spectrum
from .theory.bounds import bound_report
from .theory.experiments import EXPERIMENTS
from .theory.kloosterman import kloosterman_table
from .vbf import algebraic_degree, is_3to1, is_apn, is_quadratic

SCHEMA = 1
DEFAULT_MAX_N = 13
ORACLE_MAX_N = 8

EXIT_USAGE = 2
EXIT_INVARIANT = 3


class UsageError(Exception):
    pass


@dataclass
class AnalysisReport:
    function: dict
    flags: dict
    spectrum: dict | None = None
    exclude: dict | None = None
    bounds: list | None = None
    timings: dict | None = None
    schema: int = SCHEMA

    def check_flags(self):
        f = self.flags
        if f["ab"] and not (f["apn"] and f["plateaued"]):
            raise AssertionError("AB function reported as not APN or not plateaued")
        if f["quadratic"] and f["plateaued"] is False:
            raise AssertionError("quadratic function reported as not plateaued")

    def to_json(self) -> str:
        d = asdict(self)
        if d["timings"] is None:
            del d["timings"]
        return json.dumps(d, indent=2, sort_keys=True)


# ---------------------------------------------------------------- helpers


def max_n() -> int:
    raw = os.environ.get("APNFORGE_MAX_N")
    if raw is None:
        return DEFAULT_MAX_N
    try:
        val = int(raw)
    except ValueError:
        raise UsageError(f"APNFORGE_MAX_N must be an integer, got {raw!r}") from None
    return max(2, min(val, MAX_N))


def _spec_from_args(args) -> FamilySpec:
    modulus = int(args.modulus, 16) if args.modulus else None
    if args.input:
        return FamilySpec(Family.FILE, path=args.input, modulus=modulus)
    if args.monomial_d is not None:
        fam, d = Family.MONOMIAL, args.monomial_d
    elif args.family is None:
        raise UsageError("choose a function with --family, --monomial-d or --input")
    else:
        fam, d = Family(args.family), args.d
    n = 6 if fam is Family.BLEP and args.n is None else args.n
    if n is None:
        raise UsageError("--n is required for this family")
    return FamilySpec(fam, n, k=args.k, t=args.t, d=d, modulus=modulus)


def load_function(args):
    spec = _spec_from_args(args)
    if spec.n is not None and spec.n > max_n():
        raise UsageError(f"n={spec.n} exceeds the size guard {max_n()} (raise it with APNFORGE_MAX_N, at most {MAX_N})")
    F = build(spec)
    if F.n > max_n():
        raise UsageError(f"n={F.n} exceeds the size guard {max_n()} (raise it with APNFORGE_MAX_N, at most {MAX_N})")
    return spec, F


def _apply_workers(args):
    if getattr(args, "serial", False):
        _kernels.set_workers(1)
    elif getattr(args, "workers", None):
        _kernels.set_workers(args.workers)


def _histogram_only(args, F) -> bool:
    return bool(getattr(args, "histogram_only", False)) or F.n > FULL_TABLE_MAX_N


def _identity(spec, F) -> dict:
    digest = hashlib.sha256(np.ascontiguousarray(F.table, dtype="<i8").tobytes()).hexdigest()
    return {"label": spec.label(), "n": F.n, "sha256": digest}


# ---------------------------------------------------------------- subcommands


def analyze(spec, F, histogram_only=False, timings=False) -> AnalysisReport:
    clock = {}
    t0 = time.perf_counter()
    apn = is_apn(F)
    flags = {"apn": apn, "ab": False, "plateaued": None, "quadratic": is_quadratic(F),
             "three_to_one": is_3to1(F), "power": F.exponent is not None,
             "degree": algebraic_degree(F)}
    spectrum = None
    if F.n <= FULL_TABLE_MAX_N:
        ws = walsh_spectrum(F)
        prof = plateau_profile(ws)
        flags["ab"] = is_ab(ws)
        flags["plateaued"] = prof.is_plateaued
        spectrum = {"linearity": ws.linearity, "nonlinearity": ws.nonlinearity,
                    "bent_components": len(prof.bent_components)}
    clock["classify"] = time.perf_counter() - t0
    exclude = bounds = None
    if apn:
        t1 = time.perf_counter()
        ex = exclude_spectrum_fast(F, histogram_only=histogram_only)
        exclude = {"e_min": ex.e_min, "e_max": ex.e_max,
                   "histogram": {str(k): v for k, v in ex.histogram.items()}}
        clock["exclude"] = time.perf_counter() - t1
        t2 = time.perf_counter()
        bounds = bound_report(F, exclude=ex).as_dicts()
        clock["bounds"] = time.perf_counter() - t2
    report = AnalysisReport(_identity(spec, F), flags, spectrum, exclude, bounds,
                            {k: round(v, 4) for k, v in clock.items()} if timings else None)
    report.check_flags()
    return report


def _print_report(r: AnalysisReport, out):
    out.write(f"function: {r.function['label']}  (n={r.function['n']})\n")
    for k, v in r.flags.items():
        out.write(f"  {k}: {v}\n")
    if r.spectrum:
        for k, v in r.spectrum.items():
            out.write(f"  {k}: {v}\n")
    if r.exclude:
        out.write(f"  e_min: {r.exclude['e_min']}\n")
        out.write("  histogram: " + ", ".join(f"{k}:{v}" for k, v in r.exclude["histogram"].items()) + "\n")
    if r.bounds:
        _print_bounds(r.bounds, out, indent="  ")
    if r.timings:
        out.write("  timings: " + ", ".join(f"{k}={v}s" for k, v in r.timings.items()) + "\n")


def _print_bounds(rows, out, indent=""):
    out.write(f"{indent}{'family':<18} {'formula':>8} {'exact':>8}  source\n")
    for row in rows:
        fv = "-" if row["formula_value"] is None else str(row["formula_value"])
        ev = "-" if row["exact_value"] is None else str(row["exact_value"])
        out.write(f"{indent}{row['family']:<18} {fv:>8} {ev:>8}  {row['source']}\n")


def cmd_analyze(args, out):
    spec, F = load_function(args)
    rep = analyze(spec, F, histogram_only=_histogram_only(args, F), timings=args.timings)
    if args.json:
        out.write(rep.to_json() + "\n")
    else:
        _print_report(rep, out)


def _oracle_guard(F):
    if F.n > ORACLE_MAX_N:
        raise UsageError(f"oracle paths are limited to n <= {ORACLE_MAX_N}, got n={F.n}")


def cmd_mults(args, out):
    spec, F = load_function(args)
    if not is_apn(F):
        raise UsageError("function is not APN, so its graph is not a Sidon set")
    if args.oracle:
        _oracle_guard(F)
        ex = oracle_spectrum(F)
    else:
        ex = exclude_spectrum_fast(F, histogram_only=_histogram_only(args, F) and not args.dump)
    w = csv.writer(out, lineterminator="\n")
    if args.dump:
        w.writerow(["a", "b", "mult"])
        for a in range(F.size):
            for b in range(F.size):
                m = int(ex.mult[a, b])
                if m != ON_GRAPH:
                    w.writerow([a, b, m])
        return
    w.writerow(["multiplicity", "count"])
    for k, v in ex.histogram.items():
        w.writerow([k, v])


def cmd_bound(args, out):
    spec, F = load_function(args)
    if not is_apn(F):
        raise UsageError("distance bounds need an APN function")
    rep = bound_report(F, histogram_only=_histogram_only(args, F))
    if args.json:
        out.write(json.dumps({"schema": SCHEMA, "function": _identity(spec, F), "best": rep.best,
                              "rows": rep.as_dicts()}, indent=2, sort_keys=True) + "\n")
    else:
        out.write(f"function: {spec.label()}\n")
        _print_bounds(rep.as_dicts(), out)
        out.write(f"best: {rep.best}\n")


def cmd_kloosterman(args, out):
    if args.n is None:
        raise UsageError("--n is required")
    if args.n > max_n():
        raise UsageError(f"n={args.n} exceeds the size guard {max_n()}")
    fs = FieldSpec.default(args.n, int(args.modulus, 16) if args.modulus else None)
    table = kloosterman_table(fs)
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["a", "K"])
    for a, k in enumerate(table.values.tolist()):
        w.writerow([a, k])


def cmd_compare_oracle(args, out):
    spec, F = load_function(args)
    _oracle_guard(F)
    if not is_apn(F):
        raise UsageError("function is not APN, so its graph is not a Sidon set")
    fast = exclude_spectrum_fast(F)
    slow = oracle_spectrum(F)
    bad = int(np.count_nonzero(fast.mult != slow.mult))
    if bad:
        out.write(f"fail: {bad} of {F.size * F.size} points differ\n")
        return 1
    out.write(f"pass: {F.size * (F.size - 1)} off-graph points agree\n")
    return 0


def cmd_experiment(args, out):
    ns = [int(x) for x in args.ns.split(",")]
    too_big = [n for n in ns if n > max_n()]
    if too_big:
        raise UsageError(f"n={too_big[0]} exceeds the size guard {max_n()}")
    rows = EXPERIMENTS[args.name](ns)
    if args.json:
        out.write(json.dumps({"schema": SCHEMA, "experiment": args.name, "rows": rows}, indent=2, sort_keys=True) + "\n")
        return
    for row in rows:
        out.write("  ".join(f"{k}={v}" for k, v in row.items()) + "\n")


def cmd_spectrum(args, out):
    spec, F = load_function(args)
    if F.n > FULL_TABLE_MAX_N:
        raise UsageError(f"spectrum dump is limited to n <= {FULL_TABLE_MAX_N}")
    W = walsh_spectrum(F).values
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["u", "v", "W"])
    us, vs = np.nonzero(W)
    for u, v in zip(us.tolist(), vs.tolist()):
        w.writerow([u, v, int(W[u, v])])


# ---------------------------------------------------------------- parser


def _function_options(p):
    g = p.add_argument_group("function")
    g.add_argument("--family", choices=[f.value for f in Family if f is not Family.FILE])
    g.add_argument("--n", type=int)
    g.add_argument("--k", type=int)
    g.add_argument("--t", type=int)
    g.add_argument("--d", type=int)
    g.add_argument("--monomial-d", type=int, dest="monomial_d")
    g.add_argument("--input", help="truth-table or polynomial file")
    g.add_argument("--modulus", help="field modulus as a hex bitmask, e.g. 0x43")


def _run_options(p):
    p.add_argument("--workers", type=int, help="worker threads (default: all cores)")
    p.add_argument("--serial", action="store_true", help="single worker")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="apnforge", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="classification, exclude summary and bounds")
    _function_options(p)
    _run_options(p)
    p.add_argument("--histogram-only", action="store_true")
    p.add_argument("--json", action="store_true")
    p.add_argument("--timings", action="store_true", help="include wall-clock timings (output no longer reproducible)")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("mults", help="exclude-multiplicity histogram as CSV")
    _function_options(p)
    _run_options(p)
    p.add_argument("--oracle", action="store_true", help=f"brute force (n <= {ORACLE_MAX_N})")
    p.add_argument("--dump", action="store_true", help="every off-graph point as a,b,mult")
    p.add_argument("--histogram-only", action="store_true")
    p.set_defaults(func=cmd_mults)

    p = sub.add_parser("bound", help="distance lower bounds")
    _function_options(p)
    _run_options(p)
    p.add_argument("--histogram-only", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("kloosterman", help="Kloosterman sums K_n(a) as CSV (odd n)")
    p.add_argument("--n", type=int)
    p.add_argument("--modulus")
    p.set_defaults(func=cmd_kloosterman)

    p = sub.add_parser("compare-oracle", aliases=["compare_oracle"], help="fast spectrum against brute force")
    _function_options(p)
    _run_options(p)
    p.set_defaults(func=cmd_compare_oracle)

    p = sub.add_parser("experiment", help="open-question scans over the catalog")
    p.add_argument("name", choices=sorted(EXPERIMENTS))
    p.add_argument("--ns", default="4,6,8", help="comma-separated dimensions")
    p.add_argument("--json", action="store_true")
    _run_options(p)
    p.set_defaults(func=cmd_experiment)

    p = sub.add_parser("spectrum", help="Walsh spectrum output")
    p.add_argument("action", choices=["dump"])
    _function_options(p)
    _run_options(p)
    p.set_defaults(func=cmd_spectrum)
    return parser


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        _apply_workers(args)
        rc = args.func(args, out)
    except (UsageError, ValueError) as exc:
        sys.stderr.write(f"apnforge: error: {exc}\n")
        return EXIT_USAGE
    except (ArithmeticError, AssertionError) as exc:
        sys.stderr.write(f"apnforge: invariant violated: {exc}\n")
        return EXIT_INVARIANT
    return rc or 0


if __name__ == "__main__":
    sys.exit(main())

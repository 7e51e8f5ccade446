"""Command-line entry point.

    gradedred compute --input inst.json --what D,d,dim,r,reg,rho [--power n]
    gradedred series  --input inst.json --quantities r,D [--n-max 10] [--out f.csv]
    gradedred verify  --suite basic|main|grf|koszul|all
    gradedred oracle  --input inst.json [--power n]

Exit codes: 0 success, 2 inconclusive or failed check, 64 usage, 65 data format.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

from . import module as gm
from .asymptotics import QUANTITIES, SeriesReport, compute_series, detect_linearity, reference_slope
from .config import RunConfig
from .errors import AnnihilatedError, InputError, NotAReductionError, ZeroModuleError
from .instance import DataFormatError, InstanceFile, load
from .koszul import betti_table, regularity
from .reduction import generic_reduction_number, rho as rho_of, rho_search
from . import oracle
from .suites import SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_DATA = 0, 2, 64, 65

CSV_HEADER = "n,quantity,value,rho,intercept,status"
COMPUTE_WHAT = ("D", "d", "dim", "r", "reg", "rho", "betti")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


def _csv_list(allowed):
    def parse(text: str) -> list[str]:
        items = [t.strip() for t in text.split(",") if t.strip()]
        bad = [t for t in items if t not in allowed]
        if bad or not items:
            raise argparse.ArgumentTypeError(f"expected a comma list from {','.join(allowed)}")
        return items
    return parse


def _window(text: str) -> tuple[int, int]:
    try:
        lo, hi = (int(x) for x in text.split(":"))
    except ValueError:
        raise argparse.ArgumentTypeError("expected LO:HI") from None
    return lo, hi


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="gradedred", description="Graded invariants of monomial modules.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, needs_input=True):
        if needs_input:
            p.add_argument("--input", required=True, help="instance JSON file")
        p.add_argument("--seed", type=int, default=RunConfig.seed)
        p.add_argument("--trials", type=int, default=RunConfig.trials)
        p.add_argument("--n-max", type=int, default=RunConfig.n_max)
        p.add_argument("--n-cap", type=int, default=RunConfig.n_cap)
        p.add_argument("--k-max", type=int, default=RunConfig.k_max)
        p.add_argument("--window", type=int, default=RunConfig.window)
        p.add_argument("--degree-window", type=_window, default=None, metavar="LO:HI")
        p.add_argument("--out", help="write output here instead of stdout")

    p = sub.add_parser("compute", help="invariants of I^n M for one n")
    common(p)
    p.add_argument("--what", type=_csv_list(COMPUTE_WHAT), default=["D", "d", "dim", "r", "reg", "rho"])
    p.add_argument("--power", type=int, default=0, help="compute on I^power M (default 0: M)")

    p = sub.add_parser("series", help="CSV series over n = 1..n-max")
    common(p)
    p.add_argument("--quantities", type=_csv_list(QUANTITIES), default=["r", "D"])

    p = sub.add_parser("verify", help="run a property suite")
    common(p, needs_input=False)
    p.add_argument("--suite", choices=SUITES, default="all")

    p = sub.add_parser("oracle", help="brute-force recomputation of r, D, dim")
    common(p)
    p.add_argument("--power", type=int, default=0)
    return parser


def _config(args) -> RunConfig:
    try:
        return RunConfig(seed=args.seed, trials=args.trials, n_max=args.n_max, n_cap=args.n_cap,
                         k_max=args.k_max, window=args.window, degree_window=args.degree_window)
    except InputError as exc:
        raise UsageError(str(exc)) from exc


def _json_value(v):
    if isinstance(v, float) and math.isinf(v):
        return "-inf" if v < 0 else "inf"
    return v


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="ascii", newline="\n")
    else:
        sys.stdout.write(text)


def run_compute(inst: InstanceFile, config: RunConfig, what: list[str], power: int = 0) -> tuple[dict, int]:
    if power < 0:
        raise UsageError("--power must be non-negative")
    M = gm.ideal_power_module(inst.ideal, power, inst.module)
    results, errors = {}, {}
    for q in what:
        try:
            if q == "D":
                results[q] = gm.largest_gen_degree(M)
            elif q == "d":
                results[q] = gm.least_degree(M)
            elif q == "dim":
                results[q] = _json_value(gm.krull_dim(M))
            elif q == "r":
                rep = generic_reduction_number(M, config.trials, config.seed, config.n_cap)
                results[q] = rep.value
                results["r_report"] = rep.to_json()
            elif q == "reg":
                results[q] = regularity(M)
            elif q == "betti":
                results[q] = betti_table(M).to_json()
            elif q == "rho":
                if inst.ideal.is_zero():
                    raise InputError("rho needs a nonzero ideal")
                found = rho_search(inst.ideal, inst.module, config.k_max)
                results[q] = found.value
                results["rho_report"] = found.to_json()
                if found.rejected_degrees:
                    print(f"warning: rho rejections at degrees {found.rejected_degrees} mean "
                          f"'no witness up to k_max={config.k_max}'", file=sys.stderr)
        except (ZeroModuleError, NotAReductionError, InputError) as exc:
            errors[q] = {"error": type(exc).__name__, "message": str(exc)}
    doc = {
        "instance": inst.describe(),
        "power": power,
        "module": str(M),
        "is_zero": M.is_zero(),
        "results": results,
        "provenance": {"seed": config.seed, "trials": config.trials, "n_cap": config.n_cap,
                       "k_max": config.k_max},
    }
    if errors:
        doc["errors"] = errors
    return doc, EXIT_FAIL if errors else EXIT_OK


def run_series(inst: InstanceFile, config: RunConfig, quantities: list[str]) -> tuple[str, int]:
    I, M = inst.ideal, inst.module
    if I.is_zero():
        raise InputError("series need a nonzero ideal")
    rho_value = rho_of(I, M, config.k_max)
    reports: dict[str, SeriesReport] = {}
    failed_at: dict[str, int] = {}
    for q in quantities:
        try:
            values = compute_series(I, M, q, config.n_max, config)
        except AnnihilatedError as exc:
            failed_at[q] = exc.n
            continue
        reports[q] = detect_linearity(values, reference_slope(q, values, rho_value), config.window, q)
    lines = [CSV_HEADER]
    for n in range(1, config.n_max + 1):
        for q in quantities:
            if q in reports:
                rep = reports[q]
                v = _json_value(rep.values[n - 1])
                icpt = _json_value(rep.intercepts[n - 1])
                lines.append(f"{n},{q},{v},{rep.rho},{icpt},{rep.status}")
            elif failed_at[q] == n:
                lines.append(f"{n},{q},,{rho_value},,error")
    ok = not failed_at and all(r.stabilized for r in reports.values())
    return "\n".join(lines) + "\n", EXIT_OK if ok else EXIT_FAIL


def run_verify(suite: str, config: RunConfig, stream=None) -> int:
    stream = stream or sys.stdout
    checks = run_suite(suite, config)
    for c in checks:
        print(c.line(), file=stream)
    failed = sum(not c.passed for c in checks)
    print(f"{len(checks) - failed}/{len(checks)} checks passed", file=stream)
    return EXIT_OK if not failed else EXIT_FAIL


def run_oracle(inst: InstanceFile, config: RunConfig, power: int = 0) -> tuple[dict, int]:
    M = gm.ideal_power_module(inst.ideal, power, inst.module)
    if M.is_zero():
        raise ZeroModuleError("undefined on zero module")
    fast = {
        "D": gm.largest_gen_degree(M),
        "dim": gm.krull_dim(M),
        "r": generic_reduction_number(M, config.trials, config.seed, config.n_cap).value,
    }
    slow = {
        "D": oracle.top_generator_degree(M),
        "dim": oracle.hilbert_dimension(M),
        "r": oracle.generic_reduction_number(M, config.trials, config.seed),
    }
    agree = {k: fast[k] == slow[k] for k in fast}
    doc = {
        "instance": inst.describe(),
        "power": power,
        "computed": {k: _json_value(v) for k, v in fast.items()},
        "brute_force": {k: _json_value(v) for k, v in slow.items()},
        "agree": agree,
    }
    return doc, EXIT_OK if all(agree.values()) else EXIT_FAIL


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        config = _config(args)
        if args.command == "verify":
            if args.out:
                with open(args.out, "w", encoding="ascii", newline="\n") as fh:
                    return run_verify(args.suite, config, fh)
            return run_verify(args.suite, config)
        inst = load(args.input)
        if args.command == "compute":
            doc, code = run_compute(inst, config, args.what, args.power)
            _emit(json.dumps(doc, indent=2) + "\n", args.out)
            return code
        if args.command == "series":
            text, code = run_series(inst, config, args.quantities)
            _emit(text, args.out)
            return code
        doc, code = run_oracle(inst, config, args.power)
        _emit(json.dumps(doc, indent=2) + "\n", args.out)
        return code
    except UsageError as exc:
        print(f"gradedred: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DataFormatError as exc:
        print(f"gradedred: data format error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except (InputError, ZeroModuleError, NotAReductionError) as exc:
        print(f"gradedred: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())

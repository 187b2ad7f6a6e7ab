"""Command-line front end.

Subcommands:
  compute  evaluate one JSON system document with a chosen backend
  verify   run every applicable backend and cross-check the results
  table    recompute a bundled worked example against published values
  bench    time the backends over a geometric grid of system sizes

Exit codes: 0 success, 1 verification mismatch, 2 unreadable or
malformed input, 3 invalid model data (bad rows, bad thresholds, wrong
method for the structure), 4 size guard exceeded for an
exponential-cost backend.
"""

from __future__ import annotations

import argparse
import json
import os
import statistics
import sys
import time
from typing import Dict, List, Optional, Tuple

from . import rng
from .document import DocumentError, SpecDocument
from .fixtures import FIXTURES
from .model import (
    ComponentChain,
    ModelError,
    StateDistribution,
    SystemKind,
    SystemSpec,
    TooLarge,
)
from .oracle import McEstimate, brute_force_joint, monte_carlo
from .pgf import general_distribution, increasing_distribution
from .subset import subset_state_probability, subset_tail_probability

METHODS = ("pgf", "pgf-uni", "subset", "brute", "mc")
FORMATS = ("table", "csv", "json")
QUANTITIES = ("r0", "r1", "r2", "R1", "R2")

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_PARSE = 2
EXIT_VALIDATION = 3
EXIT_SIZE = 4

BENCH_SEED = 20240 * 9781


def _use_style() -> bool:
    return sys.stdout.isatty() and not os.environ.get("NO_COLOR")


def _bold(text: str) -> str:
    return f"\x1b[1m{text}\x1b[0m" if _use_style() else text


def _subset_distribution(chain: ComponentChain, spec: SystemSpec) -> StateDistribution:
    if spec.kind is not SystemKind.DECREASING:
        tail1 = subset_tail_probability(chain, 1, spec.k1)
        tail2 = subset_tail_probability(chain, 2, spec.k2)
        return StateDistribution.from_tails(tail1, tail2)
    state1 = subset_state_probability(chain, spec, 1)
    state2 = subset_state_probability(chain, spec, 2)
    return StateDistribution.from_exact(state1, state2)


def _brute_distribution(chain: ComponentChain, spec: SystemSpec) -> StateDistribution:
    table = brute_force_joint(chain).table
    state2 = float(table[:, spec.k2:].sum())
    state1 = float(table[spec.k1:, : spec.k2].sum())
    return StateDistribution.from_exact(state1, state2)


def _values(dist: StateDistribution) -> Dict[str, float]:
    return dict(zip(QUANTITIES, dist.as_tuple()))


def _mc_values(est: McEstimate) -> Dict[str, float]:
    return {
        "r0": est.r0_hat,
        "r1": est.r1_hat,
        "r2": est.r2_hat,
        "R1": est.r1_hat + est.r2_hat,
        "R2": est.r2_hat,
    }


def _run_method(
    chain: ComponentChain,
    spec: SystemSpec,
    method: str,
    samples: int,
    seed: int,
) -> Tuple[Dict[str, float], Optional[McEstimate]]:
    if method == "pgf":
        return _values(general_distribution(chain, spec)), None
    if method == "pgf-uni":
        return _values(increasing_distribution(chain, spec)), None
    if method == "subset":
        return _values(_subset_distribution(chain, spec)), None
    if method == "brute":
        return _values(_brute_distribution(chain, spec)), None
    est = monte_carlo(chain, spec, samples, seed)
    return _mc_values(est), est


def _print_values_table(spec: SystemSpec, values: Dict[str, float]) -> None:
    header = f"{'n':>4} {'k1':>4} {'k2':>4}" + "".join(f"{q:>15}" for q in QUANTITIES)
    print(_bold(header))
    row = f"{spec.n:>4} {spec.k1:>4} {spec.k2:>4}"
    row += "".join(f"{values[q]:>15.10f}" for q in QUANTITIES)
    print(row)


def cmd_compute(args: argparse.Namespace) -> int:
    doc = SpecDocument.from_path(args.file)
    chain, spec = doc.chain, doc.spec
    values, est = _run_method(chain, spec, args.method, args.samples, args.seed)

    if args.format == "csv":
        print("n,k1,k2," + ",".join(QUANTITIES))
        cells = [str(spec.n), str(spec.k1), str(spec.k2)]
        cells += [f"{values[q]:.10f}" for q in QUANTITIES]
        print(",".join(cells))
    elif args.format == "json":
        payload = {"n": spec.n, "k1": spec.k1, "k2": spec.k2, "method": args.method}
        payload.update({q: round(values[q], 10) for q in QUANTITIES})
        if est is not None:
            payload["samples"] = est.samples
            payload["seed"] = est.seed
            payload["std_err"] = [round(e, 12) for e in est.std_err]
        print(json.dumps(payload))
    else:
        _print_values_table(spec, values)
        if est is not None:
            errs = ", ".join(f"{e:.3e}" for e in est.std_err)
            print(f"monte carlo: samples={est.samples} seed={est.seed} std_err=({errs})")
    return EXIT_OK


def _applicable_backends(chain: ComponentChain, spec: SystemSpec) -> List[str]:
    backends = ["pgf"]
    if spec.kind is not SystemKind.DECREASING:
        backends.append("pgf-uni")
        if chain.n <= 20:
            backends.append("subset")
    elif chain.n <= 12:
        backends.append("subset")
    if chain.n <= 12:
        backends.append("brute")
    backends.append("mc")
    return backends


def cmd_verify(args: argparse.Namespace) -> int:
    doc = SpecDocument.from_path(args.file)
    chain, spec = doc.chain, doc.spec
    backends = _applicable_backends(chain, spec)

    results: Dict[str, Dict[str, float]] = {}
    mc_est: Optional[McEstimate] = None
    for name in backends:
        values, est = _run_method(chain, spec, name, args.samples, args.seed)
        results[name] = values
        if est is not None:
            mc_est = est

    print(f"backends: {', '.join(backends)}")
    print("max |difference| over r0, r1, r2, R1, R2:")
    width = max(len(b) for b in backends) + 2
    print(" " * width + "".join(f"{b:>12}" for b in backends[:-1]))
    all_ok = True
    for i, row_name in enumerate(backends[1:], start=1):
        cells = []
        for col_name in backends[:i]:
            diff = max(
                abs(results[row_name][q] - results[col_name][q]) for q in QUANTITIES
            )
            if "mc" in (row_name, col_name):
                # Statistical comparison: three sigma plus a zero-count floor.
                assert mc_est is not None
                other = col_name if row_name == "mc" else row_name
                ok = all(
                    abs(results["mc"][q] - results[other][q])
                    <= 3.0 * mc_est.std_err[j] + 3.0 / mc_est.samples
                    for j, q in enumerate(("r0", "r1", "r2"))
                )
            else:
                ok = diff <= args.tolerance
            all_ok &= ok
            cells.append(f"{diff:>11.3e}" + (" " if ok else "!"))
        print(f"{row_name:<{width}}" + "".join(cells))

    verdict = "PASS" if all_ok else "FAIL"
    print(f"verify: {verdict} (tolerance {args.tolerance:.1e}, mc at 3*std_err + 3/samples)")
    return EXIT_OK if all_ok else EXIT_MISMATCH


def cmd_table(args: argparse.Namespace) -> int:
    fixture = FIXTURES[args.name]
    rows = []
    for row in fixture.rows:
        chain = fixture.chain(row.n)
        computed = _values(general_distribution(chain, row.spec()))
        diffs = {q: abs(computed[q] - row.published[q]) for q in QUANTITIES}
        rows.append((row, computed, diffs, max(diffs.values())))

    if args.format == "csv":
        print("n,k1,k2,quantity,computed,published,abs_diff")
        for row, computed, diffs, _ in rows:
            for q in QUANTITIES:
                print(
                    f"{row.n},{row.k1},{row.k2},{q},"
                    f"{computed[q]:.10f},{row.published[q]:.10f},{diffs[q]:.3e}"
                )
    elif args.format == "json":
        payload = []
        for row, computed, diffs, worst in rows:
            payload.append(
                {
                    "n": row.n,
                    "k1": row.k1,
                    "k2": row.k2,
                    "computed": {q: round(computed[q], 10) for q in QUANTITIES},
                    "published": dict(row.published),
                    "max_abs_diff": worst,
                }
            )
        print(json.dumps(payload))
    else:
        print(_bold(f"{fixture.name}: {fixture.description}"))
        header = f"{'n':>4} {'k1':>4} {'k2':>4} {'':<10}"
        header += "".join(f"{q:>15}" for q in QUANTITIES) + f"{'max |diff|':>13}"
        print(_bold(header))
        for row, computed, _, worst in rows:
            line = f"{row.n:>4} {row.k1:>4} {row.k2:>4} {'computed':<10}"
            line += "".join(f"{computed[q]:>15.10f}" for q in QUANTITIES)
            line += f"{worst:>13.3e}"
            print(line)
            line = f"{'':>4} {'':>4} {'':>4} {'published':<10}"
            line += "".join(f"{row.published[q]:>15.10f}" for q in QUANTITIES)
            print(line)
    return EXIT_OK


def _bench_chain(n: int) -> ComponentChain:
    states = rng.stream_states(BENCH_SEED, 9 * n)
    uniforms = rng.advance(states).reshape(n, 3, 3)
    rows = uniforms + 0.05  # keep rows away from zero mass
    rows /= rows.sum(axis=2, keepdims=True)
    return ComponentChain(rows)


def _median_ns(fn, reps: int) -> int:
    times = []
    for _ in range(reps):
        start = time.perf_counter_ns()
        fn()
        times.append(time.perf_counter_ns() - start)
    return int(statistics.median(times))


def cmd_bench(args: argparse.Namespace) -> int:
    if args.nmax < 2:
        raise ModelError(f"--nmax must be at least 2, got {args.nmax}")
    reps = max(1, args.reps)
    grid = []
    n = 2
    while n <= args.nmax:
        grid.append(n)
        n *= 2
    if grid[-1] != args.nmax:
        grid.append(args.nmax)

    print("method,n,median_ns")
    for n in grid:
        chain = _bench_chain(n)
        k1 = max(1, n // 3)
        k2 = max(k1, (2 * n) // 3)
        spec = SystemSpec(n=n, k1=k1, k2=k2)
        runners = [
            ("pgf-uni", lambda: increasing_distribution(chain, spec)),
            ("pgf", lambda: general_distribution(chain, spec)),
        ]
        if n <= 20:
            runners.append(("subset", lambda: _subset_distribution(chain, spec)))
        if n <= 12:
            runners.append(("brute", lambda: _brute_distribution(chain, spec)))
        for name, fn in runners:
            print(f"{name},{n},{_median_ns(fn, reps)}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="markofn",
        description="State distributions of three-state k-out-of-n:G systems "
        "with Markov dependent components.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_compute = sub.add_parser("compute", help="evaluate one JSON system document")
    p_compute.add_argument("file", help="path to the JSON document")
    p_compute.add_argument("--method", choices=METHODS, default="pgf")
    p_compute.add_argument("--samples", type=int, default=100_000,
                           help="sample count for --method mc")
    p_compute.add_argument("--seed", type=int, default=42,
                           help="seed for --method mc")
    p_compute.add_argument("--format", choices=FORMATS, default="table")
    p_compute.set_defaults(handler=cmd_compute)

    p_verify = sub.add_parser("verify", help="cross-check all applicable backends")
    p_verify.add_argument("file")
    p_verify.add_argument("--tolerance", type=float, default=1e-9)
    p_verify.add_argument("--samples", type=int, default=100_000)
    p_verify.add_argument("--seed", type=int, default=42)
    p_verify.set_defaults(handler=cmd_verify)

    p_table = sub.add_parser("table", help="recompute a bundled worked example")
    p_table.add_argument("name", choices=sorted(FIXTURES))
    p_table.add_argument("--format", choices=FORMATS, default="table")
    p_table.set_defaults(handler=cmd_table)

    p_bench = sub.add_parser("bench", help="time the backends over a size grid")
    p_bench.add_argument("--nmax", type=int, default=128)
    p_bench.add_argument("--reps", type=int, default=3)
    p_bench.set_defaults(handler=cmd_bench)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except (DocumentError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except TooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SIZE
    except ModelError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()

"""Command-line front end.

Subcommands:
  table1    constant-BER-at-constant-G-SNR table over (beta, delta)
  sweep     BER vs G-SNR sweep per system/beta, CSV/JSON + optional SVG
  validate  run the full oracle/cross-check suite
  dist      evaluate a stable pdf/cdf at a point
  geopower  evaluate geometric power of a stable law

Exit codes: 0 success, 1 check failure, 2 usage error.

Units convention: times in seconds, lengths in micrometers, diffusion in
um^2/s; the library itself is unit-agnostic.
"""

from __future__ import annotations

import argparse
import concurrent.futures
import csv
import io
import json
import math
import os
import sys

import numpy as np

from .power import System, scale_for_gsnr, system_gsnr, GsnrQuery, geometric_power
from .stable import StableParams, StandardStable, std_cdf, std_pdf, cdf, pdf
from .systems import (BerRecord, BinaryScheme, ber_analytic, ber_monte_carlo,
                      ml_threshold, scheme_for_gsnr)
from . import plotting, validate

#: env var overriding the worker-pool size
WORKERS_ENV = "MTCHAN_WORKERS"

CSV_HEADER = ["gsnr_db", "system", "beta", "delta", "c", "threshold",
              "ber_analytic", "ber_mc", "mc_stderr", "samples"]

# reference digits of the constant-G-SNR BER table (4-decimal print
# precision).  Note: the table is calibrated at linear G-SNR = 10; its
# original caption's "G-SNR = 1" is off by exactly x10 against the
# normalization the G-SNR definition itself fixes.
TABLE1_REFERENCE = {0.0: 0.1458, 0.2: 0.1428, 0.5: 0.1287, 0.8: 0.1069, 1.0: 0.0857}
TABLE1_GSNR = 10.0


def point_seed(master_seed: int, index: int) -> int:
    """Mix (master seed, grid index) into an independent per-point seed."""
    return int(np.random.SeedSequence((master_seed, index)).generate_state(1)[0])


def _compute_record(task) -> BerRecord:
    index, system, beta, delta, gsnr, mc_samples, master_seed = task
    scheme = scheme_for_gsnr(System(system), delta, gsnr, beta)
    state = ml_threshold(scheme)
    analytic = ber_analytic(scheme, state)
    mc = stderr = samples = None
    if mc_samples:
        mc, stderr = ber_monte_carlo(scheme, mc_samples,
                                     point_seed(master_seed, index), state)
        samples = mc_samples
    return BerRecord(
        gsnr=gsnr, gsnr_db=10.0 * math.log10(gsnr), system=scheme.system,
        beta=scheme.noise.beta, delta=delta, c=scheme.noise.c,
        threshold=state.threshold, ber_analytic=analytic,
        ber_mc=mc, mc_stderr=stderr, samples=samples)


def _compute_grid(tasks, workers: int) -> list[BerRecord]:
    if workers <= 1 or len(tasks) <= 1:
        return [_compute_record(t) for t in tasks]
    with concurrent.futures.ProcessPoolExecutor(max_workers=workers) as pool:
        # map preserves task order, so output is scheduling-independent
        return list(pool.map(_compute_record, tasks))


def _fmt(value) -> str:
    if value is None:
        return ""
    if isinstance(value, System):
        return value.value
    return repr(value) if isinstance(value, float) else str(value)


def _records_to_csv(records: list[BerRecord]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for r in records:
        writer.writerow([_fmt(getattr(r, k)) for k in CSV_HEADER])
    return buf.getvalue()


def _records_to_json(records: list[BerRecord]) -> str:
    rows = []
    for r in records:
        row = {k: getattr(r, k) for k in CSV_HEADER}
        row["system"] = r.system.value
        rows.append(row)
    return json.dumps(rows, indent=2) + "\n"


def _emit(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _resolve_workers(args) -> int:
    if args.workers is not None:
        return args.workers
    env = os.environ.get(WORKERS_ENV)
    if env:
        return max(int(env), 1)
    return os.cpu_count() or 1


def _float_list(text: str) -> list[float]:
    return [float(v) for v in text.split(",") if v.strip()]


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_table1(args) -> int:
    betas = _float_list(args.betas)
    deltas = _float_list(args.deltas)
    tasks = [(i, "C", beta, delta, args.gsnr, args.mc_samples, args.seed)
             for i, (beta, delta) in enumerate(
                 (b, d) for b in betas for d in deltas)]
    records = _compute_grid(tasks, _resolve_workers(args))

    failed = False
    n_d = len(deltas)
    for i, beta in enumerate(betas):
        row = records[i * n_d:(i + 1) * n_d]
        vals = [r.ber_analytic for r in row]
        spread = (max(vals) - min(vals)) / max(vals[0], 1e-300)
        msgs = [f"beta={beta}: ber={vals[0]:.6f} spread={spread:.3e}"]
        if spread > 1e-6:
            failed = True
            msgs.append("SPREAD-FAIL")
        if args.gsnr == TABLE1_GSNR and beta in TABLE1_REFERENCE:
            dev = abs(vals[0] - TABLE1_REFERENCE[beta])
            msgs.append(f"ref={TABLE1_REFERENCE[beta]} dev={dev:.2e}")
            if dev > 5e-4:
                failed = True
                msgs.append("REF-FAIL")
        print("# " + " ".join(msgs), file=sys.stderr)

    text = (_records_to_json(records) if args.format == "json"
            else _records_to_csv(records))
    _emit(text, args.output)
    return 1 if failed else 0


def _sweep_grid(args) -> list[float]:
    if args.gsnr_list:
        return _float_list(args.gsnr_list)
    db = args.gsnr_db
    if len(db) == 1:
        start = stop = db[0]
    else:
        start, stop = db[0], db[1]
    points = args.points
    if points < 1:
        raise ValueError("--points must be >= 1")
    if points == 1:
        dbs = [start]
    else:
        dbs = list(np.linspace(start, stop, points))
    return [10.0 ** (v / 10.0) for v in dbs]


def cmd_sweep(args) -> int:
    gsnrs = _sweep_grid(args)
    systems_sel = [System(s.strip()) for s in args.systems.split(",") if s.strip()]
    betas_c = _float_list(args.betas)

    curves: list[tuple[str, str, float]] = []
    for system in systems_sel:
        if system is System.C:
            curves.extend(("C", f"C (beta={b:g})", b) for b in betas_c)
        else:
            curves.append((system.value, system.value,
                           1.0 if system is System.A else 0.0))

    tasks = []
    index = 0
    for sys_name, _, beta in curves:
        for gsnr in gsnrs:
            tasks.append((index, sys_name, beta, args.delta, gsnr,
                          args.mc_samples, args.seed))
            index += 1
    records = _compute_grid(tasks, _resolve_workers(args))

    text = (_records_to_json(records) if args.format == "json"
            else _records_to_csv(records))
    _emit(text, args.output)

    if args.plot:
        dbs = [10.0 * math.log10(g) for g in gsnrs]
        n = len(gsnrs)
        plot_curves = [
            (label, dbs, [r.ber_analytic for r in records[k * n:(k + 1) * n]])
            for k, (_, label, _) in enumerate(curves)]
        plotting.write_ber_svg(args.plot, plot_curves)
    return 0


def cmd_validate(args) -> int:
    if args.mc_samples < 10_000:
        raise ValueError("--mc-samples must be >= 10000")
    results = validate.run_all(mc_samples=args.mc_samples, seed=args.seed,
                               tol=args.tol)
    n_fail = 0
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        if not r.passed:
            n_fail += 1
        print(f"[{status}] {r.name}: {r.detail}")
    print(f"{len(results) - n_fail}/{len(results)} checks passed")
    return 1 if n_fail else 0


def cmd_dist(args) -> int:
    params = StableParams(args.mu, args.c, args.alpha, args.beta)
    if args.what == "pdf":
        value = pdf(params, args.x)
    else:
        value = cdf(params, args.x)
    print(repr(value))
    return 0


def cmd_geopower(args) -> int:
    print(repr(geometric_power(StableParams(0.0, args.c, args.alpha, args.beta))))
    return 0


# ---------------------------------------------------------------------------
# parser / entry point
# ---------------------------------------------------------------------------

def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--seed", type=int, default=0, help="master RNG seed")
    p.add_argument("--output", help="output file (default: stdout)")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--workers", type=int, default=None,
                   help=f"worker processes (default: {WORKERS_ENV} env var "
                        "or available parallelism)")
    p.add_argument("--config", help="key=value config file; flags override it")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mtchan",
        description="Timing-channel BER experiments over stable noise")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table1", help="constant-BER table at fixed G-SNR")
    _add_common(p)
    p.add_argument("--gsnr", type=float, default=TABLE1_GSNR,
                   help="linear G-SNR held constant across the grid "
                        f"(default {TABLE1_GSNR:g}, the reference-table calibration)")
    p.add_argument("--betas", default="0,0.2,0.5,0.8,1")
    p.add_argument("--deltas", default="0.5,5,10,20")
    p.add_argument("--mc-samples", type=int, default=0,
                   help="optional Monte Carlo bits per cell (0 = analytic only)")
    p.set_defaults(func=cmd_table1)

    p = sub.add_parser("sweep", help="BER vs G-SNR sweep")
    _add_common(p)
    p.add_argument("--systems", default="A,B,C")
    p.add_argument("--betas", default="0,0.25,0.5,0.75,0.95",
                   help="system C skew values")
    p.add_argument("--delta", type=float, default=1.0)
    p.add_argument("--gsnr-db", type=float, nargs="+", default=[-10.0, 20.0],
                   help="dB grid endpoints (one value = single point)")
    p.add_argument("--points", type=int, default=31)
    p.add_argument("--gsnr-list", help="explicit comma-separated linear G-SNRs")
    p.add_argument("--mc-samples", type=int, default=0)
    p.add_argument("--plot", help="write an SVG figure to this path")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("validate", help="run the oracle/cross-check suite")
    _add_common(p)
    p.add_argument("--mc-samples", type=int, default=1_000_000)
    p.add_argument("--tol", type=float, default=1e-8,
                   help="closed-form vs numeric tolerance")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("dist", help="evaluate a stable pdf/cdf")
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--beta", type=float, required=True)
    p.add_argument("--mu", type=float, default=0.0)
    p.add_argument("--c", type=float, default=1.0)
    p.add_argument("--x", type=float, required=True)
    p.add_argument("--what", choices=["pdf", "cdf"], default="pdf")
    p.set_defaults(func=cmd_dist)

    p = sub.add_parser("geopower", help="geometric power of a stable law")
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--beta", type=float, required=True)
    p.add_argument("--c", type=float, default=1.0)
    p.set_defaults(func=cmd_geopower)

    return parser


def _apply_config(parser: argparse.ArgumentParser, argv: list[str]) -> list[str]:
    # config values become defaults; explicit flags keep precedence
    if "--config" not in argv:
        return argv
    path = argv[argv.index("--config") + 1]
    overrides = {}
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            key, _, value = line.partition("=")
            overrides[key.strip().replace("-", "_")] = value.strip()
    for action_group in parser._subparsers._group_actions:
        for sub_parser in action_group.choices.values():
            known = {a.dest: a for a in sub_parser._actions}
            for key, value in overrides.items():
                if key not in known:
                    continue
                action = known[key]
                cast = action.type or (lambda v: v)
                if action.nargs in ("+", "*"):
                    parsed = [cast(v) for v in value.split()]
                else:
                    parsed = cast(value)
                sub_parser.set_defaults(**{key: parsed})
    return argv


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        argv = _apply_config(parser, argv)
        args = parser.parse_args(argv)
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

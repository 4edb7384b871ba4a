"""Command-line driver: runs experiments and writes CSV/JSON/PGM outputs.

Subcommands: table, tournament, thresholds, replicator, map7, lattice,
sweep. Defaults follow the canonical parameters (c=1, delta=0.25, b=3,
w=1, K=0.1, 100x100 lattice, 1e7 attempts, 10 replicates). Flags override
values from an optional JSON config file; every run directory gets exactly
one manifest.json recording the resolved configuration.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Dict, List, Optional, Sequence

import numpy as np

from . import __version__
from .closed_forms import critical_w_vs_d, critical_w_vs_dl
from .game import GameParams, enumerate_strategy_sets
from .lattice import LatticeConfig, run_lattice, write_pgm
from .markov import IntrospectionConfig
from .replicator import (
    basin_scan,
    integrate_replicator,
    iterate_discrete_map,
    default_offset,
)
from .rng import RNG_ALGORITHM
from .tournament import build_payoff_table, tournament_report

OUTPUT_ROOT_ENV = "HYPERGAME_OUTPUT_ROOT"

_CONFIG_KEYS = {
    "command", "b", "c", "delta", "w", "mode", "seed", "out", "format", "round",
    "dt", "t_max", "eps", "generations", "sigma", "basin_resolution",
    "width", "height", "K", "steps", "replicates", "snapshot_times",
    "steps_are_sweeps", "b_grid", "w_grid", "jobs", "x0",
}


def _fmt(x: float, ndigits: Optional[int]) -> str:
    if ndigits is not None:
        return f"{x:.{ndigits}f}"
    return repr(float(x))  # shortest round-trip representation


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hypergame",
        description="Evolutionary hypergame dynamics for the voluntary prisoner's dilemma.",
    )
    parser.add_argument("--config", type=Path, help="JSON config file; flags override it")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--b", type=float, default=3.0, help="cooperation benefit")
        sp.add_argument("--c", type=float, default=1.0, help="cooperation cost")
        sp.add_argument("--delta", type=float, default=0.25, help="loner payoff")
        sp.add_argument("--w", type=float, default=1.0, help="introspection strength")
        sp.add_argument("--mode", choices=["pairs", "all"], default="pairs")
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--out", type=Path, default=None, help="output directory")
        sp.add_argument("--format", choices=["csv", "json"], default="csv")
        sp.add_argument("--round", type=int, default=None, dest="round_digits",
                        help="round values to N decimals (default: full precision)")
        return sp

    common(sub.add_parser("table", help="pairwise stationary payoff table"))
    common(sub.add_parser("tournament", help="payoff table plus combined-score report"))

    th = common(sub.add_parser("thresholds", help="critical introspection strengths"))

    rep = common(sub.add_parser("replicator", help="replicator trajectory on the simplex"))
    rep.add_argument("--dt", type=float, default=0.01)
    rep.add_argument("--t-max", type=float, default=1e4, dest="t_max")
    rep.add_argument("--eps", type=float, default=1e-10, help="convergence threshold on the field")
    rep.add_argument("--x0", type=float, nargs="+", default=None,
                     help="initial frequencies (default: uniform)")
    rep.add_argument("--basin-resolution", type=int, default=None, dest="basin_resolution",
                     help="also emit a basin scan at this grid resolution (pairs mode only)")

    m7 = common(sub.add_parser("map7", help="discrete multiplicative map over all 7 sets"))
    m7.add_argument("--generations", type=int, default=10_000)
    m7.add_argument("--sigma", type=float, default=None,
                    help="payoff offset (default: max(0,-min payoff)+1)")

    lat = common(sub.add_parser("lattice", help="asynchronous lattice Monte Carlo"))
    lat.add_argument("--width", type=int, default=100)
    lat.add_argument("--height", type=int, default=100)
    lat.add_argument("--K", type=float, default=0.1, help="selection temperature")
    lat.add_argument("--steps", type=int, default=10_000_000, help="total update attempts")
    lat.add_argument("--replicates", type=int, default=10)
    lat.add_argument("--snapshot-times", type=int, nargs="*", default=[], dest="snapshot_times")
    lat.add_argument("--steps-are-sweeps", action="store_true", dest="steps_are_sweeps",
                     help="interpret --steps as full sweeps (width*height attempts each)")

    sw = common(sub.add_parser("sweep", help="payoff tables over a (b, w) grid"))
    sw.add_argument("--b-grid", type=float, nargs="+", default=[1.5, 2.0, 3.0, 4.0, 5.0],
                    dest="b_grid")
    sw.add_argument("--w-grid", type=float, nargs="+", default=[0.1, 1.0, 10.0], dest="w_grid")
    sw.add_argument("--jobs", type=int, default=1)
    return parser


def parse_config(argv: Sequence[str]) -> argparse.Namespace:
    """Parse flags, merging in a JSON config file when given (flags win)."""
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.config is not None:
        try:
            raw = json.loads(Path(args.config).read_text())
        except (OSError, json.JSONDecodeError) as exc:
            parser.error(f"--config: cannot read {args.config}: {exc}")
        unknown = set(raw) - _CONFIG_KEYS
        if unknown:
            parser.error(f"--config: unknown keys {sorted(unknown)}")
        # Flags explicitly on the command line take precedence.
        given = {a.split("=")[0].lstrip("-").replace("-", "_") for a in argv if a.startswith("--")}
        for key, value in raw.items():
            dest = "round_digits" if key == "round" else key
            if key not in given and hasattr(args, dest):
                setattr(args, dest, value)
    _validate(parser, args)
    return args


def _validate(parser: argparse.ArgumentParser, args: argparse.Namespace) -> None:
    if getattr(args, "w", 0) is not None and args.w < 0:
        parser.error(f"--w: introspection strength must be >= 0, got {args.w}")
    try:
        GameParams(b=args.b, c=args.c, delta=args.delta)
    except ValueError as exc:
        parser.error(f"game parameters: {exc}")
    if getattr(args, "dt", 1.0) is not None and getattr(args, "dt", 1.0) <= 0:
        parser.error("--dt must be positive")
    if getattr(args, "K", 1.0) <= 0:
        parser.error("--K must be positive")
    if getattr(args, "steps", 1) < 1:
        parser.error("--steps must be >= 1")


def _out_dir(args: argparse.Namespace) -> Path:
    if args.out is not None:
        out = Path(args.out)
    else:
        root = Path(os.environ.get(OUTPUT_ROOT_ENV, "runs"))
        out = root / f"{args.command}-{int(time.time())}"
    out.mkdir(parents=True, exist_ok=True)
    return out


def _write_manifest(out: Path, args: argparse.Namespace, files: List[str], t0: float,
                    extra: Optional[Dict] = None) -> None:
    cfg = {k: (str(v) if isinstance(v, Path) else v) for k, v in vars(args).items()}
    manifest = {
        "config": cfg,
        "rng_algorithm": RNG_ALGORITHM,
        "version": __version__,
        "duration_s": round(time.time() - t0, 3),
        "outputs": files,
    }
    if extra:
        manifest.update(extra)
    (out / "manifest.json").write_text(json.dumps(manifest, indent=2, sort_keys=True) + "\n")


def _table_rows(args, p, cfg, sets):
    table = build_payoff_table(sets, p, cfg)
    rows = []
    for i, si in enumerate(sets):
        for j, sj in enumerate(sets):
            rows.append((cfg.w, p.b, p.c, p.delta, si.name, sj.name, table.matrix[i, j]))
    return table, rows


def _emit_table(rows, path: Path, ndigits, as_json: bool) -> None:
    if as_json:
        payload = [
            {"w": r[0], "b": r[1], "c": r[2], "delta": r[3],
             "set_row": r[4], "set_col": r[5], "payoff": r[6]}
            for r in rows
        ]
        path.write_text(json.dumps(payload, indent=2) + "\n")
        return
    lines = ["w,b,c,delta,set_row,set_col,payoff"]
    for w, b, c, d, sr, sc, pay in rows:
        lines.append(f"{_fmt(w, None)},{_fmt(b, None)},{_fmt(c, None)},{_fmt(d, None)},"
                     f"{sr},{sc},{_fmt(pay, ndigits)}")
    path.write_text("\n".join(lines) + "\n")


def _cmd_table(args, out: Path) -> List[str]:
    p = GameParams(b=args.b, c=args.c, delta=args.delta)
    cfg = IntrospectionConfig(args.w)
    sets = enumerate_strategy_sets(args.mode)
    _, rows = _table_rows(args, p, cfg, sets)
    ext = "json" if args.format == "json" else "csv"
    path = out / f"payoffs.{ext}"
    _emit_table(rows, path, args.round_digits, args.format == "json")
    return [path.name]


def _cmd_tournament(args, out: Path) -> List[str]:
    p = GameParams(b=args.b, c=args.c, delta=args.delta)
    cfg = IntrospectionConfig(args.w)
    sets = enumerate_strategy_sets(args.mode)
    table, rows = _table_rows(args, p, cfg, sets)
    report = tournament_report(table)
    files = []
    path = out / "payoffs.csv"
    _emit_table(rows, path, args.round_digits, False)
    files.append(path.name)
    rank_of = {s: r for r, s in enumerate(report.ranking, start=1)}
    lines = ["set,combined_score,rank"]
    for i, s in enumerate(sets):
        lines.append(f"{s.name},{_fmt(report.combined_scores[i], args.round_digits)},{rank_of[s]}")
    rpath = out / "report.csv"
    rpath.write_text("\n".join(lines) + "\n")
    files.append(rpath.name)
    return files


def _cmd_thresholds(args, out: Path) -> List[str]:
    p = GameParams(b=args.b, c=args.c, delta=args.delta)
    w_trans, w_direct = critical_w_vs_d(p)
    w_dl = critical_w_vs_dl(p)
    payload = {
        "b": p.b, "c": p.c, "delta": p.delta,
        "critical_w_vs_d_transcendental": w_trans,
        "critical_w_vs_d_bisection": w_direct,
        "critical_w_vs_d_method_spread": abs(w_trans - w_direct),
        "critical_w_vs_dl": w_dl,
    }
    path = out / "thresholds.json"
    path.write_text(json.dumps(payload, indent=2) + "\n")
    return [path.name]


def _write_trajectory(rec, path: Path, ndigits) -> None:
    header = "t," + ",".join(f"x_{n}" for n in rec.set_names) + ",P_bar"
    lines = [header]
    for t, x, pb in zip(rec.times, rec.states, rec.mean_payoffs):
        vals = ",".join(_fmt(v, ndigits) for v in x)
        lines.append(f"{_fmt(t, None)},{vals},{_fmt(pb, ndigits)}")
    path.write_text("\n".join(lines) + "\n")


def _cmd_replicator(args, out: Path) -> List[str]:
    p = GameParams(b=args.b, c=args.c, delta=args.delta)
    cfg = IntrospectionConfig(args.w)
    sets = enumerate_strategy_sets(args.mode)
    table = build_payoff_table(sets, p, cfg)
    x0 = np.array(args.x0, dtype=float) if args.x0 else np.full(len(sets), 1.0 / len(sets))
    if len(x0) != len(sets):
        raise SystemExit(f"--x0 needs {len(sets)} entries for mode {args.mode}")
    rec = integrate_replicator(x0, table, dt=args.dt, t_max=args.t_max,
                               convergence_eps=args.eps)
    files = []
    tpath = out / "trajectory.csv"
    _write_trajectory(rec, tpath, args.round_digits)
    files.append(tpath.name)
    if args.basin_resolution:
        rows = basin_scan(table, args.basin_resolution, dt=args.dt, t_max=args.t_max)
        lines = ["u,v,winner_set,P_bar"]
        for u, v, winner, pbar in rows:
            lines.append(f"{_fmt(u, None)},{_fmt(v, None)},{winner},{_fmt(pbar, args.round_digits)}")
        bpath = out / "basin.csv"
        bpath.write_text("\n".join(lines) + "\n")
        files.append(bpath.name)
    return files


def _cmd_map7(args, out: Path) -> List[str]:
    p = GameParams(b=args.b, c=args.c, delta=args.delta)
    cfg = IntrospectionConfig(args.w)
    sets = enumerate_strategy_sets("all")
    table = build_payoff_table(sets, p, cfg)
    sigma = args.sigma if args.sigma is not None else default_offset(table)
    rec = iterate_discrete_map(np.full(7, 1.0 / 7.0), table, args.generations,
                               sigma=sigma, sample_stride=max(1, args.generations // 1000))
    path = out / "map7.csv"
    _write_trajectory(rec, path, args.round_digits)
    return [path.name]


def _cmd_lattice(args, out: Path) -> List[str]:
    p = GameParams(b=args.b, c=args.c, delta=args.delta)
    cfg = IntrospectionConfig(args.w)
    sets = enumerate_strategy_sets(args.mode)
    table = build_payoff_table(sets, p, cfg)
    lcfg = LatticeConfig(
        width=args.width, height=args.height, K=args.K, steps=args.steps,
        seed=args.seed, replicates=args.replicates,
        snapshot_times=tuple(args.snapshot_times),
        steps_are_sweeps=args.steps_are_sweeps,
    )
    result = run_lattice(lcfg, table)
    files = []
    lines = ["replicate,sweep," + ",".join(f"x_{n}" for n in result.set_names)]
    for rep in range(result.fractions.shape[0]):
        for sweep in range(result.fractions.shape[1]):
            vals = ",".join(_fmt(v, args.round_digits) for v in result.fractions[rep, sweep])
            lines.append(f"{rep},{sweep},{vals}")
    fpath = out / "fractions.csv"
    fpath.write_text("\n".join(lines) + "\n")
    files.append(fpath.name)
    for rep, snaps in enumerate(result.snapshots):
        for t, grid in zip(result.snapshot_times, snaps):
            spath = out / f"snapshot_r{rep}_t{t}.pgm"
            write_pgm(grid, str(spath), len(sets) - 1)
            meta = {
                "sets": {i: s.name for i, s in enumerate(sets)},
                "params": {"b": p.b, "c": p.c, "delta": p.delta, "w": args.w, "K": args.K},
                "seed": result.replicate_seeds[rep],
                "step": t,
            }
            jpath = out / f"snapshot_r{rep}_t{t}.json"
            jpath.write_text(json.dumps(meta, indent=2) + "\n")
            files += [spath.name, jpath.name]
    return files


def _sweep_point(payload):
    b, w, c, delta, mode = payload
    p = GameParams(b=b, c=c, delta=delta)
    cfg = IntrospectionConfig(w)
    sets = enumerate_strategy_sets(mode)
    table = build_payoff_table(sets, p, cfg)
    rows = []
    for i, si in enumerate(sets):
        for j, sj in enumerate(sets):
            rows.append((w, b, c, delta, si.name, sj.name, float(table.matrix[i, j])))
    return rows


def _cmd_sweep(args, out: Path) -> List[str]:
    points = [(b, w, args.c, args.delta, args.mode) for w in args.w_grid for b in args.b_grid]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            chunks = list(pool.map(_sweep_point, points))
    else:
        chunks = [_sweep_point(pt) for pt in points]
    rows = [r for chunk in chunks for r in chunk]
    path = out / "sweep.csv"
    _emit_table(rows, path, args.round_digits, False)
    return [path.name]


_COMMANDS = {
    "table": _cmd_table,
    "tournament": _cmd_tournament,
    "thresholds": _cmd_thresholds,
    "replicator": _cmd_replicator,
    "map7": _cmd_map7,
    "lattice": _cmd_lattice,
    "sweep": _cmd_sweep,
}


def dispatch(args: argparse.Namespace) -> int:
    t0 = time.time()
    out = _out_dir(args)
    try:
        files = _COMMANDS[args.command](args, out)
    except Exception as exc:
        _write_manifest(out, args, [], t0, extra={"incomplete": True, "error": str(exc)})
        print(f"error: {args.command}: {exc}", file=sys.stderr)
        return 1
    _write_manifest(out, args, files, t0)
    print(f"{args.command}: wrote {len(files)} file(s) to {out}")
    return 0


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = parse_config(sys.argv[1:] if argv is None else list(argv))
    return dispatch(args)


if __name__ == "__main__":
    sys.exit(main())

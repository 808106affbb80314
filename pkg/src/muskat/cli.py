"""Command line entry point: run | verify | spectrum."""

import argparse
import json
import os
import sys

import numpy as np

from . import verify as verify_suites
from .birkhoff_rott import spectral_radius
from .config import parse_config
from .curves import curve_to_snapshot
from .diagnostics import CSV_HEADER, rayleigh_taylor_sigma
from .errors import ConfigError, MuskatError
from .evolution import SimState, run, suggested_dt


def _build_state(cfg):
    return SimState(t=0.0, z=cfg.build_z(), h=cfg.build_h(), params=cfg.params, eps=cfg.eps)


def _write_svg(path, state):
    """Fixed-viewport polyline frame; z segments colored by the sign of sigma."""
    sig, _ = rayleigh_taylor_sigma(state)
    zx, zy = state.z.positions()
    hx, hy = state.h.positions()

    def sx(x):
        return 40.0 + (x + np.pi) * (560.0 / (2.0 * np.pi))

    def sy(y):
        return 200.0 - y * 60.0

    parts = ['<svg xmlns="http://www.w3.org/2000/svg" width="640" height="400" viewBox="0 0 640 400">']
    pts = " ".join(f"{sx(x):.2f},{sy(y):.2f}" for x, y in zip(hx, hy))
    parts.append(f'<polyline points="{pts}" fill="none" stroke="#777" stroke-width="1.5"/>')
    n = state.z.n
    for i in range(n - 1):
        color = "#1f5fbf" if sig.samples[i] >= 0.0 else "#c0392b"
        parts.append(
            f'<line x1="{sx(zx[i]):.2f}" y1="{sy(zy[i]):.2f}" '
            f'x2="{sx(zx[i + 1]):.2f}" y2="{sy(zy[i + 1]):.2f}" '
            f'stroke="{color}" stroke-width="2"/>'
        )
    parts.append("</svg>")
    with open(path, "w") as fh:
        fh.write("\n".join(parts))


def cmd_run(cfg, out_dir):
    os.makedirs(out_dir, exist_ok=True)
    state = _build_state(cfg)
    dt = cfg.dt if cfg.dt is not None else suggested_dt(state)
    rows = []
    frame = {"i": 0}

    def on_record(st, rec):
        rows.append(rec.csv_row())
        i = frame["i"]
        if cfg.snapshot_stride > 0 and i % cfg.snapshot_stride == 0:
            with open(os.path.join(out_dir, f"snapshot_{i:04d}.json"), "w") as fh:
                json.dump({"t": st.t, **curve_to_snapshot(st.z)}, fh)
            if cfg.svg_frames:
                _write_svg(os.path.join(out_dir, f"frame_{i:04d}.svg"), st)
        frame["i"] = i + 1

    records, final_state, reason = run(
        state, cfg.t_end, dt, guards=cfg.guards, sobolev_k=cfg.sobolev_k, on_record=on_record
    )
    with open(os.path.join(out_dir, "series.csv"), "w") as fh:
        fh.write(CSV_HEADER + "\n")
        fh.write("\n".join(rows) + "\n")
    print(f"exit: {reason}  steps: {len(records)}  t_final: {final_state.t:.6g}")
    print(f"series: {os.path.join(out_dir, 'series.csv')}")
    return 0


def cmd_verify(cfg, seed):
    results = verify_suites.run_all(cfg, seed=seed)
    failed = 0
    for name, ok, detail in results:
        print(f"{'PASS' if ok else 'FAIL'}  {name}  ({detail})")
        failed += 0 if ok else 1
    if failed:
        print(f"{failed} verification check(s) failed")
        return 2
    print("all verification checks passed")
    return 0


def cmd_spectrum(cfg):
    state = _build_state(cfg)
    trace = []
    try:
        rho = spectral_radius(state.z, state.h, cfg.params, n_probe=100, trace_out=trace)
    except MuskatError as exc:
        rho = getattr(exc, "best_estimate", None)
        print(f"warning: {exc}")
    for i, est in enumerate(trace):
        print(f"iter {i + 2:3d}  estimate {est:.12f}")
    print(f"dominant |lambda| ~ {rho:.9f}" if rho is not None else "no estimate")
    return 0


def main(argv=None):
    parser = argparse.ArgumentParser(prog="muskat", description=__doc__)
    parser.add_argument("command", choices=["run", "verify", "spectrum"])
    parser.add_argument("--config", required=True, help="JSON run configuration")
    parser.add_argument("--out", default=None, help="output directory (run)")
    parser.add_argument("--seed", type=int, default=0, help="seed for randomized suites")
    args = parser.parse_args(argv)
    try:
        cfg = parse_config(args.config)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 1
    out_dir = args.out if args.out is not None else cfg.out_dir
    try:
        if args.command == "run":
            return cmd_run(cfg, out_dir)
        if args.command == "verify":
            return cmd_verify(cfg, args.seed)
        return cmd_spectrum(cfg)
    except MuskatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

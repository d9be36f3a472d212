"""Command-line entry point: ``latticewalk run | trace | lattice``.

``run`` and ``trace`` write CSV (or JSON) data plus a JSON manifest that
can be fed back through ``--config`` to regenerate the same bytes.
"""

from __future__ import annotations

import argparse
import datetime as _dt
import hashlib
import io
import json
import math
import sys
from pathlib import Path

from . import __version__, _kernels
from .analysis import error_sweep, offset_label, site_trace
from .lattice import (
    LatticeParams,
    NoSolutionError,
    adiabatic_time,
    coupling_ratio,
    measurement_offset,
    pulse_time,
    solve_secondary_amplitude,
    theta_from_timing,
    tunneling_coupling,
)
from .walk import BoundaryOverflowError

SIG_DIGITS = 12
# config keys that a manifest may restore, per subcommand
_CONFIG_KEYS = {
    "run": ("steps", "dt0", "classical", "lattice_halfwidth", "format"),
    "trace": ("site", "max_steps", "dt0", "classical", "lattice_halfwidth", "format"),
}


def fmt(value: float) -> str:
    """12 significant digits, always with a decimal point or exponent."""
    s = format(float(value), f".{SIG_DIGITS}g")
    if s == "-0":
        s = "0"
    if not any(c in s for c in ".einf"):
        s += ".0"
    return s


def _float_list(text: str) -> list[float]:
    try:
        vals = [float(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}")
    if not vals or not all(math.isfinite(v) for v in vals):
        raise argparse.ArgumentTypeError(f"expected finite numbers, got {text!r}")
    return vals


def _nonneg_int(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {v}")
    return v


def _table_csv(key: str, index, columns: dict[str, list[float]]) -> str:
    buf = io.StringIO()
    buf.write(",".join([key, *columns]) + "\n")
    for r, idx in enumerate(index):
        buf.write(",".join([str(int(idx))] + [fmt(col[r]) for col in columns.values()]) + "\n")
    return buf.getvalue()


def _table_json(key: str, index, columns: dict[str, list[float]], **meta) -> str:
    payload = dict(meta)
    payload[key] = [int(i) for i in index]
    payload["series"] = {k: [float(fmt(v)) for v in col] for k, col in columns.items()}
    return json.dumps(payload, indent=2) + "\n"


def _emit(args, key: str, index, columns, meta: dict) -> int:
    if args.format == "json":
        text = _table_json(key, index, columns, **meta)
    else:
        text = _table_csv(key, index, columns)
    if args.out is None:
        sys.stdout.write(text)
        return 0
    out = Path(args.out)
    out.parent.mkdir(parents=True, exist_ok=True)
    data = text.encode("utf-8")
    out.write_bytes(data)
    manifest = {
        "version": __version__,
        "config": _resolved_config(args),
        "outputs": {
            "created": _dt.datetime.now(_dt.timezone.utc).isoformat(timespec="seconds"),
            "files": [{"path": str(out), "sha256": hashlib.sha256(data).hexdigest()}],
        },
    }
    mpath = Path(args.manifest) if args.manifest else out.with_name(out.name + ".manifest.json")
    mpath.write_text(json.dumps(manifest, indent=2) + "\n", encoding="utf-8")
    return 0


def _resolved_config(args) -> dict:
    cfg = {"command": args.command}
    for k in _CONFIG_KEYS[args.command]:
        cfg[k] = getattr(args, k)
    cfg["lattice_halfwidth"] = _halfwidth(args)
    cfg["seed_free"] = True
    cfg["backend"] = _kernels.BACKEND.name
    return cfg


def _halfwidth(args) -> int:
    n = args.steps if args.command == "run" else args.max_steps
    return args.lattice_halfwidth if args.lattice_halfwidth is not None else n + 1


def cmd_run(args, parser) -> int:
    if args.steps is None:
        parser.error("--steps is required")
    dists = error_sweep(
        args.steps, args.dt0, classical=args.classical, L=_halfwidth(args), jobs=args.jobs
    )
    sites = dists[0].sites
    columns = {d.label: list(d.probabilities) for d in dists}
    return _emit(args, "site", sites, columns, {"step": args.steps})


def cmd_trace(args, parser) -> int:
    if args.site is None or args.max_steps is None:
        parser.error("--site and --max-steps are required")
    traces = site_trace(
        args.site, args.max_steps, args.dt0, classical=args.classical,
        L=_halfwidth(args), jobs=args.jobs,
    )
    steps = traces[0].steps
    columns = {t.label: list(t.values) for t in traces}
    return _emit(args, "step", steps, columns, {"site": args.site})


def cmd_lattice(args, parser) -> int:
    if args.solve_ratio is not None:
        try:
            vprime = solve_secondary_amplitude(args.v, args.solve_ratio)
        except NoSolutionError as exc:
            parser.error(str(exc))
        except ValueError as exc:
            parser.error(str(exc))
    elif args.vprime is not None:
        vprime = args.vprime
    else:
        parser.error("give --vprime or --solve-ratio")
    try:
        params = LatticeParams(args.v, vprime, wavelength=args.wavelength)
    except ValueError as exc:
        parser.error(str(exc))

    j_max = tunneling_coupling(params.V_max)
    j_min = tunneling_coupling(params.V_min)
    dt = pulse_time(j_min)
    report = {
        "V": params.V,
        "V_prime": params.V_prime,
        "V_max": params.V_max,
        "V_min": params.V_min,
        "J_max": j_max,
        "J_min": j_min,
        "ratio": coupling_ratio(params),
        "pulse_time": dt,
        "dt0": args.dt0,
        "theta": theta_from_timing(j_min, dt + args.dt0 / j_min),
    }
    if args.recoil_hz is not None:
        # hbar / E_R = 1 / (2 pi f_R)
        report["pulse_time_s"] = dt / (2 * math.pi * args.recoil_hz)
    if args.omega_t is not None:
        t = adiabatic_time(args.omega_t)
        report["adiabatic_time_s"] = t
        report["adiabatic_time_us"] = t * 1e6
    if args.wavelength is not None and args.site is not None:
        report["measurement_offset"] = measurement_offset(args.site, args.wavelength)

    if args.format == "table":
        width = max(len(k) for k in report)
        for k, v in report.items():
            sys.stdout.write(f"{k:<{width}}  {fmt(v)}\n")
    else:
        sys.stdout.write(json.dumps(report, indent=2) + "\n")
    return 0


def _positive(text: str) -> float:
    v = float(text)
    if not v > 0:
        raise argparse.ArgumentTypeError(f"must be > 0, got {text}")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="latticewalk", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def walk_flags(sp):
        sp.add_argument("--dt0", type=_float_list, default=[0.0],
                        help="pulse-time errors in units of 1/J_min, comma-separated (default 0)")
        sp.add_argument("--classical", action="store_true", help="append the classical walk column")
        sp.add_argument("--lattice-halfwidth", type=int, default=None,
                        help="lattice half-width L (default steps + 1)")
        sp.add_argument("--format", choices=("csv", "json"), default="csv")
        sp.add_argument("--out", default=None, help="output file (default stdout)")
        sp.add_argument("--manifest", default=None, help="manifest path (default OUT.manifest.json)")
        sp.add_argument("--config", default=None, help="manifest or config JSON to start from")
        sp.add_argument("--jobs", type=int, default=1, help="threads across offsets")

    run = sub.add_parser("run", help="position distributions after N steps")
    run.add_argument("--steps", type=_nonneg_int, default=None)
    walk_flags(run)
    run.set_defaults(func=cmd_run)

    tr = sub.add_parser("trace", help="probability at one site versus step")
    tr.add_argument("--site", type=int, default=None)
    tr.add_argument("--max-steps", type=_nonneg_int, default=None)
    walk_flags(tr)
    tr.set_defaults(func=cmd_trace)

    lat = sub.add_parser("lattice", help="couplings, timing and design for a superlattice")
    lat.add_argument("--v", type=_positive, required=True, help="primary amplitude V in E_R")
    lat.add_argument("--vprime", type=float, default=None, help="secondary amplitude V' in E_R")
    lat.add_argument("--solve-ratio", type=float, default=None,
                     help="solve for V' giving this J_max/J_min")
    lat.add_argument("--dt0", type=float, default=0.0, help="pulse-time error in units of 1/J_min")
    lat.add_argument("--omega-t", type=_positive, default=None, help="trap frequency (1/s)")
    lat.add_argument("--recoil-hz", type=_positive, default=None,
                     help="recoil frequency E_R/h, converts the pulse time to seconds")
    lat.add_argument("--wavelength", type=_positive, default=None)
    lat.add_argument("--site", type=int, default=None, help="readout site for the beam offset")
    lat.add_argument("--format", choices=("json", "table"), default="json")
    lat.set_defaults(func=cmd_lattice)
    return p


def _load_config(path: str, command: str, parser) -> dict:
    try:
        doc = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        parser.error(f"cannot read config {path}: {exc}")
    cfg = doc.get("config", doc)
    if cfg.get("command", command) != command:
        parser.error(f"config is for '{cfg['command']}', not '{command}'")
    return {k: cfg[k] for k in _CONFIG_KEYS[command] if k in cfg}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "config", None):
        defaults = _load_config(args.config, args.command, parser)
        # explicit flags still win: reparse with the config as defaults
        sub = parser._subparsers._group_actions[0].choices[args.command]
        sub.set_defaults(**defaults)
        args = parser.parse_args(argv)
    try:
        return args.func(args, parser)
    except BoundaryOverflowError as exc:
        print(f"latticewalk: error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        parser.error(str(exc))


if __name__ == "__main__":
    raise SystemExit(main())

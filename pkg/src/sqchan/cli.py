"""Command line front end: every library capability as a subcommand.

Tables are emitted as CSV (header row, 12 significant digits, LF endings) or
as JSON conforming to the schema shipped at ``sqchan/schemas/output.schema.json``.
A JSON config file can supply any flag; flags given on the command line win.
Grids are written "lo:hi:count" (inclusive, linear) or "log:lo:hi:count"
(geometric).  All diagnostics go to stderr and any failed operation exits
nonzero.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import asdict

import numpy as np

from .channel import ChannelConfig, realize, overlap, snr_term
from .detection import (
    helstrom_np_bound,
    min_energy,
    asymptotic_min_energy,
    optimal_gamma,
    roc_point,
    threshold_from_size,
)
from .errors import DomainError, SqchanError
from .fuzzy import (
    FuzzyAlternative,
    fuzzy_decision_region,
    fuzzy_roc,
    level_for_size,
    optimal_gamma_mixed,
)
from .infotheory import BinaryChannel, mutual_information, squeezing_gain
from .montecarlo import simulate
from .numerics import Interval, maximize_scalar

__all__ = ["main", "parse_grid"]

SCHEMA_PATH = "schemas/output.schema.json"

_DEFAULTS = {
    "roc": {"gamma": "0", "sigma_mix": "0", "format": "csv"},
    "sweep": {"gamma": "0:0.9:19", "sigma_mix": "0", "format": "csv"},
    "optimize": {"sigma_mix": "0", "format": "csv"},
    "min-energy": {"gamma": "0", "format": "csv"},
    "mutual-info": {"gamma": "opt", "sigma_mix": "0", "format": "csv"},
    "mixed-gain": {"sigma_mix": "weak", "format": "csv"},
    "simulate": {
        "gamma": "0",
        "sigma_mix": "0",
        "trials": "1000000",
        "seed": "0",
        "format": "json",
    },
}


def parse_grid(text: str) -> list[float]:
    """Parse "lo:hi:count" (linear, inclusive) or "log:lo:hi:count" (geometric)."""
    parts = str(text).split(":")
    try:
        if parts[0] == "log":
            if len(parts) != 4:
                raise ValueError
            lo, hi, count = float(parts[1]), float(parts[2]), int(parts[3])
            if count < 1 or lo <= 0.0 or hi <= 0.0:
                raise ValueError
            return [float(v) for v in np.geomspace(lo, hi, count)]
        if len(parts) != 3:
            raise ValueError
        lo, hi, count = float(parts[0]), float(parts[1]), int(parts[2])
        if count < 1:
            raise ValueError
        return [float(v) for v in np.linspace(lo, hi, count)]
    except (ValueError, IndexError):
        raise DomainError(
            f"bad grid {text!r}; expected lo:hi:count or log:lo:hi:count"
        ) from None


def _as_float(value, flag: str) -> float:
    try:
        return float(value)
    except (TypeError, ValueError):
        raise DomainError(f"--{flag} expects a number, got {value!r}") from None


def _as_int(value, flag: str) -> int:
    try:
        return int(str(value), 10)
    except (TypeError, ValueError):
        raise DomainError(f"--{flag} expects an integer, got {value!r}") from None


def _float_list(value, flag: str) -> list[float]:
    items = str(value).split(",")
    try:
        return [float(item) for item in items if item != ""]
    except ValueError:
        raise DomainError(f"--{flag} expects comma separated numbers, got {value!r}") from None


def _require(options: dict, *names: str) -> None:
    for name in names:
        if options.get(name) is None:
            raise DomainError(f"missing required option --{name.replace('_', '-')}")


def _resolve_gamma(raw, energy: float, sigma_mix: float) -> float:
    """A --gamma value: a number, or "opt" for the jitter-aware optimum."""
    if isinstance(raw, str) and raw.strip() == "opt":
        return optimal_gamma_mixed(energy, sigma_mix)
    return _as_float(raw, "gamma")


def _gamma_axis(raw) -> list[float] | None:
    """A --gamma value holding a grid spec, or None when it is scalar."""
    if isinstance(raw, str) and ":" in raw:
        return parse_grid(raw)
    return None


def _size_axis(options: dict) -> list[float]:
    if options.get("grid") is not None:
        return parse_grid(options["grid"])
    if options.get("q0") is not None:
        return _float_list(options["q0"], "q0")
    raise DomainError("missing required option --grid or --q0")


def _power_at(pair, sigma_mix: float, size: float) -> float:
    if sigma_mix > 0.0:
        alt = FuzzyAlternative(center=pair.amplitude, spread=sigma_mix)
        return fuzzy_roc(pair, alt, size)
    return roc_point(pair, size)


def _cmd_roc(options: dict) -> dict:
    _require(options, "energy")
    energy = _as_float(options["energy"], "energy")
    sigma_mix = _as_float(options["sigma_mix"], "sigma-mix")
    gamma = _resolve_gamma(options["gamma"], energy, sigma_mix)
    sizes = _size_axis(options)
    pair = realize(ChannelConfig(energy, gamma, sigma_mix))
    bound_overlap = overlap(pair)
    rows = [
        [q0, _power_at(pair, sigma_mix, q0), helstrom_np_bound(bound_overlap, q0)]
        for q0 in sizes
    ]
    return {
        "command": "roc",
        "parameters": {
            "energy": energy,
            "gamma": str(options["gamma"]),
            "gamma_resolved": gamma,
            "sigma_mix": sigma_mix,
        },
        "columns": ["Q0", "Q1_x", "Q1_helstrom"],
        "rows": rows,
    }


def _cmd_sweep(options: dict) -> dict:
    _require(options, "energy", "grid")
    energy = _as_float(options["energy"], "energy")
    sigma_mix = _as_float(options["sigma_mix"], "sigma-mix")
    sizes = parse_grid(options["grid"])
    gammas = _gamma_axis(options["gamma"])
    if gammas is None:
        gammas = [_resolve_gamma(options["gamma"], energy, sigma_mix)]
    pairs = [realize(ChannelConfig(energy, g, sigma_mix)) for g in gammas]
    rows = [
        [q0, g, _power_at(pair, sigma_mix, q0)]
        for q0 in sizes
        for g, pair in zip(gammas, pairs)
    ]
    return {
        "command": "sweep",
        "parameters": {
            "energy": energy,
            "gamma": str(options["gamma"]),
            "sigma_mix": sigma_mix,
        },
        "columns": ["Q0", "gamma", "Q1"],
        "rows": rows,
    }


def _cmd_optimize(options: dict) -> dict:
    if options.get("grid") is not None:
        energies = parse_grid(options["grid"])
    elif options.get("energy") is not None:
        energies = [_as_float(options["energy"], "energy")]
    else:
        raise DomainError("missing required option --grid or --energy")
    sigma_mix = _as_float(options["sigma_mix"], "sigma-mix")
    rows = []
    for energy in energies:
        gamma = optimal_gamma_mixed(energy, sigma_mix)
        gamma_cap = 1.0 - sigma_mix * sigma_mix / (2.0 * energy)

        def separation(g: float, energy=energy) -> float:
            return snr_term(realize(ChannelConfig(energy, g, sigma_mix)))

        gamma_numeric, _ = maximize_scalar(
            separation, Interval(0.0, min(gamma_cap, 1.0 - 1e-12)), tol=1e-10
        )
        rows.append([energy, sigma_mix, gamma, gamma_numeric, separation(gamma)])
    return {
        "command": "optimize",
        "parameters": {"sigma_mix": sigma_mix},
        "columns": ["E_T", "Sigma", "gamma_opt", "gamma_opt_numeric", "separation"],
        "rows": rows,
    }


def _cmd_min_energy(options: dict) -> dict:
    sizes = _size_axis(options)
    raw_gamma = options["gamma"]
    if isinstance(raw_gamma, str) and raw_gamma.strip() == "opt":
        raise DomainError(
            '--gamma "opt" is circular here: the optimal fraction depends on the '
            "energy this command solves for"
        )
    gammas = _gamma_axis(raw_gamma) or [_as_float(raw_gamma, "gamma")]
    rows = []
    for q0 in sizes:
        asym = asymptotic_min_energy(q0)
        for g in gammas:
            bounds = min_energy(q0, g)
            rows.append(
                [q0, g, bounds.root, bounds.closed_form, asym.coherent, asym.squeezed]
            )
    return {
        "command": "min-energy",
        "parameters": {"gamma": str(raw_gamma)},
        "columns": [
            "Q0",
            "gamma",
            "E_root",
            "E_closed_form",
            "E_asym_coherent",
            "E_asym_squeezed",
        ],
        "rows": rows,
    }


def _cmd_mutual_info(options: dict) -> dict:
    _require(options, "grid", "q0")
    energies = parse_grid(options["grid"])
    sizes = _float_list(options["q0"], "q0")
    sigma_mix = _as_float(options["sigma_mix"], "sigma-mix")
    rows = []
    for energy in energies:
        gamma = _resolve_gamma(options["gamma"], energy, sigma_mix)
        pair = realize(ChannelConfig(energy, gamma, sigma_mix))
        bound_overlap = overlap(pair)
        for q0 in sizes:
            info_x = mutual_information(BinaryChannel(q0, _power_at(pair, sigma_mix, q0)))
            info_opt = mutual_information(
                BinaryChannel(q0, helstrom_np_bound(bound_overlap, q0))
            )
            rows.append([energy, q0, info_x, info_opt, 10.0 * math.log10(info_x / info_opt)])
    return {
        "command": "mutual-info",
        "parameters": {"gamma": str(options["gamma"]), "sigma_mix": sigma_mix},
        "columns": ["E_T", "Q0", "I_x", "I_opt", "ratio_dB"],
        "rows": rows,
    }


def _sigma_rule(raw, energy: float) -> float:
    if isinstance(raw, str):
        rule = raw.strip()
        if rule == "weak":
            return math.sqrt(2.0 * energy) / 10.0
        if rule == "strong":
            return 2.0 * math.sqrt(2.0 * energy) / 3.0
    return _as_float(raw, "sigma-mix")


def _cmd_mixed_gain(options: dict) -> dict:
    _require(options, "grid", "q0")
    energies = parse_grid(options["grid"])
    sizes = _float_list(options["q0"], "q0")
    rows = []
    for energy in energies:
        sigma_mix = _sigma_rule(options["sigma_mix"], energy)
        for q0 in sizes:
            gain = squeezing_gain(energy, sigma_mix, q0)
            rows.append([energy, sigma_mix, q0, gain.ratio, gain.decibels])
    return {
        "command": "mixed-gain",
        "parameters": {"sigma_mix": str(options["sigma_mix"])},
        "columns": ["E_T", "Sigma", "Q0", "R", "R_dB"],
        "rows": rows,
    }


def _cmd_simulate(options: dict) -> dict:
    _require(options, "energy", "q0")
    energy = _as_float(options["energy"], "energy")
    sigma_mix = _as_float(options["sigma_mix"], "sigma-mix")
    gamma = _resolve_gamma(options["gamma"], energy, sigma_mix)
    sizes = _float_list(options["q0"], "q0")
    if len(sizes) != 1:
        raise DomainError(f"simulate expects a single --q0 size, got {len(sizes)}")
    size = sizes[0]
    trials = _as_int(options["trials"], "trials")
    seed = _as_int(options["seed"], "seed")
    config = ChannelConfig(energy, gamma, sigma_mix)
    pair = realize(config)
    if sigma_mix > 0.0:
        alt = FuzzyAlternative(center=pair.amplitude, spread=sigma_mix)
        strategy = fuzzy_decision_region(pair, alt, level_for_size(pair, alt, size))
    else:
        strategy = threshold_from_size(pair, size)
    report = simulate(config, strategy, trials, seed)
    return {
        "command": "simulate",
        "parameters": {
            "energy": energy,
            "gamma": str(options["gamma"]),
            "gamma_resolved": gamma,
            "sigma_mix": sigma_mix,
            "q0": size,
        },
        "report": asdict(report),
    }


_HANDLERS = {
    "roc": _cmd_roc,
    "sweep": _cmd_sweep,
    "optimize": _cmd_optimize,
    "min-energy": _cmd_min_energy,
    "mutual-info": _cmd_mutual_info,
    "mixed-gain": _cmd_mixed_gain,
    "simulate": _cmd_simulate,
}


def _format_number(value) -> str:
    if isinstance(value, (int, np.integer)) and not isinstance(value, bool):
        return str(int(value))
    return format(float(value), ".12g")


def render_csv(payload: dict) -> str:
    """Tables become header plus rows; a simulation report becomes one row."""
    if "report" in payload:
        report = payload["report"]
        columns = list(report)
        rows = [[report[c] for c in columns]]
    else:
        columns = payload["columns"]
        rows = payload["rows"]
    lines = [",".join(columns)]
    lines.extend(",".join(_format_number(v) for v in row) for row in rows)
    return "\n".join(lines) + "\n"


def render_json(payload: dict) -> str:
    return json.dumps(payload, indent=2) + "\n"


def _load_config(path: str) -> dict:
    with open(path, encoding="utf-8") as fh:
        data = json.load(fh)
    if not isinstance(data, dict):
        raise DomainError(f"config file {path!r} must hold a JSON object of flags")
    return {str(key).replace("-", "_"): value for key, value in data.items()}


def _merge_options(args: argparse.Namespace) -> dict:
    """Defaults, then config file values, then explicit flags."""
    given = {
        key: value
        for key, value in vars(args).items()
        if key not in ("command", "config") and value is not None
    }
    known = {
        key
        for key in vars(args)
        if key not in ("command", "config")
    }
    options = dict(_DEFAULTS[args.command])
    if args.config is not None:
        for key, value in _load_config(args.config).items():
            if key not in known:
                raise DomainError(
                    f"config key {key!r} is not an option of {args.command!r}"
                )
            options[key] = value
    options.update(given)
    if options.get("format") not in ("csv", "json"):
        raise DomainError(f"format must be csv or json, got {options.get('format')!r}")
    return options


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=("csv", "json"), default=None,
                        help="output format (default csv; simulate defaults to json)")
    parser.add_argument("--out", default=None, metavar="PATH",
                        help="write output to a file instead of stdout")
    parser.add_argument("--config", default=None, metavar="PATH",
                        help="JSON object supplying any flag; explicit flags win")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sqchan",
        description="Amplitude-keyed Gaussian channels: thresholds, ROC curves, "
        "information rates, and Monte Carlo validation.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    roc = sub.add_parser("roc", help="power-size samples with the ideal-receiver bound")
    roc.add_argument("--energy", default=None, help="total channel energy")
    roc.add_argument("--gamma", default=None, help='squeezing fraction, a number or "opt"')
    roc.add_argument("--sigma-mix", dest="sigma_mix", default=None,
                     help="amplitude jitter spread (default 0)")
    roc.add_argument("--grid", default=None, help="size axis, lo:hi:count or log:lo:hi:count")
    roc.add_argument("--q0", default=None, help="explicit sizes, comma separated")
    _add_common(roc)

    sweep = sub.add_parser("sweep", help="power over a size by squeezing-fraction grid")
    sweep.add_argument("--energy", default=None, help="total channel energy")
    sweep.add_argument("--grid", default=None, help="size axis, lo:hi:count")
    sweep.add_argument("--gamma", default=None,
                       help='fraction axis: a grid spec, a number, or "opt"')
    sweep.add_argument("--sigma-mix", dest="sigma_mix", default=None,
                       help="amplitude jitter spread (default 0)")
    _add_common(sweep)

    optimize = sub.add_parser(
        "optimize", help="optimal squeezing fraction, closed form and numerical"
    )
    optimize.add_argument("--energy", default=None, help="single total channel energy")
    optimize.add_argument("--grid", default=None, help="energy axis, lo:hi:count")
    optimize.add_argument("--sigma-mix", dest="sigma_mix", default=None,
                          help="amplitude jitter spread (default 0)")
    _add_common(optimize)

    men = sub.add_parser("min-energy", help="minimum detectable energy table")
    men.add_argument("--grid", default=None, help="size axis, lo:hi:count")
    men.add_argument("--q0", default=None, help="explicit sizes, comma separated")
    men.add_argument("--gamma", default=None, help="fraction: a number or a grid spec")
    _add_common(men)

    mi = sub.add_parser("mutual-info", help="information versus energy")
    mi.add_argument("--grid", default=None, help="energy axis, lo:hi:count")
    mi.add_argument("--q0", default=None, help="sizes, comma separated")
    mi.add_argument("--gamma", default=None, help='fraction: a number or "opt" (default)')
    mi.add_argument("--sigma-mix", dest="sigma_mix", default=None,
                    help="amplitude jitter spread (default 0)")
    _add_common(mi)

    mg = sub.add_parser("mixed-gain", help="squeezed over unsqueezed information ratio")
    mg.add_argument("--grid", default=None, help="energy axis, lo:hi:count")
    mg.add_argument("--q0", default=None, help="sizes, comma separated")
    mg.add_argument("--sigma-mix", dest="sigma_mix", default=None,
                    help='jitter rule: "weak", "strong", or an explicit spread')
    _add_common(mg)

    sim = sub.add_parser("simulate", help="Monte Carlo validation report")
    sim.add_argument("--energy", default=None, help="total channel energy")
    sim.add_argument("--gamma", default=None, help='squeezing fraction, a number or "opt"')
    sim.add_argument("--sigma-mix", dest="sigma_mix", default=None,
                     help="amplitude jitter spread (default 0)")
    sim.add_argument("--q0", default=None, help="strategy size")
    sim.add_argument("--trials", default=None, help="trials per hypothesis (default 10^6)")
    sim.add_argument("--seed", default=None, help="stream seed, 64-bit unsigned (default 0)")
    _add_common(sim)

    return parser


def _write_output(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        options = _merge_options(args)
        payload = _HANDLERS[args.command](options)
        text = render_csv(payload) if options["format"] == "csv" else render_json(payload)
        _write_output(text, options.get("out"))
    except (SqchanError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())

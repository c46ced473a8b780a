"""Command-line interface: preset/config runs, validation, telegraph oracle.

Subcommands
-----------
``run --preset fig2..fig8 | --config FILE [--out-dir D] [--seed N]``
    Evaluate all four quantifiers on a time grid, write
    ``<name>.csv`` (header ``tau,hss,chi,negativity,mid``, 12 significant
    digits) and ``<name>.svg`` next to each other.

``validate``
    Golden-matrix, closed-form-equivalence and Monte-Carlo cross-check
    suites; nonzero exit on any failure.

``oracle-dn --n N --q Q --tau T [--trials K] [--seed S]``
    Print the Monte-Carlo telegraph average against the closed form.

Exit codes: 0 success, 2 invalid configuration, 3 numerical failure.
Set HSSWITNESS_WORKERS to parallelize Monte-Carlo chunks.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import validation
from .decoherence import (OhmicSpectralDensity, RtnParams, SqueezedBathParams,
                          ThermalBathParams, rtn_dn, rtn_dn_montecarlo)
from .dynamics import (QUBIT_QUTRIT, CompositeRtnSqueezed, RtnCommon,
                       RtnIndependent, Scenario, SpinLayout, SqueezedVacuum,
                       ThermalOhmic)
from .errors import ConfigInvalid, HsswitnessError, InvalidParams
from .plotting import series_svg
from .witnesses import WitnessSeries, compute_series, extrema_report

CONFIG_VERSION = 1

#: figure-style presets; tau ranges are read qualitatively off the plots and
#: therefore overridable via --config
PRESETS: dict[str, dict] = {
    "fig2": {"scenario": {"kind": "squeezed"}, "tau_max": 3.0},
    "fig3": {"scenario": {"kind": "squeezed"}, "tau_max": 3.0, "p": 0.3},
    "fig4": {"scenario": {"kind": "rtn_independent", "q": 0.1}, "tau_max": 30.0},
    "fig5": {"scenario": {"kind": "rtn_independent", "q": 0.1},
             "tau_max": 30.0, "p": 0.4},
    "fig6": {"scenario": {"kind": "rtn_common", "q": 0.1},
             "tau_max": 30.0, "p": 0.0},
    "fig7": {"scenario": {"kind": "composite", "q": 0.1, "nu_ratio": 100.0},
             "tau_max": 30.0},
    "fig8": {"scenario": {"kind": "composite", "q": 0.1, "nu_ratio": 100.0},
             "tau_max": 30.0, "p": 0.0},
}

_BATH_DEFAULTS = {"alpha": 0.1, "s_ohmic": 3.0, "omega_c": 20.0,
                  "r": 0.3, "theta": 0.0, "temperature": 0.0}


@dataclass
class RunConfig:
    name: str
    scenario: Scenario
    tau_max: float = 3.0
    grid_points: int = 600
    phi: float = float(np.pi)
    p: float | None = None
    outputs: tuple = ("csv", "svg")
    seed: int = 0

    def __post_init__(self):
        if self.grid_points < 16:
            raise ConfigInvalid("grid_points must be >= 16")
        if self.tau_max <= 0:
            raise ConfigInvalid("tau_max must be > 0")
        bad = set(self.outputs) - {"csv", "svg"}
        if bad:
            raise ConfigInvalid(f"unknown outputs {sorted(bad)}")


def _build_scenario(block: dict) -> Scenario:
    kind = block.get("kind")
    bath_kw = {k: block.get(k, v) for k, v in _BATH_DEFAULTS.items()}
    spectral = OhmicSpectralDensity(alpha=bath_kw["alpha"],
                                    s_ohmic=bath_kw["s_ohmic"],
                                    omega_c=bath_kw["omega_c"])
    try:
        if kind == "squeezed":
            bath = SqueezedBathParams(spectral, r=bath_kw["r"],
                                      theta=bath_kw["theta"])
            if "spin" in block:
                return Scenario(SpinLayout((block["spin"],)), SqueezedVacuum(bath))
            return Scenario(QUBIT_QUTRIT, SqueezedVacuum(bath))
        if kind == "thermal":
            bath = ThermalBathParams(spectral, temperature=bath_kw["temperature"])
            layout = (SpinLayout((block["spin"],)) if "spin" in block
                      else QUBIT_QUTRIT)
            return Scenario(layout, ThermalOhmic(bath))
        if kind in ("rtn_independent", "rtn_common"):
            rtn = RtnParams(nu=block.get("nu", 1.0),
                            gamma_rate=block.get("q", 0.1) * block.get("nu", 1.0))
            env = (RtnCommon if kind == "rtn_common" else RtnIndependent)(rtn)
            return Scenario(QUBIT_QUTRIT, env)
        if kind == "composite":
            rtn = RtnParams(nu=1.0, gamma_rate=block.get("q", 0.1))
            bath = SqueezedBathParams(spectral, r=bath_kw["r"],
                                      theta=bath_kw["theta"])
            return Scenario(QUBIT_QUTRIT, CompositeRtnSqueezed(
                rtn=rtn, bath=bath, nu_ratio=block.get("nu_ratio", 100.0)))
    except InvalidParams as exc:
        raise ConfigInvalid(str(exc)) from exc
    raise ConfigInvalid(f"unknown scenario kind {kind!r}")


def load_config(name: str, raw: dict) -> RunConfig:
    if raw.get("version", CONFIG_VERSION) != CONFIG_VERSION:
        raise ConfigInvalid(f"unsupported config version {raw.get('version')}")
    if "scenario" not in raw:
        raise ConfigInvalid("config needs a 'scenario' block")
    kwargs = {}
    for key in ("tau_max", "grid_points", "phi", "p", "seed"):
        if raw.get(key) is not None:
            kwargs[key] = raw[key]
    if "outputs" in raw:
        kwargs["outputs"] = tuple(raw["outputs"])
    return RunConfig(name=name, scenario=_build_scenario(raw["scenario"]),
                     **kwargs)


def series_to_csv(series: WitnessSeries) -> str:
    lines = ["tau,hss,chi,negativity,mid"]
    for k in range(series.tau_grid.size):
        lines.append(",".join(format(v, ".12g") for v in (
            series.tau_grid[k], series.hss[k], series.chi[k],
            series.negativity[k], series.mid[k])))
    return "\n".join(lines) + "\n"


def run_config(config: RunConfig, out_dir: Path) -> WitnessSeries:
    grid = np.linspace(0.0, config.tau_max, config.grid_points)
    series = compute_series(config.scenario, grid, phi=config.phi,
                            mixed_p=config.p)
    report = extrema_report(series)
    out_dir.mkdir(parents=True, exist_ok=True)
    if "csv" in config.outputs:
        (out_dir / f"{config.name}.csv").write_text(series_to_csv(series))
    if "svg" in config.outputs:
        svg = series_svg(series.tau_grid,
                         {"HSS": series.hss, "chi": series.chi,
                          "negativity": series.negativity, "MID": series.mid},
                         title=config.name)
        (out_dir / f"{config.name}.svg").write_text(svg)
    n_ext = len(report.extrema["hss"])
    print(f"{config.name}: {config.grid_points} points, "
          f"{n_ext} HSS extrema, "
          f"{len(series.nonmarkov_intervals)} non-Markovian interval(s), "
          f"{len(report.sudden_death)} sudden-death interval(s)")
    return series


def _cmd_run(args) -> int:
    if bool(args.preset) == bool(args.config):
        print("run: exactly one of --preset / --config is required",
              file=sys.stderr)
        return 2
    try:
        if args.preset:
            if args.preset not in PRESETS:
                raise ConfigInvalid(f"unknown preset {args.preset!r}; "
                                    f"choose from {sorted(PRESETS)}")
            config = load_config(args.preset, dict(PRESETS[args.preset]))
        else:
            path = Path(args.config)
            try:
                raw = json.loads(path.read_text())
            except (OSError, json.JSONDecodeError) as exc:
                raise ConfigInvalid(f"cannot read config {path}: {exc}") from exc
            config = load_config(path.stem, raw)
        if args.seed is not None:
            config.seed = args.seed
    except ConfigInvalid as exc:
        print(f"invalid configuration: {exc}", file=sys.stderr)
        return 2
    try:
        run_config(config, Path(args.out_dir))
    except HsswitnessError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 3
    return 0


def _cmd_validate(args) -> int:
    ok = validation.run_validation(trials=args.trials, seed=args.seed)
    print("validation:", "PASS" if ok else "FAIL")
    return 0 if ok else 1


def _cmd_oracle_dn(args) -> int:
    try:
        mean, err = rtn_dn_montecarlo(args.n, args.q, args.tau,
                                      args.trials, args.seed)
        exact = rtn_dn(args.n, args.q, args.tau)
    except InvalidParams as exc:
        print(f"invalid parameters: {exc}", file=sys.stderr)
        return 2
    sigma = abs(mean - exact) / err if err > 0 else 0.0
    print(f"monte-carlo: {mean:.6f} +/- {err:.6f}  "
          f"closed-form: {exact:.6f}  ({sigma:.2f} sigma)")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hsswitness",
        description="open-system non-Markovianity witnesses "
                    "(HSS, negativity, MID) under dephasing environments")
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="evaluate a preset or config file")
    p_run.add_argument("--preset", choices=sorted(PRESETS))
    p_run.add_argument("--config", help="JSON run configuration")
    p_run.add_argument("--out-dir", default=".", help="output directory")
    p_run.add_argument("--seed", type=int, default=None)
    p_run.set_defaults(func=_cmd_run)

    p_val = sub.add_parser("validate", help="run the cross-check suites")
    p_val.add_argument("--trials", type=int, default=100_000)
    p_val.add_argument("--seed", type=int, default=11)
    p_val.set_defaults(func=_cmd_validate)

    p_dn = sub.add_parser("oracle-dn",
                          help="Monte-Carlo telegraph average vs closed form")
    p_dn.add_argument("--n", type=int, required=True)
    p_dn.add_argument("--q", type=float, required=True)
    p_dn.add_argument("--tau", type=float, required=True)
    p_dn.add_argument("--trials", type=int, default=100_000)
    p_dn.add_argument("--seed", type=int, default=0)
    p_dn.set_defaults(func=_cmd_oracle_dn)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())

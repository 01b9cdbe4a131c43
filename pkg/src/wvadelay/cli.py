"""Command-line front end: reference scenarios and parameter sweeps to CSV or JSON.

Every output file ``X`` gets a sibling ``X.manifest.json`` holding the tool
version, the resolved configuration in CLI and SI units, a timestamp and the
SHA-256 of each output. CSV files start with ``# manifest: <name>`` and are
byte-identical across runs with the same inputs.
"""

from __future__ import annotations

import argparse
import dataclasses
import datetime as _dt
import hashlib
import json
import math
import os
import sys
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from . import __version__
from .detector import (
    effective_overlap,
    required_input_photons,
    resolution_limited_error,
    saturated_overlap,
    solve_projection_for_budget,
)
from .errors import DegenerateConfigurationError, InvalidParameterError, NoSolutionError, WVAError
from .estimation import (
    fisher_endpoints,
    fisher_information,
    helstrom_error_from_exponent,
)
from .overlap import input_state_overlap, mode_overlap_closed
from .pulse import C_ROUNDED, make_pulse, require_narrowband
from .report import distinguishability_report
from .scheme import (
    Port,
    SchemeConfig,
    centroid_shift,
    insertion_loss_db,
    output_amplitudes,
    port_transmission,
)

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_DEGENERATE = 3
EXIT_NO_SOLUTION = 4

COMMANDS = (
    "spectrum",
    "centroid-sweep",
    "overlap-sweep",
    "error-curve",
    "budget",
    "fisher",
    "effective-overlap",
    "report",
)

# flag name -> (type, default); list-valued flags accept comma-separated values
OPTIONS = {
    "lambda0-um": (float, 1.5),
    "t0-fs": (float, 100.0),
    "tau-as": ("list", [100.0]),
    "tau0-fs": (float, 0.0),
    "theta-deg": (float, 0.0),
    "n-photons": ("list", [1e6]),
    "sigma-hz": (float, None),
    "n0-photons": (float, None),
    "floor-a": (float, 0.9),
    "floor-n": (int, 100),
    "c-light": (float, C_ROUNDED),
    "sweep": (str, None),
    "out": (str, None),
    "format": (str, None),
}

# sweepable parameter -> commands accepting it
SWEEP_PARAMS = {
    "f_thz": {"spectrum"},
    "theta_deg": {"centroid-sweep", "overlap-sweep", "fisher"},
    "tau_as": {"overlap-sweep", "fisher"},
    "n_photons": {"error-curve"},
    "rho": {"effective-overlap"},
}


class CLIError(Exception):
    def __init__(self, code: str, message: str, status: int):
        super().__init__(message)
        self.code = code
        self.status = status


def _validation(message: str) -> CLIError:
    return CLIError("validation", message, EXIT_VALIDATION)


# ---------------------------------------------------------------------------
# parsing


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _validation(message)


def _parse_list(text: str) -> list[float]:
    try:
        values = [float(v) for v in str(text).split(",") if v.strip()]
    except ValueError:
        raise _validation(f"expected comma-separated numbers, got {text!r}")
    if not values:
        raise _validation("empty value list")
    return values


def _coerce(name: str, raw):
    kind, _ = OPTIONS[name]
    if raw is None:
        return None
    if kind == "list":
        return raw if isinstance(raw, list) else _parse_list(raw)
    try:
        if kind is int:
            value = float(raw)
            if value != int(value):
                raise ValueError
            return int(value)
        return kind(raw)
    except ValueError:
        raise _validation(f"--{name}: cannot parse {raw!r}")


def read_config_file(path: str) -> dict:
    """Parse a flat ``key = value`` file whose keys are CLI flag names."""
    values = {}
    try:
        with open(path, encoding="utf-8") as fh:
            lines = fh.readlines()
    except OSError as exc:
        raise _validation(f"cannot read config {path!r}: {exc.strerror}")
    for lineno, line in enumerate(lines, 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        key = key.strip().lstrip("-").replace("_", "-")
        if not sep or key not in OPTIONS or key == "sweep" and not value.strip():
            raise _validation(f"{path}:{lineno}: bad entry {line!r}")
        values[key] = value.strip()
    return values


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    for name in OPTIONS:
        common.add_argument(f"--{name}", dest=name.replace("-", "_"), default=None)
    common.add_argument("--config", default=None)
    parser = _Parser(prog="wvadelay", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"wvadelay {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for command in COMMANDS:
        sub.add_parser(command, parents=[common])
    return parser


@dataclass
class Settings:
    command: str
    values: dict
    explicit: set

    def __getitem__(self, name):
        return self.values[name]


def resolve_settings(argv) -> Settings:
    args = build_parser().parse_args(argv)
    from_file = read_config_file(args.config) if args.config else {}
    values, explicit = {}, set()
    for name, (_, default) in OPTIONS.items():
        cli_value = getattr(args, name.replace("-", "_"))
        raw = cli_value if cli_value is not None else from_file.get(name)
        if raw is not None:
            explicit.add(name)
        value = _coerce(name, raw)
        values[name] = default if value is None else value
    fmt = values["format"] or ("json" if args.command == "report" else "csv")
    if fmt not in ("csv", "json"):
        raise _validation(f"--format must be csv or json, got {fmt!r}")
    values["format"] = fmt
    return Settings(args.command, values, explicit)


@dataclass(frozen=True)
class Sweep:
    param: str
    values: tuple


def parse_sweep(text: str, command: str) -> Sweep:
    """``param:start:stop:count`` with an optional ``:log`` suffix for geometric spacing."""
    parts = text.split(":")
    if len(parts) not in (4, 5) or (len(parts) == 5 and parts[4] != "log"):
        raise _validation(f"--sweep expects param:start:stop:count[:log], got {text!r}")
    param = parts[0]
    if param not in SWEEP_PARAMS or command not in SWEEP_PARAMS[param]:
        allowed = sorted(p for p, cmds in SWEEP_PARAMS.items() if command in cmds)
        raise _validation(f"cannot sweep {param!r} for {command}; allowed: {', '.join(allowed) or 'none'}")
    try:
        start, stop, count = float(parts[1]), float(parts[2]), int(parts[3])
    except ValueError:
        raise _validation(f"--sweep bounds must be numbers, got {text!r}")
    if count < 2:
        raise _validation("sweep count must be at least 2")
    if len(parts) == 5:
        if start <= 0 or stop <= 0:
            raise _validation("log sweep needs positive bounds")
        values = np.geomspace(start, stop, count)
    else:
        values = np.linspace(start, stop, count)
    return Sweep(param, tuple(float(v) for v in values))


# ---------------------------------------------------------------------------
# configuration


def _single(settings: Settings, name: str) -> float:
    values = settings[name]
    if len(values) != 1:
        raise _validation(f"--{name} takes a single value for {settings.command}")
    return values[0]


def make_config(settings: Settings, tau_as: Optional[float] = None,
                n_photons: Optional[float] = None) -> SchemeConfig:
    """SchemeConfig in SI units from CLI-unit settings; validates the pulse regime."""
    try:
        pulse = make_pulse(settings["lambda0-um"] * 1e-6, settings["t0-fs"] * 1e-15,
                           c=settings["c-light"])
        require_narrowband(pulse)
        tau = (tau_as if tau_as is not None else _single(settings, "tau-as")) * 1e-18
        n = n_photons if n_photons is not None else _single(settings, "n-photons")
        cfg = SchemeConfig(pulse, tau=tau, theta=math.radians(settings["theta-deg"]),
                           tau0=settings["tau0-fs"] * 1e-15, n_photons=n)
    except InvalidParameterError as exc:
        raise _validation(str(exc))
    if abs(cfg.tau) > pulse.T0 / 10:
        print(f"warning: |tau| = {abs(cfg.tau):.3g} s exceeds T0/10", file=sys.stderr)
    return cfg


def si_config(settings: Settings) -> dict:
    s = settings
    return {
        "lambda0_m": s["lambda0-um"] * 1e-6,
        "T0_s": s["t0-fs"] * 1e-15,
        "tau_s": [t * 1e-18 for t in s["tau-as"]],
        "tau0_s": s["tau0-fs"] * 1e-15,
        "theta_rad": math.radians(s["theta-deg"]),
        "n_photons": list(s["n-photons"]),
        "sigma_hz": s["sigma-hz"],
        "n0_photons": s["n0-photons"],
        "floor_a": s["floor-a"],
        "floor_n": s["floor-n"],
        "c_m_per_s": s["c-light"],
    }


# ---------------------------------------------------------------------------
# tables


@dataclass
class Table:
    name: str
    columns: list
    rows: list = dataclasses.field(default_factory=list)


def _fmt(value) -> str:
    if value is None:
        return ""
    if isinstance(value, str):
        return value
    if isinstance(value, (int, np.integer)) and not isinstance(value, bool):
        return str(int(value))
    return f"{float(value):.16e}"


def _guarded(fn: Callable[[], tuple], width: int) -> tuple:
    """Row values, or blanks plus a ``degenerate`` flag when the point is undefined."""
    try:
        return tuple(fn()) + ("",)
    except DegenerateConfigurationError:
        return (None,) * width + ("degenerate",)


def _sweep_or_default(settings: Settings, default: str) -> Sweep:
    text = settings["sweep"] or default
    return parse_sweep(text, settings.command)


def table_spectrum(settings: Settings) -> list[Table]:
    cfg = make_config(settings)
    if settings["sweep"]:
        freqs = np.array(parse_sweep(settings["sweep"], "spectrum").values) * 1e12
    else:
        edge = 6.0 * cfg.pulse.B / (2.0 * math.pi)
        freqs = np.linspace(-edge, edge, 1201)
    ref_u, ref_v = output_amplitudes(cfg.replace(tau=0.0), freqs)
    amp_u, amp_v = output_amplitudes(cfg, freqs)
    table = Table("spectrum", ["f_hz", "u_tau0_per_hz", "u_tau_per_hz", "v_tau0_per_hz", "v_tau_per_hz"])
    for row in zip(freqs, np.abs(ref_u) ** 2, np.abs(amp_u) ** 2, np.abs(ref_v) ** 2, np.abs(amp_v) ** 2):
        table.rows.append(row)
    return [table]


def table_centroid_sweep(settings: Settings) -> list[Table]:
    sweep = _sweep_or_default(settings, "theta_deg:0:360:3601")
    table = Table("centroid-sweep", ["tau_as", "theta_deg", "delta_f_hz", "flag"])
    for tau_as in settings["tau-as"]:
        base = make_config(settings, tau_as=tau_as)
        for theta_deg in sweep.values:
            cfg = base.replace(theta=math.radians(theta_deg))
            table.rows.append((tau_as, theta_deg) + _guarded(lambda: (centroid_shift(cfg),), 1))
    return [table]


def table_overlap_sweep(settings: Settings) -> list[Table]:
    sweep = _sweep_or_default(settings, "theta_deg:90:105:1501")
    base = make_config(settings)
    column = sweep.param
    table = Table("overlap-sweep", [column, "rho_abs", "transmission_u", "insertion_loss_db", "flag"])
    for value in sweep.values:
        if column == "theta_deg":
            cfg = base.replace(theta=math.radians(value))
        else:
            cfg = base.replace(tau=value * 1e-18)

        def point(cfg=cfg):
            return (mode_overlap_closed(cfg).magnitude, port_transmission(cfg, Port.U),
                    insertion_loss_db(cfg, Port.U))

        table.rows.append((value,) + _guarded(point, 3))
    return [table]


def table_error_curve(settings: Settings) -> list[Table]:
    if settings["sweep"] or "n-photons" not in settings.explicit:
        photons = _sweep_or_default(settings, "n_photons:1e4:1e8:41:log").values
    else:
        photons = settings["n-photons"]
    base = make_config(settings, n_photons=0.0)
    curve = Table("error-curve", ["n_photons", "exponent", "overlap_sq", "p_error"])
    for N in photons:
        if not N >= 0:
            raise _validation(f"photon numbers must be >= 0, got {N!r}")
        rep = input_state_overlap(base.replace(n_photons=N))
        curve.rows.append((N, rep.exponent, rep.overlap_sq, helstrom_error_from_exponent(rep.exponent)))
    n_in = max(photons)
    nout = Table("nout", ["theta_deg", "n_in", "n_out"])
    for theta_deg in np.linspace(0.0, 360.0, 3601):
        cfg = base.replace(theta=math.radians(theta_deg))
        nout.rows.append((float(theta_deg), n_in, n_in * port_transmission(cfg, Port.U)))
    return [curve, nout]


def _require(settings: Settings, name: str) -> float:
    value = settings[name]
    if value is None:
        raise _validation(f"--{name} is required for {settings.command}")
    return value


def table_budget(settings: Settings) -> list[Table]:
    cfg = make_config(settings)
    n_in = cfg.n_photons
    n0 = _require(settings, "n0-photons")
    try:
        roots = solve_projection_for_budget(cfg, n_in, n0)
    except InvalidParameterError as exc:
        raise _validation(str(exc))
    except NoSolutionError as exc:
        lo, hi = exc.interval
        raise CLIError("no-solution", f"{exc} (achievable transmission [{lo:.17g}, {hi:.17g}])",
                       EXIT_NO_SOLUTION)
    unprojected = input_state_overlap(cfg.replace(n_photons=n0))
    p_unprojected = helstrom_error_from_exponent(unprojected.exponent)
    table = Table("budget", ["root", "theta_deg", "transmission_u", "n_in", "n_out",
                             "saturated_exponent", "saturated_overlap_sq", "p_error_projected",
                             "p_error_unprojected"])
    for index, theta in enumerate(roots):
        at_root = cfg.replace(theta=theta)
        sat = _single_point(lambda: saturated_overlap(at_root, n0))
        table.rows.append((index, math.degrees(theta), port_transmission(at_root, Port.U),
                           required_input_photons(at_root, n0), n0, sat.exponent, sat.overlap_sq,
                           helstrom_error_from_exponent(sat.exponent), p_unprojected))
    return [table]


def _single_point(fn):
    try:
        return fn()
    except DegenerateConfigurationError as exc:
        raise CLIError("degenerate", str(exc), EXIT_DEGENERATE)


def table_fisher(settings: Settings) -> list[Table]:
    sigma = _require(settings, "sigma-hz")
    if not sigma > 0:
        raise _validation("--sigma-hz must be positive")
    base = make_config(settings)
    if settings["sweep"]:
        sweep = parse_sweep(settings["sweep"], "fisher")
        table = Table("fisher", [sweep.param, "n_detected", "i_tau_per_s2", "flag"])
        for value in sweep.values:
            if sweep.param == "theta_deg":
                cfg = base.replace(theta=math.radians(value))
            else:
                cfg = base.replace(tau=value * 1e-18)
            detected = cfg.n_photons * port_transmission(cfg, Port.U)
            table.rows.append((value,) + _guarded(
                lambda cfg=cfg, d=detected: (d, fisher_information(cfg, sigma, d).I_tau), 2))
        return [table]
    detected = base.n_photons * port_transmission(base, Port.U)
    point = _single_point(lambda: fisher_information(base, sigma, detected))
    ends = _single_point(lambda: fisher_endpoints(base.pulse, base.tau, base.n_photons, sigma))
    table = Table("fisher", ["sigma_hz", "n_detected", "i_tau_per_s2", "i_phi0_per_s2",
                             "i_phipi_per_s2", "enhancement_ratio"])
    table.rows.append((sigma, detected, point.I_tau, ends.I_phi0, ends.I_phipi, ends.enhancement_ratio))
    return [table]


def table_effective_overlap(settings: Settings) -> list[Table]:
    sweep = _sweep_or_default(settings, "rho:0:1:101")
    a, n = settings["floor-a"], settings["floor-n"]
    table = Table("effective-overlap", ["rho", "rho_eff"])
    try:
        for rho in sweep.values:
            table.rows.append((rho, effective_overlap(rho, a, n)))
    except InvalidParameterError as exc:
        raise _validation(str(exc))
    return [table]


def table_report(settings: Settings) -> list[Table]:
    cfg = make_config(settings)
    rep = distinguishability_report(cfg)
    fields = dataclasses.asdict(rep)
    a, n = settings["floor-a"], settings["floor-n"]
    try:
        fields["resolution_limited_error"] = resolution_limited_error(cfg, cfg.n_photons, a, n)
    except DegenerateConfigurationError:
        fields["resolution_limited_error"] = None
    except InvalidParameterError as exc:
        raise _validation(str(exc))
    try:
        fields["centroid_shift_hz"] = centroid_shift(cfg)
    except DegenerateConfigurationError:
        fields["centroid_shift_hz"] = None
    table = Table("report", list(fields))
    table.rows.append(tuple(int(v) if isinstance(v, bool) else v for v in fields.values()))
    return [table]


BUILDERS = {
    "spectrum": table_spectrum,
    "centroid-sweep": table_centroid_sweep,
    "overlap-sweep": table_overlap_sweep,
    "error-curve": table_error_curve,
    "budget": table_budget,
    "fisher": table_fisher,
    "effective-overlap": table_effective_overlap,
    "report": table_report,
}

# commands whose JSON form is a single flat object
SINGLE_OBJECT = {"report", "fisher"}


# ---------------------------------------------------------------------------
# output


def render_csv(table: Table, manifest_name: str) -> str:
    lines = [f"# manifest: {manifest_name}", ",".join(table.columns)]
    lines.extend(",".join(_fmt(v) for v in row) for row in table.rows)
    return "\n".join(lines) + "\n"


def _json_value(value):
    if value is None or isinstance(value, str):
        return value
    if isinstance(value, (int, np.integer)):
        return int(value)
    value = float(value)
    return value if math.isfinite(value) else str(value)


def render_json(table: Table, manifest: dict, single: bool) -> str:
    if single and len(table.rows) == 1:
        obj = {c: _json_value(v) for c, v in zip(table.columns, table.rows[0])}
    else:
        obj = {"columns": table.columns, "rows": [[_json_value(v) for v in row] for row in table.rows]}
    obj = {"command": manifest["command"], **obj, "manifest": manifest}
    return json.dumps(obj, indent=2, sort_keys=False) + "\n"


def _output_paths(out: str, tables: list[Table], fmt: str) -> list[str]:
    paths = [out]
    stem, ext = os.path.splitext(out)
    for table in tables[1:]:
        paths.append(f"{stem}.{table.name}{ext or '.' + fmt}")
    return paths


def run(argv=None) -> int:
    """Execute one CLI request; returns the process exit status."""
    try:
        settings = resolve_settings(argv)
        tables = BUILDERS[settings.command](settings)
    except CLIError as exc:
        print(f"error:{exc.code}: {exc}", file=sys.stderr)
        return exc.status
    except WVAError as exc:
        status = {"degenerate": EXIT_DEGENERATE, "no-solution": EXIT_NO_SOLUTION}.get(exc.code, EXIT_VALIDATION)
        print(f"error:{exc.code}: {exc}", file=sys.stderr)
        return status

    fmt = settings["format"]
    manifest = {
        "tool": "wvadelay",
        "version": __version__,
        "command": settings.command,
        "config_cli_units": {k: v for k, v in settings.values.items() if k not in ("out", "format")},
        "config_si": si_config(settings),
        "format": fmt,
        "timestamp": _dt.datetime.now(_dt.timezone.utc).isoformat(timespec="seconds"),
    }
    out = settings["out"]
    if out is None:
        for table in tables:
            if fmt == "csv":
                sys.stdout.write(render_csv(table, "(stdout)"))
            else:
                sys.stdout.write(render_json(table, manifest, settings.command in SINGLE_OBJECT))
        return EXIT_OK

    paths = _output_paths(out, tables, fmt)
    manifest_path = out + ".manifest.json"
    checksums = {}
    for table, path in zip(tables, paths):
        if fmt == "csv":
            text = render_csv(table, os.path.basename(manifest_path))
        else:
            text = render_json(table, manifest, settings.command in SINGLE_OBJECT)
        data = text.encode("utf-8")
        with open(path, "wb") as fh:
            fh.write(data)
        checksums[os.path.basename(path)] = hashlib.sha256(data).hexdigest()
    with open(manifest_path, "w", encoding="utf-8") as fh:
        json.dump({**manifest, "outputs": checksums}, fh, indent=2)
        fh.write("\n")
    return EXIT_OK


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()

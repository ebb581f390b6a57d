"""Command-line interface: scenario configuration, simulation runs, identity checks.

Config files are line-oriented ``key = value`` text: ``#`` starts a comment,
triples are three space-separated reals.  Trajectories are written as CSV
with a fixed column order and 17-significant-digit reals, so downstream
tools can round-trip every double exactly.  Exit codes: 0 success,
1 validation error, 2 runtime physics error, 3 identity failure.
"""

from __future__ import annotations

import argparse
import math
import os
import sys
import tempfile
from dataclasses import dataclass, replace

import numpy as np

from .dynamics import (
    ParticleState,
    STEPPER_KINDS,
    Trajectory,
    circular_orbit_speed,
    invariant_report,
    simulate,
)
from .errors import ConfigError, PhysicsError
from .fields import CoulombField, SuperposedField, UniformField
from .verify import run_identity_suite

CSV_COLUMNS = ("tau", "t", "x", "y", "z", "u0", "u1", "u2", "u3", "norm_err", "u0_drift")

_TRIPLE_KEYS = ("uniform_E", "uniform_B", "u_spatial", "position")
_FLOAT_KEYS = ("coulomb_q", "coulomb_r_min", "k", "dtau")
_INT_KEYS = ("steps", "stride")
_STRING_KEYS = ("name", "stepper", "out")
_ALL_KEYS = _TRIPLE_KEYS + _FLOAT_KEYS + _INT_KEYS + _STRING_KEYS
_FIELD_KEYS = ("uniform_E", "uniform_B", "coulomb_q")


@dataclass(frozen=True)
class ScenarioConfig:
    """Validated description of one simulation run."""

    name: str = "custom"
    uniform_E: tuple | None = None
    uniform_B: tuple | None = None
    coulomb_q: float | None = None
    coulomb_r_min: float = 1e-6
    k: float = 1.0
    u_spatial: tuple = (0.0, 0.0, 0.0)
    position: tuple = (0.0, 0.0, 0.0)
    dtau: float = 1e-3
    steps: int = 0
    stepper: str = "expmap"
    out: str | None = None
    stride: int = 1


def _parse_real(text: str, key: str, line: int) -> float:
    try:
        value = float(text)
    except ValueError:
        raise ConfigError(f"line {line}: key '{key}': not a real number: {text!r}") from None
    if not math.isfinite(value):
        raise ConfigError(f"line {line}: key '{key}': value must be finite, got {text!r}")
    return value


def _parse_triple(text: str, key: str, line: int) -> tuple:
    parts = text.split()
    if len(parts) != 3:
        raise ConfigError(
            f"line {line}: key '{key}': expected three space-separated reals, got {text!r}"
        )
    return tuple(_parse_real(p, key, line) for p in parts)


def _parse_int(text: str, key: str, line: int) -> int:
    try:
        return int(text)
    except ValueError:
        raise ConfigError(f"line {line}: key '{key}': not an integer: {text!r}") from None


def parse_config(text: str) -> ScenarioConfig:
    """Parse and fully validate a scenario config.

    Unknown and duplicate keys are rejected; every violation is reported
    with its line number and key name.  A field specification and ``steps``
    are required; every other key has a default.
    """
    entries: dict[str, tuple[str, int]] = {}
    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"line {line_number}: expected 'key = value', got {raw!r}")
        key, _, value = line.partition("=")
        key = key.strip()
        value = value.strip()
        if key not in _ALL_KEYS:
            raise ConfigError(f"line {line_number}: unknown key '{key}'")
        if key in entries:
            raise ConfigError(
                f"line {line_number}: duplicate key '{key}' (first set on line {entries[key][1]})"
            )
        if not value:
            raise ConfigError(f"line {line_number}: key '{key}': empty value")
        entries[key] = (value, line_number)

    values: dict[str, object] = {}
    for key, (value, line) in entries.items():
        if key in _TRIPLE_KEYS:
            values[key] = _parse_triple(value, key, line)
        elif key in _FLOAT_KEYS:
            values[key] = _parse_real(value, key, line)
        elif key in _INT_KEYS:
            values[key] = _parse_int(value, key, line)
        else:
            values[key] = value

    def line_of(key: str) -> int:
        return entries[key][1]

    if "steps" not in values:
        raise ConfigError("missing required key 'steps'")
    if not any(key in values for key in _FIELD_KEYS):
        raise ConfigError(
            "no field specified: set at least one of " + ", ".join(_FIELD_KEYS)
        )
    if values["steps"] < 0:
        raise ConfigError(f"line {line_of('steps')}: key 'steps': must be >= 0")
    if "stride" in values and values["stride"] < 1:
        raise ConfigError(f"line {line_of('stride')}: key 'stride': must be >= 1")
    if "dtau" in values and not values["dtau"] > 0.0:
        raise ConfigError(f"line {line_of('dtau')}: key 'dtau': must be positive")
    if "coulomb_r_min" in values and not values["coulomb_r_min"] > 0.0:
        raise ConfigError(
            f"line {line_of('coulomb_r_min')}: key 'coulomb_r_min': must be positive"
        )
    if "stepper" in values and values["stepper"] not in STEPPER_KINDS:
        raise ConfigError(
            f"line {line_of('stepper')}: key 'stepper': expected one of "
            f"{', '.join(STEPPER_KINDS)}, got {values['stepper']!r}"
        )
    return ScenarioConfig(**values)


def build_provider(cfg: ScenarioConfig):
    """Field provider for a config; multiple field keys superpose."""
    providers = []
    if cfg.uniform_E is not None or cfg.uniform_B is not None:
        providers.append(
            UniformField(
                cfg.uniform_E if cfg.uniform_E is not None else (0.0, 0.0, 0.0),
                cfg.uniform_B if cfg.uniform_B is not None else (0.0, 0.0, 0.0),
            )
        )
    if cfg.coulomb_q is not None:
        providers.append(CoulombField(cfg.coulomb_q, cfg.coulomb_r_min))
    if not providers:
        raise ConfigError("no field specified")
    if len(providers) == 1:
        return providers[0]
    return SuperposedField(providers)


def initial_state(cfg: ScenarioConfig) -> ParticleState:
    """Initial particle state; u0 is derived from the normalization condition."""
    u_spatial = np.asarray(cfg.u_spatial, dtype=float)
    u0 = math.sqrt(1.0 + float(u_spatial @ u_spatial))
    return ParticleState(
        0.0,
        (0.0, *cfg.position),
        (u0, *u_spatial),
    )


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def write_trajectory_csv(trajectory: Trajectory, path: str) -> None:
    """Write the fixed-schema CSV atomically (write-then-rename)."""
    norm_errors = trajectory.norm_errors()
    u0_reference = trajectory.us[0, 0]
    lines = [",".join(CSV_COLUMNS)]
    for i in range(len(trajectory)):
        row = (
            trajectory.taus[i],
            *trajectory.positions[i],
            *trajectory.us[i],
            norm_errors[i],
            trajectory.us[i, 0] - u0_reference,
        )
        lines.append(",".join(_fmt(x) for x in row))
    data = "\n".join(lines) + "\n"
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp_path = tempfile.mkstemp(dir=directory, prefix=".tmp-trajectory-")
    try:
        with os.fdopen(fd, "w") as handle:
            handle.write(data)
        os.replace(tmp_path, path)
    except BaseException:
        if os.path.exists(tmp_path):
            os.unlink(tmp_path)
        raise


def run_scenario(cfg: ScenarioConfig, emit=print) -> int:
    """Run one configured simulation, write its CSV, print the invariant summary."""
    provider = build_provider(cfg)
    state = initial_state(cfg)
    trajectory = simulate(
        state, provider, cfg.k, cfg.dtau, cfg.steps, cfg.stepper, cfg.stride
    )
    out_path = cfg.out if cfg.out is not None else f"{cfg.name}.csv"
    write_trajectory_csv(trajectory, out_path)
    report = invariant_report(trajectory)
    final_u = trajectory.us[-1]
    emit(f"scenario: {cfg.name}")
    emit(
        f"stepper: {cfg.stepper}  k: {_fmt(cfg.k)}  dtau: {_fmt(cfg.dtau)}  "
        f"steps: {cfg.steps}  stride: {cfg.stride}"
    )
    emit(f"samples: {len(trajectory)}  final tau: {_fmt(trajectory.taus[-1])}")
    emit(f"final u: {' '.join(_fmt(x) for x in final_u)}")
    emit(f"max |u.u - 1|: {_fmt(report.max_norm_error)}")
    emit(f"max |du/dtau . u|: {_fmt(report.max_orthogonality_error)}")
    emit(f"max |u0 - u0_initial|: {_fmt(report.max_energy_drift)}")
    emit(f"wrote: {out_path}")
    return 0


def _preset_free() -> ScenarioConfig:
    return ScenarioConfig(
        name="free",
        uniform_E=(0.0, 0.0, 0.0),
        uniform_B=(0.0, 0.0, 0.0),
        u_spatial=(0.6, 0.0, 0.0),
        dtau=1e-2,
        steps=100,
    )


def _preset_hyperbolic() -> ScenarioConfig:
    return ScenarioConfig(
        name="hyperbolic",
        uniform_E=(1.0, 0.0, 0.0),
        k=1.0,
        dtau=1e-3,
        steps=1000,
    )


def _preset_cyclotron() -> ScenarioConfig:
    # One full gyration: rotation rate k*|B| = 2, proper-time period pi.
    return ScenarioConfig(
        name="cyclotron",
        uniform_B=(0.0, 0.0, 2.0),
        k=1.0,
        u_spatial=(1.0, 0.0, 0.0),
        dtau=math.pi * 1e-4,
        steps=10000,
    )


def _preset_crossed() -> ScenarioConfig:
    return ScenarioConfig(
        name="crossed",
        uniform_E=(0.0, 1.0, 0.0),
        uniform_B=(0.0, 0.0, 2.0),
        k=1.0,
        dtau=1e-3,
        steps=5000,
    )


def _preset_coulomb_orbit() -> ScenarioConfig:
    # Circular orbit at unit radius around an attractive point source; the
    # initial speed comes from the force-balance relation.
    k, q, radius = 1.0, -1.0, 1.0
    speed = circular_orbit_speed(k, q, radius)
    period = 2.0 * math.pi * radius / speed
    dtau = 5e-5
    return ScenarioConfig(
        name="coulomb-orbit",
        coulomb_q=q,
        k=k,
        position=(radius, 0.0, 0.0),
        u_spatial=(0.0, speed, 0.0),
        dtau=dtau,
        steps=round(period / dtau),
        stride=20,
    )


PRESETS = {
    "free": _preset_free,
    "hyperbolic": _preset_hyperbolic,
    "cyclotron": _preset_cyclotron,
    "crossed": _preset_crossed,
    "coulomb-orbit": _preset_coulomb_orbit,
}


class _Parser(argparse.ArgumentParser):
    # Usage problems are validation errors: exit 1, not argparse's default 2.
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="boostpush",
        description=(
            "Relativistic charged-particle dynamics driven by exponentials of "
            "Lorentz-group generators."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sim = sub.add_parser(
        "simulate",
        help="run a scenario from a config file or a built-in preset",
        description=(
            "Run one simulation and write its trajectory CSV. Config keys "
            "(key = value, # comments): "
            "uniform_E / uniform_B (triples), coulomb_q, coulomb_r_min "
            "(default 1e-6), k (default 1), u_spatial (triple, default 0 0 0), "
            "position (triple, default 0 0 0), dtau (default 1e-3), steps "
            "(required), stepper (expmap|euler|rk4, default expmap), stride "
            "(default 1), name, out. A field spec and steps are required; "
            "several field keys superpose."
        ),
    )
    source = sim.add_mutually_exclusive_group(required=True)
    source.add_argument("--config", metavar="PATH", help="scenario config file")
    source.add_argument(
        "--scenario",
        choices=sorted(PRESETS),
        help="built-in scenario preset",
    )
    sim.add_argument("--out", metavar="PATH", help="trajectory CSV path override")

    ver = sub.add_parser(
        "verify",
        help="run the identity suite (generator algebra, frame/field equivalences)",
    )
    ver.add_argument("--seed", type=int, default=0, help="seed for randomized checks")
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "simulate":
            if args.config is not None:
                try:
                    with open(args.config, "r", encoding="utf-8") as handle:
                        text = handle.read()
                except OSError as exc:
                    raise ConfigError(f"cannot read config {args.config!r}: {exc}") from exc
                cfg = parse_config(text)
            else:
                cfg = PRESETS[args.scenario]()
            if args.out is not None:
                cfg = replace(cfg, out=args.out)
            return run_scenario(cfg)
        if args.command == "verify":
            return run_identity_suite(args.seed)
        raise AssertionError(f"unhandled command {args.command!r}")
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except PhysicsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

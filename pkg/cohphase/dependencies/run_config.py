"""Resolution of a RunConfig and StateSpec from presets, config files and flags."""

import argparse
import copy
import json
import logging
from pathlib import Path
from typing import Any

from cohphase.core.exceptions import ConfigurationException, InvalidParameter
from cohphase.crud.systems import system_repo
from cohphase.dsl.compiler import compile_spec
from cohphase.models.catalog import CatalogId
from cohphase.models.phase import SqueezingParameter
from cohphase.models.presets import FIGURE_PRESETS
from cohphase.models.state import StateSpec
from cohphase.schemas.run_config import CatalogSystem, RunConfig


logger = logging.getLogger(__name__)

DSL_SYSTEM = "dsl"
SYSTEM_CHOICES = [c.value for c in CatalogId] + [DSL_SYSTEM]


def add_system_arguments(parser: argparse.ArgumentParser) -> None:
    """Flags selecting or defining a state family."""
    group = parser.add_argument_group("system")
    group.add_argument("--system", choices=SYSTEM_CHOICES, help="Catalog id, or 'dsl' with --kind/--expr")
    group.add_argument(
        "--param", action="append", default=[], metavar="NAME=VALUE",
        help="Parameter binding; repeatable",
    )
    group.add_argument("--kind", choices=["f", "e"], help="DSL expression defines f(n) or e_n")
    group.add_argument("--expr", help="DSL expression over n and the --param names")
    group.add_argument("--radius", type=float, help="Convergence radius of a DSL system")
    group.add_argument("--config", type=Path, help="JSON run configuration")
    group.add_argument("--preset", choices=sorted(FIGURE_PRESETS, key=lambda p: int(p[3:])), help="Figure preset")
    group.add_argument("--tail-tol", type=float, help="Relative tail bound of the series")
    group.add_argument("--n-cap", type=int, help="Maximum number of series terms")
    group.add_argument("--theta0", type=float, help="Start of the phase window (default -pi)")


def add_sweep_arguments(parser: argparse.ArgumentParser, single: bool = True) -> None:
    """Flags selecting z values and the output artifact."""
    group = parser.add_argument_group("z values")
    if single:
        group.add_argument("--z", type=float, help="Single |z|")
        group.add_argument("--z-phase", type=float, help="arg z in radians for --z")
    group.add_argument("--z-lo", type=float, help="Sweep start")
    group.add_argument("--z-hi", type=float, help="Sweep end")
    group.add_argument("--z-count", type=int, help="Number of sweep points")
    group.add_argument("--z-step", type=float, help="Scan spacing for crossover searches")

    output = parser.add_argument_group("output")
    output.add_argument("-o", "--output", help="Artifact path (default: stdout)")
    output.add_argument("--format", choices=["csv", "json"], help="Artifact format")


def parse_params(items: list[str] | None) -> dict[str, float]:
    """
    Parse repeated NAME=VALUE flags.

    Raises:
        InvalidParameter: If an item is not NAME=VALUE with a numeric value
    """
    params: dict[str, float] = {}
    for item in items or []:
        name, sep, raw = item.partition("=")
        name = name.strip()
        try:
            if not sep or not name:
                raise ValueError(item)
            params[name] = float(raw)
        except ValueError:
            raise InvalidParameter("--param", item, "NAME=VALUE with a numeric value")
    return params


def read_config_file(path: Path) -> dict[str, Any]:
    """
    Load a JSON run configuration.

    Raises:
        ConfigurationException: If the file cannot be read or is not a JSON object
    """
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise ConfigurationException(f"cannot read config {path}: {exc}", data={"path": str(path)})
    if not isinstance(data, dict):
        raise ConfigurationException(f"config {path} must hold a JSON object", data={"path": str(path)})
    return data


def get_preset(name: str) -> dict[str, Any]:
    """Run fields of a figure preset."""
    if name not in FIGURE_PRESETS:
        raise InvalidParameter("preset", name, f"one of {sorted(FIGURE_PRESETS)}")
    preset = copy.deepcopy(FIGURE_PRESETS[name])
    preset.pop("description")
    preset.pop("command")
    return preset


def _merge(base: dict[str, Any], overlay: dict[str, Any]) -> dict[str, Any]:
    merged = dict(base)
    for key, value in overlay.items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = _merge(merged[key], value)
        else:
            merged[key] = value
    return merged


def _system_overrides(args: argparse.Namespace, current: Any) -> Any:
    params = parse_params(getattr(args, "param", None))
    kind, expr, radius = getattr(args, "kind", None), getattr(args, "expr", None), getattr(args, "radius", None)
    dsl_fields = {k: v for k, v in (("kind", kind), ("expr", expr), ("radius", radius)) if v is not None}

    if getattr(args, "system", None) == DSL_SYSTEM:
        return {**dsl_fields, "params": params}
    if getattr(args, "system", None):
        if dsl_fields:
            raise ConfigurationException("--kind, --expr and --radius need --system dsl")
        return {"id": args.system, "params": params}

    if isinstance(current, str):
        current = {"id": current}
    if current is None:
        return {**dsl_fields, "params": params} if dsl_fields else None
    return _merge(current, {**dsl_fields, "params": params})


def _sweep_overrides(args: argparse.Namespace) -> dict[str, Any]:
    fields = (("lo", "z_lo"), ("hi", "z_hi"), ("count", "z_count"), ("step", "z_step"))
    return {key: getattr(args, flag) for key, flag in fields if getattr(args, flag, None) is not None}


def flag_overrides(args: argparse.Namespace, base: dict[str, Any]) -> dict[str, Any]:
    """Apply explicit flags on top of a preset / config-file mapping."""
    config = dict(base)

    system = _system_overrides(args, config.get("system"))
    if system is not None:
        config["system"] = system

    sweep = _sweep_overrides(args)
    single = getattr(args, "z", None)
    if single is not None and sweep:
        raise ConfigurationException("give either --z or --z-lo/--z-hi/--z-count/--z-step")
    if single is None and getattr(args, "z_phase", None) is not None:
        raise ConfigurationException("--z-phase needs --z")
    if single is not None:
        config.pop("z_sweep", None)
        config["z"] = {"magnitude": single, "phase": getattr(args, "z_phase", None) or 0.0}
    elif sweep:
        config.pop("z", None)
        config["z_sweep"] = _merge(config.get("z_sweep") or {}, sweep)
        if "hi" not in config["z_sweep"] and "lo" in config["z_sweep"]:
            config["z_sweep"]["hi"] = config["z_sweep"]["lo"]

    for key, flag in (
        ("tail_tol", "tail_tol"),
        ("n_cap", "n_cap"),
        ("window_theta0", "theta0"),
        ("theta_grid", "theta_grid"),
    ):
        if getattr(args, flag, None) is not None:
            config[key] = getattr(args, flag)

    output = {k: getattr(args, k) for k in ("output", "format") if getattr(args, k, None) is not None}
    if output:
        config["output"] = _merge(config.get("output") or {}, {
            ("path" if k == "output" else k): v for k, v in output.items()
        })

    if getattr(args, "which", None) is not None:
        config["which"] = SqueezingParameter(args.which)
    return config


def get_run_config(args: argparse.Namespace, **overrides: Any) -> RunConfig:
    """
    Build the RunConfig of a command.

    Precedence: figure preset < --config file < flags < keyword overrides;
    anything still unset takes its COHPHASE_* setting.

    Raises:
        ConfigurationException: For unreadable config files or bad flags
        pydantic.ValidationError: If the merged mapping is not a valid RunConfig
    """
    config: dict[str, Any] = {}
    if getattr(args, "preset", None):
        config = get_preset(args.preset)
    if getattr(args, "config", None):
        config = _merge(config, read_config_file(args.config))
    config = flag_overrides(args, config)
    config.update(overrides)

    if "system" not in config:
        raise ConfigurationException("no system given; use --system, --preset or --config")
    return RunConfig.model_validate(config)


def get_state_spec(config: RunConfig) -> StateSpec:
    """StateSpec of the configured system."""
    system = config.system
    if isinstance(system, CatalogSystem):
        return system_repo.make(system.id, system.params)
    return compile_spec(system.kind, system.expr, system.params, system.radius)


def get_system_params(config: RunConfig) -> dict[str, float]:
    """Parameters as used, catalog defaults filled in."""
    system = config.system
    if isinstance(system, CatalogSystem):
        return system_repo.resolve_params(system.id, system.params)
    return dict(system.params)

#######################################################################
# Project: Damped Waves Module
# File: config.py
# Description: Experiment configuration: `section.key = value` grammar and validation
# Author: AbigailWilliams1692
# Created: 2026-09-29
# Updated: 2026-10-16
#######################################################################

#######################################################################
# Import Packages
#######################################################################
# Standard Packages
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any, Callable, Dict, List, Mapping, Optional, Tuple

# Local Packages
from damped_waves.cli.presets import DataPreset
from damped_waves.exponents import blowup_threshold, format_number, predicted_rates
from damped_waves.kernels import ModelSpec
from damped_waves.model.exceptions import ConfigurationError, DataPresetError
from damped_waves.model.time_series import Quantity
from damped_waves.semilinear import Nonlinearity, NonlinearityVariant, StepperConfig
from damped_waves.spectral import GridSpec

COMMANDS = ("linear-decay", "semilinear", "blowup-probe", "picard", "exponents", "oracle-compare")
AUTO = object()


#######################################################################
# Value Parsers
#######################################################################
_NONE_TOKENS = ("auto", "none", "origin")


def _int(text: str) -> int:
    return int(text)


def _real(text: str) -> float:
    return float(text)


def _fraction(text: str) -> Fraction:
    return Fraction(text)


def _bool(text: str) -> bool:
    lowered = text.lower()
    if lowered in ("true", "yes", "on", "1"):
        return True
    if lowered in ("false", "no", "off", "0"):
        return False
    raise ValueError(f"not a boolean: '{text}'")


def _text(text: str) -> str:
    return text


def _ints(text: str) -> List[int]:
    return [int(part) for part in text.split(",") if part.strip()]


def _reals(text: str) -> Tuple[float, ...]:
    return tuple(float(part) for part in text.split(",") if part.strip())


def _labels(text: str) -> List[str]:
    return [part.strip() for part in text.split(",") if part.strip()]


def _optional(parser: Callable[[str], Any]) -> Callable[[str], Any]:
    def parse(text: str) -> Any:
        return None if text.lower() in _NONE_TOKENS else parser(text)

    return parse


@dataclass(frozen=True)
class _Field:
    parser: Callable[[str], Any]
    default: Any
    none_token: str = "auto"


_FIELDS: Dict[str, _Field] = {
    "model.n": _Field(_int, 2),
    "model.sigma": _Field(_fraction, Fraction(1, 2)),
    "model.mu": _Field(_real, 2.0),
    "grid.points": _Field(_int, AUTO),
    "grid.box_length": _Field(_real, 80.0),
    "oracle.r_max": _Field(_optional(_real), None),
    "nonlinearity.p": _Field(_optional(_real), None, "none"),
    "nonlinearity.variant": _Field(_text, AUTO),
    "stepper.dt": _Field(_real, 0.05),
    "stepper.T": _Field(_real, 50.0),
    "stepper.dealias": _Field(_optional(_bool), None),
    "stepper.threshold": _Field(_optional(_real), None),
    "stepper.max_steps": _Field(_int, 1_000_000),
    "data.kind": _Field(_text, "gaussian"),
    "data.target": _Field(_text, "u1"),
    "data.amplitude": _Field(_real, 1.0),
    "data.width": _Field(_real, 1.0),
    "data.radius": _Field(_real, 2.0),
    "data.center": _Field(_optional(_reals), None, "origin"),
    "data.max_mode": _Field(_int, 4),
    "data.seed": _Field(_int, 0),
    "run.mode": _Field(_text, AUTO),
    "run.t_min": _Field(_real, 1.0),
    "run.t_max": _Field(_real, 1e4),
    "run.count": _Field(_int, 41),
    "run.quantities": _Field(_labels, AUTO),
    "run.window": _Field(_optional(_reals), None),
    "run.tol": _Field(_real, 0.05),
    "run.one_sided": _Field(_bool, False),
    "run.cutoff": _Field(_optional(_real), None, "none"),
    "picard.j_max": _Field(_int, 8),
    "picard.quadrature_points": _Field(_int, 100),
    "picard.cross_tol": _Field(_real, 1e-3),
    "probe.p_contrast": _Field(_real, 4.0),
    "probe.amplitude_contrast": _Field(_real, 1e-2),
    "exponents.sigma": _Field(_fraction, Fraction(1, 2)),
    "exponents.n": _Field(_ints, [2, 3, 4, 5]),
    "exponents.m": _Field(_fraction, Fraction(2)),
    "output.directory": _Field(_text, "results"),
}


def _format_value(key: str, value: Any) -> str:
    if value is None:
        return _FIELDS[key].none_token
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, Fraction):
        return format_number(value)
    if isinstance(value, float):
        return repr(value)
    if isinstance(value, (list, tuple)):
        return ", ".join(_format_value(key, v) for v in value)
    return str(value)


#######################################################################
# Experiment Configuration
#######################################################################
@dataclass(frozen=True)
class ExperimentConfig:
    """
    Fully resolved experiment settings: every key of the grammar with its
    default filled in, plus warnings raised during validation.
    """

    command: str
    values: Mapping[str, Any]
    warnings: Tuple[str, ...] = field(default=())

    def __getitem__(self, key: str) -> Any:
        return self.values[key]

    @property
    def model(self) -> ModelSpec:
        return ModelSpec(self["model.n"], self["model.sigma"], self["model.mu"])

    @property
    def grid(self) -> GridSpec:
        return GridSpec(self["model.n"], self["grid.points"], self["grid.box_length"])

    @property
    def nonlinearity(self) -> Optional[Nonlinearity]:
        if self["nonlinearity.p"] is None:
            return None
        return Nonlinearity(self["nonlinearity.p"], self["nonlinearity.variant"])

    @property
    def stepper(self) -> StepperConfig:
        return StepperConfig(
            dt=self["stepper.dt"],
            dealias=self["stepper.dealias"],
            blowup_threshold=self["stepper.threshold"],
            max_steps=self["stepper.max_steps"],
        )

    @property
    def data(self) -> DataPreset:
        return _data_preset(self.values)

    @property
    def quantities(self) -> List[Quantity]:
        return [Quantity.parse(label) for label in self["run.quantities"]]

    @property
    def output_directory(self) -> Path:
        return Path(self["output.directory"])

    def to_manifest(self) -> str:
        """
        The resolved configuration in the input grammar, defaults included.

        :return: str: Text that parse_config accepts and resolves to the same values.
        """
        lines = [f"# damped-waves {self.command}"]
        section = None
        for key in _FIELDS:
            current = key.split(".")[0]
            if current != section:
                lines.append("")
                section = current
            lines.append(f"{key} = {_format_value(key, self.values[key])}")
        return "\n".join(lines) + "\n"


def _data_preset(values: Mapping[str, Any]) -> DataPreset:
    return DataPreset(
        kind=values["data.kind"],
        target=values["data.target"],
        amplitude=values["data.amplitude"],
        width=values["data.width"],
        radius=values["data.radius"],
        center=values["data.center"],
        max_mode=values["data.max_mode"],
        seed=values["data.seed"],
    )


#######################################################################
# Parsing
#######################################################################
def _read_assignments(text: str, violations: List[str]) -> Dict[str, Any]:
    """Parse the lines into typed values, recording every grammar violation."""
    assigned: Dict[str, Any] = {}
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            violations.append(f"line {number}: expected 'section.key = value', got '{raw.strip()}'")
            continue
        key, value = (part.strip() for part in line.split("=", 1))
        if key.count(".") != 1:
            violations.append(f"line {number}: key '{key}' must have the form section.key")
            continue
        if key not in _FIELDS:
            violations.append(f"line {number}: unknown key '{key}'")
            continue
        if key in assigned:
            violations.append(f"line {number}: duplicate key '{key}'")
            continue
        try:
            assigned[key] = _FIELDS[key].parser(value)
        except (ValueError, ZeroDivisionError):
            violations.append(f"line {number}: invalid value '{value}' for '{key}'")
    return assigned


def _resolve_defaults(command: str, values: Dict[str, Any]) -> None:
    """Fill the defaults that depend on other settings."""
    n = values["model.n"]
    if values["grid.points"] is AUTO:
        values["grid.points"] = 512 if isinstance(n, int) and n <= 2 else 128
    if values["nonlinearity.variant"] is AUTO:
        values["nonlinearity.variant"] = (
            NonlinearityVariant.ABS_POWER.value if command == "blowup-probe" else NonlinearityVariant.SIGNED_POWER.value
        )
    if values["run.mode"] is AUTO:
        values["run.mode"] = "oracle" if command in ("linear-decay", "oracle-compare") else "grid"
    if values["run.quantities"] is AUTO and command == "oracle-compare":
        # u and u_t carry the periodic mean (u grows like t * mean(u1)); the gradient does not
        values["run.quantities"] = ["grad_L2"]
    elif values["run.quantities"] is AUTO:
        try:
            rates = predicted_rates(values["model.sigma"], n)
            values["run.quantities"] = [entry.quantity.label for entry in rates.entries.values()]
        except (TypeError, ValueError):
            values["run.quantities"] = ["u_L2"]


def _check_domains(command: str, v: Mapping[str, Any], violations: List[str]) -> None:
    def require(condition: bool, message: str) -> None:
        if not condition:
            violations.append(message)

    require(v["model.n"] in (1, 2, 3), f"model.n must be 1, 2 or 3 for grid simulations, got {v['model.n']}")
    require(0 < v["model.sigma"] <= 1, f"sigma must lie in (0,1], got {format_number(v['model.sigma'])}")
    require(v["model.mu"] > 0, f"mu must be positive, got {v['model.mu']}")
    points = v["grid.points"]
    require(points >= 8 and points % 2 == 0, f"grid.points must be even and at least 8, got {points}")
    require(v["grid.box_length"] > 0, f"grid.box_length must be positive, got {v['grid.box_length']}")
    require(v["oracle.r_max"] is None or v["oracle.r_max"] > 0, "oracle.r_max must be positive")

    p = v["nonlinearity.p"]
    require(p is None or p > 1, f"nonlinearity.p must exceed 1, got {p}")
    variants = [variant.value for variant in NonlinearityVariant]
    require(v["nonlinearity.variant"] in variants, f"nonlinearity.variant must be one of {', '.join(variants)}")
    if command in ("semilinear", "blowup-probe", "picard"):
        require(p is not None, f"the {command} command needs nonlinearity.p")

    require(v["stepper.dt"] > 0, f"stepper.dt must be positive, got {v['stepper.dt']}")
    require(v["stepper.T"] > 0, f"stepper.T must be positive, got {v['stepper.T']}")
    require(v["stepper.threshold"] is None or v["stepper.threshold"] > 0, "stepper.threshold must be positive")
    require(v["stepper.max_steps"] >= 1, "stepper.max_steps must be at least 1")

    try:
        preset = _data_preset(v)
        if v["model.n"] in (1, 2, 3):
            preset.center_for(v["model.n"])
    except DataPresetError as exc:
        violations.extend(str(exc).split("; "))

    require(v["run.mode"] in ("grid", "oracle"), f"run.mode must be grid or oracle, got '{v['run.mode']}'")
    require(v["run.t_min"] > 0, "run.t_min must be positive")
    require(v["run.t_max"] > v["run.t_min"], "run.t_max must exceed run.t_min")
    require(v["run.count"] >= 2, "run.count must be at least 2")
    require(v["run.tol"] > 0, "run.tol must be positive")
    window = v["run.window"]
    require(window is None or (len(window) == 2 and 0 <= window[0] < window[1]), "run.window must be 'lo, hi' with lo < hi")
    require(v["run.cutoff"] is None or v["run.cutoff"] > 0, "run.cutoff must be positive")
    for label in v["run.quantities"]:
        try:
            Quantity.parse(label)
        except ValueError:
            violations.append(f"run.quantities: unknown quantity '{label}'")

    require(v["picard.j_max"] >= 2, "picard.j_max must be at least 2")
    require(v["picard.quadrature_points"] >= 1, "picard.quadrature_points must be at least 1")
    require(v["picard.cross_tol"] > 0, "picard.cross_tol must be positive")
    require(v["probe.p_contrast"] > 1, "probe.p_contrast must exceed 1")
    require(v["probe.amplitude_contrast"] > 0, "probe.amplitude_contrast must be positive")

    require(0 < v["exponents.sigma"] <= 1, "exponents.sigma must lie in (0,1]")
    require(bool(v["exponents.n"]) and all(n >= 2 for n in v["exponents.n"]), "exponents.n must list dimensions >= 2")
    require(1 < v["exponents.m"] <= 2, "exponents.m must lie in (1,2]")


def _collect_warnings(command: str, config: ExperimentConfig) -> List[str]:
    warnings: List[str] = []
    p = config["nonlinearity.p"]
    if command in ("semilinear", "picard") and p is not None:
        bound = blowup_threshold(config["model.sigma"], config["model.n"]).value
        if bound is not None and p <= bound:
            warnings.append(
                f"p={p:g} is at or below the blow-up threshold {format_number(bound)} "
                f"for sigma={format_number(config['model.sigma'])}, n={config['model.n']}"
            )
    grid_run = config["run.mode"] == "grid" and command != "exponents"
    if grid_run or command in ("semilinear", "blowup-probe", "picard"):
        message = config.data.boundary_warning(config.grid)
        if message:
            warnings.append(message)
    return warnings


def parse_config(text: str, command: str = "linear-decay", overrides: Optional[Mapping[str, str]] = None) -> ExperimentConfig:
    """
    Parse and validate an experiment configuration.

    :param text: Lines of `section.key = value`; `#` starts a comment.
    :param command: The subcommand the configuration is for.
    :param overrides: Raw `key -> value` strings applied after the text (e.g. --seed).
    :return: ExperimentConfig: Resolved configuration with defaults.
    :raise ConfigurationError: Listing every violation found.
    """
    if command not in COMMANDS:
        raise ConfigurationError([f"unknown command '{command}'"])
    violations: List[str] = []
    assigned = _read_assignments(text, violations)
    for key, raw in (overrides or {}).items():
        try:
            assigned[key] = _FIELDS[key].parser(raw)
        except KeyError:
            violations.append(f"override: unknown key '{key}'")
        except ValueError:
            violations.append(f"override: invalid value '{raw}' for '{key}'")

    # Keys that parsed are domain-checked too
    values = {key: assigned.get(key, entry.default) for key, entry in _FIELDS.items()}
    _resolve_defaults(command, values)
    _check_domains(command, values, violations)
    if violations:
        raise ConfigurationError(violations)

    config = ExperimentConfig(command, values)
    return ExperimentConfig(command, values, tuple(_collect_warnings(command, config)))

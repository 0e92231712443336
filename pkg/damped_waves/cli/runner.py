#######################################################################
# Project: Damped Waves Module
# File: runner.py
# Description: Experiment runner dispatching the damped-waves subcommands
# Author: AbigailWilliams1692
# Created: 2026-10-01
# Updated: 2026-10-17
#######################################################################

#######################################################################
# Import Packages
#######################################################################
# Standard Packages
import dataclasses
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Tuple

# Third-party Packages
import numpy as np

# Local Packages
from damped_waves.analysis import Verdict, compare, fit_rate, log_growth_check
from damped_waves.analysis.rate_fit import LOG_BOUND_RATIO
from damped_waves.cli.config import ExperimentConfig
from damped_waves.cli.presets import DataPreset
from damped_waves.cli.reports import (
    EXPONENTS_NAME,
    format_table,
    safe_label,
    write_csv,
    write_exponents,
    write_manifest,
    write_report,
    write_series,
    write_verdicts,
)
from damped_waves.exponents import (
    RateEntry,
    RateTable,
    admissible_range,
    blowdata_value,
    blowup_threshold,
    dm_norm,
    format_number,
    gap_report,
    predicted_rates,
)
from damped_waves.linear import DecaySeries_Wrapper, LinearEngine, State, wrap_time
from damped_waves.model.exceptions import (
    ConfigurationError,
    FitWindowError,
    HypothesisError,
    NonPositiveSeriesError,
)
from damped_waves.model.simulation_module import ModuleStatus, SimulationModule
from damped_waves.model.time_series import Quantity, TimeSeries
from damped_waves.semilinear import (
    Nonlinearity,
    RunOutcome,
    RunStatus,
    SemilinearEngine,
    picard_iterate,
)
from damped_waves.spectral import grid_norm
from damped_waves.utils import last_decades_window, populate_times_in_between, resolve_worker_count

PICARD_RATIO_BOUND = 0.5
PICARD_RATIO_FROM = 3


#######################################################################
# Command Result
#######################################################################
@dataclass(frozen=True)
class CommandResult:
    """Outcome of one subcommand: the overall verdict and the report text."""

    command: str
    passed: bool
    report_lines: List[str] = field(default_factory=list)
    verdicts: List[Verdict] = field(default_factory=list)
    files: List[Path] = field(default_factory=list)


def _state_scale(state: State) -> float:
    return max(state.u.max_norm(), state.ut.max_norm())


def _rate_entry(rates: Optional[RateTable], quantity: Quantity) -> Optional[RateEntry]:
    if rates is None:
        return None
    for entry in rates.entries.values():
        if entry.quantity == quantity:
            return entry
    return None


#######################################################################
# Experiment Runner Class
#######################################################################
class ExperimentRunner(SimulationModule):
    """
    Runs one subcommand from a resolved configuration and persists its
    artifacts (manifest, series CSVs, verdict table, report) under one directory.
    """

    #################################################
    # Class Attributes
    #################################################
    _name: str = "ExperimentRunner"

    #################################################
    # Constructor
    #################################################
    def __init__(
        self,
        config: ExperimentConfig,
        output_directory: Optional[Path] = None,
        workers: Optional[int] = None,
        instance_id: Optional[int] = None,
        logger: Optional[logging.Logger] = None,
        log_level: int = logging.INFO,
    ) -> None:
        """
        Initialize the runner.

        :param config: ExperimentConfig: The resolved configuration.
        :param output_directory: Path: Overrides ``output.directory``.
        :param workers: Worker count for independent runs and time points.
        :param instance_id: Unique identifier for this runner instance.
        :param logger: Logger instance for logging operations.
        :param log_level: Logging level for the runner and its engines.
        """
        super().__init__(instance_id=instance_id, logger=logger, log_level=log_level)
        self._config = config
        self._output_directory = Path(output_directory) if output_directory else config.output_directory
        self._workers = workers
        self._command_methods: Dict[str, Callable[[], CommandResult]] = {
            "linear-decay": self._linear_decay,
            "oracle-compare": self._oracle_compare,
            "semilinear": self._semilinear,
            "blowup-probe": self._blowup_contrast,
            "picard": self._picard,
            "exponents": self._exponents,
        }

    #################################################
    # Getter & Setter Methods
    #################################################
    def get_config(self) -> ExperimentConfig:
        return self._config

    def get_output_directory(self) -> Path:
        return self._output_directory

    def get_command_methods(self) -> Dict[str, Callable[[], CommandResult]]:
        return self._command_methods

    #################################################
    # Core Instance Method: Run
    #################################################
    def run(self) -> CommandResult:
        """
        Write the manifest, execute the configured subcommand, then write the report.

        :return: CommandResult: Verdict and report of the subcommand.
        :raise ConfigurationError: If the command has no registered method.
        """
        command = self._config.command
        method = self._command_methods.get(command)
        if method is None:
            raise ConfigurationError([f"unknown command '{command}'"])

        for warning in self._config.warnings:
            self._logger.warning(warning)
        self._output_directory.mkdir(parents=True, exist_ok=True)
        write_manifest(self._output_directory, self._config)

        self.set_status(ModuleStatus.RUNNING)
        self._logger.info(f"Running {command} into {self._output_directory}")
        try:
            result = method()
        except Exception:
            self.set_status(ModuleStatus.FAILED)
            raise
        header = [f"damped-waves {command}", f"result: {'pass' if result.passed else 'fail'}"]
        header += [f"warning: {w}" for w in self._config.warnings]
        write_report(self._output_directory, header + [""] + result.report_lines)
        self.set_status(ModuleStatus.COMPLETED)
        self._logger.info(f"{command} finished: {'pass' if result.passed else 'fail'}")
        return result

    #################################################
    # Helper Methods
    #################################################
    def _times(self, t_max: Optional[float] = None) -> List[float]:
        c = self._config
        return populate_times_in_between(c["run.t_min"], t_max or c["run.t_max"], c["run.count"], spacing="log")

    def _wrapper(self, preset: DataPreset, *modes: str) -> DecaySeries_Wrapper:
        """Wrapper starting in modes[0], carrying the data of every listed mode."""
        c = self._config
        data: Dict[str, Any] = {}
        if "oracle" in modes:
            data["v0hat"], data["v1hat"] = preset.radial_profiles(c["model.n"], c["oracle.r_max"])
        if "grid" in modes:
            data["initial"] = preset.build(c.grid)
            data["data_radius"] = preset.support_radius(c["model.n"])
        return DecaySeries_Wrapper(
            c.model, mode=modes[0], workers=self._workers, log_level=self._log_level, **data
        )

    def _linear_rates(self) -> Optional[RateTable]:
        c = self._config
        try:
            return predicted_rates(c["model.sigma"], c["model.n"])
        except HypothesisError as exc:
            self._logger.warning(f"No predicted rates: {exc}")
            return None

    def _verdict(
        self, series: TimeSeries, entry: RateEntry, window: Optional[Tuple[float, float]]
    ) -> Verdict:
        c = self._config
        if entry.log_flag:
            report = log_growth_check(series, window)
            ratio = report.ratio_max / report.ratio_min
            return Verdict(series.quantity, LOG_BOUND_RATIO, ratio, c["run.tol"], report.bounded, True, report.window)
        return compare(fit_rate(series, window), float(entry.exponent), c["run.tol"], c["run.one_sided"])

    #################################################
    # Core Instance Method: linear-decay
    #################################################
    def _linear_decay(self) -> CommandResult:
        c = self._config
        out = self._output_directory
        mode = c["run.mode"]
        preset = c.data
        times = self._times()
        wrapper = self._wrapper(preset, mode)
        rates = self._linear_rates()
        lines = [
            f"model: n={c['model.n']} sigma={format_number(c['model.sigma'])} mu={c['model.mu']:g} mode={mode}",
        ]

        window = c["run.window"]
        if mode == "grid":
            wrap = wrap_time(c.grid, preset.support_radius(c["model.n"]))
            lines.append(f"wrap_time: {wrap:.6g}")
            if window is None:
                pre_wrap = [t for t in times if t <= wrap]
                if len(pre_wrap) >= 2:
                    window = last_decades_window(pre_wrap)

        verdicts: List[Verdict] = []
        files: List[Path] = []
        for quantity in c.quantities:
            series = wrapper.fetch_series(quantity, times)
            files.append(write_series(out, series))
            if series.is_zero():
                lines.append(f"{quantity.label}: degenerate series (all values zero), no fit")
                continue
            entry = _rate_entry(rates, quantity)
            if entry is None and quantity.kind == "energy_Lm" and rates is not None and "grad_Lm" in rates:
                entry = dataclasses.replace(rates["grad_Lm"], exponent=rates.exponent_for(quantity), quantity=quantity)
            if entry is None:
                fit = fit_rate(series, window)
                lines.append(f"{quantity.label}: measured slope {fit.slope:.6g} (no predicted rate)")
                continue
            verdicts.append(self._verdict(series, entry, window))

        if c["run.cutoff"] is not None:
            lines += self._split_lines(preset, times[-1])

        files.append(write_verdicts(out, verdicts))
        lines += self._verdict_table(verdicts)
        passed = all(v.passed for v in verdicts)
        return CommandResult("linear-decay", passed, lines, verdicts, files)

    def _split_lines(self, preset: DataPreset, t_end: float) -> List[str]:
        """Low/high frequency energies of the grid solution at t=0 and t_end."""
        c = self._config
        engine = LinearEngine(c.model, log_level=self._log_level)
        initial = preset.build(c.grid)
        lines = [f"frequency split at |xi| = {c['run.cutoff']:g}:"]
        for state in (initial, engine.propagate(initial, t_end)):
            low, high = engine.frequency_split(state, c["run.cutoff"])
            lines.append(
                f"  t={state.time:g}: low energy {engine.energy(low):.6e}, high energy {engine.energy(high):.6e}"
            )
        return lines

    @staticmethod
    def _verdict_table(verdicts: List[Verdict]) -> List[str]:
        if not verdicts:
            return ["no verdicts"]
        rows = [[v.quantity, v.predicted, v.measured, v.tol, "pass" if v.passed else "fail"] for v in verdicts]
        return format_table(["quantity", "predicted", "measured", "tol", "pass"], rows)

    #################################################
    # Core Instance Method: oracle-compare
    #################################################
    def _oracle_compare(self) -> CommandResult:
        c = self._config
        out = self._output_directory
        preset = c.data
        wrap = wrap_time(c.grid, preset.support_radius(c["model.n"]))
        if wrap <= c["run.t_min"]:
            raise ConfigurationError(
                [f"wrap time {wrap:.6g} does not exceed run.t_min={c['run.t_min']:g}; enlarge grid.box_length"]
            )
        times = self._times(min(c["run.t_max"], wrap))
        wrapper = self._wrapper(preset, "grid", "oracle")
        lines = [f"wrap_time: {wrap:.6g}", f"window: [{times[0]:g}, {times[-1]:g}]"]

        compared = []
        for quantity in c.quantities:
            if not quantity.is_l2:
                lines.append(f"{quantity.label}: skipped, the oracle evaluates L2 quantities only")
                continue
            compared.append(quantity)
        on_grid = [wrapper.fetch_series(quantity, times) for quantity in compared]
        wrapper.switch_mode("oracle")
        exact = [wrapper.fetch_series(quantity, times) for quantity in compared]

        verdicts: List[Verdict] = []
        files: List[Path] = []
        for quantity, grid_series, oracle_series in zip(compared, on_grid, exact):
            scale = np.maximum(oracle_series.values, np.finfo(float).tiny)
            rel = np.abs(grid_series.values - oracle_series.values) / scale
            rows = zip(times, grid_series.values.tolist(), oracle_series.values.tolist(), rel.tolist())
            files.append(
                write_csv(out / f"comparison_{safe_label(quantity.label)}.csv", ("t", "grid", "oracle", "rel_diff"), rows)
            )
            worst = float(rel.max())
            verdicts.append(
                Verdict(quantity.label, 0.0, worst, c["run.tol"], worst <= c["run.tol"], True, (times[0], times[-1]))
            )

        files.append(write_verdicts(out, verdicts))
        lines += self._verdict_table(verdicts)
        return CommandResult("oracle-compare", all(v.passed for v in verdicts), lines, verdicts, files)

    #################################################
    # Core Instance Method: semilinear runs
    #################################################
    def _run_once(self, nl: Nonlinearity, preset: DataPreset, directory: Path) -> RunOutcome:
        c = self._config
        engine = SemilinearEngine(c.model, nl, c.stepper, log_level=self._log_level)
        outcome = engine.run(preset.build(c.grid), c["stepper.T"])
        for series in outcome.series.values():
            write_series(directory, series)
        bracket = outcome.blowup_time_bracket or (None, None)
        final_scale = _state_scale(outcome.final_state) if outcome.final_state is not None else None
        write_csv(
            directory / "outcome.csv",
            ("status", "final_time", "t_lo", "t_hi", "initial_max", "peak_max", "final_scale", "threshold", "steps"),
            [[outcome.status.value, outcome.final_time, bracket[0], bracket[1], outcome.initial_max_norm,
              outcome.peak_max_norm, final_scale, outcome.threshold, outcome.steps]],
        )
        return outcome

    @staticmethod
    def _outcome_lines(label: str, outcome: RunOutcome) -> List[str]:
        lines = [f"{label}: {outcome.status.value} at t={outcome.final_time:.6g} after {outcome.steps} steps"]
        if outcome.blowup_time_bracket is not None:
            lo, hi = outcome.blowup_time_bracket
            lines.append(f"{label}: blow-up time in [{lo:.6g}, {hi:.6g}], threshold {outcome.threshold:.3e}")
        lines.append(f"{label}: max-norm {outcome.initial_max_norm:.6e} -> peak {outcome.peak_max_norm:.6e}")
        return lines

    def _semilinear(self) -> CommandResult:
        c = self._config
        outcome = self._run_once(c.nonlinearity, c.data, self._output_directory)
        lines = self._outcome_lines("run", outcome)
        bound = blowup_threshold(c["model.sigma"], c["model.n"]).value
        lines.append(f"blow-up threshold: {format_number(bound)}")
        for label, series in sorted(outcome.series.items()):
            if label in ("xt", "u_Linf"):
                continue
            try:
                fit = fit_rate(series, c["run.window"])
            except (FitWindowError, NonPositiveSeriesError) as exc:
                lines.append(f"{label}: no fit ({exc})")
                continue
            lines.append(f"{label}: slope {fit.slope:.6g} over [{fit.window[0]:g}, {fit.window[1]:g}]")
        if "xt" in outcome.series and len(outcome.series["xt"]):
            lines.append(f"X(T) norm: {outcome.series['xt'].values[-1]:.6e}")
        return CommandResult("semilinear", True, lines)

    def _blowup_contrast(self) -> CommandResult:
        c = self._config
        preset = c.data
        initial = preset.build(c.grid)
        positivity = blowdata_value(c.model, initial.u, initial.ut)
        if not positivity > 0:
            raise ConfigurationError(
                [f"blowup-probe needs a positive integral of u1 + mu (-Laplace)^sigma u0, got {positivity:.6g}"]
            )

        nl = c.nonlinearity
        contrast_preset = dataclasses.replace(preset, amplitude=c["probe.amplitude_contrast"])
        runs = {
            "main": (nl, preset),
            "contrast": (Nonlinearity(c["probe.p_contrast"], nl.variant), contrast_preset),
        }
        workers = min(len(runs), resolve_worker_count(self._workers))
        with ThreadPoolExecutor(max_workers=workers) as executor:
            futures = {
                label: executor.submit(self._run_once, run_nl, run_preset, self._output_directory / label)
                for label, (run_nl, run_preset) in runs.items()
            }
            outcomes = {label: future.result() for label, future in futures.items()}

        main, contrast = outcomes["main"], outcomes["contrast"]
        contrast_initial = _state_scale(contrast_preset.build(c.grid))
        contrast_final = _state_scale(contrast.final_state) if contrast.final_state is not None else np.inf
        passed = (
            main.status is RunStatus.BLOWUP_DETECTED
            and contrast.status is RunStatus.COMPLETED
            and contrast_final < contrast_initial
        )
        lines = [f"blowdata_value: {positivity:.6e}"]
        lines += self._outcome_lines(f"main p={nl.p:g}", main)
        lines += self._outcome_lines(f"contrast p={c['probe.p_contrast']:g}", contrast)
        lines.append(f"contrast max-norm: initial {contrast_initial:.6e}, final {contrast_final:.6e}")
        return CommandResult("blowup-probe", passed, lines)

    def _picard(self) -> CommandResult:
        c = self._config
        out = self._output_directory
        initial = c.data.build(c.grid)
        nl = c.nonlinearity
        T = c["stepper.T"]
        size = dm_norm(initial.u, initial.ut, 2.0, 1.0, c.grid)
        result = picard_iterate(
            c.model,
            nl,
            initial,
            T,
            j_max=c["picard.j_max"],
            quadrature_points=c["picard.quadrature_points"],
            dealias=c["stepper.dealias"],
            logger=self._logger,
        )
        ratio_by_j = {j + 1: r for j, r in enumerate(result.ratios)}
        write_csv(out / "picard.csv", ("j", "diff", "ratio"), ([j, d, ratio_by_j.get(j)] for j, d in result.diffs))

        etd = SemilinearEngine(c.model, nl, c.stepper, log_level=self._log_level).run(initial, T)
        if etd.status is RunStatus.BLOWUP_DETECTED or etd.final_state is None:
            distance = np.inf
        else:
            distance = grid_norm(etd.final_state.u - result.final.u, 2)

        tail = result.ratios[PICARD_RATIO_FROM - 1:]
        worst = max(tail) if tail else 0.0
        verdicts = [
            Verdict("picard_ratio", PICARD_RATIO_BOUND, worst, PICARD_RATIO_BOUND,
                    result.converged and worst <= PICARD_RATIO_BOUND, True, (initial.time, T)),
            Verdict("etd_distance_L2", 0.0, float(distance), c["picard.cross_tol"],
                    bool(distance <= c["picard.cross_tol"]), True, (T, T)),
        ]
        write_verdicts(out, verdicts)
        lines = [
            f"data size (D_2^1 norm): {size:.6e}",
            f"converged: {'yes' if result.converged else 'no'}",
            f"ratios: {', '.join(f'{r:.4g}' for r in result.ratios)}",
            f"ETD vs Picard L2 distance at T={T:g}: {distance:.6e}",
        ]
        lines += self._verdict_table(verdicts)
        return CommandResult("picard", all(v.passed for v in verdicts), lines, verdicts)

    #################################################
    # Core Instance Method: exponents
    #################################################
    def _exponents(self) -> CommandResult:
        c = self._config
        sigma, m = c["exponents.sigma"], c["exponents.m"]
        reports = [admissible_range(sigma, n, m) for n in c["exponents.n"]]
        write_exponents(self._output_directory / EXPONENTS_NAME, reports)

        rows = []
        for report in reports:
            blowup = blowup_threshold(sigma, report.n)
            gap = gap_report(sigma, report.n)
            rows.append([
                format_number(report.sigma),
                str(report.n),
                format_number(report.m),
                format_number(report.existence_threshold),
                str(report.admissible),
                format_number(blowup.value),
                format_number(gap.gap_width),
                report.regime_tag.value,
                report.note or "",
            ])
        lines = format_table(["sigma", "n", "m", "threshold", "admissible", "blowup", "gap", "regime", "note"], rows)
        return CommandResult("exponents", True, lines)

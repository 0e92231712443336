from damped_waves.cli.presets import DataPreset
from damped_waves.cli.config import COMMANDS, ExperimentConfig, parse_config
from damped_waves.cli.reports import (
    EXPONENTS_NAME,
    MANIFEST_NAME,
    REPORT_NAME,
    VERDICTS_NAME,
    format_table,
    write_csv,
    write_exponents,
    write_manifest,
    write_report,
    write_series,
    write_verdicts,
)
from damped_waves.cli.runner import CommandResult, ExperimentRunner
from damped_waves.cli.main import build_parser, main

__all__ = [
    "DataPreset",
    "COMMANDS",
    "ExperimentConfig",
    "parse_config",
    "EXPONENTS_NAME",
    "MANIFEST_NAME",
    "REPORT_NAME",
    "VERDICTS_NAME",
    "format_table",
    "write_csv",
    "write_exponents",
    "write_manifest",
    "write_report",
    "write_series",
    "write_verdicts",
    "CommandResult",
    "ExperimentRunner",
    "build_parser",
    "main",
]

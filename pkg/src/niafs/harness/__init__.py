"""End-to-end experiment grid, reports and published-value comparison."""

from .config import CONFIG_KEYS, RunConfig, config_from_mapping, load_config
from .grid import BASELINE, Cell, GridResult, RepeatRecord, run_grid, worker_count
from .reference import REFERENCE_TABLES, Comparison, ReferenceTable, column_winners, compare_to_reference
from .report import emit_report, grid_to_csv, grid_to_markdown, parse_markdown, read_grid_csv, write_outputs

__all__ = [
    "BASELINE",
    "CONFIG_KEYS",
    "Cell",
    "Comparison",
    "GridResult",
    "REFERENCE_TABLES",
    "ReferenceTable",
    "RepeatRecord",
    "RunConfig",
    "column_winners",
    "compare_to_reference",
    "config_from_mapping",
    "emit_report",
    "grid_to_csv",
    "grid_to_markdown",
    "load_config",
    "parse_markdown",
    "read_grid_csv",
    "run_grid",
    "worker_count",
    "write_outputs",
]

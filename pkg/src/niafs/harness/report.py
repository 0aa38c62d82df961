"""CSV and Markdown renderings of a :class:`GridResult`.

The CSV writes floats with ``repr`` so that parsing it back reproduces every
value exactly; the Markdown table rounds to three decimals.
"""

from __future__ import annotations

import csv
import io
from pathlib import Path

from ..errors import ValidationError
from .grid import BASELINE, Cell, GridResult

FAIL = "FAIL"
CSV_COLUMNS = ("algorithm", "classifier", "feature_count", "mean_accuracy", "std_accuracy",
               "mean_f1", "std_f1", "mean_auc", "std_auc", "repeats", "status", "diagnostic")
REPEAT_COLUMNS = ("algorithm", "classifier", "repeat", "mask", "accuracy", "f1", "auc", "error")


def _f(x):
    return repr(float(x))


def grid_to_csv(result: GridResult) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for row in result.rows:
        for c in result.classifiers:
            cell = result.cells[(row, c)]
            status = FAIL if cell.failed else "ok"
            w.writerow([row, c, cell.feature_count, _f(cell.mean_accuracy), _f(cell.std_accuracy),
                        _f(cell.mean_f1), _f(cell.std_f1), _f(cell.mean_auc), _f(cell.std_auc),
                        cell.repeats, status, cell.diagnostic])
    return buf.getvalue()


def repeats_to_csv(result: GridResult) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(REPEAT_COLUMNS)
    for row in result.rows:
        for c in result.classifiers:
            for rec in result.cells[(row, c)].records:
                m = rec.metrics
                vals = ["", "", ""] if m is None else [_f(m.accuracy), _f(m.f1), _f(m.auc)]
                w.writerow([row, c, rec.repeat, " ".join(map(str, rec.mask)), *vals, rec.error])
    return buf.getvalue()


def read_grid_csv(path) -> GridResult:
    """Parse a grid CSV back into a result (summary statistics only, no per-repeat records)."""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ValidationError(f"cannot read grid CSV {path}: {exc}") from None
    reader = csv.DictReader(io.StringIO(text))
    if reader.fieldnames is None or tuple(reader.fieldnames) != CSV_COLUMNS:
        raise ValidationError(f"{path}: not a grid CSV (expected header {','.join(CSV_COLUMNS)})")
    cells, algos, clfs = {}, [], []
    for r in reader:
        a, c = r["algorithm"], r["classifier"]
        if a != BASELINE and a not in algos:
            algos.append(a)
        if c not in clfs:
            clfs.append(c)
        cell = Cell(a, c)
        cell.feature_count = int(r["feature_count"])
        for key in ("mean_accuracy", "std_accuracy", "mean_f1", "std_f1", "mean_auc", "std_auc"):
            setattr(cell, key, float(r[key]))
        cell.repeats = int(r["repeats"])
        cell.failed = r["status"] == FAIL
        cell.diagnostic = r["diagnostic"]
        cells[(a, c)] = cell
    if not cells:
        raise ValidationError(f"{path}: grid CSV has no rows")
    n_features = next((cell.feature_count for (a, _), cell in cells.items() if a == BASELINE and not cell.failed), 0)
    return GridResult(tuple(algos), tuple(clfs), cells, n_features, Path(path).name)


def _cell_text(cell: Cell) -> str:
    if cell.failed:
        return FAIL
    return f"{cell.mean_accuracy:.3f}±{cell.std_accuracy:.3f}"


def grid_to_markdown(result: GridResult) -> str:
    """Rows are the algorithms plus the baseline; columns are Features then one per classifier."""
    header = ["", "Features", *result.classifiers]
    lines = ["| " + " | ".join(header) + " |", "|" + "|".join(["---"] * len(header)) + "|"]
    for row in result.rows:
        cells = [result.cells[(row, c)] for c in result.classifiers]
        ok = [c for c in cells if not c.failed]
        features = str(ok[0].feature_count) if ok else FAIL
        lines.append("| " + " | ".join([row, features, *(_cell_text(c) for c in cells)]) + " |")
    return "\n".join(lines) + "\n"


def parse_markdown(text: str) -> dict:
    """Inverse of :func:`grid_to_markdown`: {(row, classifier): (mean, std) or FAIL}."""
    lines = [ln for ln in text.strip().splitlines() if ln.startswith("|")]
    header = [h.strip() for h in lines[0].strip("|").split("|")]
    out = {}
    for ln in lines[2:]:
        parts = [p.strip() for p in ln.strip("|").split("|")]
        for clf, value in zip(header[2:], parts[2:]):
            if value == FAIL:
                out[(parts[0], clf)] = FAIL
            else:
                m, s = value.split("±")
                out[(parts[0], clf)] = (float(m), float(s))
    return out


def emit_report(result: GridResult, fmt: str, path=None) -> str:
    if not result.cells:
        raise ValidationError("cannot report an empty grid")
    if fmt == "csv":
        text = grid_to_csv(result)
    elif fmt == "markdown":
        text = grid_to_markdown(result)
    else:
        raise ValidationError(f"format must be 'csv' or 'markdown', got {fmt!r}")
    if path is not None:
        try:
            Path(path).write_text(text, encoding="utf-8")
        except OSError as exc:
            raise OSError(f"cannot write report to {path}: {exc}") from exc
    return text


def write_outputs(result: GridResult, output_dir) -> dict:
    """Write grid.csv, repeats.csv and grid.md into ``output_dir``."""
    out = Path(output_dir)
    out.mkdir(parents=True, exist_ok=True)
    paths = {"csv": out / "grid.csv", "repeats": out / "repeats.csv", "markdown": out / "grid.md"}
    emit_report(result, "csv", paths["csv"])
    emit_report(result, "markdown", paths["markdown"])
    paths["repeats"].write_text(repeats_to_csv(result), encoding="utf-8")
    return paths


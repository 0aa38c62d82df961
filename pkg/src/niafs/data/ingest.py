"""CSV ingestion and preprocessing into a :class:`Dataset`.

A schema (``PreprocessSpec``) names the label column and its pass rule, the
categorical columns, per-column bin rules and columns to ignore. Every other
column is parsed as numeric; rows with a missing or unparseable cell are
dropped and counted.
"""

from __future__ import annotations

import configparser
import csv
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

import numpy as np

from ..errors import IngestionError, ValidationError
from .dataset import Dataset

LABEL_RULES = ("direct_binary", "threshold_pass")
SCALES = ("minmax_01", "none")


@dataclass(frozen=True)
class LabelRule:
    kind: str = "direct_binary"
    cutoff: float = 0.0
    inclusive: bool = True

    def __post_init__(self):
        if self.kind not in LABEL_RULES:
            raise ValidationError(f"label_rule must be one of {LABEL_RULES}, got {self.kind!r}")

    @classmethod
    def threshold_pass(cls, cutoff, inclusive=True):
        return cls("threshold_pass", float(cutoff), bool(inclusive))


@dataclass(frozen=True)
class BinRule:
    edges: tuple
    codes: tuple

    def __post_init__(self):
        edges = tuple(float(e) for e in self.edges)
        if len(edges) < 1 or any(b <= a for a, b in zip(edges, edges[1:])):
            raise ValidationError(f"bin edges must be strictly increasing, got {edges}")
        if len(self.codes) != len(edges):
            raise ValidationError(
                f"{len(edges)} edges define {len(edges)} bins (bottom catch-all included), "
                f"got {len(self.codes)} codes"
            )
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "codes", tuple(self.codes))


@dataclass(frozen=True)
class PreprocessSpec:
    label_column: str = "label"
    label_rule: LabelRule = field(default_factory=LabelRule)
    categorical_columns: tuple = ()
    bin_rules: dict = field(default_factory=dict)
    drop_columns: tuple = ()
    scale: str = "minmax_01"
    delimiter: str = ","

    def __post_init__(self):
        if self.scale not in SCALES:
            raise ValidationError(f"scale must be one of {SCALES}, got {self.scale!r}")
        if self.label_column in self.categorical_columns or self.label_column in self.bin_rules:
            raise ValidationError("the label column cannot also be a feature column")
        if len(self.delimiter) != 1:
            raise ValidationError(f"delimiter must be a single character, got {self.delimiter!r}")


@dataclass
class RawTable:
    """Typed columns in file order: float arrays, or str arrays for categoricals."""

    columns: dict
    dropped: int = 0
    source: Optional[str] = None

    @property
    def names(self):
        return list(self.columns)

    @property
    def n_rows(self) -> int:
        return len(next(iter(self.columns.values()))) if self.columns else 0

    @property
    def shape(self):
        return (self.n_rows, len(self.columns))


def _to_float(cell):
    try:
        v = float(cell)
    except (TypeError, ValueError):
        return np.nan
    return v if np.isfinite(v) else np.nan


def load_csv(path, schema: PreprocessSpec) -> RawTable:
    path = Path(path)
    if not path.exists():
        raise IngestionError(f"no such file: {path}")
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh, delimiter=schema.delimiter)
        try:
            header = [h.strip() for h in next(reader)]
        except StopIteration:
            raise IngestionError(f"{path}: empty file, header row expected") from None
        rows = [r for r in reader if r and any(c.strip() for c in r)]
    if len(set(header)) != len(header):
        raise IngestionError(f"{path}: duplicate column names in header")
    named = [schema.label_column, *schema.categorical_columns, *schema.bin_rules, *schema.drop_columns]
    missing = [c for c in dict.fromkeys(named) if c not in header]
    if missing:
        raise IngestionError(f"{path}: column(s) named in the schema are missing: {missing}")
    keep = [c for c in header if c not in schema.drop_columns]
    pos = {c: header.index(c) for c in keep}
    for i, r in enumerate(rows):
        if len(r) != len(header):
            raise IngestionError(f"{path}: row {i + 2} has {len(r)} fields, header has {len(header)}")

    cats = set(schema.categorical_columns)
    columns = {}
    bad = np.zeros(len(rows), dtype=bool)
    for c in keep:
        cells = [r[pos[c]].strip() for r in rows]
        if c in cats:
            arr = np.array(cells, dtype=object)
            bad |= np.array([cell == "" for cell in cells], dtype=bool)
        else:
            arr = np.array([_to_float(cell) for cell in cells], dtype=float)
            bad |= np.isnan(arr)
        columns[c] = arr
    if bad.any():
        columns = {c: a[~bad] for c, a in columns.items()}
    return RawTable(columns, dropped=int(bad.sum()), source=str(path))


def encode_categoricals(table: RawTable, columns):
    """Replace string columns by integer codes in first-appearance order.

    Returns ``(table, maps)`` where ``maps[col]`` is the category->code dict.
    """
    maps = {}
    out = dict(table.columns)
    for c in columns:
        if c not in out:
            raise IngestionError(f"categorical column {c!r} not in table")
        mapping = {}
        for v in out[c]:
            mapping.setdefault(v, len(mapping))
        maps[c] = mapping
        out[c] = apply_encoding(out[c], mapping)
    return RawTable(out, table.dropped, table.source), maps


def apply_encoding(values, mapping) -> np.ndarray:
    """Codes under a stored map; unseen categories get ``len(mapping)``."""
    unknown = len(mapping)
    return np.array([mapping.get(v, unknown) for v in values], dtype=float)


def bin_numeric(values, edges, codes) -> np.ndarray:
    """Map values to bin codes.

    ``edges`` e0 < e1 < ... define ``(-inf, e0)`` as the bottom catch-all and
    left-inclusive bins ``[e_i, e_{i+1})``; values at or above the top edge
    saturate into the top bin.
    """
    rule = BinRule(tuple(edges), tuple(codes))
    v = np.asarray(values, dtype=float)
    if np.any(~np.isfinite(v)):
        raise ValidationError("cannot bin non-finite values")
    idx = np.searchsorted(np.asarray(rule.edges), v, side="right")
    idx = np.minimum(idx, len(rule.codes) - 1)
    return np.asarray(rule.codes)[idx]


def binarize_label(values, rule: LabelRule) -> np.ndarray:
    try:
        v = np.asarray(values, dtype=float)
    except (TypeError, ValueError):
        raise IngestionError("label values must be numeric") from None
    if rule.kind == "direct_binary":
        if not np.all(np.isin(v, (0.0, 1.0))):
            raise IngestionError("direct_binary labels must already be 0/1")
        return v.astype(np.int64)
    passed = v >= rule.cutoff if rule.inclusive else v > rule.cutoff
    return passed.astype(np.int64)


def build_dataset(table: RawTable, spec: PreprocessSpec) -> Dataset:
    table, maps = encode_categoricals(table, spec.categorical_columns)
    labels = binarize_label(table.columns[spec.label_column], spec.label_rule)
    names, cols, encodings = [], [], {}
    for c, arr in table.columns.items():
        if c == spec.label_column:
            continue
        if c in spec.bin_rules:
            rule = spec.bin_rules[c]
            arr = bin_numeric(arr, rule.edges, rule.codes).astype(float)
            encodings[c] = {"type": "binned", "edges": list(rule.edges), "codes": list(rule.codes)}
        elif c in maps:
            encodings[c] = {"type": "categorical", "map": maps[c]}
        else:
            encodings[c] = {"type": "numeric"}
        names.append(c)
        cols.append(np.asarray(arr, dtype=float))
    X = np.column_stack(cols) if cols else np.zeros((labels.size, 0))
    return Dataset(X, labels, tuple(names), encodings, dropped_rows=table.dropped)


def load_dataset(path, spec: PreprocessSpec) -> Dataset:
    return build_dataset(load_csv(path, spec), spec)


def write_processed_csv(data: Dataset, path, label_name="label") -> None:
    """Write the processed features plus label for audit."""
    with open(path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh)
        w.writerow([*data.feature_names, label_name])
        for row, label in zip(data.features, data.labels):
            w.writerow([repr(float(v)) for v in row] + [int(label)])


def _split_list(text):
    return tuple(t.strip() for t in text.replace("\n", ",").split(",") if t.strip())


def _truthy(text):
    t = str(text).strip().lower()
    if t in ("1", "true", "yes", "on"):
        return True
    if t in ("0", "false", "no", "off"):
        return False
    raise ValidationError(f"expected a boolean, got {text!r}")


_SCHEMA_KEYS = {"label_column", "label_rule", "cutoff", "inclusive", "categorical_columns",
                "drop_columns", "scale", "delimiter"}


def load_schema(path) -> PreprocessSpec:
    """Read a schema file: a ``[schema]`` section plus optional ``[bin:<column>]`` sections."""
    cp = configparser.ConfigParser(interpolation=None)
    cp.optionxform = str
    try:
        with open(path, encoding="utf-8") as fh:
            cp.read_file(fh)
    except FileNotFoundError:
        raise IngestionError(f"no such schema file: {path}") from None
    except configparser.Error as exc:
        raise ValidationError(f"{path}: malformed schema: {exc}") from None
    bins = {}
    for section in cp.sections():
        if section == "schema":
            continue
        if not section.startswith("bin:"):
            raise ValidationError(f"{path}: unknown section [{section}]")
        col = section[4:].strip()
        sec = cp[section]
        extra = set(sec) - {"edges", "codes"}
        if extra:
            raise ValidationError(f"{path}: [{section}] unknown key(s) {sorted(extra)}")
        edges = tuple(float(x) for x in _split_list(sec.get("edges", "")))
        codes = tuple(float(x) for x in _split_list(sec.get("codes", "")))
        bins[col] = BinRule(edges, codes)
    sec = cp["schema"] if cp.has_section("schema") else {}
    extra = set(sec) - _SCHEMA_KEYS
    if extra:
        raise ValidationError(f"{path}: [schema] unknown key(s) {sorted(extra)}")
    kind = sec.get("label_rule", "direct_binary").strip()
    if kind == "threshold_pass":
        if "cutoff" not in sec:
            raise ValidationError(f"{path}: threshold_pass needs a cutoff")
        rule = LabelRule.threshold_pass(float(sec["cutoff"]), _truthy(sec.get("inclusive", "true")))
    else:
        rule = LabelRule(kind)
    delimiter = sec.get("delimiter", ",").strip() or ","
    if delimiter.lower() == "tab":
        delimiter = "\t"
    return PreprocessSpec(
        label_column=sec.get("label_column", "label").strip(),
        label_rule=rule,
        categorical_columns=_split_list(sec.get("categorical_columns", "")),
        bin_rules=bins,
        drop_columns=_split_list(sec.get("drop_columns", "")),
        scale=sec.get("scale", "minmax_01").strip(),
        delimiter=delimiter,
    )

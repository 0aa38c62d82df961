"""Clickstream event logs aggregated into per-enrollment action counts."""

from __future__ import annotations

import csv
from collections import Counter
from dataclasses import dataclass, field
from datetime import datetime
from pathlib import Path

import numpy as np

from ..errors import IngestionError, ValidationError
from .dataset import Dataset

EVENT_COLUMNS = ("enrollment_id", "timestamp", "action")


@dataclass
class EventLog:
    rows: list  # (enrollment_id, timestamp, action) string triples

    @classmethod
    def from_csv(cls, path) -> "EventLog":
        with open(path, newline="", encoding="utf-8") as fh:
            reader = csv.DictReader(fh)
            if reader.fieldnames is None:
                return cls([])
            missing = [c for c in EVENT_COLUMNS if c not in reader.fieldnames]
            if missing:
                raise IngestionError(f"{path}: event log lacks column(s) {missing}")
            return cls([(r["enrollment_id"].strip(), r["timestamp"].strip(), r["action"].strip()) for r in reader])


@dataclass
class AggregationReport:
    in_vocabulary: int = 0
    rejected_actions: Counter = field(default_factory=Counter)
    bad_timestamps: int = 0
    unlabelled_enrollments: int = 0

    @property
    def rejected(self) -> int:
        return sum(self.rejected_actions.values()) + self.bad_timestamps


@dataclass
class CountTable:
    enrollment_ids: list
    vocabulary: tuple
    counts: np.ndarray  # (n_enrollments, len(vocabulary)) int64
    report: AggregationReport
    labels: np.ndarray = None

    def to_dataset(self) -> Dataset:
        if self.labels is None:
            raise ValidationError("join labels before building a dataset")
        enc = {a: {"type": "numeric", "source": "event count"} for a in self.vocabulary}
        return Dataset(self.counts.astype(float), self.labels, self.vocabulary, enc)


def load_vocabulary(path, expected_size=None) -> tuple:
    """One action per line; blank lines and ``#`` comments are ignored."""
    words = []
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            words.append(line)
    if len(set(words)) != len(words):
        raise ValidationError(f"{path}: duplicate actions in vocabulary")
    if expected_size is not None and len(words) != expected_size:
        raise ValidationError(f"{path}: vocabulary has {len(words)} actions, expected {expected_size}")
    return tuple(words)


def _parse_timestamp(text):
    try:
        datetime.fromisoformat(text.replace("Z", "+00:00").replace("T", " ", 1))
        return True
    except ValueError:
        return False


def aggregate_events(log: EventLog, vocabulary) -> CountTable:
    """Count each vocabulary action per enrollment.

    Enrollments are ordered by first appearance. Out-of-vocabulary actions and
    unparseable timestamps are tallied in the report, never counted.
    """
    vocab = tuple(vocabulary)
    col = {a: i for i, a in enumerate(vocab)}
    order = {}
    counts = []
    report = AggregationReport()
    for eid, ts, action in log.rows:
        if not _parse_timestamp(ts):
            report.bad_timestamps += 1
            continue
        if action not in col:
            report.rejected_actions[action] += 1
            continue
        if eid not in order:
            order[eid] = len(order)
            counts.append(np.zeros(len(vocab), dtype=np.int64))
        counts[order[eid]][col[action]] += 1
        report.in_vocabulary += 1
    mat = np.array(counts, dtype=np.int64).reshape(len(counts), len(vocab))
    return CountTable(list(order), vocab, mat, report)


def join_labels(table: CountTable, labels_path, label_column="label") -> CountTable:
    """Align counts with a label file; enrollments without events get all-zero rows."""
    with open(labels_path, newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames is None or "enrollment_id" not in reader.fieldnames:
            raise IngestionError(f"{labels_path}: needs an enrollment_id column")
        if label_column not in reader.fieldnames:
            raise IngestionError(f"{labels_path}: missing label column {label_column!r}")
        pairs = [(r["enrollment_id"].strip(), r[label_column].strip()) for r in reader]
    index = {e: i for i, e in enumerate(table.enrollment_ids)}
    ids, labels = [], []
    mat = np.zeros((len(pairs), len(table.vocabulary)), dtype=np.int64)
    for k, (eid, lab) in enumerate(pairs):
        try:
            value = int(float(lab))
        except ValueError:
            raise IngestionError(f"{labels_path}: non-numeric label {lab!r} for {eid}") from None
        if value not in (0, 1):
            raise IngestionError(f"{labels_path}: label for {eid} must be 0/1, got {lab!r}")
        ids.append(eid)
        labels.append(value)
        if eid in index:
            mat[k] = table.counts[index[eid]]
    report = table.report
    report.unlabelled_enrollments = len(set(table.enrollment_ids) - set(ids))
    return CountTable(ids, table.vocabulary, mat, report, np.array(labels, dtype=np.int64))


def write_count_table(table: CountTable, path, label_column="label") -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh)
        header = ["enrollment_id", *table.vocabulary]
        if table.labels is not None:
            header.append(label_column)
        w.writerow(header)
        for k, eid in enumerate(table.enrollment_ids):
            row = [eid, *(int(c) for c in table.counts[k])]
            if table.labels is not None:
                row.append(int(table.labels[k]))
            w.writerow(row)

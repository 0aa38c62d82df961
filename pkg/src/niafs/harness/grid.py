"""The algorithm x classifier grid with repeats and a baseline row.

Work is split into one task per (algorithm, repeat): the task selects
features once and then trains every classifier on the selected columns.
Each random stream is addressed by what it is for, never by the order in
which tasks happen to run, so the result does not depend on worker count.

Stream addresses under ``master_seed``:
    (0, r)          outer train/test split of repeat r
    (1, r)          wrapper evaluation splits of repeat r
    (2, a, r)       optimizer for algorithm a
    (3, a, c, r)    classifier c trained after algorithm a
where a and c are positions in the canonical algorithm and classifier lists,
and the baseline uses a = BASELINE_INDEX.
"""

from __future__ import annotations

import os
import traceback
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

import numpy as np

from ..classifiers import CLASSIFIERS, Metrics, make_classifier
from ..data.dataset import Dataset
from ..data.ingest import PreprocessSpec, load_dataset, load_schema
from ..data.split import MinMaxScaler, split_train_test
from ..optimize.core import ALGORITHMS, OptimizerSpec
from ..rng import RngStream
from ..selection import FitnessSpec, select_features
from .config import RunConfig

BASELINE = "Baseline"
BASELINE_INDEX = 1000
WORKERS_ENV = "NIAFS_WORKERS"


@dataclass
class RepeatRecord:
    repeat: int
    mask: tuple                 # selected column indices
    metrics: Optional[Metrics]
    error: str = ""


@dataclass
class Cell:
    algorithm: str
    classifier: str
    records: list = field(default_factory=list)
    feature_count: int = 0
    mean_accuracy: float = float("nan")
    std_accuracy: float = float("nan")
    mean_f1: float = float("nan")
    std_f1: float = float("nan")
    mean_auc: float = float("nan")
    std_auc: float = float("nan")
    failed: bool = False
    diagnostic: str = ""
    repeats: int = 0

    def summarise(self):
        self.repeats = len(self.records)
        errors = [r for r in self.records if r.error]
        if errors:
            self.failed = True
            self.diagnostic = f"repeat {errors[0].repeat}: {errors[0].error}"
            return self
        counts = [len(r.mask) for r in self.records]
        values, freq = np.unique(counts, return_counts=True)
        self.feature_count = int(values[np.argmax(freq)])  # smallest count among ties
        for name in ("accuracy", "f1", "auc"):
            v = np.array([getattr(r.metrics, name) for r in self.records], dtype=float)
            setattr(self, f"mean_{name}", float(np.mean(v)))
            setattr(self, f"std_{name}", float(np.std(v)))
        return self


@dataclass
class GridResult:
    algorithms: tuple
    classifiers: tuple
    cells: dict                 # (row, classifier) -> Cell, rows include BASELINE
    n_features: int
    dataset: str = ""

    @property
    def rows(self):
        return (*self.algorithms, BASELINE)

    @property
    def failed_cells(self):
        return [c for c in self.cells.values() if c.failed]

    def cell(self, row, classifier) -> Cell:
        return self.cells[(row, classifier)]

    def mean_table(self):
        return {(a, c): self.cells[(a, c)].mean_accuracy for a in self.rows for c in self.classifiers
                if not self.cells[(a, c)].failed}


def worker_count(default=None) -> int:
    raw = os.environ.get(WORKERS_ENV)
    if raw is None or raw.strip() == "":
        return default or os.cpu_count() or 1
    try:
        n = int(raw)
    except ValueError:
        raise ValueError(f"{WORKERS_ENV} must be a positive integer, got {raw!r}") from None
    if n < 1:
        raise ValueError(f"{WORKERS_ENV} must be a positive integer, got {raw!r}")
    return n


def load_config_dataset(config: RunConfig):
    spec = load_schema(config.schema) if config.schema else PreprocessSpec()
    return load_dataset(config.dataset, spec), spec


def _scaled(train: Dataset, test: Dataset, scale: bool):
    if not scale:
        return train.features, test.features
    s = MinMaxScaler.fit(train.features)
    return s.transform(train.features), s.transform(test.features)


def _run_task(task):
    """One (algorithm, repeat) unit; returns {classifier: RepeatRecord}."""
    algorithm, repeat, data, config, scale = task
    m = config.master_seed
    train, test = split_train_test(data, RngStream(m, (0, repeat)), stratified=config.stratified)
    out = {}
    if algorithm == BASELINE:
        a_idx = BASELINE_INDEX
        mask = tuple(range(data.n_features))
    else:
        a_idx = ALGORITHMS.index(algorithm)
        spec = FitnessSpec(classifier=config.wrapper,
                           classifier_params={"k": 5} if config.wrapper == "KNN" else {},
                           alpha=config.alpha, protocol=config.protocol,
                           inner_folds=config.inner_folds, threshold=config.threshold, scale=scale)
        opt = OptimizerSpec(algorithm, config.population_size, config.max_evaluations)
        selection_data = data if config.protocol == "paper_faithful" else train
        try:
            result = select_features(selection_data, opt, spec, RngStream(m, (2, a_idx, repeat)),
                                     evaluation_rng=RngStream(m, (1, repeat)))
        except Exception as exc:
            msg = f"selection failed: {type(exc).__name__}: {exc}"
            return {c: RepeatRecord(repeat, (), None, msg) for c in config.classifiers}
        mask = result.mask.indices
    Xtr, Xte = _scaled(train, test, scale)
    cols = list(mask)
    for c in config.classifiers:
        c_idx = list(CLASSIFIERS).index(c)
        try:
            model = make_classifier(c)
            model.fit(Xtr[:, cols], train.labels, rng=RngStream(m, (3, a_idx, c_idx, repeat)))
            pred = model.predict(Xte[:, cols])
            scores = model.predict_scores(Xte[:, cols])
            out[c] = RepeatRecord(repeat, mask, Metrics.compute(pred, scores, test.labels))
        except Exception as exc:
            last = traceback.extract_tb(exc.__traceback__)[-1]
            out[c] = RepeatRecord(repeat, mask, None,
                                  f"{type(exc).__name__}: {exc} ({Path(last.filename).name}:{last.lineno})")
    return out


def run_grid(config: RunConfig, data: Dataset = None, workers: int = None, scale: bool = None) -> GridResult:
    """Run every (algorithm, classifier, repeat) cell plus the all-features baseline."""
    if data is None:
        data, pspec = load_config_dataset(config)
        if scale is None:
            scale = pspec.scale == "minmax_01"
    scale = True if scale is None else scale
    workers = worker_count() if workers is None else workers
    rows = (*config.algorithms, BASELINE)
    tasks = [(a, r, data, config, scale) for a in rows for r in range(config.repeats)]
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=min(workers, len(tasks))) as pool:
            outputs = list(pool.map(_run_task, tasks))
    else:
        outputs = [_run_task(t) for t in tasks]
    cells = {(a, c): Cell(a, c) for a in rows for c in config.classifiers}
    # reduction in (algorithm, classifier, repeat) order, independent of completion order
    for (a, r, *_), out in zip(tasks, outputs):
        for c in config.classifiers:
            cells[(a, c)].records.append(out[c])
    for cell in cells.values():
        cell.records.sort(key=lambda rec: rec.repeat)
        cell.summarise()
    return GridResult(tuple(config.algorithms), tuple(config.classifiers), cells, data.n_features,
                      Path(config.dataset).name)

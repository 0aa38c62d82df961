"""The in-memory dataset passed between pipeline stages."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..errors import DimensionError, ValidationError


@dataclass(frozen=True)
class Dataset:
    """Numeric features, binary labels and per-column provenance.

    ``encodings`` maps a feature name to a dict describing how the column was
    produced, e.g. ``{"type": "categorical", "map": {...}}`` or
    ``{"type": "binned", "edges": [...], "codes": [...]}``.
    """

    features: np.ndarray
    labels: np.ndarray
    feature_names: tuple
    encodings: dict = field(default_factory=dict)
    dropped_rows: int = 0

    def __post_init__(self):
        X = np.asarray(self.features, dtype=float)
        if X.ndim == 1:
            X = X[:, None]
        y = np.asarray(self.labels)
        if X.ndim != 2 or y.ndim != 1 or X.shape[0] != y.shape[0]:
            raise DimensionError(f"features {X.shape} and labels {y.shape} do not align")
        if y.size and not np.all(np.isin(y, (0, 1))):
            raise ValidationError("labels must be binary 0/1")
        names = tuple(str(n) for n in self.feature_names) if self.feature_names is not None else ()
        if not names:
            names = tuple(f"x{i}" for i in range(X.shape[1]))
        if len(names) != X.shape[1]:
            raise DimensionError(f"{len(names)} feature names for {X.shape[1]} columns")
        if len(set(names)) != len(names):
            raise ValidationError("feature names must be unique")
        if not np.all(np.isfinite(X)):
            raise ValidationError("features contain missing or non-finite values")
        X = np.ascontiguousarray(X)
        y = y.astype(np.int64)
        X.setflags(write=False)
        y.setflags(write=False)
        object.__setattr__(self, "features", X)
        object.__setattr__(self, "labels", y)
        object.__setattr__(self, "feature_names", names)

    @property
    def n_rows(self) -> int:
        return self.features.shape[0]

    @property
    def n_features(self) -> int:
        return self.features.shape[1]

    def rows(self, idx) -> "Dataset":
        idx = np.asarray(idx)
        return Dataset(self.features[idx], self.labels[idx], self.feature_names, self.encodings)

    def columns(self, mask) -> "Dataset":
        """Restrict to the columns where ``mask`` is true (bool vector or index list)."""
        mask = np.asarray(mask)
        idx = np.flatnonzero(mask) if mask.dtype == bool else mask.astype(int)
        names = tuple(self.feature_names[i] for i in idx)
        enc = {n: self.encodings[n] for n in names if n in self.encodings}
        return Dataset(self.features[:, idx], self.labels, names, enc, self.dropped_rows)

    def class_counts(self) -> np.ndarray:
        return np.bincount(self.labels, minlength=2)

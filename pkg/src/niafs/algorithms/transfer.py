import numpy as np


def binarize_probability(value):
    """Logistic squashing into [0, 1], safe for large magnitudes."""
    v = np.asarray(value, dtype=float)
    out = np.where(v >= 0, 1.0 / (1.0 + np.exp(-np.abs(v))), np.exp(-np.abs(v)) / (1.0 + np.exp(-np.abs(v))))
    return float(out) if out.ndim == 0 else out

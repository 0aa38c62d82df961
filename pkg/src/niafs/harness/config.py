"""Run configuration files.

A config is an INI file with a single ``[run]`` section. Only ``dataset`` is
required; see ``RunConfig`` for every key and its default. Relative paths
are resolved against the directory holding the config file.
"""

from __future__ import annotations

import configparser
import os
from dataclasses import dataclass, field, fields
from pathlib import Path
from typing import Optional

from ..classifiers import CLASSIFIERS, DEFAULT_CLASSIFIERS
from ..errors import ValidationError
from ..optimize.core import ALGORITHMS
from ..selection import PROTOCOLS


@dataclass(frozen=True)
class RunConfig:
    dataset: str
    schema: Optional[str] = None
    algorithms: tuple = ALGORITHMS
    classifiers: tuple = DEFAULT_CLASSIFIERS
    repeats: int = 10
    master_seed: int = 0
    threshold: float = 0.5
    alpha: float = 0.99
    protocol: str = "paper_faithful"
    inner_folds: int = 3
    wrapper: str = "KNN"
    population_size: int = 30
    max_evaluations: int = 15000
    output_dir: str = "niafs-output"
    reference: Optional[str] = None
    stratified: bool = True

    def __post_init__(self):
        if not self.dataset:
            raise ValidationError("dataset: a dataset path is required")
        if self.repeats < 1:
            raise ValidationError(f"repeats: must be an integer >= 1, got {self.repeats}")
        if not self.algorithms:
            raise ValidationError("algorithms: list must not be empty")
        if not self.classifiers:
            raise ValidationError("classifiers: list must not be empty")
        bad = [a for a in self.algorithms if a not in ALGORITHMS]
        if bad:
            raise ValidationError(f"algorithms: unknown {bad}; expected names from {list(ALGORITHMS)}")
        bad = [c for c in self.classifiers if c not in CLASSIFIERS]
        if bad:
            raise ValidationError(f"classifiers: unknown {bad}; expected names from {list(CLASSIFIERS)}")
        if self.wrapper not in CLASSIFIERS:
            raise ValidationError(f"wrapper: unknown classifier {self.wrapper!r}")
        if len(set(self.algorithms)) != len(self.algorithms) or len(set(self.classifiers)) != len(self.classifiers):
            raise ValidationError("algorithms/classifiers: duplicate entries")
        if self.protocol not in PROTOCOLS:
            raise ValidationError(f"protocol: expected one of {PROTOCOLS}, got {self.protocol!r}")
        if not 0.0 < self.threshold < 1.0:
            raise ValidationError(f"threshold: expected a real in (0, 1), got {self.threshold}")
        if not 0.0 < self.alpha <= 1.0:
            raise ValidationError(f"alpha: expected a real in (0, 1], got {self.alpha}")
        if not 0 <= self.master_seed < 2**64:
            raise ValidationError(f"master_seed: expected a 64-bit unsigned integer, got {self.master_seed}")
        if self.population_size < 2 or self.max_evaluations < self.population_size:
            raise ValidationError("population_size/max_evaluations: need 2 <= population_size <= max_evaluations")


def _as_list(text):
    return tuple(t.strip() for t in text.replace("\n", ",").split(",") if t.strip())


def _as_bool(text):
    t = text.strip().lower()
    if t in ("1", "true", "yes", "on"):
        return True
    if t in ("0", "false", "no", "off"):
        return False
    raise ValueError("expected true/false")


_CONVERT = {
    "algorithms": (_as_list, "a comma-separated list"),
    "classifiers": (_as_list, "a comma-separated list"),
    "repeats": (int, "an integer"),
    "master_seed": (int, "an integer"),
    "threshold": (float, "a real number"),
    "alpha": (float, "a real number"),
    "inner_folds": (int, "an integer"),
    "population_size": (int, "an integer"),
    "max_evaluations": (int, "an integer"),
    "stratified": (_as_bool, "true or false"),
}
_PATH_KEYS = ("dataset", "schema", "output_dir")
CONFIG_KEYS = tuple(f.name for f in fields(RunConfig))


def config_from_mapping(values: dict, base_dir=None) -> RunConfig:
    unknown = sorted(set(values) - set(CONFIG_KEYS))
    if unknown:
        raise ValidationError(f"unknown config key(s) {unknown}; allowed keys: {list(CONFIG_KEYS)}")
    if "dataset" not in values:
        raise ValidationError("dataset: a dataset path is required")
    kwargs = {}
    for key, raw in values.items():
        if isinstance(raw, str):
            raw = raw.strip()
            if key in _CONVERT:
                conv, form = _CONVERT[key]
                try:
                    raw = conv(raw)
                except ValueError:
                    raise ValidationError(f"{key}: expected {form}, got {raw!r}") from None
            elif key in _PATH_KEYS and base_dir is not None and raw and not Path(raw).is_absolute():
                raw = os.path.normpath(Path(base_dir) / raw)
        kwargs[key] = raw
    return RunConfig(**kwargs)


def load_config(path) -> RunConfig:
    path = Path(path)
    if not path.exists():
        raise ValidationError(f"no such config file: {path}")
    cp = configparser.ConfigParser(interpolation=None)
    cp.optionxform = str
    try:
        cp.read(path, encoding="utf-8")
    except configparser.Error as exc:
        raise ValidationError(f"{path}: malformed config: {exc}") from None
    extra = [s for s in cp.sections() if s != "run"]
    if extra:
        raise ValidationError(f"{path}: unknown section(s) {extra}; only [run] is allowed")
    if not cp.has_section("run"):
        raise ValidationError(f"{path}: missing [run] section")
    return config_from_mapping(dict(cp["run"]), base_dir=path.parent)

"""Hierarchical seeded random streams.

A stream is identified by ``(master_seed, path)``. The path is mapped onto
numpy's ``SeedSequence`` spawn key, so child streams are independent of one
another and of the order in which they are created. This is what keeps a
parallel grid bit-identical to a serial one.
"""

from __future__ import annotations

import numpy as np

from .errors import ValidationError

_MASK64 = (1 << 64) - 1


class RngStream:
    """A reproducible random stream addressed by ``(master_seed, path)``.

    Draw methods delegate to a lazily created ``numpy.random.Generator``.
    Two streams with equal seed and path yield identical draw sequences.
    """

    __slots__ = ("master_seed", "path", "_gen")

    def __init__(self, master_seed: int, path=()):
        master_seed = int(master_seed)
        if master_seed < 0 or master_seed > _MASK64:
            raise ValidationError(f"master_seed must be a 64-bit unsigned integer, got {master_seed}")
        path = tuple(int(p) for p in path)
        if any(p < 0 for p in path):
            raise ValidationError(f"stream path labels must be non-negative, got {path}")
        self.master_seed = master_seed
        self.path = path
        self._gen = None

    def derive(self, label: int) -> "RngStream":
        return RngStream(self.master_seed, self.path + (int(label),))

    @property
    def generator(self) -> np.random.Generator:
        if self._gen is None:
            seq = np.random.SeedSequence(self.master_seed, spawn_key=self.path)
            self._gen = np.random.Generator(np.random.PCG64(seq))
        return self._gen

    def fresh(self) -> "RngStream":
        """Same address, rewound to the first draw."""
        return RngStream(self.master_seed, self.path)

    def __getattr__(self, name):
        # random, normal, integers, permutation, choice, ... on the generator
        if name.startswith("_"):
            raise AttributeError(name)
        return getattr(self.generator, name)

    def __reduce__(self):
        # pickles the address only; the unpickled stream restarts at draw 0
        return (RngStream, (self.master_seed, self.path))

    def __repr__(self):
        return f"RngStream(master_seed={self.master_seed}, path={list(self.path)})"

    def __eq__(self, other):
        if not isinstance(other, RngStream):
            return NotImplemented
        return self.master_seed == other.master_seed and self.path == other.path

    def __hash__(self):
        return hash((self.master_seed, self.path))


def derive_stream(rng: RngStream, label: int) -> RngStream:
    return rng.derive(label)


def as_stream(seed_or_stream) -> RngStream:
    if isinstance(seed_or_stream, RngStream):
        return seed_or_stream
    return RngStream(int(seed_or_stream))

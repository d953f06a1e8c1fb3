"""Flat parameter vectors with a named layout, and per-parameter freezing."""

import numpy as np

from ..errors import ShapeMismatch


class ParamLayout:
    """Ordered map of parameter names to (offset, shape) in a flat vector."""

    def __init__(self, entries):
        self.entries = []          # (name, offset, shape)
        self.index = {}
        off = 0
        for name, shape in entries:
            n = int(np.prod(shape))
            self.entries.append((name, off, tuple(shape)))
            self.index[name] = (off, tuple(shape))
            off += n
        self.size = off

    def names(self):
        return [e[0] for e in self.entries]

    def slice_of(self, name):
        off, shape = self.index[name]
        return slice(off, off + int(np.prod(shape)))

    def view(self, flat, name):
        off, shape = self.index[name]
        n = int(np.prod(shape))
        return flat[off:off + n].reshape(shape)


class NetworkWeights:
    """Flat float64 parameter vector bound to a layout and a spec hash."""

    def __init__(self, values, layout: ParamLayout, spec_hash: str):
        values = np.asarray(values, dtype=np.float64)
        if values.ndim != 1 or values.size != layout.size:
            raise ShapeMismatch(
                f"weight vector length {values.size} != layout size {layout.size}")
        if not np.all(np.isfinite(values)):
            raise ValueError("non-finite network parameter")
        self.values = values
        self.layout = layout
        self.spec_hash = spec_hash

    def __len__(self):
        return self.values.size

    def get(self, name):
        return self.layout.view(self.values, name)

    def copy(self):
        return NetworkWeights(self.values.copy(), self.layout, self.spec_hash)


class FreezeMask:
    """Boolean per parameter; True marks a frozen (non-trainable) entry."""

    def __init__(self, mask):
        self.mask = np.asarray(mask, dtype=bool)

    @classmethod
    def none(cls, n):
        return cls(np.zeros(n, dtype=bool))

    @classmethod
    def from_layer_names(cls, layout: ParamLayout, predicate):
        """Freeze every parameter whose layout name satisfies the predicate."""
        m = np.zeros(layout.size, dtype=bool)
        for name, off, shape in layout.entries:
            if predicate(name):
                m[off:off + int(np.prod(shape))] = True
        return cls(m)

    def __len__(self):
        return self.mask.size

    @property
    def frozen_count(self):
        return int(self.mask.sum())

    @property
    def trainable_count(self):
        return int((~self.mask).sum())

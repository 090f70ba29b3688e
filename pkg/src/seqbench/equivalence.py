"""Random operation scripts and digests for oracle-equivalence runs.

A script is three parallel arrays (op kind, index, value).  Indices are
drawn against the size the sequence will have at that step, so every
operation is valid for any correct implementation.  About half of the
indexed operations land within 8 positions of the previous one, which
keeps position caches busy; the rest are uniform.

The digest of a run is ``(size, hash, checksum)``: the final size, an
FNV-1a hash of the final contents in order, and the wrapping sum of every
value returned by ``item``.
"""

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np
from numba import njit

from .block import DEFAULT_BLOCK_CAPACITY
from .prng import MASK62, MASK64, make_rng
from .structures import make_sequence

ITEM, INSERT, REMOVE, ADD_FIRST, ADD_LAST, REMOVE_FIRST, REMOVE_LAST = range(7)
OP_NAMES = ("item", "insert", "remove", "add_first", "add_last",
            "remove_first", "remove_last")

# cumulative weights out of 20 for ITEM..REMOVE_LAST; adds outweigh removes
_WEIGHTS = np.array([6, 10, 13, 15, 17, 18, 20], np.int64)

FNV_OFFSET = 0xCBF29CE484222325
FNV_PRIME = 0x100000001B3


class Digest(NamedTuple):
    size: int
    hash: int
    checksum: int


@dataclass(frozen=True)
class OpScript:
    seed: int
    kinds: np.ndarray
    indices: np.ndarray
    values: np.ndarray

    def __len__(self):
        return len(self.kinds)

    @property
    def final_size(self):
        grow = np.isin(self.kinds, (INSERT, ADD_FIRST, ADD_LAST)).sum()
        shrink = np.isin(self.kinds, (REMOVE, REMOVE_FIRST, REMOVE_LAST)).sum()
        return int(grow - shrink)


@njit
def _generate(rng, ops, kinds, indices, values):
    size = 0
    last = 0
    for t in range(ops):
        if size == 0:
            kind = (INSERT, ADD_FIRST, ADD_LAST)[rng.below(3)]
        else:
            r = rng.below(20)
            kind = 0
            while r >= _WEIGHTS[kind]:
                kind += 1
        idx = 0
        if kind == ITEM or kind == REMOVE or kind == INSERT:
            bound = size + 1 if kind == INSERT else size
            if rng.below(2) == 0:
                idx = last - 8 + rng.below(17)
                if idx < 0:
                    idx = 0
                if idx >= bound:
                    idx = bound - 1
            else:
                idx = rng.below(bound)
            last = idx
        kinds[t] = kind
        indices[t] = idx
        values[t] = np.int64(rng.next_u64() & np.uint64(MASK62)) - (np.int64(1) << 61)
        if kind == INSERT or kind == ADD_FIRST or kind == ADD_LAST:
            size += 1
        elif kind != ITEM:
            size -= 1


def generate_script(seed, ops):
    """Deterministic script of ``ops`` operations for ``seed``."""
    kinds = np.empty(ops, np.int8)
    indices = np.empty(ops, np.int64)
    values = np.empty(ops, np.int64)
    _generate(make_rng(seed), ops, kinds, indices, values)
    return OpScript(seed, kinds, indices, values)


@njit
def apply_script(seq, kinds, indices, values):
    checksum = np.uint64(0)
    for t in range(kinds.shape[0]):
        kind = kinds[t]
        if kind == ITEM:
            checksum += np.uint64(seq.item(indices[t]))
        elif kind == INSERT:
            seq.insert(indices[t], values[t])
        elif kind == REMOVE:
            seq.remove(indices[t])
        elif kind == ADD_FIRST:
            seq.add_first(values[t])
        elif kind == ADD_LAST:
            seq.add_last(values[t])
        elif kind == REMOVE_FIRST:
            seq.remove_first()
        else:
            seq.remove_last()
    h = np.uint64(FNV_OFFSET)
    for i in range(seq.size()):
        h = (h ^ np.uint64(seq.get(i))) * np.uint64(FNV_PRIME)
    return seq.size(), h, checksum


def digest_of(values, checksum=0):
    """Digest of a Python sequence of ints, computed with Python integers."""
    h = FNV_OFFSET
    for v in values:
        h = ((h ^ (v & MASK64)) * FNV_PRIME) & MASK64
    return Digest(len(values), h, checksum & MASK64)


def _run_oracle(script):
    seq = make_sequence("oracle")
    checksum = 0
    for kind, idx, value in zip(script.kinds.tolist(), script.indices.tolist(),
                                script.values.tolist()):
        if kind == ITEM:
            checksum += seq.item(idx)
        elif kind == INSERT:
            seq.insert(idx, value)
        elif kind == REMOVE:
            seq.remove(idx)
        elif kind == ADD_FIRST:
            seq.add_first(value)
        elif kind == ADD_LAST:
            seq.add_last(value)
        elif kind == REMOVE_FIRST:
            seq.remove_first()
        else:
            seq.remove_last()
    return digest_of(list(seq), checksum)


def run_script(structure_id, script, block_capacity=DEFAULT_BLOCK_CAPACITY, seq=None):
    """Apply ``script`` to a fresh structure (or to ``seq``) and digest the result."""
    if structure_id == "oracle":
        return _run_oracle(script)
    if seq is None:
        seq = make_sequence(structure_id, block_capacity)
    size, h, checksum = apply_script(seq, script.kinds, script.indices, script.values)
    return Digest(int(size), int(h), int(checksum))

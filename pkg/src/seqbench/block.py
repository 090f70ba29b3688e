"""ArrayBlock: a circular primary table of fixed-size circular blocks.

Blocks are rows of one pooled 2-D array, each with its own ``lower`` and
``count``.  The primary table is a circular array of row numbers; user
order is the concatenation of the blocks in primary order.

The block-level cache stores the ordinal (position in user order) of the
last block located and the user index of its first element.

Insertion into a full block splits it in two halves, writing the new
element while the half is copied, so a split moves exactly B/2 stored
elements.  A removal that leaves a block and its neighbour (successor,
else predecessor) holding at most 2B/3 elements together merges them,
moving whichever side is cheaper.  Both keep roughly a third of each block
free without ever thrashing: a merge produces at most 2B/3, a split needs B.

Counters: ``elem_moves`` and ``slot_moves`` accumulate shifted elements
and shifted primary slots; ``op_moves``/``op_slot_moves`` hold those of
the most recent operation; ``worst_excess`` is the largest value seen of
``2*(op_moves + op_slot_moves) - (B + block_count_before_op)``, which
stays <= 0 while every operation respects the B/2 + block_count/2 bound.
Growing the pool or the primary table is relocation, not counted.
"""

import numpy as np
from numba import int64, njit
from numba.experimental import jitclass

from ._native import WORD, copy_circular, shift_down, shift_up
from .core import UnderflowError, WORD_BYTES
from .ops import Ops, inline

DEFAULT_BLOCK_CAPACITY = 2048
MIN_BLOCK_CAPACITY = 4
MAX_BLOCK_CAPACITY = 1 << 16
MIN_PRIMARY = 8
HEADER_WORDS = 8
BLOCK_HEADER_WORDS = 2


def check_block_capacity(b):
    if b < MIN_BLOCK_CAPACITY or b > MAX_BLOCK_CAPACITY or b & (b - 1):
        raise ValueError(
            f"block capacity must be a power of two in "
            f"[{MIN_BLOCK_CAPACITY}, {MAX_BLOCK_CAPACITY}], got {b}"
        )


# -- bookkeeping ----------------------------------------------------------------

@inline
def _size(ab):
    return ab.n


@inline
def _block_at(ab, p):
    return ab.prim[(ab.plower + p) & ab.pmask]


@inline
def _row(ab, bid):
    return ab.data.ctypes.data + bid * ab.bcap * WORD


@inline
def _begin(ab):
    ab.op_moves = 0
    ab.op_slot_moves = 0
    return ab.nblocks


@inline
def _end(ab, nblocks_before):
    ab.elem_moves += ab.op_moves
    ab.slot_moves += ab.op_slot_moves
    excess = 2 * (ab.op_moves + ab.op_slot_moves) - (ab.bcap + nblocks_before)
    if excess > ab.worst_excess:
        ab.worst_excess = excess


@njit
def _alloc(ab, lower):
    if ab.n_free > 0:
        ab.n_free -= 1
        bid = ab.free_rows[ab.n_free]
    else:
        rows = ab.data.shape[0]
        if ab.rows_used == rows:
            data = np.empty((2 * rows, ab.bcap), np.int64)
            data[:rows] = ab.data
            ab.data = data
            blower = np.zeros(2 * rows, np.int64)
            blower[:rows] = ab.blower
            ab.blower = blower
            bcount = np.zeros(2 * rows, np.int64)
            bcount[:rows] = ab.bcount
            ab.bcount = bcount
        bid = ab.rows_used
        ab.rows_used += 1
    ab.blower[bid] = lower
    ab.bcount[bid] = 0
    return bid


@njit
def _release(ab, bid):
    if ab.n_free == ab.free_rows.shape[0]:
        grown = np.empty(2 * ab.n_free, np.int64)
        grown[: ab.n_free] = ab.free_rows
        ab.free_rows = grown
    ab.free_rows[ab.n_free] = bid
    ab.n_free += 1


# -- primary table -----------------------------------------------------------------

@njit
def _prim_grow(ab):
    cap = ab.pmask + 1
    grown = np.empty(2 * cap, np.int64)
    copy_circular(ab.prim.ctypes.data, ab.pmask, ab.plower,
                  grown.ctypes.data, 2 * cap - 1, 0, ab.nblocks)
    ab.prim = grown
    ab.pmask = 2 * cap - 1
    ab.plower = 0


@njit
def _prim_insert(ab, p, bid):
    if ab.nblocks == ab.pmask + 1:
        _prim_grow(ab)
    m = ab.nblocks
    base = ab.prim.ctypes.data
    if p < m - p:
        shift_down(base, ab.pmask, ab.plower, p)
        ab.plower = (ab.plower - 1) & ab.pmask
        ab.op_slot_moves += p
    else:
        shift_up(base, ab.pmask, (ab.plower + p) & ab.pmask, m - p)
        ab.op_slot_moves += m - p
    ab.prim[(ab.plower + p) & ab.pmask] = bid
    ab.nblocks += 1


@njit
def _prim_remove(ab, p):
    m = ab.nblocks
    base = ab.prim.ctypes.data
    if p < m - 1 - p:
        shift_up(base, ab.pmask, ab.plower, p)
        ab.plower = (ab.plower + 1) & ab.pmask
        ab.op_slot_moves += p
    else:
        shift_down(base, ab.pmask, (ab.plower + p + 1) & ab.pmask, m - 1 - p)
        ab.op_slot_moves += m - 1 - p
    ab.nblocks -= 1


# -- locating ----------------------------------------------------------------------

@inline
def block_locate(ab, idx):
    """Ordinal of the block holding ``idx`` and that block's first user index.

    Starts from the front, the back or the cached block, whichever is the
    fewest elements away (ties: cache, then front), and walks block counts.
    """
    # array fields are read through ``ab`` each time: local aliases keep
    # reference counts alive across the loops and cost ~50 ns per call
    d_front = idx
    d_back = ab.n - idx
    d_cache = ab.n + 1
    if ab.cache_prim >= 0:
        start = ab.cache_index
        count = ab.bcount[_block_at(ab, ab.cache_prim)]
        if idx < start:
            d_cache = start - idx
        elif idx >= start + count:
            d_cache = idx - (start + count) + 1
        else:
            d_cache = 0
    if d_cache <= d_front and d_cache <= d_back:
        p = ab.cache_prim
        prefix = ab.cache_index
        if d_cache == 0:
            ab.cache_hits += 1
            return p, prefix
    elif d_front <= d_back:
        p = 0
        prefix = 0
    else:
        p = ab.nblocks
        prefix = ab.n
    if idx >= prefix:
        c = ab.bcount[_block_at(ab, p)]
        while idx >= prefix + c:
            prefix += c
            p += 1
            c = ab.bcount[_block_at(ab, p)]
    else:
        while idx < prefix:
            p -= 1
            prefix -= ab.bcount[_block_at(ab, p)]
    ab.cache_prim = p
    ab.cache_index = prefix
    return p, prefix


@inline
def block_get(ab, idx):
    p, prefix = block_locate(ab, idx)
    bid = _block_at(ab, p)
    return ab.data[bid, (ab.blower[bid] + idx - prefix) & ab.bmask]


@inline
def block_item(ab, idx):
    if idx < 0 or idx >= ab.n:
        raise IndexError("index out of range")
    return block_get(ab, idx)


# -- in-block edits ------------------------------------------------------------------

@inline
def _block_insert(ab, bid, o, value):
    c = ab.bcount[bid]
    lower = ab.blower[bid]
    if o < c - o:
        shift_down(_row(ab, bid), ab.bmask, lower, o)
        lower = (lower - 1) & ab.bmask
        ab.blower[bid] = lower
        ab.op_moves += o
    else:
        shift_up(_row(ab, bid), ab.bmask, (lower + o) & ab.bmask, c - o)
        ab.op_moves += c - o
    ab.data[bid, (lower + o) & ab.bmask] = value
    ab.bcount[bid] = c + 1


@inline
def _block_remove(ab, bid, o):
    c = ab.bcount[bid]
    lower = ab.blower[bid]
    value = ab.data[bid, (lower + o) & ab.bmask]
    if o < c - 1 - o:
        shift_up(_row(ab, bid), ab.bmask, lower, o)
        ab.blower[bid] = (lower + 1) & ab.bmask
        ab.op_moves += o
    else:
        shift_down(_row(ab, bid), ab.bmask, (lower + o + 1) & ab.bmask, c - 1 - o)
        ab.op_moves += c - 1 - o
    ab.bcount[bid] = c - 1
    return value


@njit
def _copy(ab, src, src_from, dst, dst_from, length):
    # positions are logical, relative to each block's lower
    bm = ab.bmask
    copy_circular(_row(ab, src), bm, (ab.blower[src] + src_from) & bm,
                  _row(ab, dst), bm, (ab.blower[dst] + dst_from) & bm, length)
    ab.op_moves += length


@njit
def _new_block_insert(ab, p, value):
    q = _alloc(ab, ab.bcap // 3)
    _block_insert(ab, q, 0, value)
    _prim_insert(ab, p, q)


@njit
def _split_insert(ab, p, prefix, bid, o, value):
    h = ab.bcap // 2
    q = _alloc(ab, 0)
    if o >= h:
        # upper half goes to a new successor, value written in passing
        _copy(ab, bid, h, q, 0, o - h)
        ab.data[q, o - h] = value
        _copy(ab, bid, o, q, o - h + 1, ab.bcap - o)
        ab.bcount[q] = ab.bcap - h + 1
        ab.bcount[bid] = h
        _prim_insert(ab, p + 1, q)
        ab.cache_prim = p + 1
        ab.cache_index = prefix + h
    else:
        _copy(ab, bid, 0, q, 0, o)
        ab.data[q, o] = value
        _copy(ab, bid, o, q, o + 1, h - o)
        ab.bcount[q] = h + 1
        ab.blower[bid] = (ab.blower[bid] + h) & ab.bmask
        ab.bcount[bid] = ab.bcap - h
        _prim_insert(ab, p, q)
        ab.cache_prim = p
        ab.cache_index = prefix
    ab.splits += 1


@njit
def _merge_remove(ab, p, prefix, bid, o, nb):
    nbid = _block_at(ab, nb)
    c = ab.bcount[bid]
    a = c - 1
    b = ab.bcount[nbid]
    value = ab.data[bid, (ab.blower[bid] + o) & ab.bmask]
    if a <= b + min(o, c - 1 - o):
        # survivors of this block move into the neighbour
        if nb > p:
            ab.blower[nbid] = (ab.blower[nbid] - a) & ab.bmask
            _copy(ab, bid, 0, nbid, 0, o)
            _copy(ab, bid, o + 1, nbid, o, c - 1 - o)
            ab.bcount[nbid] = b + a
            _prim_remove(ab, p)
            ab.cache_prim = p
            ab.cache_index = prefix
        else:
            _copy(ab, bid, 0, nbid, b, o)
            _copy(ab, bid, o + 1, nbid, b + o, c - 1 - o)
            ab.bcount[nbid] = b + a
            _prim_remove(ab, p)
            ab.cache_prim = p - 1
            ab.cache_index = prefix - b
        _release(ab, bid)
    else:
        _block_remove(ab, bid, o)
        if nb > p:
            _copy(ab, nbid, 0, bid, a, b)
            ab.bcount[bid] = a + b
            _prim_remove(ab, nb)
            ab.cache_prim = p
            ab.cache_index = prefix
        else:
            ab.blower[bid] = (ab.blower[bid] - b) & ab.bmask
            _copy(ab, nbid, 0, bid, 0, b)
            ab.bcount[bid] = a + b
            _prim_remove(ab, nb)
            ab.cache_prim = p - 1
            ab.cache_index = prefix - b
        _release(ab, nbid)
    ab.merges += 1
    return value


@njit
def _drop_block_remove(ab, p, prefix, bid):
    value = ab.data[bid, ab.blower[bid]]
    _prim_remove(ab, p)
    _release(ab, bid)
    if p < ab.nblocks:
        ab.cache_prim = p
        ab.cache_index = prefix
    elif p > 0:
        ab.cache_prim = p - 1
        ab.cache_index = prefix - ab.bcount[_block_at(ab, p - 1)]
    else:
        ab.cache_prim = -1
        ab.cache_index = 0
    return value


# -- contract ---------------------------------------------------------------------------

@inline
def block_insert(ab, idx, value):
    if idx < 0 or idx > ab.n:
        raise IndexError("index out of range")
    before = _begin(ab)
    if ab.n == 0:
        _new_block_insert(ab, 0, value)
        ab.cache_prim = 0
        ab.cache_index = 0
    else:
        if idx == ab.n:
            p = ab.nblocks - 1
            bid = _block_at(ab, p)
            prefix = ab.n - ab.bcount[bid]
        else:
            p, prefix = block_locate(ab, idx)
            bid = _block_at(ab, p)
        o = idx - prefix
        c = ab.bcount[bid]
        if c < ab.bcap:
            _block_insert(ab, bid, o, value)
            ab.cache_prim = p
            ab.cache_index = prefix
        elif o == c:
            # appending past a full last block: open a fresh one
            _new_block_insert(ab, p + 1, value)
            ab.cache_prim = p + 1
            ab.cache_index = prefix + c
        elif o == 0 and p == 0:
            _new_block_insert(ab, 0, value)
            ab.cache_prim = 0
            ab.cache_index = 0
        else:
            _split_insert(ab, p, prefix, bid, o, value)
    ab.n += 1
    _end(ab, before)


@inline
def block_remove(ab, idx):
    if idx < 0 or idx >= ab.n:
        raise IndexError("index out of range")
    before = _begin(ab)
    if idx == ab.n - 1:
        p = ab.nblocks - 1
        bid = _block_at(ab, p)
        prefix = ab.n - ab.bcount[bid]
    else:
        p, prefix = block_locate(ab, idx)
        bid = _block_at(ab, p)
    o = idx - prefix
    c = ab.bcount[bid]
    if c == 1:
        value = _drop_block_remove(ab, p, prefix, bid)
    else:
        nb = -1
        if p + 1 < ab.nblocks:
            nb = p + 1
        elif p > 0:
            nb = p - 1
        if nb >= 0 and c - 1 + ab.bcount[_block_at(ab, nb)] <= (2 * ab.bcap) // 3:
            value = _merge_remove(ab, p, prefix, bid, o, nb)
        else:
            value = _block_remove(ab, bid, o)
            ab.cache_prim = p
            ab.cache_index = prefix
    ab.n -= 1
    _end(ab, before)
    return value


@inline
def block_add_first(ab, value):
    block_insert(ab, 0, value)


@inline
def block_add_last(ab, value):
    block_insert(ab, ab.n, value)


@inline
def block_remove_first(ab):
    if ab.n == 0:
        raise UnderflowError("remove from empty sequence")
    return block_remove(ab, 0)


@inline
def block_remove_last(ab):
    if ab.n == 0:
        raise UnderflowError("remove from empty sequence")
    return block_remove(ab, ab.n - 1)


@inline
def block_footprint(ab):
    return WORD_BYTES * (HEADER_WORDS + ab.pmask + 1
                         + ab.nblocks * (ab.bcap + BLOCK_HEADER_WORDS))


@njit
def block_load(ab, values, counts):
    """Bulk-build an empty structure whose blocks hold ``counts`` elements each."""
    if ab.n != 0:
        raise ValueError("load requires an empty sequence")
    if counts.sum() != values.shape[0]:
        raise ValueError("counts must add up to the number of values")
    start = 0
    for c in counts:
        if c < 1 or c > ab.bcap:
            raise ValueError("block counts must be in [1, block capacity]")
        bid = _alloc(ab, 0)
        ab.data[bid, :c] = values[start:start + c]
        ab.bcount[bid] = c
        _prim_insert(ab, ab.nblocks, bid)
        start += c
    ab.n = values.shape[0]
    ab.cache_prim = -1
    ab.cache_index = 0
    ab.op_slot_moves = 0


@jitclass([
    ("bcap", int64),
    ("bmask", int64),
    ("data", int64[:, :]),
    ("blower", int64[:]),
    ("bcount", int64[:]),
    ("rows_used", int64),
    ("free_rows", int64[:]),
    ("n_free", int64),
    ("prim", int64[:]),
    ("pmask", int64),
    ("plower", int64),
    ("nblocks", int64),
    ("n", int64),
    ("cache_prim", int64),
    ("cache_index", int64),
    ("elem_moves", int64),
    ("slot_moves", int64),
    ("op_moves", int64),
    ("op_slot_moves", int64),
    ("worst_excess", int64),
    ("splits", int64),
    ("merges", int64),
    ("cache_hits", int64),
])
class ArrayBlock:
    def __init__(self, block_capacity):
        if (block_capacity < MIN_BLOCK_CAPACITY or block_capacity > MAX_BLOCK_CAPACITY
                or block_capacity & (block_capacity - 1) != 0):
            raise ValueError("block capacity must be a power of two in [4, 65536]")
        self.bcap = block_capacity
        self.bmask = block_capacity - 1
        self.data = np.empty((4, block_capacity), np.int64)
        self.blower = np.zeros(4, np.int64)
        self.bcount = np.zeros(4, np.int64)
        self.rows_used = 0
        self.free_rows = np.empty(4, np.int64)
        self.n_free = 0
        self.prim = np.empty(MIN_PRIMARY, np.int64)
        self.pmask = MIN_PRIMARY - 1
        self.plower = 0
        self.nblocks = 0
        self.n = 0
        self.cache_prim = -1
        self.cache_index = 0
        self.elem_moves = 0
        self.slot_moves = 0
        self.op_moves = 0
        self.op_slot_moves = 0
        self.worst_excess = -(1 << 62)
        self.splits = 0
        self.merges = 0
        self.cache_hits = 0

    def size(self):
        return self.n

    def block_capacity(self):
        return self.bcap

    def primary_capacity(self):
        return self.pmask + 1

    def block_count(self):
        return self.nblocks

    def block_at(self, p):
        """Pool row of the block at ordinal ``p``."""
        return _block_at(self, p)

    def counts(self):
        out = np.empty(self.nblocks, np.int64)
        for p in range(self.nblocks):
            out[p] = self.bcount[_block_at(self, p)]
        return out

    def locate(self, idx):
        if idx < 0 or idx >= self.n:
            raise IndexError("index out of range")
        p, prefix = block_locate(self, idx)
        return p, idx - prefix

    def get(self, idx):
        return block_get(self, idx)

    def item(self, idx):
        return block_item(self, idx)

    def insert(self, idx, value):
        block_insert(self, idx, value)

    def remove(self, idx):
        return block_remove(self, idx)

    def add_first(self, value):
        block_add_first(self, value)

    def add_last(self, value):
        block_add_last(self, value)

    def remove_first(self):
        return block_remove_first(self)

    def remove_last(self):
        return block_remove_last(self)

    def load(self, values, counts):
        """Bulk-build an empty structure; block i receives ``counts[i]`` values."""
        block_load(self, values, counts)

    def footprint_bytes(self):
        return block_footprint(self)


BLOCK_OPS = Ops(_size, block_get, block_item, block_insert, block_remove, block_add_first,
                block_add_last, block_remove_first, block_remove_last, block_footprint)


def even_counts(n, per_block):
    """Block counts that cut ``n`` elements into runs of ``per_block``."""
    counts = np.full(n // per_block, per_block, np.int64)
    if n % per_block:
        counts = np.append(counts, n % per_block)
    return counts


def validate(ab):
    """Raise AssertionError unless blocks, primary table and cache agree."""
    b = ab.bcap
    counts = [int(c) for c in ab.counts()]
    rows = [int(ab.block_at(p)) for p in range(ab.nblocks)]
    assert len(set(rows)) == len(rows), "block row used twice"
    assert sum(counts) == ab.n, "size differs from sum of block counts"
    assert all(1 <= c <= b for c in counts), f"block count out of range: {counts}"
    pcap = ab.pmask + 1
    assert pcap >= MIN_PRIMARY and pcap & (pcap - 1) == 0
    assert ab.nblocks <= pcap
    free = {int(r) for r in ab.free_rows[: ab.n_free]}
    assert not free & set(rows), "free row still in primary table"
    if ab.cache_prim >= 0:
        assert ab.cache_prim < ab.nblocks
        assert sum(counts[: ab.cache_prim]) == ab.cache_index, "stale block cache"

"""Contiguous representations: ArrayList and ArrayRing.

Both keep a power-of-two capacity (at least 16) and double it when an
insertion finds the storage full; neither ever shrinks.  ArrayRing uses
its storage circularly: user index ``u`` lives in slot
``(lower + u) & (capacity - 1)``, and growth copies the ring out in user
order so that ``lower`` is 0 again.

``last_moves`` is the number of stored elements shifted by the most
recent insert or remove (relocation during growth is not counted);
``moves`` accumulates it.
"""

import numpy as np
from numba import int64, njit
from numba.experimental import jitclass

from ._native import copy_circular, move_words, shift_down, shift_up
from .core import UnderflowError, WORD_BYTES
from .ops import Ops, inline

MIN_CAPACITY = 16


def ring_index(lower, capacity, u):
    """Slot of user index ``u`` in a ring of power-of-two ``capacity``."""
    return (lower + u) & (capacity - 1)


@inline
def _size(arr):
    return arr.n


@inline
def _count(arr, moved):
    arr.last_moves = moved
    arr.moves += moved


@inline
def _check_index(arr, idx):
    if idx < 0 or idx >= arr.n:
        raise IndexError("index out of range")


@inline
def _check_slot(arr, idx):
    if idx < 0 or idx > arr.n:
        raise IndexError("index out of range")


@inline
def _check_nonempty(arr):
    if arr.n == 0:
        raise UnderflowError("remove from empty sequence")


# -- ArrayList -------------------------------------------------------------------

@njit
def list_grow(arr):
    grown = np.empty(2 * arr.data.shape[0], np.int64)
    grown[: arr.n] = arr.data[: arr.n]
    arr.data = grown


@inline
def list_get(arr, idx):
    return arr.data[idx]


@inline
def list_item(arr, idx):
    _check_index(arr, idx)
    return arr.data[idx]


@inline
def list_insert(arr, idx, value):
    _check_slot(arr, idx)
    if arr.n == arr.data.shape[0]:
        list_grow(arr)
    moved = arr.n - idx
    move_words(arr.data.ctypes.data, idx + 1, idx, moved)
    arr.data[idx] = value
    arr.n += 1
    _count(arr, moved)


@inline
def list_remove(arr, idx):
    _check_index(arr, idx)
    value = arr.data[idx]
    moved = arr.n - 1 - idx
    move_words(arr.data.ctypes.data, idx, idx + 1, moved)
    arr.n -= 1
    _count(arr, moved)
    return value


@inline
def list_add_first(arr, value):
    list_insert(arr, 0, value)


@inline
def list_add_last(arr, value):
    if arr.n == arr.data.shape[0]:
        list_grow(arr)
    arr.data[arr.n] = value
    arr.n += 1
    _count(arr, 0)


@inline
def list_remove_first(arr):
    _check_nonempty(arr)
    return list_remove(arr, 0)


@inline
def list_remove_last(arr):
    # a size decrement, nothing moves
    _check_nonempty(arr)
    arr.n -= 1
    _count(arr, 0)
    return arr.data[arr.n]


@inline
def list_footprint(arr):
    return WORD_BYTES * (3 + arr.data.shape[0])


# -- ArrayRing -------------------------------------------------------------------

@njit
def ring_grow(arr):
    cap = arr.mask + 1
    grown = np.empty(2 * cap, np.int64)
    copy_circular(arr.data.ctypes.data, arr.mask, arr.lower,
                  grown.ctypes.data, 2 * cap - 1, 0, arr.n)
    arr.data = grown
    arr.mask = 2 * cap - 1
    arr.lower = 0


@inline
def ring_get(arr, idx):
    return arr.data[(arr.lower + idx) & arr.mask]


@inline
def ring_item(arr, idx):
    _check_index(arr, idx)
    return ring_get(arr, idx)


@inline
def ring_insert(arr, idx, value):
    _check_slot(arr, idx)
    if arr.n == arr.mask + 1:
        ring_grow(arr)
    base = arr.data.ctypes.data
    if idx < arr.n - idx:
        shift_down(base, arr.mask, arr.lower, idx)
        arr.lower = (arr.lower - 1) & arr.mask
        moved = idx
    else:
        moved = arr.n - idx
        shift_up(base, arr.mask, (arr.lower + idx) & arr.mask, moved)
    arr.data[(arr.lower + idx) & arr.mask] = value
    arr.n += 1
    _count(arr, moved)


@inline
def ring_remove(arr, idx):
    _check_index(arr, idx)
    base = arr.data.ctypes.data
    value = arr.data[(arr.lower + idx) & arr.mask]
    if idx < arr.n - 1 - idx:
        shift_up(base, arr.mask, arr.lower, idx)
        arr.lower = (arr.lower + 1) & arr.mask
        moved = idx
    else:
        moved = arr.n - 1 - idx
        shift_down(base, arr.mask, (arr.lower + idx + 1) & arr.mask, moved)
    arr.n -= 1
    _count(arr, moved)
    return value


@inline
def ring_add_first(arr, value):
    ring_insert(arr, 0, value)


@inline
def ring_add_last(arr, value):
    ring_insert(arr, arr.n, value)


@inline
def ring_remove_first(arr):
    _check_nonempty(arr)
    return ring_remove(arr, 0)


@inline
def ring_remove_last(arr):
    _check_nonempty(arr)
    return ring_remove(arr, arr.n - 1)


@inline
def ring_footprint(arr):
    return WORD_BYTES * (4 + arr.mask + 1)


# -- classes -----------------------------------------------------------------------

@jitclass([
    ("data", int64[:]),
    ("n", int64),
    ("moves", int64),
    ("last_moves", int64),
])
class ArrayList:
    """Left-aligned array with a reserve area on the right."""

    def __init__(self):
        self.data = np.empty(MIN_CAPACITY, np.int64)
        self.n = 0
        self.moves = 0
        self.last_moves = 0

    def size(self):
        return self.n

    def capacity(self):
        return self.data.shape[0]

    def get(self, idx):
        return list_get(self, idx)

    def item(self, idx):
        return list_item(self, idx)

    def insert(self, idx, value):
        list_insert(self, idx, value)

    def remove(self, idx):
        return list_remove(self, idx)

    def add_first(self, value):
        list_add_first(self, value)

    def add_last(self, value):
        list_add_last(self, value)

    def remove_first(self):
        return list_remove_first(self)

    def remove_last(self):
        return list_remove_last(self)

    def footprint_bytes(self):
        return list_footprint(self)


@jitclass([
    ("data", int64[:]),
    ("mask", int64),
    ("lower", int64),
    ("n", int64),
    ("moves", int64),
    ("last_moves", int64),
])
class ArrayRing:
    """Circular array; inserts and removes shift whichever side is shorter.

    When both sides are equally long the right-hand side moves.
    """

    def __init__(self):
        self.data = np.empty(MIN_CAPACITY, np.int64)
        self.mask = MIN_CAPACITY - 1
        self.lower = 0
        self.n = 0
        self.moves = 0
        self.last_moves = 0

    def size(self):
        return self.n

    def capacity(self):
        return self.mask + 1

    def ring_index(self, u):
        return (self.lower + u) & self.mask

    def get(self, idx):
        return ring_get(self, idx)

    def item(self, idx):
        return ring_item(self, idx)

    def insert(self, idx, value):
        ring_insert(self, idx, value)

    def remove(self, idx):
        return ring_remove(self, idx)

    def add_first(self, value):
        ring_add_first(self, value)

    def add_last(self, value):
        ring_add_last(self, value)

    def remove_first(self):
        return ring_remove_first(self)

    def remove_last(self):
        return ring_remove_last(self)

    def footprint_bytes(self):
        return ring_footprint(self)


LIST_OPS = Ops(_size, list_get, list_item, list_insert, list_remove, list_add_first,
               list_add_last, list_remove_first, list_remove_last, list_footprint)
RING_OPS = Ops(_size, ring_get, ring_item, ring_insert, ring_remove, ring_add_first,
               ring_add_last, ring_remove_first, ring_remove_last, ring_footprint)


def validate(arr):
    """Raise AssertionError unless capacity and occupancy are consistent."""
    cap = arr.data.shape[0]
    assert cap >= MIN_CAPACITY and cap & (cap - 1) == 0
    assert 0 <= arr.n <= cap
    if hasattr(arr, "lower"):
        assert arr.mask == cap - 1
        assert 0 <= arr.lower < cap

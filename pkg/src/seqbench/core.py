"""The indexed-sequence contract, its error types and the reference list.

Every container in this package answers the same calls:

    size()                      number of stored elements
    item(i) / get(i)            element at user index i (get skips the bounds check)
    insert(i, v), remove(i)     remove returns the removed element
    add_first(v), add_last(v), remove_first(), remove_last()
    footprint_bytes()           modeled heap bytes (see below)

User indices are 0-based.  Elements are 64-bit signed integers.

Footprint model: one machine word is 8 bytes; a linked node costs its
word count times 8; a contiguous array costs capacity times 8; each
container adds a fixed header of a few words.  Allocator metadata and
alignment padding are not counted.
"""

from bisect import bisect_left

WORD_BYTES = 8
INT64_MIN = -(1 << 63)
INT64_MAX = (1 << 63) - 1


class UnderflowError(IndexError):
    """Removal from an empty sequence."""


class OracleList:
    """Trivially correct sequence on a Python list.

    Every insert and remove shifts the tail, exactly like a naive
    contiguous array.  Used as the equivalence baseline for the compiled
    containers.
    """

    HEADER_WORDS = 2

    def __init__(self, values=()):
        self._items = [int(v) for v in values]

    def size(self):
        return len(self._items)

    def __len__(self):
        return len(self._items)

    def __iter__(self):
        return iter(self._items)

    def __repr__(self):
        return f"OracleList({self._items!r})"

    def _check(self, idx, limit):
        if not 0 <= idx < limit:
            raise IndexError("index out of range")

    def item(self, idx):
        self._check(idx, len(self._items))
        return self._items[idx]

    get = item

    def insert(self, idx, value):
        self._check(idx, len(self._items) + 1)
        if not INT64_MIN <= value <= INT64_MAX:
            raise OverflowError("element does not fit in 64 bits")
        self._items.insert(idx, value)

    def remove(self, idx):
        self._check(idx, len(self._items))
        return self._items.pop(idx)

    def add_first(self, value):
        self.insert(0, value)

    def add_last(self, value):
        self.insert(len(self._items), value)

    def remove_first(self):
        if not self._items:
            raise UnderflowError("remove_first on empty sequence")
        return self._items.pop(0)

    def remove_last(self):
        if not self._items:
            raise UnderflowError("remove_last on empty sequence")
        return self._items.pop()

    def lower_bound(self, value):
        return bisect_left(self._items, value)

    def footprint_bytes(self):
        return WORD_BYTES * (self.HEADER_WORDS + len(self._items))


def contents(seq):
    """All elements of ``seq`` in user order, as a Python list."""
    return [int(seq.get(i)) for i in range(seq.size())]

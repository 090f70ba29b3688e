"""Linked representations: NoCacheList, LinkedList and SingleList.

Links live in a pool (one row per link) and are addressed by row number;
``NIL`` plays the role of the null pointer.  A doubly linked row holds
three words (value, next, prev), a singly linked row two (value, next).
Released rows are chained through their ``next`` word and reused first.

LinkedList and SingleList remember the last visited position (cache
index + cache link).  Every structural change re-anchors that cache on
the link just touched, so localized access patterns keep walking short
distances.  ``last_steps`` and ``steps`` count links walked by the most
recent locate and in total.
"""

import numpy as np
from numba import int64
from numba.experimental import jitclass

from .core import UnderflowError, WORD_BYTES
from .ops import Ops, inline

VALUE, NEXT, PREV = 0, 1, 2
NIL = -1
POOL_START = 16


# -- pool and splicing, shared by all three ------------------------------------

@inline
def _new_link(lst, value):
    h = lst.free
    if h != NIL:
        lst.free = lst.links[h, NEXT]
    else:
        if lst.used == lst.links.shape[0]:
            grown = np.empty((2 * lst.used, lst.links.shape[1]), np.int64)
            grown[: lst.used] = lst.links
            lst.links = grown
        h = lst.used
        lst.used += 1
    lst.links[h, VALUE] = value
    return h


@inline
def _drop_link(lst, h):
    lst.links[h, NEXT] = lst.free
    lst.free = h


@inline
def _link_before(lst, at, value):
    # at == NIL appends after the last link
    h = _new_link(lst, value)
    links = lst.links
    prev = lst.last if at == NIL else links[at, PREV]
    links[h, PREV] = prev
    links[h, NEXT] = at
    if prev == NIL:
        lst.first = h
    else:
        links[prev, NEXT] = h
    if at == NIL:
        lst.last = h
    else:
        links[at, PREV] = h
    lst.n += 1
    return h


@inline
def _unlink(lst, h):
    links = lst.links
    prev = links[h, PREV]
    nxt = links[h, NEXT]
    if prev == NIL:
        lst.first = nxt
    else:
        links[prev, NEXT] = nxt
    if nxt == NIL:
        lst.last = prev
    else:
        links[nxt, PREV] = prev
    lst.n -= 1
    value = links[h, VALUE]
    _drop_link(lst, h)
    return value, prev, nxt


@inline
def _walk(links, h, column, count):
    for _ in range(count):
        h = links[h, column]
    return h


@inline
def _size(lst):
    return lst.n


@inline
def _count_steps(lst, d):
    lst.last_steps = d
    lst.steps += d


@inline
def _check_index(lst, idx):
    if idx < 0 or idx >= lst.n:
        raise IndexError("index out of range")


@inline
def _check_slot(lst, idx):
    if idx < 0 or idx > lst.n:
        raise IndexError("index out of range")


@inline
def _check_nonempty(lst):
    if lst.n == 0:
        raise UnderflowError("remove from empty sequence")


# -- NoCacheList ---------------------------------------------------------------

@inline
def nocache_locate(lst, idx):
    if 2 * idx < lst.n:
        d = idx
        h = _walk(lst.links, lst.first, NEXT, d)
    else:
        d = lst.n - 1 - idx
        h = _walk(lst.links, lst.last, PREV, d)
    _count_steps(lst, d)
    return h


@inline
def nocache_get(lst, idx):
    return lst.links[nocache_locate(lst, idx), VALUE]


@inline
def nocache_item(lst, idx):
    _check_index(lst, idx)
    return nocache_get(lst, idx)


@inline
def nocache_insert(lst, idx, value):
    _check_slot(lst, idx)
    at = NIL if idx == lst.n else nocache_locate(lst, idx)
    _link_before(lst, at, value)


@inline
def nocache_remove(lst, idx):
    _check_index(lst, idx)
    return _unlink(lst, nocache_locate(lst, idx))[0]


@inline
def nocache_add_first(lst, value):
    _link_before(lst, lst.first, value)


@inline
def nocache_add_last(lst, value):
    _link_before(lst, NIL, value)


@inline
def nocache_remove_first(lst):
    _check_nonempty(lst)
    return _unlink(lst, lst.first)[0]


@inline
def nocache_remove_last(lst):
    _check_nonempty(lst)
    return _unlink(lst, lst.last)[0]


@inline
def nocache_footprint(lst):
    return WORD_BYTES * (3 + 3 * lst.n)


# -- LinkedList ----------------------------------------------------------------

@inline
def cached_locate(lst, idx):
    d_first = idx
    d_last = lst.n - 1 - idx
    d_cache = lst.n
    ci = lst.cache_index
    if lst.cache_link != NIL:
        d_cache = abs(idx - ci)
    if d_cache <= d_first and d_cache <= d_last:
        d = d_cache
        h = lst.cache_link
        column = NEXT if idx >= ci else PREV
    elif d_first <= d_last:
        d = d_first
        h = lst.first
        column = NEXT
    else:
        d = d_last
        h = lst.last
        column = PREV
    h = _walk(lst.links, h, column, d)
    lst.cache_link = h
    lst.cache_index = idx
    _count_steps(lst, d)
    return h


@inline
def _reanchor(lst, idx, prev, nxt):
    if nxt != NIL:
        lst.cache_link = nxt
        lst.cache_index = idx
    elif prev != NIL:
        lst.cache_link = prev
        lst.cache_index = idx - 1
    else:
        lst.cache_link = NIL
        lst.cache_index = 0


@inline
def cached_get(lst, idx):
    return lst.links[cached_locate(lst, idx), VALUE]


@inline
def cached_item(lst, idx):
    _check_index(lst, idx)
    return cached_get(lst, idx)


@inline
def cached_insert(lst, idx, value):
    _check_slot(lst, idx)
    at = NIL if idx == lst.n else cached_locate(lst, idx)
    lst.cache_link = _link_before(lst, at, value)
    lst.cache_index = idx


@inline
def cached_remove(lst, idx):
    _check_index(lst, idx)
    value, prev, nxt = _unlink(lst, cached_locate(lst, idx))
    _reanchor(lst, idx, prev, nxt)
    return value


@inline
def cached_add_first(lst, value):
    lst.cache_link = _link_before(lst, lst.first, value)
    lst.cache_index = 0


@inline
def cached_add_last(lst, value):
    lst.cache_link = _link_before(lst, NIL, value)
    lst.cache_index = lst.n - 1


@inline
def cached_remove_first(lst):
    _check_nonempty(lst)
    value, prev, nxt = _unlink(lst, lst.first)
    _reanchor(lst, 0, prev, nxt)
    return value


@inline
def cached_remove_last(lst):
    _check_nonempty(lst)
    idx = lst.n - 1
    value, prev, nxt = _unlink(lst, lst.last)
    _reanchor(lst, idx, prev, nxt)
    return value


@inline
def cached_footprint(lst):
    return WORD_BYTES * (5 + 3 * lst.n)


# -- SingleList ----------------------------------------------------------------

@inline
def single_locate(lst, idx):
    if lst.cache_link != NIL and lst.cache_index <= idx:
        d = idx - lst.cache_index
        h = lst.cache_link
    else:
        d = idx
        h = lst.first
    h = _walk(lst.links, h, NEXT, d)
    lst.cache_link = h
    lst.cache_index = idx
    _count_steps(lst, d)
    return h


@inline
def single_get(lst, idx):
    return lst.links[single_locate(lst, idx), VALUE]


@inline
def single_item(lst, idx):
    _check_index(lst, idx)
    return single_get(lst, idx)


@inline
def single_insert(lst, idx, value):
    _check_slot(lst, idx)
    if idx == 0:
        h = _new_link(lst, value)
        lst.links[h, NEXT] = lst.first
        lst.first = h
        if lst.n == 0:
            lst.last = h
    elif idx == lst.n:
        h = _new_link(lst, value)
        lst.links[h, NEXT] = NIL
        lst.links[lst.last, NEXT] = h
        lst.last = h
    else:
        pred = single_locate(lst, idx - 1)
        h = _new_link(lst, value)
        links = lst.links
        links[h, NEXT] = links[pred, NEXT]
        links[pred, NEXT] = h
    lst.n += 1
    lst.cache_link = h
    lst.cache_index = idx


@inline
def single_remove(lst, idx):
    _check_index(lst, idx)
    links = lst.links
    if idx == 0:
        pred = NIL
        h = lst.first
        lst.first = links[h, NEXT]
        if lst.first == NIL:
            lst.last = NIL
    else:
        pred = single_locate(lst, idx - 1)
        h = links[pred, NEXT]
        links[pred, NEXT] = links[h, NEXT]
        if h == lst.last:
            lst.last = pred
    succ = links[h, NEXT]
    value = links[h, VALUE]
    _drop_link(lst, h)
    lst.n -= 1
    if succ != NIL:
        lst.cache_link = succ
        lst.cache_index = idx
    elif pred != NIL:
        lst.cache_link = pred
        lst.cache_index = idx - 1
    else:
        lst.cache_link = NIL
        lst.cache_index = 0
    return value


@inline
def single_add_first(lst, value):
    single_insert(lst, 0, value)


@inline
def single_add_last(lst, value):
    single_insert(lst, lst.n, value)


@inline
def single_remove_first(lst):
    _check_nonempty(lst)
    return single_remove(lst, 0)


@inline
def single_remove_last(lst):
    _check_nonempty(lst)
    return single_remove(lst, lst.n - 1)


@inline
def single_footprint(lst):
    return WORD_BYTES * (5 + 2 * lst.n)


# -- classes -------------------------------------------------------------------

_POOL = [
    ("links", int64[:, :]),
    ("used", int64),
    ("free", int64),
    ("first", int64),
    ("last", int64),
    ("n", int64),
    ("steps", int64),
    ("last_steps", int64),
]
_CACHE = [("cache_link", int64), ("cache_index", int64)]


@jitclass(_POOL)
class NoCacheList:
    """Doubly linked list with head, tail and size; no position cache.

    Locating index i walks from whichever end is nearer.
    """

    def __init__(self):
        self.links = np.empty((POOL_START, 3), np.int64)
        self.used = 0
        self.free = NIL
        self.first = NIL
        self.last = NIL
        self.n = 0
        self.steps = 0
        self.last_steps = 0

    def size(self):
        return self.n

    def get(self, idx):
        return nocache_get(self, idx)

    def item(self, idx):
        return nocache_item(self, idx)

    def insert(self, idx, value):
        nocache_insert(self, idx, value)

    def remove(self, idx):
        return nocache_remove(self, idx)

    def add_first(self, value):
        nocache_add_first(self, value)

    def add_last(self, value):
        nocache_add_last(self, value)

    def remove_first(self):
        return nocache_remove_first(self)

    def remove_last(self):
        return nocache_remove_last(self)

    def footprint_bytes(self):
        return nocache_footprint(self)


@jitclass(_POOL + _CACHE)
class LinkedList:
    """Doubly linked list with a last-visited-index cache.

    A locate starts from the first link, the last link or the cached link,
    whichever is fewest links away (ties go to the cache, then the first
    link), and walks in either direction.
    """

    def __init__(self):
        self.links = np.empty((POOL_START, 3), np.int64)
        self.used = 0
        self.free = NIL
        self.first = NIL
        self.last = NIL
        self.n = 0
        self.steps = 0
        self.last_steps = 0
        self.cache_link = NIL
        self.cache_index = 0

    def size(self):
        return self.n

    def get(self, idx):
        return cached_get(self, idx)

    def item(self, idx):
        return cached_item(self, idx)

    def insert(self, idx, value):
        cached_insert(self, idx, value)

    def remove(self, idx):
        return cached_remove(self, idx)

    def add_first(self, value):
        cached_add_first(self, value)

    def add_last(self, value):
        cached_add_last(self, value)

    def remove_first(self):
        return cached_remove_first(self)

    def remove_last(self):
        return cached_remove_last(self)

    def footprint_bytes(self):
        return cached_footprint(self)


@jitclass(_POOL + _CACHE)
class SingleList:
    """One-way linked list with size and last-visited-index caches.

    Only forward walks exist: a locate starts from the cached link when the
    cache lies at or before the target, otherwise from the first link.
    ``remove_last`` therefore walks to the predecessor of the tail.
    """

    def __init__(self):
        self.links = np.empty((POOL_START, 2), np.int64)
        self.used = 0
        self.free = NIL
        self.first = NIL
        self.last = NIL
        self.n = 0
        self.steps = 0
        self.last_steps = 0
        self.cache_link = NIL
        self.cache_index = 0

    def size(self):
        return self.n

    def get(self, idx):
        return single_get(self, idx)

    def item(self, idx):
        return single_item(self, idx)

    def insert(self, idx, value):
        single_insert(self, idx, value)

    def remove(self, idx):
        return single_remove(self, idx)

    def add_first(self, value):
        single_add_first(self, value)

    def add_last(self, value):
        single_add_last(self, value)

    def remove_first(self):
        return single_remove_first(self)

    def remove_last(self):
        return single_remove_last(self)

    def footprint_bytes(self):
        return single_footprint(self)


NOCACHE_OPS = Ops(_size, nocache_get, nocache_item, nocache_insert, nocache_remove,
                  nocache_add_first, nocache_add_last, nocache_remove_first,
                  nocache_remove_last, nocache_footprint)
CACHED_OPS = Ops(_size, cached_get, cached_item, cached_insert, cached_remove,
                 cached_add_first, cached_add_last, cached_remove_first,
                 cached_remove_last, cached_footprint)
SINGLE_OPS = Ops(_size, single_get, single_item, single_insert, single_remove,
                 single_add_first, single_add_last, single_remove_first,
                 single_remove_last, single_footprint)


def validate(lst):
    """Raise AssertionError unless chain, size and cache are consistent."""
    links = lst.links
    doubly = links.shape[1] == 3
    n = lst.n
    assert n >= 0
    if n == 0:
        assert lst.first == NIL and lst.last == NIL
    chain = []
    h = lst.first
    prev = NIL
    while h != NIL:
        if doubly:
            assert links[h, PREV] == prev, "prev/next reciprocity broken"
        chain.append(h)
        assert len(chain) <= n, "chain longer than size"
        prev = h
        h = links[h, NEXT]
    assert len(chain) == n, "chain shorter than size"
    assert lst.last == prev
    if hasattr(lst, "cache_link") and lst.cache_link != NIL:
        assert 0 <= lst.cache_index < n
        assert chain[lst.cache_index] == lst.cache_link, "stale cache"

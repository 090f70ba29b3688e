import random

import pytest

from seqbench.core import contents
from seqbench.linked import NIL, VALUE, LinkedList, NoCacheList, SingleList, validate


def build(cls, n, front=False):
    lst = cls()
    for i in range(n):
        if front:
            lst.add_first(n - 1 - i)
        else:
            lst.add_last(i)
    return lst


def steps_of(lst, op, *args):
    before = lst.steps
    op(*args)
    return lst.steps - before


def test_nocache_walks_from_nearer_end():
    lst = build(NoCacheList, 10)
    assert steps_of(lst, lst.item, 2) == 2
    assert steps_of(lst, lst.item, 8) == 1
    assert steps_of(lst, lst.item, 5) == 4  # 2*5 == 10: backward from last


def test_nocache_all_indices():
    lst = build(NoCacheList, 100)
    assert [lst.item(i) for i in range(100)] == list(range(100))
    for i in range(100):
        assert steps_of(lst, lst.item, i) == min(i, 99 - i)


def test_cached_short_walks():
    lst = build(LinkedList, 1000)
    lst.item(50)
    assert steps_of(lst, lst.item, 52) == 2
    assert lst.cache_index == 52
    lst.item(50)
    assert steps_of(lst, lst.item, 48) == 2


def test_cached_sequential_scan_is_linear():
    n = 10**5
    lst = build(LinkedList, n)
    before = lst.steps
    for i in range(n):
        lst.item(i)
    # one step per access, except item(0) and item(n-1) which sit on the ends
    assert lst.steps - before == n - 2


def test_cached_three_anchor_minimum():
    rng = random.Random(5)
    n = 5000
    lst = build(LinkedList, n)
    for _ in range(2000):
        idx = rng.randrange(n)
        ci = lst.cache_index
        expected = min(idx, n - 1 - idx, abs(idx - ci))
        assert steps_of(lst, lst.item, idx) == expected
        assert lst.cache_index == idx


def test_cached_insert_sets_cache():
    lst = LinkedList()
    for v in (1, 2, 4):
        lst.add_last(v)
    lst.item(1)
    lst.insert(2, 3)
    assert lst.cache_index == 2
    assert lst.links[lst.cache_link, VALUE] == 3
    assert contents(lst) == [1, 2, 3, 4]


def test_cached_remove_reanchors():
    lst = build(LinkedList, 5)
    lst.remove(2)
    # successor first
    assert lst.cache_index == 2 and lst.links[lst.cache_link, VALUE] == 3
    lst.remove(3)
    # no successor: predecessor
    assert lst.cache_index == 2 and lst.links[lst.cache_link, VALUE] == 3
    while lst.size():
        lst.remove_first()
    assert lst.cache_link == NIL
    validate(lst)


def test_single_walks_forward_only():
    lst = build(SingleList, 100)
    lst.item(10)
    assert steps_of(lst, lst.item, 12) == 2
    lst.item(10)
    assert steps_of(lst, lst.item, 5) == 5


def test_single_descending_scan_is_quadratic():
    n = 300
    lst = build(SingleList, n)
    before = lst.steps
    for i in range(n - 1, -1, -1):
        lst.item(i)
    assert lst.steps - before == (n - 2) * (n - 1) // 2


def test_single_remove_last_walks_to_predecessor():
    n = 1000
    lst = build(SingleList, n, front=True)
    assert lst.cache_index == 0
    assert steps_of(lst, lst.remove_last) == n - 2
    assert contents(lst) == list(range(n - 1))
    validate(lst)


def test_single_add_last_is_constant():
    lst = build(SingleList, 1000)
    assert steps_of(lst, lst.add_last, 5) == 0


@pytest.mark.parametrize("cls, per_node, header", [
    (NoCacheList, 24, 24),
    (LinkedList, 24, 40),
    (SingleList, 16, 40),
])
def test_footprint(cls, per_node, header):
    assert cls().footprint_bytes() == header
    assert build(cls, 1000).footprint_bytes() == per_node * 1000 + header


def test_pool_reuses_freed_links():
    lst = build(LinkedList, 100)
    rows = lst.links.shape[0]
    for _ in range(10):
        for _ in range(50):
            lst.remove_last()
        for i in range(50):
            lst.add_last(i)
    assert lst.links.shape[0] == rows
    validate(lst)


@pytest.mark.parametrize("cls", [NoCacheList, LinkedList, SingleList])
def test_random_edits_keep_chain_valid(cls):
    rng = random.Random(17)
    lst, ref = cls(), []
    for step in range(3000):
        if ref and rng.random() < 0.45:
            i = rng.randrange(len(ref))
            assert lst.remove(i) == ref.pop(i)
        else:
            i = rng.randrange(len(ref) + 1)
            lst.insert(i, step)
            ref.insert(i, step)
        if step % 97 == 0:
            validate(lst)
    validate(lst)
    assert contents(lst) == ref

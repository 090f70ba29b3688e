import random

import pytest
from numba import njit

from seqbench.arrays import MIN_CAPACITY, ArrayList, ArrayRing, ring_index, validate
from seqbench.core import contents


@pytest.mark.parametrize("lower, capacity, u, expected", [
    (0, 8, 3, 3),
    (5, 8, 4, 1),
    (7, 8, 0, 7),
])
def test_ring_index(lower, capacity, u, expected):
    assert ring_index(lower, capacity, u) == expected


def test_ring_index_method():
    ring = ArrayRing()
    for i in range(4):
        ring.add_first(i)
    # the first add_first lands on an empty ring and leaves lower alone
    assert ring.lower == 13
    assert ring.ring_index(3) == 0


@pytest.mark.parametrize("cls", [ArrayList, ArrayRing])
def test_grow_doubles(cls):
    arr = cls()
    assert arr.capacity() == MIN_CAPACITY
    for i in range(16):
        arr.add_last(i)
    assert arr.capacity() == 16
    arr.add_last(16)
    assert arr.capacity() == 32 and arr.size() == 17
    assert contents(arr) == list(range(17))


def test_ring_grow_linearizes():
    ring = ArrayRing()
    for i in range(8):
        ring.add_first(-i)
    for i in range(8):
        ring.add_last(i)
    assert ring.lower == 9 and ring.size() == ring.capacity()
    before = contents(ring)
    ring.add_last(99)
    assert ring.lower == 0
    assert contents(ring) == before + [99]


@njit
def _fill(arr, n):
    for i in range(n):
        arr.add_last(i)


@pytest.mark.parametrize("cls", [ArrayList, ArrayRing])
def test_capacity_after_1e5_appends(cls):
    arr = cls()
    _fill(arr, 10**5)
    assert arr.capacity() == 2**17


@pytest.mark.parametrize("cls", [ArrayList, ArrayRing])
def test_load_factor_after_grow(cls):
    arr = cls()
    for i in range(5000):
        cap = arr.capacity()
        arr.add_last(i)
        if arr.capacity() != cap:
            assert arr.size() / arr.capacity() == 0.5 + 1 / arr.capacity()


@pytest.mark.parametrize("cls", [ArrayList, ArrayRing])
def test_capacity_power_of_two_and_no_shrink(cls):
    arr = cls()
    _fill(arr, 1000)
    while arr.size():
        arr.remove_last()
        validate(arr)
    assert arr.capacity() == 1024


def test_arraylist_moves():
    arr = ArrayList()
    for i in range(4):
        arr.add_last(i)
    assert arr.capacity() == 16
    arr.insert(0, -1)
    assert arr.last_moves == 4
    arr.remove(arr.size() - 1)
    assert arr.last_moves == 0
    arr.remove_last()
    assert arr.last_moves == 0
    arr.remove(0)
    assert arr.last_moves == 2


def test_ring_end_ops_move_nothing():
    ring = ArrayRing()
    for i in range(10):
        ring.add_first(i)
        assert ring.last_moves == 0
        ring.add_last(i)
        assert ring.last_moves == 0
    ring.remove_first()
    ring.remove_last()
    assert ring.moves == 0


def test_ring_insert_moves_shorter_side():
    rng = random.Random(3)
    ring, ref = ArrayRing(), []
    for step in range(4000):
        n = len(ref)
        if ref and rng.random() < 0.4:
            i = rng.randrange(n)
            assert ring.remove(i) == ref.pop(i)
            assert ring.last_moves == min(i, n - 1 - i)
        else:
            i = rng.randrange(n + 1)
            cap = ring.capacity()
            ring.insert(i, step)
            ref.insert(i, step)
            if ring.capacity() == cap:
                assert ring.last_moves == min(i, n - i)
    assert contents(ring) == ref
    validate(ring)


def test_ring_insert_middle_moves_half():
    ring = ArrayRing()
    _fill(ring, 1000)
    ring.insert(500, 7)
    assert ring.last_moves == 500
    # tie goes to the right segment: the lower bound does not move
    assert ring.lower == 0


@pytest.mark.parametrize("cls, header", [(ArrayList, 24), (ArrayRing, 32)])
def test_footprint_after_growth(cls, header):
    arr = cls()
    assert arr.footprint_bytes() == header + 8 * MIN_CAPACITY
    for i in range(5000):
        cap = arr.capacity()
        arr.add_last(i)
        if arr.capacity() != cap:
            n = arr.size()
            assert arr.footprint_bytes() == header + 8 * arr.capacity()
            assert arr.footprint_bytes() <= 16 * n + header


def test_wraparound_contents():
    ring = ArrayRing()
    ref = []
    for i in range(40):
        ring.add_first(i)
        ref.insert(0, i)
        ring.insert(ring.size() // 3, -i)
        ref.insert(len(ref) // 3, -i)
        if i % 3 == 0:
            assert ring.remove_last() == ref.pop()
    assert contents(ring) == ref
    validate(ring)

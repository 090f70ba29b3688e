"""Sequence-contract examples, run against every structure id."""

import pytest

from seqbench import STRUCTURE_IDS, UnderflowError, make_sequence
from seqbench.core import INT64_MAX, INT64_MIN, OracleList, contents


@pytest.fixture(params=STRUCTURE_IDS)
def seq(request):
    return make_sequence(request.param)


def filled(seq, values):
    for v in values:
        seq.add_last(v)
    return seq


def test_size(seq):
    assert seq.size() == 0
    filled(seq, [1, 2, 3, 4])
    assert seq.size() == 4


def test_size_after_inserts_and_removes(seq):
    for i in range(100):
        seq.insert(i // 2, i)
    for i in range(40):
        seq.remove((7 * i) % seq.size())
    assert seq.size() == 60


def test_item(seq):
    filled(seq, [7])
    assert seq.item(0) == 7
    seq.remove_first()
    filled(seq, [5, 6, 8])
    assert seq.item(2) == 8


def test_insert(seq):
    seq.insert(0, 7)
    assert contents(seq) == [7]
    seq.remove(0)
    filled(seq, [1, 2, 4])
    seq.insert(2, 3)
    assert contents(seq) == [1, 2, 3, 4]


def test_remove(seq):
    filled(seq, [7])
    assert seq.remove(0) == 7
    assert seq.size() == 0
    filled(seq, [1, 2, 3, 4])
    assert seq.remove(1) == 2
    assert contents(seq) == [1, 3, 4]


def test_ends(seq):
    seq.add_first(1)
    seq.add_first(2)
    assert contents(seq) == [2, 1]
    seq.add_last(3)
    assert contents(seq) == [2, 1, 3]
    assert seq.remove_first() == 2
    assert seq.remove_last() == 3
    assert contents(seq) == [1]


def test_extreme_values(seq):
    filled(seq, [INT64_MIN, INT64_MAX, 0, -1])
    assert contents(seq) == [INT64_MIN, INT64_MAX, 0, -1]


@pytest.mark.parametrize("idx", [-1, 3, 100])
def test_item_out_of_range(seq, idx):
    filled(seq, [1, 2, 3])
    with pytest.raises(IndexError):
        seq.item(idx)
    assert contents(seq) == [1, 2, 3]


@pytest.mark.parametrize("idx", [-1, 4])
def test_insert_out_of_range(seq, idx):
    filled(seq, [1, 2, 3])
    with pytest.raises(IndexError):
        seq.insert(idx, 9)
    assert contents(seq) == [1, 2, 3]
    seq.insert(3, 4)
    assert contents(seq) == [1, 2, 3, 4]


@pytest.mark.parametrize("idx", [-1, 3])
def test_remove_out_of_range(seq, idx):
    filled(seq, [1, 2, 3])
    with pytest.raises(IndexError):
        seq.remove(idx)
    assert contents(seq) == [1, 2, 3]


def test_underflow(seq):
    for op in (seq.remove_first, seq.remove_last):
        with pytest.raises(UnderflowError):
            op()
    with pytest.raises(IndexError):
        seq.remove(0)
    filled(seq, [5])
    assert contents(seq) == [5]


def test_empty_footprint_is_header_only(seq):
    empty = seq.footprint_bytes()
    assert empty > 0
    filled(seq, range(50))
    while seq.size():
        seq.remove_last()
    # linked structures return to the header; arrays keep their capacity
    assert seq.footprint_bytes() >= empty


def test_oracle_rejects_oversized_values():
    with pytest.raises(OverflowError):
        OracleList().add_last(1 << 63)


def test_unknown_structure():
    with pytest.raises(ValueError):
        make_sequence("skiplist")

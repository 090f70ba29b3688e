"""Structure ids and construction."""

from .arrays import LIST_OPS, MIN_CAPACITY, RING_OPS, ArrayList, ArrayRing
from .block import (BLOCK_HEADER_WORDS, BLOCK_OPS, DEFAULT_BLOCK_CAPACITY, HEADER_WORDS,
                    MIN_PRIMARY, ArrayBlock, check_block_capacity)
from .core import WORD_BYTES, OracleList
from .linked import CACHED_OPS, NOCACHE_OPS, SINGLE_OPS, LinkedList, NoCacheList, SingleList

STRUCTURE_IDS = (
    "nocachelist",
    "linkedlist",
    "singlelist",
    "arraylist",
    "arrayring",
    "arrayblock",
    "oracle",
)
COMPILED_IDS = STRUCTURE_IDS[:-1]

_FACTORIES = {
    "nocachelist": NoCacheList,
    "linkedlist": LinkedList,
    "singlelist": SingleList,
    "arraylist": ArrayList,
    "arrayring": ArrayRing,
    "oracle": OracleList,
}

# inlinable operation tables, for building compiled kernels per structure
OPS = {
    "nocachelist": NOCACHE_OPS,
    "linkedlist": CACHED_OPS,
    "singlelist": SINGLE_OPS,
    "arraylist": LIST_OPS,
    "arrayring": RING_OPS,
    "arrayblock": BLOCK_OPS,
}


def make_sequence(structure_id, block_capacity=DEFAULT_BLOCK_CAPACITY):
    """Fresh empty sequence for ``structure_id``.

    ``block_capacity`` only affects ``arrayblock``.
    """
    if structure_id == "arrayblock":
        check_block_capacity(block_capacity)
        return ArrayBlock(block_capacity)
    try:
        return _FACTORIES[structure_id]()
    except KeyError:
        raise ValueError(f"unknown structure id {structure_id!r}") from None


def footprint_bytes(seq):
    return int(seq.footprint_bytes())


def _pow2_at_least(x, floor):
    cap = floor
    while cap < x:
        cap *= 2
    return cap


def model_peak_bytes(structure_id, n, block_capacity=DEFAULT_BLOCK_CAPACITY):
    """Upper bound on ``footprint_bytes`` while holding ``n`` elements.

    Used to refuse a run before anything is allocated.  For arrayblock the
    bound assumes every block but the two end ones is at least half full,
    which holds for any sequence built by insertions only (splits leave
    halves, fresh blocks only open at the ends).
    """
    if structure_id == "nocachelist":
        return WORD_BYTES * (3 + 3 * n)
    if structure_id == "linkedlist":
        return WORD_BYTES * (5 + 3 * n)
    if structure_id == "singlelist":
        return WORD_BYTES * (5 + 2 * n)
    if structure_id == "arraylist":
        return WORD_BYTES * (3 + _pow2_at_least(n, MIN_CAPACITY))
    if structure_id == "arrayring":
        return WORD_BYTES * (4 + _pow2_at_least(n, MIN_CAPACITY))
    if structure_id == "arrayblock":
        blocks = 2 * n // block_capacity + 2
        return WORD_BYTES * (HEADER_WORDS + _pow2_at_least(blocks, MIN_PRIMARY)
                             + blocks * (block_capacity + BLOCK_HEADER_WORDS))
    if structure_id == "oracle":
        return WORD_BYTES * (2 + n)
    raise ValueError(f"unknown structure id {structure_id!r}")

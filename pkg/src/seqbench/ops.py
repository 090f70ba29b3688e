"""Per-structure operation tables for compiled callers.

Calling a jitclass method from compiled code costs a reference-count round
trip on every call, which would dwarf a single pointer hop.  Each container
module therefore implements its operations as module-level functions
compiled with ``inline="always"``; the jitclass methods delegate to them
for Python callers, and compiled kernels are built against an ``Ops`` table
so the operation bodies are inlined straight into the benchmark loops.
"""

from typing import Any, NamedTuple

from numba import njit

inline = njit(inline="always")


class Ops(NamedTuple):
    size: Any
    get: Any
    item: Any
    insert: Any
    remove: Any
    add_first: Any
    add_last: Any
    remove_first: Any
    remove_last: Any
    footprint_bytes: Any

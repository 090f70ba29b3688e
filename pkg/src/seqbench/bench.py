"""Benchmark kernels, their plain-Python twins, and the timing protocol.

Six benchmarks run over any structure id:

    stroustrup         sorted fill by linear search, then random removals
    stroustrup-binary  same, with lower-bound binary search for the fill
    fairbench          thirds: addLast / addFirst / ascending inserts,
                       right-to-left traversal, then the mirror-image clearing
    fairbench-rand     fairbench with index steps drawn from [1, k]
    addlast            addLast fill, left-to-right traversal, removeLast clearing
    addfirst           addFirst fill, left-to-right traversal, removeFirst clearing

Each run returns a 64-bit wrapping checksum: the sum of removed values for
the Stroustrup pair, the sum of traversed values otherwise.  The payload of
fairbench element i is i itself; the other benchmarks draw 62-bit values from
one SplitMix64 stream per run.

Compiled kernels accept a deadline (perf_counter_ns value, 0 for none) and
give up once it has passed, reporting the run as incomplete.
"""

import time
from bisect import bisect_left
from dataclasses import dataclass, field

import numpy as np
from numba import njit

from ._native import now_ns
from .block import DEFAULT_BLOCK_CAPACITY
from .prng import MASK64, Prng, make_rng
from .structures import OPS, STRUCTURE_IDS, make_sequence

BENCH_IDS = (
    "stroustrup",
    "stroustrup-binary",
    "fairbench",
    "fairbench-rand",
    "addlast",
    "addfirst",
)
K_VALUES = (32, 64, 128)
N_MAX = 200_000_000

# naive structures are only run up to these sizes
SIZE_LIMITS = {"nocachelist": 5_000, "oracle": 100_000}
EXCLUDED = {
    ("addlast", "singlelist"): "removeLast on a one-way list walks the whole list",
    ("addfirst", "arraylist"): "addFirst on a left-aligned array shifts every element",
}

_CHECK_EVERY = 15


class ConfigurationError(ValueError):
    """A benchmark/structure pairing or parameter that cannot be run."""


def check_admissible(bench, impl, n):
    if bench not in BENCH_IDS:
        raise ConfigurationError(f"unknown bench id {bench!r}")
    if impl not in STRUCTURE_IDS:
        raise ConfigurationError(f"unknown structure id {impl!r}")
    reason = EXCLUDED.get((bench, impl))
    if reason:
        raise ConfigurationError(f"{impl} is not admitted for {bench}: {reason}")
    limit = SIZE_LIMITS.get(impl)
    if limit is not None and n > limit:
        raise ConfigurationError(f"{impl} is not admitted above n={limit} (got n={n})")


def admitted(bench, impl, n):
    try:
        check_admissible(bench, impl, n)
    except ConfigurationError:
        return False
    return True


@dataclass(frozen=True)
class BenchSpec:
    bench: str
    impl: str
    n: int
    k: int = 0
    seed: int = 1
    repeats: int = 5
    block_capacity: int = DEFAULT_BLOCK_CAPACITY

    def __post_init__(self):
        if self.bench not in BENCH_IDS:
            raise ConfigurationError(f"unknown bench id {self.bench!r}")
        if not 3 <= self.n <= N_MAX:
            raise ConfigurationError(f"n must be in [3, {N_MAX}], got {self.n}")
        if self.repeats < 1:
            raise ConfigurationError("repeats must be >= 1")
        if self.bench == "fairbench-rand":
            if self.k not in K_VALUES:
                raise ConfigurationError(f"k must be one of {K_VALUES}, got {self.k}")
        elif self.k != 0:
            raise ConfigurationError(f"k only applies to fairbench-rand (got k={self.k})")
        check_admissible(self.bench, self.impl, self.n)


@dataclass
class BenchResult:
    spec: BenchSpec
    min_ticks: int
    checksum: int
    model_bytes: int
    completed: bool = True
    ticks: list = field(default_factory=list)


# -- compiled kernels ------------------------------------------------------

@njit
def _expired(i, deadline):
    return deadline > 0 and (i & _CHECK_EVERY) == 0 and now_ns() > deadline


@njit
def _step(rng, k):
    return 1 if k == 0 else 1 + rng.below(k)


def build_kernels(ops):
    """Compile-ready benchmark bodies with the operations of ``ops`` inlined.

    Returns a dict bench id -> kernel taking ``(seq, n, rng, k, deadline)``
    and returning ``(checksum, peak_bytes, completed)``.
    """
    size, get, insert, remove = ops.size, ops.get, ops.insert, ops.remove
    add_first, add_last = ops.add_first, ops.add_last
    remove_first, remove_last = ops.remove_first, ops.remove_last
    footprint = ops.footprint_bytes

    @njit
    def lower_bound(seq, value):
        lo = 0
        hi = size(seq)
        while lo < hi:
            mid = (lo + hi) >> 1
            if get(seq, mid) < value:
                lo = mid + 1
            else:
                hi = mid
        return lo

    @njit
    def linear_search(seq, value):
        n = size(seq)
        idx = 0
        while idx < n and get(seq, idx) < value:
            idx += 1
        return idx

    @njit
    def stroustrup_clear(seq, n, rng, deadline):
        checksum = np.uint64(0)
        for i in range(n):
            if _expired(i, deadline):
                return checksum, False
            checksum += np.uint64(remove(seq, rng.below(size(seq))))
        return checksum, True

    @njit
    def sorted_fill(seq, n, rng, binary, deadline):
        for i in range(n):
            if _expired(i, deadline):
                return False
            value = rng.value()
            idx = lower_bound(seq, value) if binary else linear_search(seq, value)
            insert(seq, idx, value)
        return True

    @njit
    def stroustrup(seq, n, rng, k, deadline):
        if not sorted_fill(seq, n, rng, False, deadline):
            return np.uint64(0), 0, False
        peak = footprint(seq)
        checksum, done = stroustrup_clear(seq, n, rng, deadline)
        return checksum, peak, done

    @njit
    def stroustrup_binary(seq, n, rng, k, deadline):
        if not sorted_fill(seq, n, rng, True, deadline):
            return np.uint64(0), 0, False
        peak = footprint(seq)
        checksum, done = stroustrup_clear(seq, n, rng, deadline)
        return checksum, peak, done

    @njit
    def fair_fill(seq, n, rng, k, deadline):
        # k == 0 selects unit index steps
        idx = 0
        for i in range(1, n + 1):
            if _expired(i, deadline):
                return False
            if 3 * i < n:
                add_last(seq, i)
            elif 3 * i < 2 * n:
                add_first(seq, i)
            else:
                idx = (idx + _step(rng, k)) % (size(seq) + 1)
                insert(seq, idx, i)
        return True

    @njit
    def fairbench(seq, n, rng, k, deadline):
        if not fair_fill(seq, n, rng, k, deadline):
            return np.uint64(0), 0, False
        peak = footprint(seq)
        total = np.uint64(0)
        for j in range(size(seq) - 1, -1, -1):
            if _expired(j, deadline):
                return total, peak, False
            total += np.uint64(get(seq, j))
        idx = n // 2
        for i in range(1, n + 1):
            if _expired(i, deadline):
                return total, peak, False
            if 3 * i < n:
                idx = (idx - _step(rng, k)) % size(seq)
                remove(seq, idx)
            elif 3 * i < 2 * n:
                remove_first(seq)
            else:
                remove_last(seq)
        return total, peak, True

    @njit
    def traverse(seq):
        total = np.uint64(0)
        for j in range(size(seq)):
            total += np.uint64(get(seq, j))
        return total

    @njit
    def addlast(seq, n, rng, k, deadline):
        for i in range(n):
            if _expired(i, deadline):
                return np.uint64(0), 0, False
            add_last(seq, rng.value())
        peak = footprint(seq)
        total = traverse(seq)
        for i in range(n):
            if _expired(i, deadline):
                return total, peak, False
            remove_last(seq)
        return total, peak, True

    @njit
    def addfirst(seq, n, rng, k, deadline):
        for i in range(n):
            if _expired(i, deadline):
                return np.uint64(0), 0, False
            add_first(seq, rng.value())
        peak = footprint(seq)
        total = traverse(seq)
        for i in range(n):
            if _expired(i, deadline):
                return total, peak, False
            remove_first(seq)
        return total, peak, True

    return {
        "stroustrup": stroustrup,
        "stroustrup-binary": stroustrup_binary,
        "fairbench": fairbench,
        "fairbench-rand": fairbench,
        "addlast": addlast,
        "addfirst": addfirst,
        # building blocks, exposed for tests
        "lower_bound": lower_bound,
        "sorted_fill": sorted_fill,
        "fair_fill": fair_fill,
    }


_kernels = {}


def kernels_for(impl):
    if impl not in _kernels:
        if impl not in OPS:
            raise ConfigurationError(f"no compiled kernels for {impl!r}")
        _kernels[impl] = build_kernels(OPS[impl])
    return _kernels[impl]


def run_kernel(bench, impl, seq, n, rng, k=0, deadline=0):
    """Run one compiled benchmark body; returns (checksum, peak_bytes, completed)."""
    if bench not in BENCH_IDS:
        raise ConfigurationError(f"unknown bench id {bench!r}")
    kernel = kernels_for(impl)[bench]
    checksum, peak, done = kernel(seq, n, rng, k if bench == "fairbench-rand" else 0, deadline)
    return int(checksum), int(peak), bool(done)


# -- plain-Python twins (oracle route) --------------------------------------

def oracle_stroustrup(n, seed, dichotomous=False):
    """Both search variants land on the first element >= value, i.e. bisect_left."""
    rng = Prng(seed)
    items = []
    for _ in range(n):
        value = rng.value()
        items.insert(bisect_left(items, value), value)
    checksum = 0
    for _ in range(n):
        checksum += items.pop(rng.below(len(items)))
    return checksum & MASK64


def _oracle_steps(rng, k):
    return (lambda: 1) if k == 0 else (lambda: 1 + rng.below(k))


def oracle_fairbench_fill(n, seed, k=0, rng=None):
    """Contents after the fill step, on a Python list."""
    rng = rng or Prng(seed)
    step = _oracle_steps(rng, k)
    items = []
    idx = 0
    for i in range(1, n + 1):
        if 3 * i < n:
            items.append(i)
        elif 3 * i < 2 * n:
            items.insert(0, i)
        else:
            idx = (idx + step()) % (len(items) + 1)
            items.insert(idx, i)
    return items


def oracle_fairbench(n, seed, k=0):
    rng = Prng(seed)
    items = oracle_fairbench_fill(n, seed, k, rng)
    step = _oracle_steps(rng, k)
    total = sum(reversed(items))
    idx = n // 2
    for i in range(1, n + 1):
        if 3 * i < n:
            idx = (idx - step()) % len(items)
            del items[idx]
        elif 3 * i < 2 * n:
            del items[0]
        else:
            items.pop()
    assert not items
    return total & MASK64


def oracle_endgame(n, seed, front=False):
    rng = Prng(seed)
    values = [rng.value() for _ in range(n)]
    if front:
        values.reverse()
    return sum(values) & MASK64


def oracle_checksum(bench, n, seed, k=0):
    if bench == "stroustrup":
        return oracle_stroustrup(n, seed)
    if bench == "stroustrup-binary":
        return oracle_stroustrup(n, seed, dichotomous=True)
    if bench == "fairbench":
        return oracle_fairbench(n, seed)
    if bench == "fairbench-rand":
        return oracle_fairbench(n, seed, k)
    if bench == "addlast":
        return oracle_endgame(n, seed)
    if bench == "addfirst":
        return oracle_endgame(n, seed, front=True)
    raise ConfigurationError(f"unknown bench id {bench!r}")


# -- timing protocol ----------------------------------------------------------

_warmed = set()


def _warm_up(spec):
    key = (spec.bench, spec.impl)
    if key in _warmed:
        return
    seq = make_sequence(spec.impl, spec.block_capacity)
    run_kernel(spec.bench, spec.impl, seq, 3, make_rng(0), spec.k, 0)
    _warmed.add(key)


def run_bench(spec, budget_ns=None):
    """Run ``spec.repeats`` identical executions and keep the fastest.

    Construction of the empty structure and JIT compilation happen outside
    the timed region.  With ``budget_ns`` set, any execution still running
    after that long is abandoned; if none finishes, the result is marked
    incomplete and ``min_ticks`` is a lower bound.
    """
    if spec.impl == "oracle":
        return _run_oracle_bench(spec)
    _warm_up(spec)
    ticks = []
    best = None
    checksum = peak = 0
    completed = False
    for _ in range(spec.repeats):
        seq = make_sequence(spec.impl, spec.block_capacity)
        rng = make_rng(spec.seed)
        t0 = time.perf_counter_ns()
        deadline = t0 + budget_ns if budget_ns else 0
        cs, pk, done = run_kernel(spec.bench, spec.impl, seq, spec.n, rng, spec.k, deadline)
        elapsed = time.perf_counter_ns() - t0
        ticks.append(elapsed)
        if done:
            completed = True
            checksum, peak = cs, pk
            best = elapsed if best is None else min(best, elapsed)
    if not completed:
        best = min(ticks)
    return BenchResult(spec, best, checksum, peak, completed, ticks)


def _run_oracle_bench(spec):
    ticks = []
    checksum = 0
    for _ in range(spec.repeats):
        t0 = time.perf_counter_ns()
        checksum = oracle_checksum(spec.bench, spec.n, spec.seed, spec.k)
        ticks.append(time.perf_counter_ns() - t0)
    peak = make_sequence("oracle").footprint_bytes() + 8 * spec.n
    return BenchResult(spec, min(ticks), checksum, peak, True, ticks)

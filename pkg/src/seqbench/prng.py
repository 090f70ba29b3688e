"""SplitMix64 generator, in plain Python and as a compiled class.

Both produce the same stream for the same seed:

    state += 0x9E3779B97F4A7C15
    z = (state ^ (state >> 30)) * 0xBF58476D1CE4E5B9
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB
    return z ^ (z >> 31)

``below(bound)`` rejects the lowest ``2**64 % bound`` outputs before
reducing modulo ``bound``, so it carries no modulo bias.
"""

import numpy as np
from numba import uint64
from numba.experimental import jitclass

MASK64 = (1 << 64) - 1
MASK62 = (1 << 62) - 1

GAMMA = 0x9E3779B97F4A7C15
MIX1 = 0xBF58476D1CE4E5B9
MIX2 = 0x94D049BB133111EB


class Prng:
    """Reference SplitMix64 on Python integers."""

    def __init__(self, seed):
        self.state = seed & MASK64

    def next_u64(self):
        self.state = (self.state + GAMMA) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * MIX1) & MASK64
        z = ((z ^ (z >> 27)) * MIX2) & MASK64
        return z ^ (z >> 31)

    def below(self, bound):
        if bound < 1:
            raise ValueError("bound must be >= 1")
        threshold = (1 << 64) % bound
        while True:
            x = self.next_u64()
            if x >= threshold:
                return x % bound

    def value(self):
        """A benchmark payload: the next output masked to 62 bits."""
        return self.next_u64() & MASK62


_G = np.uint64(GAMMA)
_M1 = np.uint64(MIX1)
_M2 = np.uint64(MIX2)
_S30 = np.uint64(30)
_S27 = np.uint64(27)
_S31 = np.uint64(31)
_M62 = np.uint64(MASK62)


@jitclass([("state", uint64)])
class SplitMix64:
    def __init__(self, seed):
        self.state = np.uint64(seed)

    def next_u64(self):
        self.state += _G
        z = self.state
        z = (z ^ (z >> _S30)) * _M1
        z = (z ^ (z >> _S27)) * _M2
        return z ^ (z >> _S31)

    def below(self, bound):
        if bound < 1:
            raise ValueError("bound must be >= 1")
        b = np.uint64(bound)
        threshold = (np.uint64(0) - b) % b
        while True:
            x = self.next_u64()
            if x >= threshold:
                return np.int64(x % b)

    def value(self):
        return np.int64(self.next_u64() & _M62)


def make_rng(seed):
    """Compiled generator seeded from a Python int (wrapped to 64 bits)."""
    return SplitMix64(np.uint64(seed & MASK64))

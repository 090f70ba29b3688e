"""Modeled bytes per element for every structure after an addLast fill.

    python3 scripts/footprint_table.py --n 1000,100000,1000000
"""

import argparse

import numpy as np
from numba import njit

from seqbench.structures import COMPILED_IDS, make_sequence


@njit
def _fill(seq, n):
    for i in range(n):
        seq.add_last(i)


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--n", default="1000,100000,1000000")
    p.add_argument("--block-capacity", type=int, default=2048)
    args = p.parse_args()
    ns = [int(x) for x in args.n.split(",")]

    print(f"{'impl':12}" + "".join(f"{n:>14}" for n in ns))
    for impl in COMPILED_IDS:
        if impl == "nocachelist":
            continue  # same node layout as linkedlist
        row = []
        for n in ns:
            seq = make_sequence(impl, args.block_capacity)
            _fill(seq, n)
            row.append(seq.footprint_bytes() / n)
        print(f"{impl:12}" + "".join(f"{b:14.2f}" for b in row))

    # ArrayBlock at the one-third-free target, built directly
    b = args.block_capacity
    per = -(-2 * b // 3)
    row = []
    for n in ns:
        ab = make_sequence("arrayblock", b)
        counts = np.full(n // per, per, np.int64)
        if n % per:
            counts = np.append(counts, n % per)
        ab.load(np.arange(n, dtype=np.int64), counts)
        row.append(ab.footprint_bytes() / n)
    print(f"{'block@2/3':12}" + "".join(f"{x:14.2f}" for x in row))


if __name__ == "__main__":
    main()

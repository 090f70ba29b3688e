"""Run the benchmark families at desk scale and write CSV plus gnuplot scripts.

    python3 scripts/reproduce.py --out results/ [--quick]

Each family is one CLI invocation; sizes stop where the slowest admitted
structure still finishes in minutes on a laptop-class core.  Render with
``gnuplot results/*.gp``.
"""

import argparse
import sys
from pathlib import Path

from seqbench.cli import main as cli

ALL = "nocachelist,linkedlist,singlelist,arraylist,arrayring,arrayblock"
NO_NAIVE = "linkedlist,singlelist,arraylist,arrayring,arrayblock"

FAMILIES = {
    # name: (bench, impls, sweep, extra flags)
    "stroustrup1": ("stroustrup", ALL, "100:5000:2", []),
    "stroustrup2": ("stroustrup", NO_NAIVE, "1000:50000:2", []),
    "stroustrup3": ("stroustrup-binary", "linkedlist,arraylist,arrayring,arrayblock",
                    "1000:1000000:4", []),
    "fairbench1": ("fairbench", "linkedlist,singlelist,arraylist,arrayring,arrayblock",
                   "1000:200000:4", []),
    "fairbench2": ("fairbench", "linkedlist,arrayblock", "10000:4000000:4", []),
    "fairbench-rand": ("fairbench-rand", "linkedlist,arrayblock", "10000:2000000:4",
                       ["--k", "32,64,128"]),
    "addlast": ("addlast", "linkedlist,arraylist,arrayring,arrayblock",
                "10000:10000000:10", []),
    "addfirst": ("addfirst", "linkedlist,singlelist,arrayring,arrayblock",
                 "10000:10000000:10", []),
}


def shrink(sweep):
    lo, hi, factor = sweep.split(":")
    return f"{lo}:{max(int(lo), int(hi) // 20)}:{factor}"


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--out", default="results")
    p.add_argument("--only", help="comma list of family names")
    p.add_argument("--quick", action="store_true", help="sizes / 20, one repeat")
    p.add_argument("--repeats", default="3")
    args = p.parse_args()

    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    names = args.only.split(",") if args.only else list(FAMILIES)
    for name in names:
        bench, impls, sweep, extra = FAMILIES[name]
        if args.quick:
            sweep = shrink(sweep)
        argv = ["--bench", bench, "--impl", impls, "--n-sweep", sweep,
                "--repeats", "1" if args.quick else args.repeats,
                "--out", str(out / f"{name}.csv"), "--emit-gnuplot", str(out / f"{name}.gp"),
                *extra]
        print(f"== {name}: seqbench {' '.join(argv)}", flush=True)
        code = cli(argv)
        if code:
            sys.exit(code)


if __name__ == "__main__":
    main()

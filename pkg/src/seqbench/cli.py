"""Command-line driver: run a benchmark matrix and print CSV.

    seqbench --bench fairbench --impl linkedlist,arrayblock --n 1000000
    seqbench --bench stroustrup --impl arraylist,arrayring --n-sweep 1000:100000:10 \\
        --out stroustrup.csv --emit-gnuplot stroustrup.gp

Exit codes: 0 success, 2 usage or admissibility error, 3 I/O error.
"""

import argparse
import csv
import io
import os
import sys
from dataclasses import dataclass
from pathlib import Path

from .bench import (BENCH_IDS, K_VALUES, N_MAX, BenchSpec, ConfigurationError, admitted,
                    run_bench)
from .block import DEFAULT_BLOCK_CAPACITY, check_block_capacity
from .structures import STRUCTURE_IDS, model_peak_bytes

CSV_HEADER = ("bench", "impl", "n", "k", "seed", "repeats", "min_ticks", "checksum",
              "model_bytes")
GIB = 1 << 30
DEFAULT_MEM_LIMIT_GB = 4.0
MEM_LIMIT_ENV = "SEQBENCH_MEM_LIMIT_GB"

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_IO = 3


class UsageError(ValueError):
    pass


@dataclass(frozen=True)
class RunConfig:
    benches: tuple
    impls: tuple
    ns: tuple
    seed: int = 1
    repeats: int = 5
    ks: tuple = (32,)
    block_capacity: int = DEFAULT_BLOCK_CAPACITY
    mem_limit_bytes: int = int(DEFAULT_MEM_LIMIT_GB * GIB)
    out: str = None
    gnuplot: str = None
    # strict: every requested pairing must be admissible; otherwise skip the rest
    strict: bool = True

    def specs(self):
        """BenchSpecs of the matrix in CSV row order (bench, impl, n, k)."""
        out = []
        for bench in sorted(self.benches):
            ks = sorted(self.ks) if bench == "fairbench-rand" else (0,)
            for impl in sorted(self.impls):
                for n in sorted(self.ns):
                    if not self.strict and not admitted(bench, impl, n):
                        continue
                    for k in ks:
                        out.append(BenchSpec(bench, impl, n, k, self.seed, self.repeats,
                                             self.block_capacity))
        return out

    def check_memory(self):
        for impl in self.impls:
            for n in self.ns:
                if not self.strict and not any(admitted(b, impl, n) for b in self.benches):
                    continue
                need = model_peak_bytes(impl, n, self.block_capacity)
                if need > self.mem_limit_bytes:
                    raise ConfigurationError(
                        f"{impl} at n={n} is modeled at {need} bytes, over the "
                        f"{self.mem_limit_bytes}-byte cap (--mem-limit-gb)")


def _ids(text, known, flag):
    ids = tuple(dict.fromkeys(s.strip() for s in text.split(",") if s.strip()))
    if not ids:
        raise UsageError(f"{flag}: empty list")
    for i in ids:
        if i not in known:
            raise UsageError(f"{flag}: unknown id {i!r} (choose from {', '.join(known)})")
    return ids


def _int(text, flag):
    try:
        return int(text)
    except ValueError:
        raise UsageError(f"{flag}: not an integer: {text!r}") from None


def _ints(text, flag):
    values = tuple(_int(s.strip(), flag) for s in text.split(",") if s.strip())
    if not values:
        raise UsageError(f"{flag}: empty list")
    return values


def n_sweep(text):
    """Geometric sizes from ``min:max:factor``, both ends inclusive when hit."""
    parts = text.split(":")
    if len(parts) != 3:
        raise UsageError("--n-sweep: expected min:max:factor")
    lo = _int(parts[0], "--n-sweep")
    hi = _int(parts[1], "--n-sweep")
    try:
        factor = float(parts[2])
    except ValueError:
        raise UsageError(f"--n-sweep: bad factor {parts[2]!r}") from None
    if lo < 1 or hi < lo or factor <= 1:
        raise UsageError("--n-sweep: need 1 <= min <= max and factor > 1")
    ns = []
    x = float(lo)
    while round(x) <= hi:
        if not ns or round(x) != ns[-1]:
            ns.append(round(x))
        x *= factor
    return tuple(ns)


def _mem_limit_gb(value):
    if value is None:
        value = os.environ.get(MEM_LIMIT_ENV, DEFAULT_MEM_LIMIT_GB)
    try:
        gb = float(value)
    except ValueError:
        raise UsageError(f"--mem-limit-gb: not a number: {value!r}") from None
    if gb <= 0:
        raise UsageError("--mem-limit-gb: must be positive")
    return gb


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser():
    p = _Parser(prog="seqbench",
                description="Benchmark sequence data structures and print CSV results.")
    p.add_argument("--bench", help="comma list of bench ids (default: all)")
    p.add_argument("--impl", help="comma list of structure ids (default: all)")
    sizes = p.add_mutually_exclusive_group(required=True)
    sizes.add_argument("--n", help="comma list of sizes")
    sizes.add_argument("--n-sweep", metavar="MIN:MAX:FACTOR", help="geometric size sweep")
    p.add_argument("--seed", default="1")
    p.add_argument("--repeats", default="5")
    p.add_argument("--k", default="32", help="comma list of fairbench-rand step bounds")
    p.add_argument("--block-capacity", default=str(DEFAULT_BLOCK_CAPACITY))
    p.add_argument("--mem-limit-gb", help=f"memory cap in GiB (default: ${MEM_LIMIT_ENV} or 4)")
    p.add_argument("--out", help="CSV path (default: stdout)")
    p.add_argument("--emit-gnuplot", metavar="PATH", help="also write a gnuplot script")
    return p


def parse_args(argv=None):
    """RunConfig from command-line flags.

    Raises UsageError for malformed flags and ConfigurationError for an
    inadmissible pairing or a run whose modeled footprint exceeds the cap.
    If --bench or --impl is left at its default (all), inadmissible
    pairings are skipped rather than rejected.
    """
    args = build_parser().parse_args(argv)
    benches = _ids(args.bench, BENCH_IDS, "--bench") if args.bench else BENCH_IDS
    impls = _ids(args.impl, STRUCTURE_IDS, "--impl") if args.impl else STRUCTURE_IDS
    ns = _ints(args.n, "--n") if args.n is not None else n_sweep(args.n_sweep)
    repeats = _int(args.repeats, "--repeats")
    if repeats < 1:
        raise UsageError("--repeats: must be >= 1")
    ks = _ints(args.k, "--k")
    if any(k not in K_VALUES for k in ks):
        raise UsageError(f"--k: values must be among {K_VALUES}")
    block_capacity = _int(args.block_capacity, "--block-capacity")
    try:
        check_block_capacity(block_capacity)
    except ValueError as e:
        raise UsageError(f"--block-capacity: {e}") from None

    config = RunConfig(
        benches=benches,
        impls=impls,
        ns=tuple(sorted(set(ns))),
        seed=_int(args.seed, "--seed"),
        repeats=repeats,
        ks=tuple(sorted(set(ks))),
        block_capacity=block_capacity,
        mem_limit_bytes=int(_mem_limit_gb(args.mem_limit_gb) * GIB),
        out=args.out,
        gnuplot=args.emit_gnuplot,
        strict=args.bench is not None and args.impl is not None,
    )
    # the memory gate comes first so oversized runs are reported as such
    config.check_memory()
    for n in ns:
        if not 3 <= n <= N_MAX:
            raise UsageError(f"--n: sizes must be in [3, {N_MAX}], got {n}")
    if not config.specs():
        raise ConfigurationError("no admissible (bench, impl, n) combination")
    return config


def run(config, progress=None):
    results = []
    for spec in config.specs():
        if progress:
            progress(spec)
        results.append(run_bench(spec))
    return results


def emit_csv(results):
    if not results:
        raise ValueError("no results to write")
    rows = sorted(results, key=lambda r: (r.spec.bench, r.spec.impl, r.spec.n, r.spec.k,
                                          r.spec.seed))
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in rows:
        s = r.spec
        w.writerow((s.bench, s.impl, s.n, s.k, s.seed, s.repeats, r.min_ticks, r.checksum,
                    r.model_bytes))
    return buf.getvalue()


def gnuplot_script(csv_text, image_stem="seqbench"):
    """Plot script with the data inlined: one chart per (bench, k), one curve per impl."""
    rows = list(csv.DictReader(io.StringIO(csv_text)))
    if not rows:
        raise ValueError("CSV has no data rows; refusing to write an empty plot")
    charts = {}
    for row in rows:
        key = (row["bench"], int(row["k"]))
        charts.setdefault(key, {}).setdefault(row["impl"], []).append(
            (int(row["n"]), int(row["min_ticks"])))

    lines = [
        "# ticks versus N, one curve per structure",
        "set terminal pngcairo size 900,600",
        "set logscale x",
        "set logscale y",
        "set key top left",
        "set xlabel 'N'",
        "set ylabel 'ticks (ns)'",
        "set grid",
    ]
    for (bench, k), curves in sorted(charts.items()):
        tag = f"{bench}-k{k}" if k else bench
        blocks = []
        for impl, points in sorted(curves.items()):
            name = f"${tag}_{impl}".replace("-", "_")
            lines.append(f"{name} << EOD")
            lines.extend(f"{n} {t}" for n, t in sorted(points))
            lines.append("EOD")
            blocks.append((name, impl))
        lines.append(f"set output '{image_stem}-{tag}.png'")
        lines.append(f"set title '{bench}" + (f" (k={k})'" if k else "'"))
        plots = ", \\\n     ".join(f"{name} using 1:2 with linespoints title '{impl}'"
                                   for name, impl in blocks)
        lines.append(f"plot {plots}")
    return "\n".join(lines) + "\n"


def emit_gnuplot(csv_path):
    """Script text for the CSV at ``csv_path``; OSError if it cannot be read."""
    path = Path(csv_path)
    return gnuplot_script(path.read_text(), image_stem=path.stem)


def _progress(spec):
    k = f" k={spec.k}" if spec.k else ""
    print(f"running {spec.bench} {spec.impl} n={spec.n}{k}", file=sys.stderr, flush=True)


def main(argv=None):
    try:
        config = parse_args(argv)
    except (UsageError, ConfigurationError) as e:
        print(f"seqbench: error: {e}", file=sys.stderr)
        return EXIT_USAGE

    try:
        # open the output first so a bad path fails before any bench runs
        sink = sys.stdout if config.out is None else open(config.out, "w")
    except OSError as e:
        print(f"seqbench: I/O error: {e}", file=sys.stderr)
        return EXIT_IO
    try:
        text = emit_csv(run(config, None if sink is sys.stdout else _progress))
        sink.write(text)
        sink.flush()
        if config.gnuplot:
            stem = Path(config.out).stem if config.out else "seqbench"
            Path(config.gnuplot).write_text(gnuplot_script(text, stem))
    except OSError as e:
        print(f"seqbench: I/O error: {e}", file=sys.stderr)
        return EXIT_IO
    finally:
        if sink is not sys.stdout:
            sink.close()
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())

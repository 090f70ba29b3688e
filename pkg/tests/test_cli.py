import csv
import io
import subprocess
import sys

import pytest

from seqbench.bench import BenchResult, BenchSpec, ConfigurationError
from seqbench.cli import (CSV_HEADER, GIB, EXIT_IO, EXIT_OK, EXIT_USAGE, UsageError,
                          emit_csv, emit_gnuplot, gnuplot_script, main, n_sweep, parse_args)


def test_valid_config():
    cfg = parse_args(["--bench", "fairbench", "--impl", "linkedlist,arrayblock",
                      "--n", "1000000"])
    assert cfg.benches == ("fairbench",)
    assert cfg.impls == ("linkedlist", "arrayblock")
    assert cfg.ns == (10**6,)
    assert (cfg.seed, cfg.repeats, cfg.ks, cfg.block_capacity) == (1, 5, (32,), 2048)
    assert cfg.mem_limit_bytes == 4 * GIB
    assert len(cfg.specs()) == 2


def test_inadmissible_pairing():
    with pytest.raises(ConfigurationError):
        parse_args(["--impl", "singlelist", "--bench", "addlast", "--n", "10"])


def test_default_axis_skips_inadmissible():
    cfg = parse_args(["--impl", "singlelist", "--n", "10"])
    assert "addlast" not in {s.bench for s in cfg.specs()}


def test_memory_gate():
    with pytest.raises(ConfigurationError, match="7200000040"):
        parse_args(["--n", "300000000", "--impl", "linkedlist", "--mem-limit-gb", "4"])
    # 24 * 1e8 bytes fits in 4 GiB
    parse_args(["--n", "100000000", "--impl", "linkedlist", "--bench", "addlast"])
    with pytest.raises(ConfigurationError):
        parse_args(["--n", "100000000", "--impl", "linkedlist", "--bench", "addlast",
                    "--mem-limit-gb", "2"])


def test_memory_limit_from_environment(monkeypatch):
    monkeypatch.setenv("SEQBENCH_MEM_LIMIT_GB", "0.5")
    assert parse_args(["--n", "10"]).mem_limit_bytes == GIB // 2
    assert parse_args(["--n", "10", "--mem-limit-gb", "1"]).mem_limit_bytes == GIB


@pytest.mark.parametrize("argv, flag", [
    (["--n", "abc"], "--n"),
    (["--n", "10", "--seed", "x"], "--seed"),
    (["--n", "10", "--repeats", "0"], "--repeats"),
    (["--n", "10", "--k", "16"], "--k"),
    (["--n", "10", "--block-capacity", "1000"], "--block-capacity"),
    (["--n", "10", "--mem-limit-gb", "-1"], "--mem-limit-gb"),
    (["--n", "10", "--bench", "quicksort"], "--bench"),
    (["--n", "10", "--impl", "vector"], "--impl"),
    (["--n-sweep", "10:5:2"], "--n-sweep"),
    (["--n", "2"], "--n"),
])
def test_usage_errors_name_the_flag(argv, flag):
    with pytest.raises(UsageError, match=flag):
        parse_args(argv)


def test_unknown_flag_and_missing_sizes():
    with pytest.raises(UsageError):
        parse_args(["--n", "10", "--frobnicate"])
    with pytest.raises(UsageError):
        parse_args([])
    with pytest.raises(UsageError):
        parse_args(["--n", "10", "--n-sweep", "1:10:2"])


def test_n_sweep():
    assert n_sweep("1000:100000:10") == (1000, 10000, 100000)
    assert n_sweep("10:50:2") == (10, 20, 40)
    assert n_sweep("3:5:1.2") == (3, 4, 5)


def test_k_only_for_fairbench_rand():
    cfg = parse_args(["--bench", "fairbench,fairbench-rand", "--impl", "linkedlist",
                      "--n", "100", "--k", "32,128"])
    assert [(s.bench, s.k) for s in cfg.specs()] == [
        ("fairbench", 0), ("fairbench-rand", 32), ("fairbench-rand", 128)]


def _result(bench, impl, n, k=0, ticks=5, checksum=9):
    return BenchResult(BenchSpec(bench, impl, n, k), ticks, checksum, 100)


def test_emit_csv():
    text = emit_csv([_result("fairbench", "linkedlist", 10)])
    lines = text.splitlines()
    assert lines[0] == ",".join(CSV_HEADER)
    assert lines[1] == "fairbench,linkedlist,10,0,1,5,5,9,100"
    assert text.endswith("\n") and len(lines) == 2


def test_emit_csv_sorted():
    results = [_result("stroustrup", "arraylist", 100), _result("fairbench", "linkedlist", 100),
               _result("fairbench", "arrayblock", 1000), _result("fairbench", "arrayblock", 100)]
    rows = list(csv.DictReader(io.StringIO(emit_csv(results))))
    keys = [(r["bench"], r["impl"], int(r["n"])) for r in rows]
    assert keys == sorted(keys)


def test_emit_csv_refuses_nothing():
    with pytest.raises(ValueError):
        emit_csv([])


def _csv(impls, ns):
    return emit_csv([_result("fairbench", i, n, ticks=n) for i in impls for n in ns])


def test_gnuplot_one_curve_per_impl(tmp_path):
    path = tmp_path / "run.csv"
    path.write_text(_csv(["linkedlist", "arrayblock"], [10, 100, 1000, 10**4, 10**5]))
    script = emit_gnuplot(path)
    assert script.count("with linespoints") == 2
    assert "set logscale x" in script
    assert "title 'linkedlist'" in script and "title 'arrayblock'" in script
    assert "set output 'run-fairbench.png'" in script


def test_gnuplot_refuses_empty_and_missing(tmp_path):
    path = tmp_path / "empty.csv"
    path.write_text(",".join(CSV_HEADER) + "\n")
    with pytest.raises(ValueError, match="no data rows"):
        emit_gnuplot(path)
    with pytest.raises(OSError):
        emit_gnuplot(tmp_path / "missing.csv")


def test_main_writes_csv_and_plot(tmp_path, capsys):
    out, gp = tmp_path / "r.csv", tmp_path / "r.gp"
    code = main(["--bench", "fairbench", "--impl", "linkedlist,arrayblock", "--n", "300,3000",
                 "--repeats", "2", "--out", str(out), "--emit-gnuplot", str(gp)])
    assert code == EXIT_OK
    rows = list(csv.DictReader(out.open()))
    assert len(rows) == 4
    assert {r["checksum"] for r in rows if r["n"] == "3000"} == {str(3000 * 3001 // 2)}
    assert gp.read_text().count("with linespoints") == 2


def test_main_stdout(capsys):
    assert main(["--bench", "addlast", "--impl", "arrayring", "--n", "10", "--repeats",
                 "1"]) == EXIT_OK
    assert capsys.readouterr().out.startswith(",".join(CSV_HEADER))


def test_main_exit_codes(tmp_path, capsys):
    assert main(["--impl", "singlelist", "--bench", "addlast", "--n", "10"]) == EXIT_USAGE
    assert main(["--frobnicate"]) == EXIT_USAGE
    assert main(["--n", "10", "--bench", "addlast", "--impl", "arrayring",
                 "--out", str(tmp_path / "no" / "such" / "dir.csv")]) == EXIT_IO
    err = capsys.readouterr().err
    assert "admitted" in err and "I/O error" in err


def test_deterministic_csv(tmp_path):
    argv = ["--bench", "fairbench-rand,stroustrup-binary", "--impl", "arrayring,linkedlist",
            "--n", "500", "--repeats", "1", "--k", "64"]
    texts = []
    for name in ("a.csv", "b.csv"):
        assert main(argv + ["--out", str(tmp_path / name)]) == EXIT_OK
        rows = list(csv.DictReader((tmp_path / name).open()))
        for r in rows:
            del r["min_ticks"]
        texts.append(rows)
    assert texts[0] == texts[1]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "seqbench", "--bench", "addlast",
                           "--impl", "singlelist", "--n", "10"], capture_output=True, text=True)
    assert proc.returncode == EXIT_USAGE
    assert "not admitted" in proc.stderr

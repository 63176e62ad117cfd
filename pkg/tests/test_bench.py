import importlib.util
import os

from conftest import ROOT


def test_benchmark_script_runs(capsys):
    path = os.path.join(ROOT, "benchmarks", "bench_kernels.py")
    spec = importlib.util.spec_from_file_location("bench_kernels", path)
    mod = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(mod)
    mod.main(["--ports", "8", "10", "--repeat", "1"])
    out = capsys.readouterr().out
    assert out.splitlines()[0].split()[:2] == ["kernel", "ports"]
    assert sum(line.startswith("extend") for line in out.splitlines()) == 2

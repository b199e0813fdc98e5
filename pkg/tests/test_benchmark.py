import subprocess
import sys
from pathlib import Path

SCRIPT = Path(__file__).resolve().parents[1] / "benchmarks" / "bench_enumerate.py"


def test_benchmark_runs_and_backends_agree():
    r = subprocess.run([sys.executable, str(SCRIPT), "--orders", "8", "--repeat", "1", "--marked"],
                       capture_output=True, text=True)
    assert r.returncode == 0, r.stderr
    lines = r.stdout.strip().splitlines()
    assert lines[0].split() == ["graph", "numba", "numpy", "speedup"]
    assert len(lines) == 3

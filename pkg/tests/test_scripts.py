import os
import subprocess
import sys

import pytest

SCRIPTS = os.path.join(os.path.dirname(__file__), "..", "scripts")


@pytest.mark.parametrize("argv", [
    ["reproduce_values.py", "trade"],
    ["alpha_trajectory.py", "--points", "5"],
    ["implication_sweep.py", "--count", "10", "--sizes", "3", "4"],
])
def test_script_runs(argv):
    proc = subprocess.run([sys.executable, os.path.join(SCRIPTS, argv[0]), *argv[1:]],
                          capture_output=True, text=True, timeout=120)
    assert proc.returncode == 0, proc.stderr
    assert proc.stdout
    if argv[0] == "implication_sweep.py":
        assert "counterexamples: none" in proc.stdout
    if argv[0] == "alpha_trajectory.py":
        assert "max x2 = 3.029" in proc.stdout

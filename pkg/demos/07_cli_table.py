"""Command-line surface: export corpus diagrams as .rgd files and build an
appendix-style table in text and LaTeX."""

import subprocess
import sys
import tempfile
from pathlib import Path


def cli(*args):
    res = subprocess.run([sys.executable, "-m", "realgrid", *args], capture_output=True, text=True)
    return res.returncode, res.stdout


with tempfile.TemporaryDirectory() as tmp:
    for name in ("unknot3", "trefoil5", "fig8", "6_1"):
        Path(tmp, f"{name}.rgd").write_text(cli("corpus", "get", name)[1])
    print(cli("poly", "corpus:8_20a")[1], end="")
    print(cli("compute", "corpus:unknot3", "--flavor", "minus")[1], end="")
    print(cli("table", tmp)[1])
    print(cli("table", tmp, "--latex")[1])
    code, out = cli("verify", "corpus:trefoil5", "--moves", "3")
    print(out)
    print("exit", code)

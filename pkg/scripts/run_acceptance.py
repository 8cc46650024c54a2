"""Run the acceptance suite and print one PASS/FAIL line per criterion."""

from __future__ import annotations

import runpy
import sys
from pathlib import Path

if __name__ == "__main__":
    path = Path(__file__).resolve().parent.parent / "tests" / "test_acceptance.py"
    sys.argv = [str(path)]
    runpy.run_path(str(path), run_name="__main__")

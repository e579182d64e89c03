#!/usr/bin/env python3
"""Run the acceptance suite and print only the per-criterion PASS/FAIL lines.

    python scripts/run_acceptance.py
"""

import subprocess
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent


def main() -> int:
    proc = subprocess.run(
        [sys.executable, "-m", "pytest", str(ROOT / "tests" / "test_acceptance.py"), "-q", "-s",
         "-p", "no:cacheprovider"],
        cwd=ROOT, capture_output=True, text=True)
    lines = [ln for ln in proc.stdout.splitlines() if ln.startswith(("[PASS]", "[FAIL]"))]
    print("\n".join(lines))
    failed = sum(ln.startswith("[FAIL]") for ln in lines)
    print(f"{len(lines) - failed}/{len(lines)} criterion checks passed")
    if proc.returncode and not failed:
        print(proc.stdout[-3000:], file=sys.stderr)
    return proc.returncode


if __name__ == "__main__":
    sys.exit(main())

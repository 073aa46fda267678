"""Drive every CLI command over the bundled example models.

Usage: python scripts/run_examples.py
"""

from __future__ import annotations

import pathlib
import sys

from gentle_si.cli import main

GOLDENS = pathlib.Path(__file__).resolve().parent.parent / "tests" / "goldens"

DEMOS = [
    ["validate", "running.model"],
    ["color", "running.model"],
    ["color", "path.model"],
    ["cover", "cover.model"],
    ["components", "running.model"],
    ["peg", "running.model"],
    ["generators", "closing.model"],
    ["relations", "closing.model"],
    ["presentation", "running.model"],
    ["degrees", "running.model"],
    ["verify", "closing.model"],
    ["verify", "running.model"],
]


def run() -> int:
    for argv in DEMOS:
        resolved = [
            str(GOLDENS / a) if a.endswith(".model") else a for a in argv
        ]
        print(f"$ gentle-si {' '.join(argv)}")
        code = main(resolved)
        if code != 0:
            print(f"exit {code}", file=sys.stderr)
            return code
        print()
    return 0


if __name__ == "__main__":
    raise SystemExit(run())

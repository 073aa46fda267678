"""Regenerate the byte-exact CLI outputs under tests/goldens/.

Run after any intentional output format change, then eyeball the diff:

    python scripts/update_goldens.py
    git diff tests/goldens
"""

from __future__ import annotations

import contextlib
import io
import pathlib
import sys

from gentle_si.cli import main

GOLDENS = pathlib.Path(__file__).resolve().parent.parent / "tests" / "goldens"

CASES = [
    ("running_presentation.json", ["presentation", "running.model", "--json"]),
    ("running_presentation.txt", ["presentation", "running.model"]),
    ("running_peg.dot", ["peg", "running.model", "--dot"]),
    ("running_components.json", ["components", "running.model", "--json"]),
    ("path_components.json", ["components", "path.model", "--json"]),
    ("closing_generators.json", ["generators", "closing.model", "--json"]),
    ("closing_verify.json", ["verify", "closing.model", "--cap", "3", "--json"]),
    ("cover_report.json", ["cover", "cover.model", "--json"]),
]


def run() -> int:
    for out_name, argv in CASES:
        argv = [
            str(GOLDENS / a) if a.endswith(".model") else a for a in argv
        ]
        buf = io.StringIO()
        with contextlib.redirect_stdout(buf):
            code = main(argv)
        if code != 0:
            print(f"{out_name}: exit {code}", file=sys.stderr)
            return code
        (GOLDENS / out_name).write_text(buf.getvalue(), encoding="utf-8")
        print(f"wrote {out_name} ({len(buf.getvalue())} bytes)")
    return 0


if __name__ == "__main__":
    raise SystemExit(run())

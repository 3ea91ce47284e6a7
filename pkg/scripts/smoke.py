"""Replay the worked examples through the ``homtool`` command line.

Each row runs one CLI invocation with ``--json`` on the bundled fixtures and
compares a field of the output with the expected value. Exit status is the
number of mismatches.

    python scripts/smoke.py
"""

from __future__ import annotations

import contextlib
import io
import json
import sys
import tempfile
from pathlib import Path

from homtool.cli import main

F = "fixtures/"

# (description, argv, JSON field, expected value, expected exit code)
ROWS = [
    ("chromatic number of the design source", ["invariant", "chromatic", F + "sec5_G.hgf"], "value", 4, 0),
    ("clique number of the design target", ["invariant", "clique", F + "sec5_H.hgf"], "value", 3, 0),
    ("design example complexity", ["complexity", F + "sec5_G.hgf", F + "sec5_H.hgf"], "value", 2, 0),
    ("fan-in digraph, plain", ["complexity", F + "ex34_G.hgf", F + "ex34_H.hgf"], "value", 1, 0),
    ("fan-in digraph, injective", ["complexity", F + "ex34_G.hgf", F + "ex34_H.hgf", "--injective"], "value", 2, 0),
    ("directed path, plain", ["complexity", F + "ex35_G.hgf", F + "ex35_H.hgf"], "value", 2, 0),
    ("directed path, injective", ["complexity", F + "ex35_G.hgf", F + "ex35_H.hgf", "--injective"], "value", 2, 0),
    ("triangle into two-edge path", ["complexity", F + "ex36_G.hgf", F + "ex36_H.hgf"], "value", 2, 0),
    ("triangle into two-edge path, injective",
     ["complexity", F + "ex36_G.hgf", F + "ex36_H.hgf", "--injective"], "value", 2, 0),
    ("K8 into K3", ["complexity", F + "K8.hgf", F + "K3.hgf"], "value", 2, 0),
    ("odd cycle into an edge", ["complexity", F + "C7.hgf", F + "K2.hgf"], "value", 2, 0),
    ("even cycle into an edge", ["complexity", F + "C6.hgf", F + "K2.hgf"], "value", 1, 0),
    ("K4 into an edge, injective", ["complexity", F + "K4.hgf", F + "K2.hgf", "--injective"], "value", 6, 0),
    ("K33 into an edge, injective", ["complexity", F + "K33.hgf", F + "K2.hgf", "--injective"], "value", 9, 0),
    ("edge plus point, injective", ["complexity", F + "K2_point.hgf", F + "K2.hgf", "--injective"], "value", 2, 0),
    ("loop into K3", ["complexity", F + "loop.hgf", F + "K3.hgf"], "value", "inf", 0),
    ("triangle into Grötzsch", ["complexity", F + "K3.hgf", F + "grotzsch.hgf"], "value", 2, 0),
    ("triangle into Grötzsch, injective",
     ["complexity", F + "K3.hgf", F + "grotzsch.hgf", "--injective"], "value", 2, 0),
    ("Grötzsch chromatic number", ["invariant", "chromatic", F + "grotzsch.hgf"], "value", 4, 0),
    ("Grötzsch clique cover", ["cover", "cc", F + "grotzsch.hgf"], "value", 20, 0),
    ("K33 clique cover", ["cover", "cc", F + "K33.hgf"], "value", 9, 0),
    ("K8 bipartite dimension", ["cover", "bipdim", F + "K8.hgf"], "value", 3, 0),
    ("P4 bipartite dimension", ["cover", "bipdim", F + "P4.hgf"], "value", 2, 0),
    ("P4 into an edge", ["complexity", F + "P4.hgf", F + "K2.hgf"], "value", 1, 0),
    ("K4 2-particity", ["cover", "particity", F + "K4.hgf", "--l", "2"], "value", 2, 0),
    ("C5 is not bipartite", ["invariant", "lpartite", F + "C5.hgf", "--l", "2"], "value", False, 1),
    ("edge into two-edge path, strong", ["complexity", F + "K2.hgf", F + "P3.hgf", "--strong"], "value", 2, 0),
    ("missing input", ["hom", "missing.hgf", F + "K2.hgf"], "exit_code", 2, 2),
]


def run(argv: list[str]) -> tuple[int, dict]:
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf), contextlib.redirect_stderr(io.StringIO()):
        code = main([*argv, "--json"])
    return code, json.loads(buf.getvalue())


def main_smoke() -> int:
    failures = 0
    for label, argv, field, want, want_code in ROWS:
        code, data = run(argv)
        got = data.get(field)
        ok = got == want and code == want_code
        failures += not ok
        print(f"{'ok  ' if ok else 'FAIL'} {label}: {field}={got!r} exit={code}")

    with tempfile.TemporaryDirectory() as tmp:
        plan = str(Path(tmp) / "plan.json")
        g, h = F + "sec5_G.hgf", F + "sec5_H.hgf"
        code, data = run(["design", g, "--target", h, "--out", plan])
        ok = code == 0 and len(data["pieces"]) == 2 and data["optimal"]
        code, data = run(["verify", plan, g, h, "--check-optimal"])
        ok = ok and code == 0 and data["optimal"] and not data["strong"]
        failures += not ok
        print(f"{'ok  ' if ok else 'FAIL'} design then verify: optimal={data.get('optimal')} "
              f"images cover target={data.get('strong')}")
    print(f"{failures} mismatch(es)")
    return failures


if __name__ == "__main__":
    sys.exit(main_smoke())

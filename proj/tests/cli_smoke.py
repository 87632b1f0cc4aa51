#!/usr/bin/env python3
"""End-to-end checks of the command line tool: exit codes, file formats and
the wiring between subcommands."""

import json
import subprocess
import sys
import tempfile
from pathlib import Path

CLI = sys.argv[1]
failures = 0


def run(*args, expect=0):
    global failures
    proc = subprocess.run([CLI, *args], capture_output=True, text=True)
    if proc.returncode != expect:
        failures += 1
        print(f"FAIL {' '.join(args)}: exit {proc.returncode} != {expect}")
        print(proc.stdout, proc.stderr)
    return proc


with tempfile.TemporaryDirectory() as tmp:
    tmp = Path(tmp)
    space = tmp / "sierpinski.json"
    space.write_text(json.dumps(
        {"points": ["bot", "top"], "opens": [[], [1], [0, 1]]}))
    fmap = tmp / "classifier.json"
    fmap.write_text(json.dumps({"map": [0, 1]}))

    out = run("analyze-level", str(space), str(fmap)).stdout
    assert "Lev(f) = 2" in out and "MATCH" in out, out

    j = json.loads(run("analyze-level", str(space), str(fmap), "--json").stdout)
    assert j["level"] == 2 and j["match"] and j["min_piecewise_level"] == 2

    run("analyze-level", str(space), str(tmp / "missing.json"), expect=2)
    bad_map = tmp / "bad.json"
    bad_map.write_text(json.dumps({"map": [0]}))
    run("analyze-level", str(space), str(bad_map), expect=2)

    enum = tmp / "enum.txt"
    enum.write_text("x1^5\nx1^3\n1\n")
    run_file = tmp / "run.json"
    out = run("learn-groebner", str(enum), "--n", "1",
              "--run-out", str(run_file)).stdout
    assert "ORACLE MATCH" in out and "{1}" in out, out

    parsed = json.loads(run_file.read_text())
    assert parsed["bound"] == "w*1" and parsed["bound_inclusive"] is True
    out = run("validate-run", str(run_file)).stdout
    assert "valid run" in out and "3 mind changes" in out, out

    # Successor-bound reading keeps the run file valid too.
    out = run("learn-groebner", str(enum), "--n", "1", "--bound-inclusive",
              "off", "--run-out", str(run_file)).stdout
    assert json.loads(run_file.read_text())["bound"] == "w*1+1"
    run("validate-run", str(run_file))

    broken = tmp / "broken.json"
    broken.write_text(json.dumps({
        "bound": "3", "bound_inclusive": False,
        "steps": [{"tag": "1", "guess": [1]}, {"tag": "1", "guess": [2]}]}))
    out = run("validate-run", str(broken), expect=1).stdout
    assert "guess changed without tag change" in out, out

    bad_enum = tmp / "bad_enum.txt"
    bad_enum.write_text("x1\nx1 + oops\n")
    proc = run("learn-groebner", str(bad_enum), "--n", "1", expect=2)
    assert "line 2" in proc.stderr, proc.stderr

    enum_out = tmp / "forced.txt"
    out = run("adversary", "--n", "2", "--targets", "w*2,w*1+3,w*1,2",
              "--out", str(enum_out)).stdout
    assert "ROUND TRIP OK" in out, out
    out = run("learn-groebner", str(enum_out), "--n", "2").stdout
    assert "ORACLE MATCH" in out, out
    proc = run("adversary", "--n", "2", "--targets", "w*2+3", expect=2)
    assert "unrealizable tag w*2+3" in proc.stderr, proc.stderr

    out = run("cb", str(space)).stdout
    assert "rank = 2" in out and "OK" in out, out

    run("diff-hierarchy", str(space), "--set", "0", "--alpha", "2")
    run("diff-hierarchy", str(space), "--set", "0", "--alpha", "1", expect=1)

    j = json.loads(run("sweep", "--max-points", "2", "--jobs", "2",
                       "--json").stdout)
    assert j["ok"] and j["spaces"] == 4, j

    run("no-such-verb", expect=2)

if failures:
    print(f"{failures} CLI checks failed")
    sys.exit(1)
print("cli smoke OK")

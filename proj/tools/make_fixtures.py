#!/usr/bin/env python3
"""Regenerates fixtures/ from the transcriptions below.

Usage: make_fixtures.py <path-to-hdakit-binary> <fixtures-dir>
"""

import json
import subprocess
import sys
from pathlib import Path

PETERSON_LETTERS = ["b0:=0", "b0:=1", "b1:=0", "b1:=1", "crit0", "crit1", "t:=0", "t:=1"]

# (name, source, target, label)
PETERSON_EDGES = [
    ("e1", "q0", "q1", "b1:=0"), ("e2", "q1", "q2", "b1:=1"), ("e3", "q2", "q3", "t:=0"),
    ("e4", "q4", "q3", "b0:=0"), ("e5", "q0", "q5", "b0:=1"), ("e6", "q1", "q6", "b0:=1"),
    ("e7", "q2", "q7", "b0:=1"), ("e8", "q3", "q8", "b0:=1"), ("e9", "q5", "q6", "b1:=0"),
    ("e10", "q6", "q7", "b1:=1"), ("e11", "q7", "q8", "t:=0"), ("e12", "q7", "q9", "t:=1"),
    ("e13", "q10", "q8", "t:=0"), ("e14", "q11", "q3", "t:=0"), ("e15", "q12", "q4", "t:=0"),
    ("e16", "q10", "q9", "t:=1"), ("e17", "q11", "q10", "b0:=1"), ("e18", "q12", "q11", "b0:=0"),
    ("e19", "q5", "q13", "t:=1"), ("e20", "q6", "q14", "t:=1"), ("e21", "q14", "q9", "b1:=1"),
    ("e22", "q15", "q10", "b1:=1"), ("e23", "q16", "q11", "b1:=1"), ("e24", "q17", "q12", "b1:=1"),
    ("e25", "q13", "q14", "b1:=0"), ("e26", "q15", "q14", "t:=1"), ("e27", "q16", "q15", "b0:=1"),
    ("e28", "q17", "q16", "b0:=0"), ("e29", "q3", "q0", "crit1"), ("e30", "q14", "q17", "crit0"),
    ("e31", "p0", "q4", "crit0"), ("e32", "p1", "q13", "crit1"), ("e33", "q8", "p1", "t:=1"),
    ("e34", "q9", "p0", "t:=0"),
]

# (name, d^0_1, d^0_2, d^1_1, d^1_2)
PETERSON_SQUARES = [
    ("s1", "e5", "e1", "e6", "e9"), ("s2", "e6", "e2", "e7", "e10"), ("s3", "e7", "e3", "e8", "e11"),
    ("s4", "e19", "e9", "e20", "e25"), ("s5", "e20", "e10", "e12", "e21"), ("s6", "e17", "e14", "e8", "e13"),
    ("s7", "e18", "e15", "e4", "e14"), ("s8", "e22", "e26", "e21", "e16"), ("s9", "e23", "e27", "e22", "e17"),
    ("s10", "e24", "e28", "e23", "e18"),
]

PETERSON_VERTICES = [f"q{j}" for j in range(18)] + ["p0", "p1"]

REDUCED_EDGES = [
    ("r1", "q1", "q3", ["b1:=1", "t:=0"]),
    ("r2", "q1", "q14", ["b0:=1", "t:=1"]),
    ("r3", "q16", "q3", ["b1:=1", "t:=0"]),
    ("r4", "q16", "q14", ["b0:=1", "t:=1"]),
    ("r5", "q3", "q1", ["crit1", "b1:=0"]),
    ("r6", "q14", "q16", ["crit0", "b0:=0"]),
    ("r7", "q3", "q14", ["b0:=1", "t:=1", "crit1", "b1:=0"]),
    ("r8", "q14", "q3", ["b1:=1", "t:=0", "crit0", "b0:=0"]),
]


def document(letters, dependence, vertices, edges, squares, initial, finals):
    cubes = [{"id": v, "dim": 0} for v in vertices]
    cubes += [{"id": n, "dim": 1, "front": [s], "back": [t]} for n, s, t, _ in edges]
    cubes += [{"id": n, "dim": 2, "front": [f1, f2], "back": [b1, b2]} for n, f1, f2, b1, b2 in squares]
    labels = {n: (w if isinstance(w, list) else [w]) for n, _, _, w in edges}
    return {
        "alphabet": {"letters": letters, "dependence": dependence},
        "cubes": cubes,
        "labels": labels,
        "initial": initial,
        "finals": finals,
    }


def all_pairs(letters):
    return [[a, b] for i, a in enumerate(letters) for b in letters[i:]]


def normalize(tool, src, dst, canonical=False):
    """Round-trips a document through the tool so the file is in canonical form."""
    cmd = [tool, "canonical-deps" if canonical else "format", str(src), "-o", str(dst)]
    subprocess.run(cmd, check=True)


def monitor(letters, states, initial, bad, step):
    transitions = [{"state": s, "letter": a, "next": step(s, a)} for s in states for a in letters]
    return {"letters": letters, "states": states, "initial": initial, "bad": bad, "transitions": transitions}


def mutex_monitor():
    def step(s, a):
        if s == "bad":
            return "bad"
        if s == "none":
            return {"crit0": "open0", "crit1": "open1"}.get(a, "none")
        i = s[-1]
        j = "1" if i == "0" else "0"
        if a == "crit" + j:
            return "bad"
        if a == f"b{i}:=0":
            return "none"
        return s

    return monitor(PETERSON_LETTERS, ["none", "open0", "open1", "bad"], "none", ["bad"], step)


def repeat_monitor(letter):
    """Two occurrences of `letter` with no critical section in between."""

    def step(s, a):
        if s == "bad":
            return "bad"
        if a in ("crit0", "crit1"):
            return "idle"
        if a == letter:
            return "bad" if s == "seen" else "seen"
        return s

    return monitor(PETERSON_LETTERS, ["idle", "seen", "bad"], "idle", ["bad"], step)


def bypass_monitor(i):
    """After b_i:=1, the other process enters twice before process i does."""
    j = 1 - i

    def step(s, a):
        if s == "bad":
            return "bad"
        if a == f"crit{i}":
            return "idle"
        if a == f"b{i}:=1" and s == "idle":
            return "waiting"
        if a == f"crit{j}":
            return {"idle": "idle", "waiting": "once", "once": "bad"}[s]
        return s

    return monitor(PETERSON_LETTERS, ["idle", "waiting", "once", "bad"], "idle", ["bad"], step)


def main():
    tool, out = sys.argv[1], Path(sys.argv[2])
    (out / "monitors").mkdir(parents=True, exist_ok=True)
    tmp = out / "raw.json"

    toy_letters = ["a1", "a2", "a3"]
    toy_dep = [p for p in all_pairs(toy_letters) if p != ["a1", "a2"]]
    toy = document(toy_letters, toy_dep, ["I"],
                   [("x1", "I", "I", "a1"), ("x2", "I", "I", "a2"), ("x3", "I", "I", "a3")],
                   [("y", "x2", "x1", "x2", "x1")], "I", ["I"])
    tmp.write_text(json.dumps(toy))
    normalize(tool, tmp, out / "toy.json")

    peterson = document(PETERSON_LETTERS, all_pairs(PETERSON_LETTERS), PETERSON_VERTICES, PETERSON_EDGES,
                        PETERSON_SQUARES, "q1", ["q1", "q16"])
    tmp.write_text(json.dumps(peterson))
    normalize(tool, tmp, out / "peterson.json", canonical=True)

    baked = json.loads((out / "peterson.json").read_text())["alphabet"]["dependence"]
    reduced = document(PETERSON_LETTERS, baked, ["q1", "q3", "q14", "q16"], REDUCED_EDGES, [], "q1", ["q1", "q16"])
    tmp.write_text(json.dumps(reduced))
    normalize(tool, tmp, out / "peterson_reduced.json")

    eco_letters = ["a", "b", "c", "d"]
    eco_dep = [p for p in all_pairs(eco_letters) if p not in (["a", "b"], ["a", "c"])]
    eco = document(eco_letters, eco_dep, ["p0", "p1", "p2", "p3", "p4", "p5", "p6"],
                   [("p0p2", "p0", "p2", "a"), ("p6p1", "p6", "p1", "a"), ("p3p5", "p3", "p5", "a"),
                    ("p0p6", "p0", "p6", "b"), ("p2p1", "p2", "p1", "b"),
                    ("p0p3", "p0", "p3", "c"), ("p2p5", "p2", "p5", "c"), ("p2p4", "p2", "p4", "d")],
                   [("upper", "p0p6", "p0p2", "p2p1", "p6p1"), ("lower", "p0p3", "p0p2", "p2p5", "p3p5")],
                   "p0", ["p3"])
    tmp.write_text(json.dumps(eco))
    normalize(tool, tmp, out / "ecollapse.json")
    tmp.unlink()

    monitors = {"mutex.json": mutex_monitor()}
    for a in PETERSON_LETTERS:
        if not a.startswith("crit"):
            name = a.replace(":=", "_")
            monitors[f"starvation_repeat_{name}.json"] = repeat_monitor(a)
    for i in (0, 1):
        monitors[f"starvation_bypass_{i}.json"] = bypass_monitor(i)
    for name, m in monitors.items():
        (out / "monitors" / name).write_text(json.dumps(m, indent=2) + "\n")


if __name__ == "__main__":
    main()

#!/usr/bin/env python3
"""End-to-end checks for the nestchroma command line tool.

Usage: cli_tests.py <path-to-binary>
"""
import json
import subprocess
import sys
import tempfile
from pathlib import Path

BIN = sys.argv[1]
failures = []


def run(*args, stdin=None):
    proc = subprocess.run([BIN, *args], input=stdin, capture_output=True, text=True, timeout=120)
    return proc.returncode, proc.stdout, proc.stderr


def check(cond, what):
    if not cond:
        failures.append(what)
        print("FAIL:", what)


EDGE_LIST = """n 6
a b
a c
b c
c d
d e
d f
"""


def main():
    tmp = Path(tempfile.mkdtemp(prefix="nestchroma_cli_"))

    # solve from stdin, graph6 autodetected
    code, out, err = run("solve", stdin="C~\n")
    check(code == 0, "solve K4 exit code")
    check("n = 4" in out and "chi_N = 4" in out and "time_ms = " in out, "solve K4 output: " + out)

    # solve an edge list with labels, full JSON surface
    g_path = tmp / "running.el"
    g_path.write_text(EDGE_LIST)
    code, out, err = run("solve", str(g_path), "--json", "--chi", "--coloring", "--dedup")
    check(code == 0, "solve json exit code")
    doc = json.loads(out)
    check(doc["n"] == 6 and doc["chi_nested"] == 4 and doc["chi"] == 3, "solve json values: " + out)
    check(doc["labels"] == ["a", "b", "c", "d", "e", "f"], "solve json labels")
    check([4, 5] in doc["duplicate_classes"], "duplicate class {e,f} missing")
    check(len(doc["classes"]) == 4, "solve json class count")
    check(set(doc["timings_ms"]) == {"parse", "solve"}, "solve json timings keys")

    # round trip the reported colouring through verify
    part_path = tmp / "classes.txt"
    labels = doc["labels"]
    lines = ["# optimal colouring reported by solve"]
    for cls in doc["classes"]:
        lines.append(" ".join(labels[v] for v in cls))
    part_path.write_text("\n".join(lines) + "\n")
    code, out, err = run("verify", "--graph", str(g_path), str(part_path))
    check(code == 0 and out.strip() == "nested: yes (4 classes)", "verify yes: " + out)

    # an invalid certificate is reported, not rejected
    bad_path = tmp / "bad.txt"
    bad_path.write_text("a b\nc\nd\ne f\n")
    code, out, err = run("verify", "--graph", str(g_path), str(bad_path))
    check(code == 0 and out.strip() == "nested: no (first offending class: 1)",
          "verify no: " + out)

    # unknown vertex in the certificate is a parse error
    ugly_path = tmp / "ugly.txt"
    ugly_path.write_text("a b z\n")
    code, out, err = run("verify", "--graph", str(g_path), str(ugly_path))
    check(code == 2 and "error:" in err, "verify parse error: %d %s" % (code, err))

    # malformed graph input
    code, out, err = run("solve", stdin="this is not a graph\n")
    check(code == 2 and "error:" in err, "solve parse error: %d %s" % (code, err))

    # oracle agreement and the size cutoff
    code, out, err = run("solve", "--oracle", stdin="C~\n")
    check(code == 0 and "oracle: agree (4)" in out, "oracle agree: " + out)
    code, out, err = run("generate", "cycle", "-n", "8")
    check(code == 0, "generate cycle exit")
    c8 = out.strip()
    code, out, err = run("solve", "--oracle", "--oracle-cap", "5", stdin=c8 + "\n")
    check(code == 0 and "oracle: skipped (n > 5)" in out, "oracle skip: " + out)

    # generate: golden graph6 for K4, edge-list shape for a star
    code, out, err = run("generate", "complete", "-n", "4")
    check(code == 0 and out.strip() == "C~", "generate K4: " + out)
    code, out, err = run("generate", "star", "-n", "3", "--format", "edge-list")
    rows = out.strip().splitlines()
    check(code == 0 and rows[0] == "n 4" and len(rows) == 4, "generate star edge list: " + out)

    # products compose with files; cartesian P4 x K2 has chi_N = 4
    p4 = tmp / "p4.g6"
    k2 = tmp / "k2.g6"
    run("generate", "path", "-n", "4", "-o", str(p4))
    run("generate", "complete", "-n", "2", "-o", str(k2))
    check(p4.read_text().strip() != "", "generate -o wrote a file")
    code, out, err = run("generate", "product", "--kind", "cartesian",
                         "--left", str(p4), "--right", str(k2))
    check(code == 0, "product exit")
    code, out, err = run("solve", stdin=out)
    check(code == 0 and "n = 8" in out and "chi_N = 4" in out, "cartesian P4 x K2: " + out)

    # mycielski of K2 is the 5-cycle
    code, out, err = run("generate", "mycielski", "--of", str(k2))
    check(code == 0, "mycielski exit")
    code, out, err = run("solve", stdin=out)
    check("n = 5" in out and "chi_N = 5" in out, "mycielski of K2: " + out)

    # threshold scripts: two dominating steps, chi_N = 3
    code, out, err = run("generate", "threshold", "--script", "idd")
    check(code == 0, "threshold exit")
    code, out, err = run("solve", stdin=out)
    check("chi_N = 3" in out, "threshold idd: " + out)

    # deterministic sampling
    a = run("generate", "er", "-n", "30", "--p", "0.4", "--seed", "7")
    b = run("generate", "er", "-n", "30", "--p", "0.4", "--seed", "7")
    check(a[1] == b[1] and a[1].strip(), "er determinism")

    # enumerate: 21 connected graphs on 5 vertices
    code, out, err = run("enumerate", "--n", "5", "--connected")
    check(code == 0 and len(out.strip().splitlines()) == 21, "enumerate connected n=5: " + err)
    check("21 graphs" in err, "enumerate count on stderr: " + err)

    # the pair survey knows (2,4) is realizable on 4 vertices
    code, out, err = run("enumerate", "--min-n", "2", "--max-n", "4", "--experiment", "triples")
    check(code == 0, "triples exit")
    rows = [r.split(",") for r in out.strip().splitlines()[1:]]
    hit = [r for r in rows if r[:4] == ["4", "2", "4", "1"]]
    check(len(hit) == 1, "triples (4,2,4) row: " + out)
    if hit:
        code, out, err = run("solve", stdin=hit[0][4] + "\n")
        check("chi_N = 4" in out, "triples witness solves to 4: " + out)

    # complement slack minima through n=5
    code, out, err = run("enumerate", "--max-n", "5", "--experiment", "complement")
    rows = [r.split(",") for r in out.strip().splitlines()[1:]]
    check([r[:2] for r in rows] == [["1", "1"], ["2", "1"], ["3", "1"], ["4", "0"], ["5", "0"]],
          "complement minima: " + out)

    # json format for enumerate
    code, out, err = run("enumerate", "--n", "4", "--experiment", "list", "--format", "json")
    check(code == 0 and len(json.loads(out)) == 11, "enumerate json list")

    # poset dot export
    dot_path = tmp / "poset.dot"
    code, out, err = run("solve", str(g_path), "--poset-dot", str(dot_path))
    dot = dot_path.read_text()
    check(code == 0 and dot.startswith("digraph poset {") and "->" in dot, "poset dot: " + dot)
    check("{e,f}" in dot, "poset dot labels: " + dot)

    # bad usage fails loudly
    code, out, err = run("frobnicate")
    check(code != 0, "unknown subcommand rejected")
    code, out, err = run("generate", "product", "--kind", "sideways",
                         "--left", str(p4), "--right", str(k2))
    check(code != 0, "bad product kind rejected")

    if failures:
        print(len(failures), "cli checks failed")
        return 1
    print("cli checks passed")
    return 0


if __name__ == "__main__":
    sys.exit(main())

"""Runs the CLI on small problems and checks exit codes and output shape."""
import json
import os
import subprocess
import sys
import tempfile

cli, root = sys.argv[1], sys.argv[2]
env = dict(os.environ, RIDGEGAP_LOG="quiet")
failures = []


def run(*args):
    return subprocess.run([cli, *args], capture_output=True, text=True, env=env)


def expect(name, proc, code):
    if proc.returncode != code:
        failures.append(f"{name}: exit {proc.returncode}, wanted {code}\n{proc.stderr}")
    return proc


box = ["--box", "0", "1", "0", "1"]
r = expect("worked example", run("error", "--f", "x1*x2", *box, "--grid", "9"), 0)
report = json.loads(r.stdout)
if abs(report["bestRidge"]["error"] - 0.25) > 1e-9:
    failures.append("worked example: wrong error")
again = run("error", "--f", "x1*x2", *box, "--grid", "9")
if again.stdout != r.stdout:
    failures.append("worked example: reports differ between runs")

expect("ridge sum", run("error", "--f", "x1+x2", *box), 0)
r = expect("parallel directions", run("error", "--f", "x1*x2", "--a", "1,1", "--b", "2,2", *box), 1)
if "SingularDirections" not in r.stderr or "lowerBound" not in r.stdout:
    failures.append("parallel directions: missing error kind or partial report")
r = expect("syntax error", run("error", "--f", "sin(x1*(", *box), 1)
if json.loads(r.stderr)["error"]["offset"] != 8:
    failures.append("syntax error: wrong offset")
expect("domain error", run("error", "--f", "log(x1-2)", *box), 2)
expect("no domain", run("error", "--f", "x1"), 1)
expect("unknown flag", run("error", "--bogus"), 1)

expect("fit sigmoid", run("fit-network", "--f", "x1*x2", *box, "--activation", "sigmoid"), 0)
r = expect("fit polynomial", run("fit-network", "--f", "x1*x2", *box, "--activation", "polynomial"), 1)
if "mean periodic" not in r.stderr:
    failures.append("fit polynomial: no explanation")
r = run("fit-network", "--f", "x1*x2", *box, "--activation", "relu")
r_warn = subprocess.run([cli, "fit-network", "--f", "x1*x2", *box, "--activation", "relu"],
                        capture_output=True, text=True, env=dict(os.environ, RIDGEGAP_LOG="info"))
if r_warn.returncode != 0 or "warning" not in r_warn.stderr:
    failures.append("fit relu: expected a warning and exit 0")
expect("fit unreachable",
       run("fit-network", "--f", "sin(9*x1*x2)", *box, "--grid", "17", "--epsilon", "1e-12"), 4)

r = expect("enumerate 2x2", run("enumerate-paths", "--f", "x1*x2", *box, "--grid", "2"), 0)
if len(r.stdout.splitlines()) != 1:
    failures.append("enumerate 2x2: expected one line")
r = expect("enumerate 3x3", run("enumerate-paths", "--f", "x1*x2", *box, "--grid", "3", "--max-len", "4"), 0)
if len(r.stdout.splitlines()) != 9:
    failures.append("enumerate 3x3: expected nine lines")
r = expect("enumerate blowup",
           run("enumerate-paths", "--f", "x1*x2", *box, "--grid", "12", "--max-len", "10"), 5)
if '"partial":true' not in r.stdout.splitlines()[-1]:
    failures.append("enumerate blowup: missing partial trailer")

with tempfile.TemporaryDirectory() as tmp:
    pts = os.path.join(tmp, "pts.json")
    with open(pts, "w") as fh:
        json.dump({"points": [[0, 0], [1, 1], [2, 2]], "values": [1, 2, 3]}, fh)
    r = expect("enumerate unique levels", run("enumerate-paths", "--points", pts), 0)
    if r.stdout:
        failures.append("enumerate unique levels: expected no output")
    out = os.path.join(tmp, "report.json")
    csv = os.path.join(tmp, "curve.csv")
    expect("files", run("error", "--f", "x1*x2", *box, "--grid", "9", "--output", out,
                        "--csv", csv, "--jobs", "3"), 0)
    with open(csv) as fh:
        rows = fh.read().splitlines()
    if rows[0] != "m,lowerBound,bestRidge" or [r.split(",")[0] for r in rows[1:]] != ["2", "3", "5", "9"]:
        failures.append(f"csv: unexpected rows {rows}")
    with open(out) as fh:
        json.load(fh)
    r = expect("problem file", run("error", "--problem", os.path.join(root, "tests/data/rotated.json")), 0)
    if abs(json.loads(r.stdout)["closedForm"]["classMargin"] - 4.0) > 1e-9:
        failures.append("problem file: wrong class margin")
    r = expect("timings", run("error", "--f", "x1*x2", *box, "--timings"), 0)
    if "timings" not in json.loads(r.stdout):
        failures.append("timings: missing")

expect("verify", run("verify", "--seed", "42", "--trials", "100"), 0)
expect("verify zero trials", run("verify", "--trials", "0"), 1)
r = expect("verify fault", run("verify", "--seed", "42", "--trials", "5",
                               "--inject-fault", "flipped-b-edge-sign"), 3)
if json.loads(r.stdout)["counterexample"]["suite"] != "duality":
    failures.append("verify fault: counterexample not from the duality suite")

for f in failures:
    print("FAIL", f)
print(f"{len(failures)} failures")
sys.exit(1 if failures else 0)

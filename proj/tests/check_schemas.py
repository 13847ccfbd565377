"""Validates sample problems and the reports the CLI emits for them."""
import json
import pathlib
import subprocess
import sys

import jsonschema

cli, root = sys.argv[1], pathlib.Path(sys.argv[2])
problem_schema = json.loads((root / "docs/problem.schema.json").read_text())
report_schema = json.loads((root / "docs/report.schema.json").read_text())

failures = 0
for problem in sorted((root / "tests/data").glob("*.json")):
    jsonschema.validate(json.loads(problem.read_text()), problem_schema)
    for cmd in ("error", "fit-network"):
        run = subprocess.run([cli, cmd, "--problem", str(problem)],
                             capture_output=True, text=True,
                             env={"RIDGEGAP_LOG": "quiet"})
        if run.returncode not in (0, 4):
            print(f"{problem.name} {cmd}: exit {run.returncode}: {run.stderr}")
            failures += 1
            continue
        jsonschema.validate(json.loads(run.stdout), report_schema)
        print(f"{problem.name} {cmd}: ok")

bad = {"a": [1, 0], "b": [0, 1], "domain": {"box": [0, 1, 0, 1], "points": []}, "f": "x1"}
try:
    jsonschema.validate(bad, problem_schema)
    print("schema accepted a problem with two domains")
    failures += 1
except jsonschema.ValidationError:
    pass
sys.exit(1 if failures else 0)

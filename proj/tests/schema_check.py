"""Validates CLI JSON output against the shipped envelope schema and checks TSV headers."""
import json
import os
import subprocess
import sys
import tempfile

import jsonschema

exe, schema_path = sys.argv[1], sys.argv[2]
with open(schema_path) as fh:
    schema = json.load(fh)
jsonschema.Draft202012Validator.check_schema(schema)
validator = jsonschema.Draft202012Validator(schema)

tmp = tempfile.mkdtemp()
gm = os.path.join(tmp, "eq.gm")
witness = os.path.join(tmp, "w.gm")

runs = [
    ["construct", "elliptic_quadric", "--q", "4", "--out", gm],
    ["construct", "denniston", "--q", "8", "--degree", "4"],
    ["params", "--in", gm],
    ["bounds", "--k", "4", "--q", "8", "--s", "2"],
    ["bounds", "--k", "4", "--q", "4", "--s", "2", "--t", "1", "--d", "12"],
    ["bounds", "--table", "3", "--range", "k=3..4", "q=2..4", "s=0..1"],
    ["bounds", "--table", "4", "--range", "k=3", "q=4", "s=1..2"],
    ["integrality", "--n", "29", "--k", "4", "--q", "8", "--s", "2"],
    ["integrality", "--n", "16", "--k", "4", "--q", "4", "--s", "2"],
    ["kappa", "--q", "8", "--s", "2"],
    ["kappa", "--q", "2", "--s", "0"],
    ["search", "--k", "3", "--q", "4", "--s", "0", "--out", witness],
    ["verify", "--suite", "paper-tables", "--only", "1"],
    ["verify", "--suite", "audit", "--in", gm],
]

failures = 0
for args in runs:
    res = subprocess.run([exe, *args], capture_output=True, text=True)
    if res.returncode != 0:
        print("exit", res.returncode, args, res.stderr)
        failures += 1
        continue
    doc = json.loads(res.stdout)
    errors = list(validator.iter_errors(doc))
    for e in errors:
        print("schema:", args, e.message)
    failures += bool(errors)
    tsv = subprocess.run([exe, *args, "--format", "tsv"], capture_output=True, text=True)
    lines = tsv.stdout.splitlines()
    if tsv.returncode != 0 or not lines or "\t" not in lines[0] and len(lines) > 1:
        print("tsv:", args, tsv.returncode)
        failures += 1
        continue
    width = len(lines[0].split("\t"))
    for ln in lines[1:]:
        if len(ln.split("\t")) != width:
            print("tsv width:", args, ln)
            failures += 1
            break

print(f"{len(runs)} commands, {failures} failures")
sys.exit(1 if failures else 0)

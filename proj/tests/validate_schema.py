"""Validates CLI reports against the shipped schema with the jsonschema package."""

import json
import subprocess
import sys

import jsonschema

COMMANDS = [
    "measure --interval 0,1/3",
    "layer --n 2 --psi pow:2",
    "pairwise --m 1 --n 2 --psi pow:2",
    "quasi-scan --psi pow:2 --nmax 4",
    "series --psi pow:3 --f pow:gamma/3 --nmax 6",
    "tail --psi pow:3 --f pow:1/2 --n0 3",
    "bc-ratio --psi pow:2 --Q 2",
    "dim-estimate --tau 2 --n 3",
    "xi-build --S 4",
    "xi-verify --S 4",
    "cf --x 2/27",
    "exponent --x golden --depth 20",
    "cf-interval --quotients 1,1",
    "cf-interval --sweep 3 --x xi",
    "full-cover --nmax 3",
]


def main():
    binary, schema_path = sys.argv[1], sys.argv[2]
    with open(schema_path) as fh:
        schema = json.load(fh)
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)
    failures = 0
    for command in COMMANDS:
        run = subprocess.run([binary] + command.split(), capture_output=True, text=True)
        if run.returncode != 0:
            print(f"FAIL {command}: exit {run.returncode}: {run.stderr.strip()}")
            failures += 1
            continue
        doc = json.loads(run.stdout)
        errors = [e.message for e in validator.iter_errors(doc)]
        broken = dict(doc, schema_version="2")
        if errors or validator.is_valid(broken):
            print(f"FAIL {command}: {errors[:3]}")
            failures += 1
        else:
            print(f"ok   {command}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())

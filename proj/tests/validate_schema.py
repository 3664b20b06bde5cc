"""Checks that every JSON document the CLI emits validates against the
published schema, and that a representative sweep specification matches the
sweepSpec definition. Usage: validate_schema.py <cli-binary> <schema-file>."""

import json
import subprocess
import sys

import jsonschema

BIN = sys.argv[1]
schema = json.load(open(sys.argv[2]))
validator = jsonschema.Draft7Validator(schema)


def run(args):
    r = subprocess.run([BIN] + args, capture_output=True, text=True)
    if r.returncode not in (0, 1):
        raise SystemExit(f"{args}: exit {r.returncode}: {r.stderr}")
    return r.stdout


cases = [
    ("verify", ["verify", "--p", "3", "--seed", "9", "--format", "json"]),
    ("bounds thm-2.1", ["bounds", "--thm", "thm-2.1", "--p", "7", "--na", "10",
                        "--nb", "10", "--ns", "12", "--seed", "3",
                        "--format", "json"]),
    ("bounds thm-5.1", ["bounds", "--thm", "thm-5.1", "--p", "7", "--na", "9",
                        "--nb", "9", "--ns", "12", "--seed", "4",
                        "--format", "json"]),
    ("bounds sdz-multi", ["bounds", "--thm", "sdz-multi", "--p", "11",
                          "--na", "15", "--ns", "15", "--seed", "5",
                          "--format", "json"]),
    ("bounds --list", ["bounds", "--list", "--format", "json"]),
    ("pack prop-1.1", ["pack", "--thm", "prop-1.1", "--p", "11", "--ne", "20",
                       "--ns", "30", "--seed", "6", "--format", "json"]),
    ("pack thm-1.5", ["pack", "--thm", "thm-1.5", "--p", "7", "--ne", "12",
                      "--ns", "18", "--seed", "7", "--format", "json"]),
    ("pack --list", ["pack", "--list", "--format", "json"]),
    ("construct prop13", ["construct", "--id", "prop13", "--p", "5",
                          "--format", "json"]),
    ("construct obs2", ["construct", "--id", "obs2", "--p", "5", "--param",
                        "num_lines=2", "--format", "json"]),
    ("construct --list", ["construct", "--list", "--format", "json"]),
    ("energy energy2", ["energy", "--kind", "energy2", "--p", "7", "--ns",
                        "15", "--seed", "8", "--format", "json"]),
    ("energy eps", ["energy", "--kind", "eps", "--p", "5", "--ns", "10",
                    "--seed", "9", "--format", "json"]),
    ("energy quad-nprime", ["energy", "--kind", "quad-nprime", "--p", "5",
                            "--na", "8", "--nb", "8", "--seed", "10",
                            "--format", "json"]),
    ("incidence --fourier", ["incidence", "--p", "7", "--na", "10", "--nb",
                             "10", "--ns", "12", "--seed", "11", "--fourier",
                             "--format", "json"]),
]

failures = 0
for name, args in cases:
    doc = json.loads(run(args))
    errs = sorted(validator.iter_errors(doc), key=str)
    if errs:
        failures += 1
        print(f"FAIL {name}: {errs[0].message}")
    else:
        print(f"ok   {name}")

spec = {
    "seed": 42,
    "jobs": [{"kind": "random-sl2", "primes": [5], "trials": 1,
              "E_size": 8, "S_size": 20, "theorems": ["prop-1.1"]}],
}
sweep_schema = {"$ref": "#/definitions/sweepSpec",
                "definitions": schema["definitions"]}
errs = sorted(jsonschema.Draft7Validator(sweep_schema).iter_errors(spec),
              key=str)
if errs:
    failures += 1
    print(f"FAIL sweep spec: {errs[0].message}")
else:
    print("ok   sweep spec")

print("schema validation:", "FAIL" if failures else "all outputs conform")
sys.exit(1 if failures else 0)

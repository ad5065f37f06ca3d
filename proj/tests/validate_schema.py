"""Runs a spread of CLI queries with --output json and validates each against the schema."""
import json
import subprocess
import sys

import jsonschema

QUERIES = [
    ["lr", "[2,1]", "[1]", "[2]"],
    ["product", "[2,1]", "[1]"],
    ["plethysm", "ext", "ext2", "2"],
    ["plethysm", "sym", "tensor", "3"],
    ["decompose", "1,1,1,1"],
    ["tensor", "[1],[],[],[1]", "V*"],
    ["socle", "0,1,1,0"],
    ["layers", "3"],
    ["defect", "1,0,0,1", "0,1,1,0"],
    ["defect", "0,1,1,0", "1,0,0,1"],
    ["chains", "1,0,0,1", "0,1,1,0"],
    ["covers", "1,0,0,1", "--bound", "2"],
    ["ext", "[1],[],[],[1]", "[],[],[],[]", "--degree", "1"],
    ["ext", "[1],[1],[],[]", "[],[1],[],[]", "--degree", "1"],
    ["ext", "[],[],[],[]", "[1],[],[],[1]", "--degree", "1"],
    ["ext-trivial", "[1],[],[],[1]", "--degree", "1"],
    ["resolution", "2"],
    ["kernel", "2", "1"],
    ["homdim", "1,2,1,0", "--flavor", "shiftLeft"],
    ["homdim", "1,2,1,0", "--flavor", "end"],
    ["quadkernel", "0,2,2,0"],
    ["osp", "--kind", "o", "defect", "2,0", "0,2"],
    ["osp", "--kind", "sp", "layers", "2"],
    ["osp", "--kind", "o", "socle", "2"],
    ["osp", "--kind", "o", "ext-trivial", "[3,1]", "[]", "--degree", "2"],
    ["osp", "--kind", "sp", "conjugate", "[2,1]", "[1]"],
    ["--degree-cap", "30", "homdim", "3,4,4,3", "--flavor", "end"],
]


def main():
    cli, schema_path = sys.argv[1], sys.argv[2]
    with open(schema_path) as f:
        schema = json.load(f)
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)
    failures = 0
    for query in QUERIES:
        proc = subprocess.run([cli, "--output", "json", *query], capture_output=True, text=True)
        if proc.returncode != 0:
            print(f"FAIL {' '.join(query)}: exit {proc.returncode}: {proc.stderr.strip()}")
            failures += 1
            continue
        errors = list(validator.iter_errors(json.loads(proc.stdout)))
        if errors:
            print(f"FAIL {' '.join(query)}: {errors[0].message}")
            failures += 1
        else:
            print(f"ok   {' '.join(query)}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())

#!/usr/bin/env python3
"""Run `ordgraph analyze --json` on each source and validate against the schema."""
import json
import subprocess
import sys

import jsonschema


def main():
    binary, schema_path, *sources = sys.argv[1:]
    with open(schema_path) as fh:
        schema = json.load(fh)
    failed = 0
    for src in sources:
        runs = [subprocess.run([binary, "analyze", src, "--json"], capture_output=True, text=True, check=True).stdout
                for _ in range(2)]
        if runs[0] != runs[1]:
            print(f"FAIL {src}: output differs between runs")
            failed += 1
            continue
        try:
            jsonschema.validate(json.loads(runs[0]), schema)
            print(f"ok   {src}")
        except jsonschema.ValidationError as err:
            print(f"FAIL {src}: {err.message}")
            failed += 1
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())

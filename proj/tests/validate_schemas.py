"""Validate CLI JSON output against the shipped schemas."""

import json
import subprocess
import sys
from pathlib import Path

import jsonschema


def run(cli, *args):
    out = subprocess.run([cli, *args], check=True, capture_output=True, text=True).stdout
    return json.loads(out)


def main():
    cli, schema_dir = sys.argv[1], Path(sys.argv[2])
    cases = [
        ("census.schema.json", ["census", "--p", "4", "6", "--max-len", "12"]),
        ("ledger.schema.json", ["claims", "--p", "6", "--max-len", "20"]),
        ("ledger.schema.json", ["claims", "--p", "4", "--max-len", "16"]),
        ("growth.schema.json", ["growth", "--p", "4", "--max-len", "20"]),
        ("growth.schema.json", ["poly", "--r", "3"]),
    ]
    for schema_name, args in cases:
        schema = json.loads((schema_dir / schema_name).read_text())
        jsonschema.Draft202012Validator.check_schema(schema)
        jsonschema.validate(run(cli, *args), schema, cls=jsonschema.Draft202012Validator)
        print("ok", schema_name, " ".join(args))


if __name__ == "__main__":
    main()

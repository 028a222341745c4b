#!/usr/bin/env python3
# Validate braidcoh JSON reports against the shipped schema.
# usage: validate_report.py SCHEMA REPORT...   (REPORT "-" reads stdin)
import json
import sys

import jsonschema


def main():
    schema = json.load(open(sys.argv[1]))
    jsonschema.Draft202012Validator.check_schema(schema)
    v = jsonschema.Draft202012Validator(schema)
    bad = 0
    for path in sys.argv[2:]:
        doc = json.load(sys.stdin if path == "-" else open(path))
        errs = sorted(v.iter_errors(doc), key=lambda e: list(e.path))
        for e in errs:
            print(f"{path}: /{'/'.join(map(str, e.path))}: {e.message}")
        bad += bool(errs)
    sys.exit(1 if bad else 0)


if __name__ == "__main__":
    main()

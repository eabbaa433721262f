#!/usr/bin/env python3
"""Validate bundled data files against schemas/v1."""
import json
import sys
from pathlib import Path

import jsonschema
from referencing import Registry, Resource

root = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).resolve().parent.parent
schemas = {p.name.split(".")[0]: json.loads(p.read_text()) for p in (root / "schemas" / "v1").glob("*.schema.json")}

targets = [(p, "descriptor") for p in sorted((root / "data" / "descriptors").glob("*.json"))]
targets += [(p, "mhs") for p in sorted((root / "data" / "presets").glob("*.json"))]
examples = {"exponents": "exponents", "square_elliptic": "torus"}
targets += [(p, examples.get(p.stem, "monodromy")) for p in sorted((root / "data" / "examples").glob("*.json"))]

registry = Registry().with_resources((s["$id"], Resource.from_contents(s)) for s in schemas.values())

failed = 0
for path, kind in targets:
    try:
        jsonschema.Draft202012Validator(schemas[kind], registry=registry).validate(json.loads(path.read_text()))
        print(f"ok   {path.relative_to(root)} ({kind})")
    except jsonschema.ValidationError as e:
        failed += 1
        print(f"FAIL {path.relative_to(root)} ({kind}): /{'/'.join(map(str, e.absolute_path))}: {e.message}")
sys.exit(1 if failed else 0)

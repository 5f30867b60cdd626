import json
import pathlib
import sys

import jsonschema
from referencing import Registry, Resource

schema_dir = pathlib.Path(sys.argv[1])
out_dir = pathlib.Path(sys.argv[2])

schemas = {p.name: json.loads(p.read_text()) for p in schema_dir.glob("*.schema.json")}
registry = Registry().with_resources((name, Resource.from_contents(s)) for name, s in schemas.items())

targets = {
    "classification.json": "classification.schema.json",
    "transitions.json": "transitions.schema.json",
    "interesting_ics.json": "interesting_ics.schema.json",
    "profiles.json": "profiles.schema.json",
    "top.json": "top.schema.json",
    "manifest.json": "manifest.schema.json",
}

checked = 0
for path in sorted(out_dir.rglob("*.json")):
    schema = schemas[targets[path.name]]
    jsonschema.Draft202012Validator(schema, registry=registry).validate(json.loads(path.read_text()))
    checked += 1
if checked == 0:
    sys.exit("no outputs found")
print(f"{checked} files valid")

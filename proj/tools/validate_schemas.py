"""Run each CLI command once and validate its output against docs/eqmodel.schema.json."""
import json
import os
import subprocess
import sys
import tempfile

import jsonschema

cli, schema_path = sys.argv[1], sys.argv[2]
with open(schema_path) as f:
    root = json.load(f)


def check(definition, document, what):
    schema = {"$defs": root["$defs"], "$ref": "#/$defs/" + definition}
    jsonschema.validate(document, schema, cls=jsonschema.Draft202012Validator)
    print("ok", what)


def run(*args):
    out = subprocess.run([cli, *args], capture_output=True, text=True)
    if out.returncode != 0:
        sys.exit(f"{' '.join(args)} exited {out.returncode}: {out.stderr}")
    return json.loads(out.stdout)


for g in ["cyclic-2", "symmetric-3", "dihedral-8"]:
    check("subgroups", run("subgroups", "--group", g), "subgroups " + g)
    check("weyl", run("weyl", "--group", g), "weyl " + g)
    check("marks", run("marks", "--group", g), "marks " + g)
    check("idempotents", run("idempotents", "--group", g), "idempotents " + g)
    check("model", run("model", "--group", g, "--nmax", "2"), "model " + g)
check("demo_box", run("demo-box", "--group", "symmetric-3", "--nmax", "2"), "demo-box")
check("verify", run("verify", "--group", "klein-4", "--nmax", "2"), "verify")

obj = {"components": [
    {"lo": 0, "hi": 1,
     "terms": {"0": {"dim": 2, "action": [{"rows": 2, "cols": 2, "entries": [[1, 0, "1"], [0, 1, "1"]]}]},
               "1": {"dim": 2, "action": [{"rows": 2, "cols": 2, "entries": [[1, 0, "1"], [0, 1, "1"]]}]}},
     "differentials": {"1": {"rows": 2, "cols": 2, "entries": [[0, 0, "1"], [1, 1, "1"]]}}},
    {"lo": 0, "hi": 0, "terms": {"0": {"dim": 1}}}]}
check("model_object", obj, "model object input")
with tempfile.TemporaryDirectory() as d:
    path = os.path.join(d, "x.json")
    with open(path, "w") as f:
        json.dump(obj, f)
    check("hom", run("hom", "--group", "cyclic-2", "--nmax", "1", "--x", path, "--y", path), "hom")
check("group", {"degree": 3, "generators": [[1, 2, 0]]}, "group input")

"""Validate CLI output and test data against the schemas in docs/."""
import json
import pathlib
import subprocess
import sys
import tempfile

import jsonschema
from referencing import Registry, Resource

cli, docs, data = sys.argv[1], pathlib.Path(sys.argv[2]), pathlib.Path(sys.argv[3])

schemas = {p.name: json.loads(p.read_text()) for p in docs.glob("*.schema.json")}
registry = Registry().with_resources((name, Resource.from_contents(s)) for name, s in schemas.items())


def check(schema, doc, label):
    validator = jsonschema.Draft202012Validator(schemas[schema], registry=registry)
    errors = sorted(validator.iter_errors(doc), key=str)
    for e in errors:
        print(f"{label}: {e.message} at {list(e.absolute_path)}")
    return not errors


def run(*args):
    out = subprocess.run([cli, *args], check=True, capture_output=True, text=True).stdout
    return json.loads(out)


ok = True
ok &= check("tensor.schema.json", json.loads((data / "gwedgeg_n3.json").read_text()), "data tensor")
for name in ("flat_cubic_n3.json", "curved_n3.json"):
    ok &= check("chart.schema.json", json.loads((data / name).read_text()), name)
sample = run("sample", "--space", "a_plus_s", "--signature", "3,1", "--seed", "4")
ok &= check("tensor.schema.json", sample, "sample")
with tempfile.NamedTemporaryFile("w", suffix=".json", delete=False) as f:
    json.dump(sample, f)
for mode in ("w", "a"):
    ok &= check("decomposition.schema.json", run("decompose", "--mode", mode, "--input", f.name), mode)
alg = run("sample", "--space", "a", "--dim", "4")
with tempfile.NamedTemporaryFile("w", suffix=".json", delete=False) as f2:
    json.dump(alg, f2)
ok &= check("decomposition.schema.json", run("decompose", "--mode", "st", "--input", f2.name), "st")
ok &= check("dims.schema.json", run("dims", "--dim", "3"), "dims")
ok &= check("suite_report.schema.json", run("verify", "--dim", "3", "--samples", "2"), "verify")
chart = str(data / "curved_n3.json")
ok &= check("chart_curvature.schema.json", run("chart", "--input", chart, "--point", "0.1,0,0"), "curvature")
ok &= check("triple_report.schema.json", run("chart", "--input", chart, "--point", "0.1,0,0", "--report", "triple"), "triple")
pathlib.Path(f.name).unlink()
pathlib.Path(f2.name).unlink()
print("all outputs match their schemas" if ok else "schema violations found")
sys.exit(0 if ok else 1)

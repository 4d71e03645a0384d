"""Exit codes, payload schemas and the gen -> check round trip of the CLI."""

import json
import pathlib
import subprocess
import sys

import jsonschema
from referencing import Registry, Resource

CLI = sys.argv[1]
SCHEMAS = pathlib.Path(sys.argv[2])
FIXTURES = pathlib.Path(__file__).parent / "fixtures"

registry = Registry()
for path in SCHEMAS.glob("*.json"):
    registry = registry.with_resource(path.name, Resource.from_contents(json.loads(path.read_text())))

failures = []


def run(args, stdin=None):
    proc = subprocess.run([CLI, *args], input=stdin, capture_output=True, text=True)
    return proc.returncode, proc.stdout, proc.stderr


def expect(args, code, schema=None, stdin=None, check=None):
    got, out, err = run(args, stdin)
    label = " ".join(args)
    if got != code:
        failures.append(f"{label}: exit {got}, expected {code}: {err.strip()}")
        return None
    if schema is None:
        return None
    try:
        payload = json.loads(out)
        jsonschema.Draft202012Validator(
            registry.get_or_retrieve(schema).value.contents, registry=registry
        ).validate(payload)
    except (json.JSONDecodeError, jsonschema.ValidationError) as e:
        failures.append(f"{label}: bad payload: {e}")
        return None
    if check and not check(payload):
        failures.append(f"{label}: unexpected payload {out[:300]}")
    return payload


expect(["linegraph", "--g6", "Cs"], 0, "linegraph.json", check=lambda p: p["line"]["n"] == 3 and len(p["line"]["edges"]) == 3)
expect(["linegraph", "--stdin"], 0, "linegraph.json", stdin="n 4\n0 1\n1 2\n2 3\n", check=lambda p: p["line"]["graph6"] == "Bg")
expect(["linegraph", "--g6", "!!"], 2)
expect(["linegraph"], 2)

expect(["mult", "--g6", "Cr", "--lambda", "1/2"], 0, "mult.json", check=lambda p: p["multiplicity"] == 2)
expect(["mult", "--g6", "Bw", "--lambda", "2/3"], 0, "mult.json", check=lambda p: p["multiplicity"] == 2)
expect(["mult", "--g6", "Bg", "--lambda", "2/4"], 2)
expect(["mult", "--g6", "Bg", "--lambda", "half"], 2)

expect(["check", "--stdin", "--lambda", "1/2"], 0, "certificate.json",
       stdin="n 6\n0 1\n1 2\n2 3\n3 0\n0 4\n4 5\n", check=lambda p: p["case_tag"] == "AttachedCycles")
expect(["check", "--g6", "Cs", "--lambda", "1/2"], 1, "certificate.json",
       check=lambda p: p["reason"] == "LambdaForm")
expect(["check", "--g6", "Cr", "--lambda", "1/2"], 2)

for spec in json.loads((FIXTURES / "family_specs.json").read_text()):
    text = json.dumps(spec)
    gen = expect(["gen", "--spec", text], 0, "family.json")
    if gen is None:
        continue
    expect(["check", "--stdin", "--lambda", f"{spec['lambda']['a']}/{spec['lambda']['b']}"], 0, "certificate.json",
           stdin=json.dumps(gen), check=lambda p, want=spec["case"]: p["case_tag"] == want)
for case in ["PathCase", "TreeCase", "AttachedCycles", "TwoCyclesEdge", "ManyCycles"]:
    expect(["gen", "--case", case, "--seed", "3"], 0, "family.json", check=lambda p, c=case: p["spec"]["case"] == c)
expect(["gen", "--spec", '{"case": "TwoCyclesEdge", "lambda": {"a": 1, "b": 2}, "cycle_orders": [4, 6]}'], 2)
expect(["gen"], 2)

expect(["verify", "--max-n", "6"], 0, "report.json", check=lambda p: p["passed"] and p["graphs_checked"] == 138)
expect(["verify", "--max-n", "5", "--lemmas", "--samples", "20"], 0, "report.json",
       check=lambda p: "edge_reduction" in p["lemmas"])
expect(["verify", "--max-n", "7", "--mutation", "tree-congruence"], 1, "report.json",
       check=lambda p: len(p["equivalence_failures"]) > 0)
expect(["verify", "--stdin", "--oracles"], 0, "report.json", stdin="Cs\nEl_G\nGl_GGS\n",
       check=lambda p: p["graphs_checked"] == 3)
expect(["verify", "--max-n", "1"], 2)

for f in failures:
    print("FAIL", f)
print(f"{'PASS' if not failures else 'FAIL'}: cli contract")
sys.exit(1 if failures else 0)

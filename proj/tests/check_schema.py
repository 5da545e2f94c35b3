import json
import subprocess
import sys
from pathlib import Path

import jsonschema

tool, schema_path = sys.argv[1], sys.argv[2]
schema = json.loads(Path(schema_path).read_text())
validator = jsonschema.Draft202012Validator(schema)

commands = [
    ["window", "generate", "--family", "W", "--k", "2", "--n", "4"],
    ["window", "generate", "--family", "Tseu", "--k", "3", "--n", "5"],
    ["window", "compare", "--family", "Wprime", "--k", "2", "--n", "5",
     "--golden", str(Path(__file__).parent / "golden" / "window_wprime_2_5.json")],
    ["verify", "lemma31", "--k", "2", "--n", "3..6"],
    ["verify", "prop44"],
    ["verify", "resolveOC"],
    ["verify", "weyman"],
    ["verify", "cancellation", "--rcharge-unit", "auto"],
    ["verify", "cancellation", "--rcharge-unit", "1"],
    ["verify", "invariants", "--n", "1", "--max-deg", "3"],
    ["verify", "invariants", "--n", "1", "--max-deg", "3", "--without-det"],
    ["verify", "tseu-eq", "--n", "3..6"],
]
commands += [["complex", "--which", w, "--layout", l]
             for w in ["I0", "I1", "I2", "DELTA_BAR", "OC", "WEYMAN"]
             for l in ["flattened", "homological"]]

bad = 0
for args in commands:
    run = subprocess.run([tool, *args, "--format", "json"], capture_output=True, text=True)
    if run.returncode not in (0, 1):
        print("exit", run.returncode, " ".join(args), run.stderr.strip())
        bad += 1
        continue
    errors = list(validator.iter_errors(json.loads(run.stdout)))
    print(("ok  " if not errors else "BAD ") + " ".join(args))
    for e in errors[:3]:
        print("   ", e.message)
    bad += bool(errors)

for golden in sorted((Path(__file__).parent / "golden").glob("*.json")):
    errors = list(validator.iter_errors(json.loads(golden.read_text())))
    print(("ok  " if not errors else "BAD ") + golden.name)
    bad += bool(errors)

sys.exit(1 if bad else 0)

# # Containments modulo squared linear forms, then a small census

import io
import json

from monolef import ehu_containment, parse_gens
from monolef.scan import ScanConfig, run_scan

ideal = parse_gens("x^3, y^3, z^3, x*y^2, x^2*y, x*z^2, x^2*z, y^2*z, y*z^2", 3)

# xyz survives modulo I + (x^2) but not modulo I + ((x - y)^2).

print(ehu_containment(ideal, 3, [(1, 0, 0)], squared=True))
print(ehu_containment(ideal, 3, [(1, -1, 0)], squared=True))

# ## Every cubic ideal in three variables, up to symmetry

buf = io.StringIO()
summary = run_scan(ScanConfig([3], [3], exhaustive=True, checks=("theorem-suite", "conj39")), buf)
print(json.dumps(summary.to_json(), indent=2))

records = [json.loads(line) for line in buf.getvalue().splitlines()]
for rec in records:
    if rec["wlp"]["canonical"] == "fails":
        print("fails WLP:", rec["ideal"]["gens"])

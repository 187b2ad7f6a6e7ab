"""The bundled worked examples, recomputed against their published values.

The package embeds three reference systems with published state
distributions (see markofn.fixtures).  This script recomputes each row
and prints the worst absolute difference, then shows the JSON document
interface and the command-line entry points doing the same job.
"""

import json
import tempfile

from markofn import general_distribution
from markofn.cli import main
from markofn.document import document_dict
from markofn.fixtures import FIXTURES

for name, fixture in FIXTURES.items():
    worst = 0.0
    for row in fixture.rows:
        dist = general_distribution(fixture.chain(row.n), row.spec())
        values = dict(zip(("r0", "r1", "r2", "R1", "R2"), dist.as_tuple()))
        worst = max(worst, max(abs(values[q] - row.published[q]) for q in values))
    print(f"{name:<9} {len(fixture.rows):>2} row(s)  worst |computed - published| = {worst:.2e}")

print("\n(the 5e-5 on example2 is a known rounding slip in two published scalars;")
print(" the published expansion itself is reproduced to 1e-12)\n")

# The same systems as JSON documents, evaluated through the CLI.
fixture = FIXTURES["example1"]
row = fixture.rows[0]
doc = document_dict(row.n, row.k1, row.k2, fixture.chain(row.n))
with tempfile.NamedTemporaryFile("w", suffix=".json", delete=False) as handle:
    json.dump(doc, handle)
    path = handle.name

print(f"$ markofn compute {path} --format csv")
main(["compute", path, "--format", "csv"])
print(f"\n$ markofn verify {path} --samples 50000")
main(["verify", path, "--samples", "50000"])
print("\n$ markofn table example1")
main(["table", "example1"])

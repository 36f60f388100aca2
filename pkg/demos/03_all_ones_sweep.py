"""
All-ones sweep
==============

2**n - 1 is the largest n-bit integer. Run a sweep, write the results CSV and
look at how far each trajectory climbs relative to its start.
"""

import tempfile
from pathlib import Path

from collatzbits.experiments import GeneratorSpec, read_csv, run_batch, write_csv

specs = [GeneratorSpec.all_ones(n) for n in range(5, 101)]
records = run_batch(specs, jobs=0)

out = Path(tempfile.mkdtemp()) / "all_ones_5_100.csv"
write_csv(records, out)
print("wrote", out)
assert read_csv(out) == records

print(" size  expanded  ratio  x/2  3x+1")
for r in records[:8] + records[-3:]:
    print(f"{r.integer_size:5} {r.expanded_size:9} {r.expanded_size / r.integer_size:6.3f}"
          f" {r.halvings:4} {r.odd_steps:5}")

###############################################################################
# Small starts can wander far above their size: 31 reaches 9232.
worst = max(records, key=lambda r: r.expanded_size / r.integer_size)
print("largest expanded/size ratio:", worst.integer_size, "bits ->", worst.expanded_size)

###############################################################################
# Inputs with zeros: the k zero bits sit just above the lowest bit.
for k in range(1, 6):
    (r,) = run_batch([GeneratorSpec.all_ones(100, zeros=k)])
    print(f"100 bits, {k} zeros: expanded {r.expanded_size}, x/2 {r.halvings}, 3x+1 {r.odd_steps}")

"""
Verifying a 100-digit integer
=============================

The RSA-100 modulus is a 330-bit odd number. Its trajectory reaches 1 after
1566 halvings and 780 odd steps.
"""

import time

from collatzbits import bitnum as bn
from collatzbits import engine

RSA_100 = (
    "1522605027922533360535618378132637429718068114961380688657908494580122963258952897654000350692006139"
)

x = bn.from_decimal(RSA_100)
print("bit length:", bn.bit_length(x))

t0 = time.perf_counter()
stats = engine.run_to_one(x)
print(f"run_to_one took {time.perf_counter() - t0:.4f}s")
for key, value in stats.as_dict().items():
    print(f"  {key:18} {value}")

###############################################################################
# The step-by-step trace keeps only bit lengths, which is enough to see the
# excursion above the starting size.
tr = engine.trace(x)
lengths = [e.bit_length for e in tr.events]
peak_at = lengths.index(max(lengths))
print(f"peak of {max(lengths)} bits reached at step {peak_at} of {len(lengths)}")
assert tr.stats() == stats

"""
Size growth regression
======================

Fit expanded size against input size for the all-ones family. Two measures
are compared: the trajectory maximum (what ``expanded_size`` records) and the
climb peak, the largest odd term before the first double halving.
"""

import math

from collatzbits import engine
from collatzbits.experiments import gen_all_ones
from collatzbits.regress import fit_ols, predict, report_text

climb_fits = {}
for sizes in (range(5, 101), range(100, 3001, 100)):
    stats = [engine.run_to_one(gen_all_ones(n)) for n in sizes]
    full = fit_ols([(s.start_bit_length, s.max_bit_length) for s in stats])
    climb = fit_ols([(s.start_bit_length, s.climb_bit_length) for s in stats])
    climb_fits[sizes.start] = climb
    print(f"sizes {sizes.start}..{sizes.stop - 1} step {sizes.step}")
    print(report_text(full, "size", "max_bit_length"))
    print(report_text(climb, "size", "climb_bit_length"))

###############################################################################
# The slope sits at log2(3): each odd step of the climb multiplies by 3 and
# divides by 2, and the all-ones start allows one such step per bit.
print("log2(3) =", math.log2(3))
print("predicted climb peak at 96 bits:", round(predict(climb_fits[5], 96), 3))

"""
Reversed binary arithmetic
==========================

Integers are held least significant bit first, so doubling inserts a zero at
the front and halving drops the front bit.
"""

from collatzbits import bitnum as bn

x = bn.from_decimal("27")
print("27 as LSB-first text:", bn.to_lsb_text(x))

# 2x: one zero in front
print("2x  ->", bn.to_lsb_text(bn.double(x)), "=", bn.to_decimal(bn.double(x)))

# 3x + 1 is x + 2x + 1, evaluated with ripple-carry addition
y = bn.triple_plus_one(x)
print("3x+1 ->", bn.to_lsb_text(y), "=", bn.to_decimal(y))
assert y == bn.add(bn.add(x, bn.double(x)), bn.ONE)

# x/2 on an even value: drop the front bit
print("y/2 ->", bn.to_lsb_text(bn.halve(y)), "=", bn.to_decimal(bn.halve(y)))

###############################################################################
# Values are immutable and any size works; bits are packed into 64-bit words
# internally, which is invisible from the outside.
big = bn.from_lsb_text("1" * 200)
print("200 ones:", bn.bit_length(big), "bits,", len(bn.to_decimal(big)), "decimal digits")

"""Arithmetic in the signed tropical hyperfield, step by step.

An element is a pair (sign, valuation) standing for the real number
sign * e**(-valuation).  Multiplication multiplies signs and adds
valuations.  Addition is where hyperfields earn their name: the sum of two
elements of equal magnitude and opposite sign is not a single element but
the whole *balanced* interval of everything that magnitude or smaller.
"""

from fractions import Fraction

from tropreal import (
    Balanced,
    Point,
    hv_relation,
    rt_add,
    rt_mul,
    rt_neg,
    rt_sum,
    s_add,
    stv,
    t_add,
)

one = stv(1, 0)          # +1 = +e^0
minus_one = stv(-1, 0)
big = stv(1, -2)          # +e^2, large magnitude
small = stv(-1, Fraction(3, 2))  # -e^(-3/2), small magnitude

print("multiplication is exact on (sign, valuation) pairs:")
print(f"  {big} * {small} = {rt_mul(big, small)}")

print("\ndominance decides sums of distinct magnitudes:")
print(f"  {big} (+) {small} = {rt_add(Point(big), Point(small))}")

print("\nequal magnitudes with equal signs absorb:")
print(f"  {one} (+) {one} = {rt_add(Point(one), Point(one))}")

print("\nequal magnitudes with opposite signs balance:")
balanced = rt_add(Point(one), Point(minus_one))
print(f"  {one} (+) {minus_one} = {balanced}")
assert balanced == Balanced(Fraction(0))

print("\nbalanced values count as == 0 and >= 0, but never > 0:")
for rel in ("eq", "ge", "gt", "le"):
    print(f"  balanced {rel} 0 ? {hv_relation(balanced, rel)}")

print("\nn-ary sums look at all terms of minimal valuation:")
terms = [stv(1, 1), stv(-1, 2), stv(1, 3)]
print(f"  sum{terms} = {rt_sum(terms)}")
terms = [stv(1, 0), stv(-1, 0), stv(1, 0)]
print(f"  sum{terms} = {rt_sum(terms)}")

print("\nnegation flips the sign and is an involution:")
print(f"  -{small} = {rt_neg(small)}")

print("\nthe two companion hyperfields:")
print(f"  magnitudes:  e^-1 (+) e^0   = {t_add(1, 0)}   (dominance)")
print(f"  magnitudes:  e^-2 (+) e^-2  = {t_add(2, 2)}  (the whole up-set)")
print(f"  signs:       (+1) (+) (-1)  = {sorted(s_add(1, -1))}")

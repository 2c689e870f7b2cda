"""Gram lattices, discriminant groups and root enumeration.

Walks through the exact-arithmetic core: build a curve lattice from an ADE
configuration, read off its discriminant group from the Smith normal form,
evaluate the discriminant quadratic form, and enumerate roots.
"""

from fractions import Fraction

from kummerlat import (
    discriminant_group,
    gram,
    length_bound_check,
    parse_config,
    q_value,
    roots,
)

# The A3 chain: three (-2)-curves meeting in a path.
A3 = gram(parse_config("A3"))
print("A3 Gram matrix:")
for row in A3.gram:
    print("   ", list(row))
print("det =", A3.det)

disc = discriminant_group(A3)
print("discriminant group:", disc.symbol(), "invariant factors", disc.invariant_factors)
print("generator:", disc.generators[0], "with q =", disc.q_values[0])

# The dual class (1/4)(C1 + 2 C2 + 3 C3) has self-pairing -3/4, so its
# discriminant form value is 5/4 after reduction into [0, 2).
t = (Fraction(1, 4), Fraction(2, 4), Fraction(3, 4))
print("q of the quarter class:", q_value(A3, t))

# Root systems: one antipodal pair per positive root.
for text in ("A1", "A2", "D4", "E8"):
    lat = gram(parse_config(text))
    print(f"{text}: {len(roots(lat))} root pairs, det {lat.det}")

# The length bound inside the rank-22 unimodular K3 lattice: twelve
# disjoint (-2)-curves overflow it by 2, forcing divisible classes.
check = length_bound_check(gram(parse_config("12A1")), 22)
print("12A1 length check:", check)

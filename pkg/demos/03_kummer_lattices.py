"""The two quaternionic Kummer lattices built from explicit glue data.

F is the lattice spanned by the exceptional curves of the quotient; the
primitive saturation K is generated over F by divisible classes.  For the
A1+6A3 configuration the glue consists of two 4-divisible classes written
in the base t_r = (1/4)(C_r^1 + 2 C_r^2 + 3 C_r^3); for 4A2+2A3+A5 it is a
single 3-divisible class whose orientations are pinned by integrality.
"""

from kummerlat import build_K_Q8hat, build_K_T24hat

r = build_K_Q8hat()
print("A1+6A3 saturation:")
print("  disc(F) =", r.disc_F.symbol(), "order", r.disc_F.order)
print("  [K : F] =", r.K.index)
print("  disc(K) =", r.disc_K.symbol(), r.disc_K.invariant_factors)
print("  root pairs: F", r.root_pairs_F, "/ K", r.root_pairs_K,
      "equal:", r.roots_equal)
for line in r.glue_info:
    print("  ", line)
print("  the three order-2 classes double to even sets:")
for s in r.even_sets:
    print("    ", " ".join(s))
for note in r.notes:
    print("  note:", note)

print()
rt = build_K_T24hat()
print("4A2+2A3+A5 saturation:")
print("  disc(F) =", rt.disc_F.symbol(), "order", rt.disc_F.order,
      "length", rt.disc_F.length)
print("  [K : F] =", rt.K.index)
print("  disc(K) =", rt.disc_K.symbol(), rt.disc_K.invariant_factors,
      "length", rt.disc_K.length)
print("  root pairs: F", rt.root_pairs_F, "/ K", rt.root_pairs_K,
      "equal:", rt.roots_equal)
print(" ", rt.glue_info[0])
for line in rt.glue_info[1:]:
    print("   ", line)

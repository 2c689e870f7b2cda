"""The orbifold deficiency m(C) and the exhaustive configuration census.

A configuration of ADE curves on a K3 can be contracted to an orbifold;
the second orbifold Chern number vanishes exactly when m(C) = 24, and the
negative-definite part of the Neron-Severi group bounds the rank by 19.
The search below finds every solution.
"""

from fractions import Fraction

from kummerlat import enriques_census, enumerate_configs, m_value, parse_config

print("per-component deficiencies:")
for text in ("A1", "A2", "A3", "D4", "E8"):
    print(f"  m({text}) = {m_value(parse_config(text))}")

census = enumerate_configs(24, 19)
print(f"\nconfigurations with m = 24 and rank <= 19: {len(census)}")
for config in census:
    print(f"  {config.render():>18}  rank {config.rank}")

print("\nminimal case:", [c.render() for c in enumerate_configs(Fraction(3, 2), 19)])

# Enriques surfaces have c_2 = 12, so the analogous equality needs
# m(C) = 12 with rank(C) <= 9 (the K3 double cover carries 2C).
print("\nEnriques candidates (doubling-valid):",
      [c.render() for c in enriques_census()])
for c in enriques_census():
    print(f"  m(2*({c.render()})) = {m_value(2 * c)}")

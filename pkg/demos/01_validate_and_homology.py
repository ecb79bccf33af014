"""Validate a structure-constant table, then read off homology dimensions.

The whole pipeline is exact: structure constants are rationals, every
rank is computed by fraction-free elimination, no floats anywhere.
"""

from leibcx import catalog
from leibcx.complexes import homology

# A valid table: L2 has [e1, e1] = e2 and every other product zero.
L2 = catalog.get("L2")
print("L2  brackets:", dict(L2.items()))
print("L2  satisfies the left Leibniz identity:", L2.validate().passed)

# An invalid one: [e1, e1] = e1 breaks the identity immediately.
B1 = catalog.get("B1")
report = B1.validate()
print("\nB1  brackets:", dict(B1.items()))
print("B1  satisfies the left Leibniz identity:", report.passed)
for (i, j, k), lhs, rhs in report.failures:
    print(f"    witness ({i},{j},{k}): "
          f"[e{i},[e{j},e{k}]] = {lhs} but the two-term side = {rhs}")

# Homology of the bracket-word complex, shifted so HA_0 counts the
# maximal Lie quotient.  HA_n = dim F^(n+1) - rank d_(n+1) - rank d_(n+2).
print("\nshifted homology HA_n (complex truncated at degree 5):")
header = "algebra    dims F^1..F^5           HA_0..HA_3"
print(header)
print("-" * len(header))
for name in ("abelian2", "L2", "N3", "sl2", "heis3", "doubleL2"):
    alg = catalog.get(name)
    h = homology(alg, max_degree=5)
    dims = [h["dims"][n] for n in range(1, 6)]
    ha = [h["HA"][n] for n in range(0, 4)]
    print(f"{name:<10} {str(dims):<23} {ha}")

# The same machinery runs on the plain tensor-word complex when asked.
h = homology(catalog.get("heis3"), max_degree=5, loday=True)
print("\nheis3 tensor-word homology HL_0..HL_3:",
      [h["HL"][n] for n in range(0, 4)])
print("heis3 shifted homology     HA_0..HA_3:",
      [h["HA"][n] for n in range(0, 4)])

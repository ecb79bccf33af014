"""The coadjoint double, its pairing, and bracket recovery by contraction.

Any valid table on g extends to g + g* with the dual space carrying the
two one-sided coadjoint actions.  The canonical pairing is anti-invariant
for the extended bracket, and packing the bracket into one dual-valued
tensor mu lets you read any product back off by contracting twice.
"""

from fractions import Fraction

from leibcx import catalog
from leibcx.algebras import check_anti_invariance, double
from leibcx.cochains import classify_extension, from_implicit
from leibcx.duality import (contract, pairing_preimage, recovery_report,
                            structure_tensors)

L2 = catalog.get("L2")
dbl, omega = double(L2)

names = ["e1", "e2", "e^1", "e^2"]
print("double of L2 (basis e1, e2, e^1, e^2):")
for (i, j), entry in sorted(dbl.items()):
    pretty = " + ".join(f"{c}*{names[k - 1]}" for k, c in sorted(entry.items()))
    print(f"  [{names[i - 1]}, {names[j - 1]}] = {pretty}")
print("anti-invariance of the canonical pairing:",
      check_anti_invariance(dbl, omega)["passed"])

# The packed structure tensor: a sum of dual bracket words.
cartan, mu, theta = structure_tensors(dbl, omega, L2.dim)
print("\nmu =", dict(mu.terms))

# Contract twice against dual-basis functionals: the result is the
# bracket of the pairing preimages.  Here f_3 and f_2 pull back to
# u_3 = e1 and u_2 = -e^2, and i_{f_2} i_{f_3} mu = [u_3, u_2].
f3, f2 = {3: Fraction(1)}, {2: Fraction(1)}
u3, u2 = pairing_preimage(3, 2), pairing_preimage(2, 2)
got = contract(f2, contract(f3, mu)).as_vector()
want = dbl.bracket_vectors(u3, u2)
print(f"i_f2 i_f3 mu = {got}, direct bracket [u3, u2] = {want}")

# The same check over every functional pair, for every catalog double:
for name in catalog.VALID_NAMES:
    base = catalog.get(name)
    d, om = double(base)
    rep = recovery_report(d, om, base.dim)
    print(f"recovery on the double of {name:<9} "
          f"({2 * base.dim}-dim): {rep['passed']}")

# Twisting: a closed anti-cyclic 3-cochain bends the double and stays
# Leibniz; a non-closed one breaks the identity.
print()
for vec in ([1, 0], [0, 1]):
    h = from_implicit([Fraction(v) for v in vec], 2, 2)
    cls = classify_extension(L2, h)
    twisted, om = double(L2, cocycle=h)
    print(f"twist {vec}: closed {cls['closed']}, twisted double is "
          f"Leibniz: {twisted.validate().passed}")

"""The deformation families and their identifications.

Three deformations of the classical laws live here: the one-parameter
family (twisted ghost target), the twisted-ghost family with its h and r
coefficient polynomials, and the integer-q family.  The integer family is
isomorphic to the classical one exactly when the prime avoids q, by an
explicit closed formula on {1, p}; the twisted-ghost family at any base
change g identifies with the one-parameter family at twist 1 - g, and
with its sign twin at g - 1 through the unit -1.
"""

from qwitt import Family, TruncationSet, Z
from qwitt import witt
from qwitt.qdeform import (
    h_poly,
    lenart_frobenius_defect,
    lenart_iso,
    qbar_to_qdef_iso,
    r_poly,
)
from qwitt.rings import ZP_Q, zp_to_str

print("coefficient polynomials of the twisted-ghost family:")
for p in (2, 3, 5):
    print(f"  p={p}:  h = {zp_to_str(h_poly(p)):<18} r = {zp_to_str(r_poly(p))}")

print("\ninteger family at q=3 on {1,2}: explicit isomorphism with the")
print("classical vectors via (a1, a2) -> (a1, a2 + ((q-1)/2)... ):")
S2 = TruncationSet.make([2])
a = witt.make(Family.lenart(3), S2, Z, [2, 5])
b = witt.make(Family.lenart(3), S2, Z, [1, -1])
fa, fb = lenart_iso(2, 3, a), lenart_iso(2, 3, b)
print("  alpha(a)         =", fa)
print("  alpha(a*b)       =", lenart_iso(2, 3, witt.mul(a, b)))
print("  alpha(a)*alpha(b)=", witt.mul(fa, fb))

print("\nwhen p divides q the Frobenius congruence breaks; a witness:")
w = lenart_frobenius_defect(2, 2)
print("  witness:", w, " F_2 =", witt.frobenius(w, 2).coords[0],
      " vs pi(w)^2 =", w.coords[0] ** 2, " (differ mod 2)")

print("\ncertified identification of the twisted-ghost family at g = q")
print("with the one-parameter family at twist 1 - q:")
ident = qbar_to_qdef_iso(ZP_Q, S2)
for n in S2:
    print(f"  alpha_{n} = {ident.alpha[n]}")
print("  all", len(ident.report.checks), "polynomial checks passed:",
      ident.report.passed)

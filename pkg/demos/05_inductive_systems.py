"""Witt vectors of inductive systems of rings.

Coordinates may live in different rings connected by transition maps; the
ghost map pushes everything upward before summing.  With Frobenius lifts
the image of the ghost map is cut out by explicit congruences, the
recursive inverse decides membership constructively, and every element
admits a unique Frobenius-compatible lift into the nested system.
"""

from qwitt import TruncationSet, Z, ZQ
from qwitt import indwitt as iw
from qwitt.errors import NotInImage

S = TruncationSet.make([4])
print(f"index set {{{S}}}, constant system over the integers, identity lifts")
sys = iw.constant_system(Z, S, identity_lift=True)

v = iw.make(sys, [1, 2, 3])
print("vector:", v, " ghost:", iw.ind_ghost(v))

print("\nimage characterization: (x2 - x1) mod 2 and (x4 - x2) mod 4")
for xs in ([3, 5, 9], [3, 5, 8], [1, 3, 4]):
    verdict = iw.dwork_test(sys, xs)
    try:
        back = iw.dwork_invert(sys, xs).coords
    except NotInImage:
        back = "-"
    print(f"  {xs}: in image = {verdict}, coordinates = {back}")

print("\nuniversal lift: the unique Frobenius-compatible section of the")
print("first-coordinate projection")
lam = iw.dwork_lift(sys, 1, 2)
print("  lift of 2:", lam.coords, " first coordinate:", iw.res(lam))

print("\nthe polynomial system with lifts f(q) -> f(q^p):")
qp = iw.qpow_system(TruncationSet.make([4]))
f = (1, 2)  # 1 + 2q
lifted = iw.dwork_lift(qp, 1, f)
print("  ghost of the lift of 1+2q:",
      [ZQ.to_str(x) for x in iw.ind_ghost(lifted)])

print("\nthe zero-transition system is a product of integer-twisted rings:")
triv = iw.trivial_system(Z, S)
a = iw.make(triv, [1, 2, 3])
b = iw.make(triv, [2, -1, 5])
print("  a*b =", iw.ind_mul(a, b).coords, " (n * a_n * b_n per index)")
print("  F_2(a) =", iw.ind_frobenius(a, 2).coords, " (n * a_{2n})")

print("\nmixed chain (integers at the bottom, polynomials above):")
ch = iw.chain_system(TruncationSet.make([2]))
w = iw.make(ch, [3, ZQ.from_str("q")])
print("  ghost:", [ch.ring(n).to_str(x) for n, x in zip(ch.tset, iw.ind_ghost(w))])

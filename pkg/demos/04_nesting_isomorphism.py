"""Unnesting Witt vectors over a coprime product of index sets.

For coprime divisor-stable sets T1 and T2 there is a natural ring
isomorphism between W over the product set and W over T1 with
coefficients in W over T2.  It drops out of one universal construction:
the system S -> W over S*T2 has Frobenius lifts and Verschiebung, its
one-point ring is the nested coefficient ring, and the canonical map into
Witt vectors of that ring is forced by its ghost coordinates.
"""

import random

from qwitt import Family, TruncationSet, Z, ZQ, TwistedRing
from qwitt import witt
from qwitt.systems import auer

T1, T2 = TruncationSet.make([2]), TruncationSet.make([3])
BIG = T1.product(T2)
CL = Family.classical()
print(f"T1 = {{{T1}}}, T2 = {{{T2}}}, product = {{{BIG}}}")

iso = auer(T1, T2, Z)
v = witt.make(CL, BIG, Z, [1, 2, 3, 4])
nested = iso.forward(v)
print("\nflat vector    :", v)
print("unnested vector:", nested)
print("round trip     :", witt.eq(iso.backward(nested), v))

print("\nit is a ring map (spot check):")
rng = random.Random(1)
a = witt.random_vector(CL, BIG, Z, rng)
b = witt.random_vector(CL, BIG, Z, rng)
print("  forward(a*b) == forward(a)*forward(b):",
      witt.eq(iso.forward(witt.mul(a, b)),
              witt.mul(iso.forward(a), iso.forward(b))))

print("\nmultiplicative lifts nest: omega(c) -> omega(omega(c))")
for c in (2, 3, 5):
    om = witt.teichmuller(CL, BIG, Z, c)
    inner = witt.teichmuller(CL, T2, Z, c)
    outer = witt.teichmuller(CL, T1, iso.nested_ring, inner.coords)
    print(f"  c={c}:", witt.eq(iso.forward(om), outer))

print("\nthe same construction over the twisted polynomial ring")
print("(coefficients multiply through an extra factor q):")
tw = TwistedRing(ZQ, ZQ.generator())
iso_q = auer(T1, T2, tw)
vq = witt.make(CL, BIG, tw, [(1,), (0, 1), (2,), (1, 1)])
print("  round trip:", witt.eq(iso_q.backward(iso_q.forward(vq)), vq))

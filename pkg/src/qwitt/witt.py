"""Witt vector values and arithmetic over arbitrary coefficient rings.

A :class:`WittVector` is a family tag, a truncation set, a coefficient
ring, an optional binding for the deformation parameter q, and one
coordinate per set member.  All operations evaluate the universal
structure polynomials exactly; Frobenius uses the derived polynomials
(so it works over rings with torsion), Verschiebung is the certified
coordinate shift, and the ghost map and its inverse provide the oracle
route over torsion-free rings.

Rings of Witt vectors can themselves serve as coefficient rings through
:class:`WittCoeffRing`; that is what the nesting isomorphism consumes.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from threading import Lock

from . import universal
from .errors import (
    BudgetExceeded,
    CrossRingError,
    NotInGhostImage,
    UnsupportedRingOperation,
)
from .mpoly import MPoly, xvar
from .rings import Ring, ZModRing, ZRing, ZqRing, ZP_Q
from .truncset import TruncationSet, divisors
from .universal import Family


@dataclass(frozen=True)
class WittVector:
    family: Family
    tset: TruncationSet
    ring: Ring
    qval: object
    coords: tuple

    def coord(self, n: int):
        return self.coords[self.tset.index(n)]

    def __repr__(self):
        body = ", ".join(self.ring.to_str(c) for c in self.coords)
        return f"W[{self.family.label()};{self.tset}]({body})"


def resolve_q(family: Family, ring: Ring, q=None):
    """Normalize the q binding for a (family, ring) pair.

    Families without a free parameter take no binding.  Over the
    polynomial ring the binding defaults to the generator; elsewhere an
    explicit ring element (or an integer, in a unital ring) is required.
    """
    if not family.uses_q():
        if q is not None:
            raise CrossRingError(f"family {family.label()} takes no q binding")
        return None
    if q is None:
        if isinstance(ring, ZqRing):
            return ZP_Q
        raise CrossRingError(
            f"family {family.label()} over {ring.descriptor} needs an explicit q"
        )
    if isinstance(q, int):
        return ring.from_int(q)
    return ring.check(q)


def make(family: Family, tset: TruncationSet, ring: Ring, coords, q=None) -> WittVector:
    coords = tuple(ring.check(c) for c in coords)
    if len(coords) != len(tset):
        raise CrossRingError(
            f"expected {len(tset)} coordinates for {tset}, got {len(coords)}"
        )
    return WittVector(family, tset, ring, resolve_q(family, ring, q), coords)


def zero(family: Family, tset: TruncationSet, ring: Ring, q=None) -> WittVector:
    return make(family, tset, ring, [ring.zero()] * len(tset), q)


def teichmuller(family: Family, tset: TruncationSet, ring: Ring, c, q=None) -> WittVector:
    """The multiplicative lift (c, 0, ..., 0)."""
    coords = [ring.check(c)] + [ring.zero()] * (len(tset) - 1)
    return make(family, tset, ring, coords, q)


def random_vector(family, tset, ring, rng, q=None) -> WittVector:
    return make(family, tset, ring, [ring.random(rng) for _ in tset], q)


# ----------------------------------------------------------------------
# Compiled evaluation.  A _Law binds one polynomial set to one (ring, q)
# context; each polynomial becomes a closure over a prepared monomial
# list.  Integer rings get a branch without per-element ring calls.


def _prepare(poly: MPoly, tset: TruncationSet):
    mons = []
    for key, c in poly.terms():
        qexp = 0
        factors = []
        for (kind, idx), e in key:
            if kind == "q":
                qexp = e
            else:
                factors.append((0 if kind == "x" else 1, tset.index(idx), e))
        mons.append((c, qexp, tuple(factors)))
    return mons


def _compile(poly: MPoly, tset: TruncationSet, ring: Ring, qval):
    mons = _prepare(poly, tset)
    if isinstance(ring, (ZRing, ZModRing)) and (qval is None or isinstance(qval, int)):
        modulus = ring.m if isinstance(ring, ZModRing) else None
        folded = []
        for c, qexp, factors in mons:
            if qexp:
                c *= (qval if modulus is None else qval % modulus) ** qexp
            if modulus is not None:
                c %= modulus
                if c == 0:
                    continue
            folded.append((c, factors))

        def run_int(xs, ys=None):
            acc = 0
            for c, factors in folded:
                t = c
                for bank, pos, e in factors:
                    v = xs[pos] if bank == 0 else ys[pos]
                    t *= v**e
                acc += t
            return acc if modulus is None else acc % modulus

        return run_int

    if isinstance(ring, ZqRing) and isinstance(qval, tuple):
        from .rings import zp_mul, zp_pow, zp_scale, zp_trim

        folded = []
        for c, qexp, factors in mons:
            czp = zp_scale(c, zp_pow(qval, qexp)) if qexp else (c,)
            if czp:
                folded.append((czp, factors))

        def run_zq(xs, ys=None):
            acc: list[int] = []
            cache = {}
            for czp, factors in folded:
                val = czp
                for fkey in factors:
                    v = cache.get(fkey)
                    if v is None:
                        bank, pos, e = fkey
                        base = xs[pos] if bank == 0 else ys[pos]
                        v = zp_pow(base, e)
                        cache[fkey] = v
                    val = zp_mul(val, v)
                if len(val) > len(acc):
                    acc.extend([0] * (len(val) - len(acc)))
                for i, coeff in enumerate(val):
                    acc[i] += coeff
            return zp_trim(acc)

        return run_zq

    max_q = max((qexp for _, qexp, _ in mons), default=0)
    qpows = [None] * (max_q + 1)
    if max_q:
        qpows[1] = qval
        for e in range(2, max_q + 1):
            qpows[e] = ring.mul(qpows[e - 1], qval)
    ring_zero = ring.zero()

    def run(xs, ys=None):
        acc = ring_zero
        cache = {}
        for c, qexp, factors in mons:
            val = None
            for fkey in factors:
                v = cache.get(fkey)
                if v is None:
                    bank, pos, e = fkey
                    base = xs[pos] if bank == 0 else ys[pos]
                    v = ring.pow(base, e)
                    cache[fkey] = v
                val = v if val is None else ring.mul(val, v)
            if qexp:
                qv = qpows[qexp]
                val = qv if val is None else ring.mul(val, qv)
            if val is None:
                val = ring.one()  # constant term; unital rings only
            acc = ring.add(acc, ring.int_scale(c, val))
        return acc

    return run


class _Law:
    """All structure polynomials of one context, compiled."""

    def __init__(self, family: Family, tset: TruncationSet, ring: Ring, qval):
        ps = universal.derive(family, tset)
        self.family, self.tset, self.ring, self.qval = family, tset, ring, qval
        self.sigma = [_compile(ps.sigma[n], tset, ring, qval) for n in tset]
        self.pi = [_compile(ps.pi[n], tset, ring, qval) for n in tset]
        self.neg = [_compile(ps.neg[n], tset, ring, qval) for n in tset]
        self.frob = {
            m: [_compile(bank[v], tset, ring, qval) for v in tset.quotient(m)]
            for m, bank in ps.frob.items()
        }
        self.ghost = [
            _compile(universal.ghost_poly(family, tset, n, "x"), tset, ring, qval)
            for n in tset
        ]
        # per index n: the off-diagonal ghost terms w(n,d) * x_d^(n/d),
        # used by the recursive ghost inversion
        self.ghost_tail = {}
        for n in tset:
            terms = []
            for d in divisors(n):
                if d == n:
                    continue
                poly = family.ghost_weight(n, d) * MPoly.var(xvar(d), n // d)
                terms.append(_compile(poly, tset, ring, qval))
            self.ghost_tail[n] = terms


_LAW_CACHE: dict = {}
_LAW_LOCK = Lock()


def _qkey(qval):
    return qval if isinstance(qval, (int, tuple, type(None))) else repr(qval)


def _law(family: Family, tset: TruncationSet, ring: Ring, qval) -> _Law:
    key = (family.key(), tset.elements, ring.descriptor, _qkey(qval))
    with _LAW_LOCK:
        law = _LAW_CACHE.get(key)
    if law is None:
        law = _Law(family, tset, ring, qval)
        with _LAW_LOCK:
            law = _LAW_CACHE.setdefault(key, law)
    return law


def _match(a: WittVector, b: WittVector):
    if (
        a.family != b.family
        or a.tset != b.tset
        or a.ring != b.ring
        or _qkey(a.qval) != _qkey(b.qval)
    ):
        raise CrossRingError(f"mismatched Witt vectors: {a!r} vs {b!r}")


# ----------------------------------------------------------------------
# Arithmetic.


def add(a: WittVector, b: WittVector) -> WittVector:
    _match(a, b)
    law = _law(a.family, a.tset, a.ring, a.qval)
    coords = tuple(f(a.coords, b.coords) for f in law.sigma)
    return WittVector(a.family, a.tset, a.ring, a.qval, coords)


def mul(a: WittVector, b: WittVector) -> WittVector:
    _match(a, b)
    law = _law(a.family, a.tset, a.ring, a.qval)
    coords = tuple(f(a.coords, b.coords) for f in law.pi)
    return WittVector(a.family, a.tset, a.ring, a.qval, coords)


def neg(a: WittVector) -> WittVector:
    law = _law(a.family, a.tset, a.ring, a.qval)
    coords = tuple(f(a.coords) for f in law.neg)
    return WittVector(a.family, a.tset, a.ring, a.qval, coords)


def sub(a: WittVector, b: WittVector) -> WittVector:
    return add(a, neg(b))


def int_scale(k: int, a: WittVector) -> WittVector:
    """The k-fold sum of ``a`` (Z-action on the additive group)."""
    if k == 0:
        return zero(a.family, a.tset, a.ring, a.qval)
    if k < 0:
        return neg(int_scale(-k, a))
    acc = None
    base = a
    while k:
        if k & 1:
            acc = base if acc is None else add(acc, base)
        k >>= 1
        if k:
            base = add(base, base)
    return acc


def eq(a: WittVector, b: WittVector) -> bool:
    _match(a, b)
    return all(a.ring.eq(x, y) for x, y in zip(a.coords, b.coords))


def is_zero(a: WittVector) -> bool:
    return all(a.ring.is_zero(c) for c in a.coords)


def ghost(a: WittVector) -> tuple:
    """The ghost coordinates (sum_{d|n} w(n,d) a_d^(n/d))_n."""
    law = _law(a.family, a.tset, a.ring, a.qval)
    return tuple(f(a.coords) for f in law.ghost)


def unghost(family: Family, tset: TruncationSet, ring: Ring, xs, q=None) -> WittVector:
    """The unique vector with the given ghost coordinates.

    Needs exact integer division and torsion-freeness in the ring; raises
    NotInGhostImage when some interior division fails.
    """
    if not (ring.supports_div_int and ring.torsion_free):
        raise UnsupportedRingOperation(
            f"{ring.descriptor} cannot invert the ghost map exactly"
        )
    qval = resolve_q(family, ring, q)
    law = _law(family, tset, ring, qval)
    xs = tuple(ring.check(x) for x in xs)
    if len(xs) != len(tset):
        raise CrossRingError(f"expected {len(tset)} ghost components")
    coords: list = [ring.zero()] * len(tset)
    for i, n in enumerate(tset):
        acc = xs[i]
        for term in law.ghost_tail[n]:
            acc = ring.sub(acc, term(coords))
        c = ring.try_div_int(acc, n)
        if c is None:
            raise NotInGhostImage(
                f"component {n} is not reachable: division by {n} failed"
            )
        coords[i] = c
    return WittVector(family, tset, ring, qval, tuple(coords))


def frobenius(a: WittVector, m: int) -> WittVector:
    """F_m into the quotient set S/m, by the derived polynomials."""
    if m not in a.tset:
        raise CrossRingError(f"{m} is not in {a.tset}")
    law = _law(a.family, a.tset, a.ring, a.qval)
    coords = tuple(f(a.coords) for f in law.frob[m])
    return WittVector(a.family, a.tset.quotient(m), a.ring, a.qval, coords)


def verschiebung(a: WittVector, m: int, into: TruncationSet) -> WittVector:
    """V_m from S/m back into S: the certified coordinate shift."""
    if m not in into:
        raise CrossRingError(f"{m} is not in {into}")
    if into.quotient(m) != a.tset:
        raise CrossRingError(
            f"vector over {a.tset} is not in the domain of V_{m} into {into}"
        )
    z = a.ring.zero()
    coords = tuple(
        a.coord(n // m) if n % m == 0 else z for n in into
    )
    return WittVector(a.family, into, a.ring, a.qval, coords)


def project(a: WittVector, sub: TruncationSet) -> WittVector:
    """Drop coordinates outside ``sub`` (a ring homomorphism)."""
    if not sub.is_subset(a.tset):
        raise CrossRingError(f"{sub} is not a subset of {a.tset}")
    coords = tuple(a.coord(n) for n in sub)
    return WittVector(a.family, sub, a.ring, a.qval, coords)


def section(a: WittVector, into: TruncationSet) -> WittVector:
    """Zero-fill the missing coordinates (a map of sets, not rings)."""
    if not a.tset.is_subset(into):
        raise CrossRingError(f"{a.tset} is not a subset of {into}")
    z = a.ring.zero()
    coords = tuple(a.coord(n) if n in a.tset else z for n in into)
    return WittVector(a.family, into, a.ring, a.qval, coords)


def map_coords(a: WittVector, fn, ring: Ring) -> WittVector:
    """Apply a coefficient-ring homomorphism coordinatewise."""
    return WittVector(
        a.family, a.tset, ring, a.qval if not a.family.uses_q() else fn(a.qval),
        tuple(ring.check(fn(c)) for c in a.coords),
    )


def is_divisible(a: WittVector, p: int, e: int = 1) -> bool:
    """Membership of ``a`` in p^e * W_S (not a coordinatewise condition).

    Over torsion-free rings with exact division this is decided through
    the ghost map: divide every ghost coordinate by p^e and check the
    quotient tuple inverts integrally.  Over small finite rings the
    subgroup is enumerated.
    """
    ring = a.ring
    if ring.supports_div_int and ring.torsion_free:
        quotient = []
        for x in ghost(a):
            d = ring.try_div_int(x, p**e)
            if d is None:
                return False
            quotient.append(d)
        try:
            unghost(a.family, a.tset, ring, quotient, q=a.qval)
            return True
        except NotInGhostImage:
            return False
    if ring.finite:
        subgroup = _p_power_subgroup(a.family, a.tset, ring, a.qval, p, e)
        return a.coords in subgroup
    raise UnsupportedRingOperation(
        f"cannot decide p-power membership over {ring.descriptor}"
    )


_SUBGROUP_CACHE: dict = {}


def _p_power_subgroup(family, tset, ring, qval, p, e, budget: int = 8192):
    key = (family.key(), tset.elements, ring.descriptor, _qkey(qval), p, e)
    hit = _SUBGROUP_CACHE.get(key)
    if hit is not None:
        return hit
    members = set()
    for w in enumerate_vectors(family, tset, ring, q=qval, budget=budget):
        members.add(int_scale(p**e, w).coords)
    _SUBGROUP_CACHE[key] = members
    return members


def enumerate_vectors(family, tset, ring, q=None, budget: int = 65536):
    """All Witt vectors over a finite ring (budget-capped)."""
    elems = list(ring.enumerate())
    total = len(elems) ** len(tset)
    if total > budget:
        raise BudgetExceeded(f"would enumerate {total} vectors (budget {budget})")
    qval = resolve_q(family, ring, q)
    for combo in itertools.product(elems, repeat=len(tset)):
        yield WittVector(family, tset, ring, qval, combo)


def exact_sequence_check(
    tset: TruncationSet,
    p: int,
    ring: Ring,
    family: Family = Family.classical(),
    q=None,
    budget: int = 65536,
) -> bool:
    """Full-enumeration check of 0 -> W_{S/p} -> W_S -> W_{S(p)} -> 0."""
    qval = resolve_q(family, ring, q)
    sub = tset.quotient(p)
    comp = tset.prime_complement(p)
    image = set()
    seen = 0
    for w in enumerate_vectors(family, sub, ring, q=qval, budget=budget):
        image.add(verschiebung(w, p, tset).coords)
        seen += 1
    if len(image) != seen:
        return False  # V_p not injective
    kernel = set()
    projected = set()
    for w in enumerate_vectors(family, tset, ring, q=qval, budget=budget):
        pw = project(w, comp)
        projected.add(pw.coords)
        if is_zero(pw):
            kernel.add(w.coords)
    full_target = {
        w.coords for w in enumerate_vectors(family, comp, ring, q=qval, budget=budget)
    }
    return kernel == image and projected == full_target


# ----------------------------------------------------------------------
# Witt rings as coefficient rings.


class WittCoeffRing(Ring):
    """W_S(A) packaged as a coefficient ring; elements are coordinate tuples.

    Exact integer division is solved through the ghost map (divide the
    ghost, invert back), which is what the nesting isomorphism needs.
    """

    def __init__(self, base: Ring, tset: TruncationSet,
                 family: Family = Family.classical(), q=None):
        self.base = base
        self.tset = tset
        self.family = family
        self.qval = resolve_q(family, base, q)
        label = "" if family.tag == "classical" else f"{family.label()}@"
        self.descriptor = f"witt:{label}{base.descriptor}:{tset}"
        self.torsion_free = base.torsion_free
        self.finite = base.finite
        self.supports_div_int = base.torsion_free and base.supports_div_int
        self.reduced = False  # not needed; stay conservative
        self.unital = base.unital and family.tag == "classical"

    def _wrap(self, coords) -> WittVector:
        return WittVector(self.family, self.tset, self.base, self.qval, tuple(coords))

    def zero(self):
        return (self.base.zero(),) * len(self.tset)

    def one(self):
        if not self.unital:
            raise UnsupportedRingOperation(f"{self.descriptor} is not unital")
        return teichmuller(self.family, self.tset, self.base, self.base.one()).coords

    def add(self, a, b):
        return add(self._wrap(a), self._wrap(b)).coords

    def neg(self, a):
        return neg(self._wrap(a)).coords

    def mul(self, a, b):
        return mul(self._wrap(a), self._wrap(b)).coords

    def int_scale(self, k, a):
        return int_scale(k, self._wrap(a)).coords

    def is_zero(self, a):
        return all(self.base.is_zero(c) for c in a)

    def eq(self, a, b):
        return all(self.base.eq(x, y) for x, y in zip(a, b))

    def try_div_int(self, a, k):
        if not self.supports_div_int:
            raise UnsupportedRingOperation(
                f"{self.descriptor} has no exact integer division"
            )
        quotient = []
        for x in ghost(self._wrap(a)):
            d = self.base.try_div_int(x, k)
            if d is None:
                return None
            quotient.append(d)
        try:
            return unghost(
                self.family, self.tset, self.base, quotient, q=self.qval
            ).coords
        except NotInGhostImage:
            return None

    def is_divisible_mod(self, a, p, e):
        return is_divisible(self._wrap(a), p, e)

    def enumerate(self):
        for w in enumerate_vectors(self.family, self.tset, self.base, q=self.qval):
            yield w.coords

    def check(self, a):
        if not isinstance(a, tuple) or len(a) != len(self.tset):
            raise ValueError(
                f"expected a {len(self.tset)}-coordinate tuple for {self.descriptor}"
            )
        return tuple(self.base.check(c) for c in a)

    def random(self, rng):
        return tuple(self.base.random(rng) for _ in self.tset)

    def to_str(self, a):
        return "(" + ", ".join(self.base.to_str(c) for c in a) + ")"

    def to_json(self, a):
        return {
            "coords": {str(n): self.base.to_json(c) for n, c in zip(self.tset, a)}
        }

    def from_json(self, value):
        if not isinstance(value, dict) or "coords" not in value:
            raise ValueError(f"expected a coords object for {self.descriptor}")
        got = value["coords"]
        coords = []
        for n in self.tset:
            if str(n) not in got:
                raise ValueError(f"missing coordinate {n}")
            coords.append(self.base.from_json(got[str(n)]))
        return self.check(tuple(coords))


# ----------------------------------------------------------------------
# JSON forms of vectors, shared with the command line.


def vector_to_json(a: WittVector) -> dict:
    return {"coords": {str(n): a.ring.to_json(c) for n, c in zip(a.tset, a.coords)}}


def vector_from_json(family, tset, ring, data, q=None) -> WittVector:
    if not isinstance(data, dict) or "coords" not in data:
        raise ValueError("expected an object with a 'coords' field")
    got = data["coords"]
    coords = []
    for n in tset:
        if str(n) not in got:
            raise ValueError(f"missing coordinate {n}")
        coords.append(ring.from_json(got[str(n)]))
    return make(family, tset, ring, coords, q)

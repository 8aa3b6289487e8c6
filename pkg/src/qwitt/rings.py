"""Coefficient rings for exact Witt-vector arithmetic.

All rings here are commutative, carry a Z-action, and are *not* required to
be unital.  Elements are plain immutable Python values (ints, coefficient
tuples, pairs, nested tuples) manipulated only through the owning ring
object, domain-style.  Every operation is exact; nothing here ever rounds.

Instances: the integers, integers mod m, integer polynomials in one
variable q, dual numbers over the integers, and twisted rings C^(r) whose
multiplication is ``x * y = r*x*y``.  Rings of Witt vectors can themselves
serve as coefficient rings; that instance lives in :mod:`qwitt.witt` to
avoid a dependency cycle and is reachable through :func:`parse_ring`.

Each ring carries capability flags (``torsion_free``, ``reduced``,
``finite``, ``supports_div_int``, ``unital``) that algorithms check up
front instead of failing deep inside a recursion.
"""

from __future__ import annotations

import math

from . import exprs
from .errors import NonUniqueQuotient, UnsupportedRingOperation

# ----------------------------------------------------------------------
# Z[q] elements: dense integer coefficient tuples, lowest degree first,
# canonical form has no trailing zeros.  () is zero, (1,) is one.

ZP_ZERO: tuple[int, ...] = ()
ZP_ONE: tuple[int, ...] = (1,)
ZP_Q: tuple[int, ...] = (0, 1)


def zp_trim(coeffs) -> tuple[int, ...]:
    cs = list(coeffs)
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


def zp_from_int(k: int) -> tuple[int, ...]:
    return (k,) if k else ()


def zp_add(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return zp_trim(out)


def zp_neg(a):
    return tuple(-c for c in a)


def zp_sub(a, b):
    return zp_add(a, zp_neg(b))


def zp_scale(k: int, a):
    if k == 0:
        return ZP_ZERO
    return tuple(k * c for c in a)


def zp_mul(a, b):
    if not a or not b:
        return ZP_ZERO
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return zp_trim(out)


def zp_pow(a, e: int):
    if e < 0:
        raise ValueError("negative exponent")
    result = ZP_ONE
    base = a
    while e:
        if e & 1:
            result = zp_mul(result, base)
        base = zp_mul(base, base)
        e >>= 1
    return result


def zp_compose(a, b):
    """a(b(q)) by Horner's rule."""
    result = ZP_ZERO
    for c in reversed(a):
        result = zp_add(zp_mul(result, b), zp_from_int(c))
    return result


def zp_subst_qpow(a, p: int):
    """a(q^p): spread coefficients p slots apart."""
    if not a:
        return ZP_ZERO
    out = [0] * ((len(a) - 1) * p + 1)
    for i, c in enumerate(a):
        out[i * p] = c
    return zp_trim(out)


def zp_eval_int(a, x: int) -> int:
    result = 0
    for c in reversed(a):
        result = result * x + c
    return result


def zp_divexact(a, k: int):
    """Coefficientwise exact quotient by ``k``, or None."""
    if any(c % k for c in a):
        return None
    return tuple(c // k for c in a)


def zp_degree(a) -> int:
    """Degree, with the convention deg 0 = -1."""
    return len(a) - 1


def zp_to_str(a) -> str:
    if not a:
        return "0"
    parts = []
    for e in range(len(a) - 1, -1, -1):
        c = a[e]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            power = "q" if e == 1 else f"q^{e}"
            body = power if mag == 1 else f"{mag}*{power}"
        parts.append((sign, body))
    first_sign, first_body = parts[0]
    text = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        text += sign + body
    return text


# ----------------------------------------------------------------------


class Ring:
    """Abstract commutative, possibly non-unital ring with a Z-action."""

    descriptor: str = "?"
    unital: bool = False
    torsion_free: bool = False
    reduced: bool = False
    finite: bool = False
    supports_div_int: bool = False

    # --- required element operations ---------------------------------
    def zero(self):
        raise NotImplementedError

    def add(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def is_zero(self, a) -> bool:
        raise NotImplementedError

    # --- derived operations -------------------------------------------
    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def eq(self, a, b) -> bool:
        return self.is_zero(self.sub(a, b))

    def int_scale(self, k: int, a):
        """k-fold sum of ``a`` (the Z-action); works in any ring."""
        if k == 0:
            return self.zero()
        if k < 0:
            return self.neg(self.int_scale(-k, a))
        acc = None
        base = a
        while k:
            if k & 1:
                acc = base if acc is None else self.add(acc, base)
            k >>= 1
            if k:
                base = self.add(base, base)
        return acc

    def pow(self, a, e: int):
        """e-fold product, e >= 1; e = 0 needs a unit element."""
        if e == 0:
            return self.one()
        acc = a
        for _ in range(e - 1):
            acc = self.mul(acc, a)
        return acc

    def one(self):
        raise UnsupportedRingOperation(f"{self.descriptor} has no designated unit")

    def from_int(self, k: int):
        return self.int_scale(k, self.one())

    # --- exactness queries --------------------------------------------
    def try_div_int(self, a, k: int):
        """The unique b with k*b = a, or None; NonUniqueQuotient on torsion."""
        raise UnsupportedRingOperation(f"{self.descriptor} has no exact division")

    def is_divisible_mod(self, a, p: int, e: int) -> bool:
        """Whether ``a`` lies in p^e * (this ring)."""
        raise UnsupportedRingOperation(f"{self.descriptor} cannot decide divisibility")

    def units(self) -> list:
        raise UnsupportedRingOperation(f"{self.descriptor} has no known unit list")

    def enumerate(self):
        raise UnsupportedRingOperation(f"{self.descriptor} is not enumerable")

    # --- plumbing -------------------------------------------------------
    def check(self, a):
        """Validate and normalize an element value; raises ValueError."""
        return a

    def random(self, rng):
        raise NotImplementedError

    def constants(self) -> dict:
        """Named element constants the expression grammar may use."""
        return {}

    def from_str(self, text: str):
        node = exprs.parse(text)
        return exprs.evaluate(
            node,
            self.constants(),
            add=self.add,
            mul=self.mul,
            neg=self.neg,
            from_int=self._coerce_int,
            power=self.pow,
        )

    def _coerce_int(self, k: int):
        if self.unital:
            return self.from_int(k)
        if k == 0:
            return self.zero()
        raise UnsupportedRingOperation(
            f"cannot place the integer {k} into non-unital {self.descriptor}"
        )

    def to_str(self, a) -> str:
        raise NotImplementedError

    def to_json(self, a):
        return self.to_str(a)

    def from_json(self, value):
        if isinstance(value, str):
            return self.check(self.from_str(value))
        raise ValueError(f"cannot decode {value!r} as an element of {self.descriptor}")

    def __eq__(self, other):
        return isinstance(other, Ring) and self.descriptor == other.descriptor

    def __hash__(self):
        return hash(self.descriptor)

    def __repr__(self):
        return f"<ring {self.descriptor}>"


class ZRing(Ring):
    """The ring of integers."""

    descriptor = "z"
    unital = True
    torsion_free = True
    reduced = True
    finite = False
    supports_div_int = True

    def zero(self):
        return 0

    def one(self):
        return 1

    def from_int(self, k):
        return k

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def int_scale(self, k, a):
        return k * a

    def pow(self, a, e):
        return a**e

    def is_zero(self, a):
        return a == 0

    def eq(self, a, b):
        return a == b

    def try_div_int(self, a, k):
        q, r = divmod(a, k)
        return q if r == 0 else None

    def is_divisible_mod(self, a, p, e):
        return a % p**e == 0

    def units(self):
        return [1, -1]

    def check(self, a):
        if not isinstance(a, int):
            raise ValueError(f"integer expected, got {a!r}")
        return a

    def random(self, rng):
        return rng.randint(-9, 9)

    def to_str(self, a):
        return str(a)


class ZModRing(Ring):
    """Integers modulo m, elements normalized to range(m)."""

    unital = True
    torsion_free = False
    finite = True
    supports_div_int = True

    def __init__(self, m: int):
        if m < 2:
            raise ValueError("modulus must be at least 2")
        self.m = m
        self.descriptor = f"zmod:{m}"
        # reduced iff m is squarefree
        self.reduced = all(e == 1 for _, e in _factorization(m))

    def zero(self):
        return 0

    def one(self):
        return 1 % self.m

    def from_int(self, k):
        return k % self.m

    def add(self, a, b):
        return (a + b) % self.m

    def neg(self, a):
        return (-a) % self.m

    def mul(self, a, b):
        return (a * b) % self.m

    def int_scale(self, k, a):
        return (k * a) % self.m

    def pow(self, a, e):
        return pow(a, e, self.m) if e else self.one()

    def is_zero(self, a):
        return a % self.m == 0

    def eq(self, a, b):
        return (a - b) % self.m == 0

    def try_div_int(self, a, k):
        g = math.gcd(k, self.m)
        if g == 1:
            return (pow(k, -1, self.m) * a) % self.m
        if a % g == 0:
            raise NonUniqueQuotient(
                f"{k}-division in {self.descriptor} has {g} solutions"
            )
        return None

    def is_divisible_mod(self, a, p, e):
        # p^e * Z/m is the subgroup generated by gcd(p^e, m)
        return a % math.gcd(p**e, self.m) == 0

    def units(self):
        return [a for a in range(self.m) if math.gcd(a, self.m) == 1]

    def enumerate(self):
        return range(self.m)

    def check(self, a):
        if not isinstance(a, int):
            raise ValueError(f"integer expected, got {a!r}")
        return a % self.m

    def random(self, rng):
        return rng.randrange(self.m)

    def to_str(self, a):
        return str(a % self.m)


class ZqRing(Ring):
    """Integer polynomials in one variable q; elements are coefficient tuples."""

    descriptor = "zq"
    unital = True
    torsion_free = True
    reduced = True
    finite = False
    supports_div_int = True

    def zero(self):
        return ZP_ZERO

    def one(self):
        return ZP_ONE

    def from_int(self, k):
        return zp_from_int(k)

    def generator(self):
        return ZP_Q

    def add(self, a, b):
        return zp_add(a, b)

    def neg(self, a):
        return zp_neg(a)

    def mul(self, a, b):
        return zp_mul(a, b)

    def int_scale(self, k, a):
        return zp_scale(k, a)

    def pow(self, a, e):
        return zp_pow(a, e)

    def is_zero(self, a):
        return not a

    def eq(self, a, b):
        return a == b

    def try_div_int(self, a, k):
        return zp_divexact(a, k)

    def is_divisible_mod(self, a, p, e):
        m = p**e
        return all(c % m == 0 for c in a)

    def units(self):
        return [ZP_ONE, zp_neg(ZP_ONE)]

    def check(self, a):
        if not isinstance(a, tuple) or not all(isinstance(c, int) for c in a):
            raise ValueError(f"coefficient tuple expected, got {a!r}")
        return zp_trim(a)

    def random(self, rng):
        deg = rng.randrange(3)
        return zp_trim([rng.randint(-3, 3) for _ in range(deg + 1)])

    def constants(self):
        return {"q": ZP_Q}

    def to_str(self, a):
        return zp_to_str(a)


class DualRing(Ring):
    """Dual numbers a + b*eps over the integers, with eps^2 = 0."""

    descriptor = "dual"
    unital = True
    torsion_free = True
    reduced = False
    finite = False
    supports_div_int = True

    EPS = (0, 1)

    def zero(self):
        return (0, 0)

    def one(self):
        return (1, 0)

    def from_int(self, k):
        return (k, 0)

    def add(self, a, b):
        return (a[0] + b[0], a[1] + b[1])

    def neg(self, a):
        return (-a[0], -a[1])

    def mul(self, a, b):
        return (a[0] * b[0], a[0] * b[1] + a[1] * b[0])

    def int_scale(self, k, a):
        return (k * a[0], k * a[1])

    def is_zero(self, a):
        return a == (0, 0)

    def eq(self, a, b):
        return a == b

    def try_div_int(self, a, k):
        if a[0] % k or a[1] % k:
            return None
        return (a[0] // k, a[1] // k)

    def is_divisible_mod(self, a, p, e):
        m = p**e
        return a[0] % m == 0 and a[1] % m == 0

    def check(self, a):
        if (
            not isinstance(a, tuple)
            or len(a) != 2
            or not all(isinstance(c, int) for c in a)
        ):
            raise ValueError(f"pair of integers expected, got {a!r}")
        return a

    def random(self, rng):
        return (rng.randint(-9, 9), rng.randint(-9, 9))

    def constants(self):
        return {"eps": self.EPS}

    def to_str(self, a):
        c, d = a
        if d == 0:
            return str(c)
        eps = "eps" if abs(d) == 1 else f"{abs(d)}*eps"
        eps = ("-" if d < 0 else "") + eps
        if c == 0:
            return eps
        joiner = "" if eps.startswith("-") else "+"
        return f"{c}{joiner}{eps}"


class TwistedRing(Ring):
    """Same additive group as ``base``, multiplication ``x * y = r*x*y``.

    Unital exactly when ``r`` is invertible in the base (then 1 = r^-1).
    """

    def __init__(self, base: Ring, r):
        if isinstance(base, TwistedRing):
            # the twist element acts through the underlying product, so
            # (A^(r))^(r') is A^(r*r') with the product taken in A
            r = base.base.mul(base.r, base.check(r))
            base = base.base
        self.base = base
        self.r = base.check(r)
        self.descriptor = f"twist:{base.descriptor}:{base.to_str(self.r)}"
        self.torsion_free = base.torsion_free
        self.finite = base.finite
        self.supports_div_int = base.supports_div_int
        # over a domain a nonzero twist keeps the ring reduced
        self.reduced = isinstance(base, (ZRing, ZqRing)) and not base.is_zero(self.r)
        self._one = self._find_inverse()
        self.unital = self._one is not None

    def _find_inverse(self):
        base, r = self.base, self.r
        if isinstance(base, ZRing):
            return r if r in (1, -1) else None
        if isinstance(base, ZModRing):
            if math.gcd(r, base.m) == 1:
                return pow(r, -1, base.m)
            return None
        if isinstance(base, ZqRing):
            if r == ZP_ONE or r == zp_neg(ZP_ONE):
                return r
            return None
        return None

    def zero(self):
        return self.base.zero()

    def one(self):
        if self._one is None:
            raise UnsupportedRingOperation(
                f"{self.descriptor} is not unital (twist is not a unit)"
            )
        return self._one

    def add(self, a, b):
        return self.base.add(a, b)

    def neg(self, a):
        return self.base.neg(a)

    def mul(self, a, b):
        return self.base.mul(self.r, self.base.mul(a, b))

    def int_scale(self, k, a):
        return self.base.int_scale(k, a)

    def is_zero(self, a):
        return self.base.is_zero(a)

    def eq(self, a, b):
        return self.base.eq(a, b)

    def try_div_int(self, a, k):
        return self.base.try_div_int(a, k)

    def is_divisible_mod(self, a, p, e):
        return self.base.is_divisible_mod(a, p, e)

    def enumerate(self):
        return self.base.enumerate()

    def check(self, a):
        return self.base.check(a)

    def random(self, rng):
        return self.base.random(rng)

    def constants(self):
        return self.base.constants()

    def to_str(self, a):
        return self.base.to_str(a)


Z = ZRing()
ZQ = ZqRing()
DUAL = DualRing()


def _factorization(n):
    from .truncset import factorization

    return factorization(n)


def parse_ring(text: str) -> Ring:
    """Build a ring from a descriptor string.

    Formats: ``z``, ``zmod:6``, ``zq``, ``dual``, ``twist:<base>:<elem>``,
    ``witt:<base>:<set>`` (a ring of Witt vectors used as coefficients).
    """
    if text == "z":
        return Z
    if text == "zq":
        return ZQ
    if text == "dual":
        return DUAL
    if text.startswith("zmod:"):
        return ZModRing(int(text.split(":", 1)[1]))
    if text.startswith("twist:"):
        rest = text[len("twist:"):]
        base_desc, elem = rest.rsplit(":", 1)
        base = parse_ring(base_desc)
        return TwistedRing(base, base.from_str(elem))
    if text.startswith("witt:"):
        from . import witt
        from .truncset import TruncationSet

        rest = text[len("witt:"):]
        base_desc, setpart = rest.rsplit(":", 1)
        base = parse_ring(base_desc)
        return witt.WittCoeffRing(base, TruncationSet.parse(setpart))
    raise ValueError(f"unknown ring descriptor {text!r}")

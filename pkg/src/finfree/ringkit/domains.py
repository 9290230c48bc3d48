"""Exact coefficient domains: integers, rationals, prime fields and small extension fields.

Elements are plain hashable Python values (``int`` for the integers and prime
fields, ``Fraction`` for the rationals, coefficient tuples for extension
fields); all arithmetic is dispatched through the domain object so the
polynomial layer never inspects representations.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from ..errors import InvalidInputError


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class CoefficientDomain:
    """Common interface of the coefficient rings used throughout the package."""

    kind: str = "?"
    is_field: bool = False
    characteristic: int = 0
    size: int | None = None  # number of elements when finite

    def zero(self):
        raise NotImplementedError

    def one(self):
        raise NotImplementedError

    def from_int(self, n: int):
        raise NotImplementedError

    def add(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def is_zero(self, a) -> bool:
        return a == self.zero()

    def is_unit(self, a) -> bool:
        raise NotImplementedError

    def inv(self, a):
        raise InvalidInputError(f"no inverses in {self.kind}")

    def div(self, a, b):
        """Exact division; raises when ``b`` does not divide ``a``."""
        raise NotImplementedError

    def pow(self, a, k: int):
        if k < 0:
            return self.pow(self.inv(a), -k)
        out = self.one()
        base = a
        while k:
            if k & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            k >>= 1
        return out

    def elements(self):
        """Iterate all elements in a fixed canonical order (finite domains only)."""
        raise InvalidInputError(f"{self.kind} is not finite")

    def random_element(self, rng):
        raise InvalidInputError(f"{self.kind} has no sampling support")

    def sort_key(self, a):
        """Total order on elements used only for deterministic output."""
        raise NotImplementedError

    def is_negative(self, a) -> bool:
        """True when the canonical rendering of ``a`` starts with a minus sign."""
        return False

    def render(self, a) -> str:
        return str(a)

    def parse(self, s: str):
        raise InvalidInputError(f"cannot parse constants of {self.kind}")


class IntegerDomain(CoefficientDomain):
    kind = "integers"

    def zero(self):
        return 0

    def one(self):
        return 1

    def from_int(self, n):
        return int(n)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def is_zero(self, a):
        return a == 0

    def is_unit(self, a):
        return a in (1, -1)

    def div(self, a, b):
        if b == 0:
            raise ZeroDivisionError("division by zero in ZZ")
        q, r = divmod(a, b)
        if r:
            raise InvalidInputError(f"{b} does not divide {a} in ZZ")
        return q

    def sort_key(self, a):
        return a

    def is_negative(self, a):
        return a < 0

    def parse(self, s):
        return int(s)

    def __repr__(self):
        return "ZZ"

    def __eq__(self, other):
        return isinstance(other, IntegerDomain)

    def __hash__(self):
        return hash("ZZ")


class RationalDomain(CoefficientDomain):
    kind = "rationals"
    is_field = True

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def from_int(self, n):
        return Fraction(n)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def is_zero(self, a):
        return a == 0

    def is_unit(self, a):
        return a != 0

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in QQ")
        return 1 / Fraction(a)

    def div(self, a, b):
        if b == 0:
            raise ZeroDivisionError("division by zero in QQ")
        return Fraction(a) / b

    def sort_key(self, a):
        return a

    def is_negative(self, a):
        return a < 0

    def render(self, a):
        return str(a)  # Fraction renders as "p/q" or "p"

    def parse(self, s):
        return Fraction(s)

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, RationalDomain)

    def __hash__(self):
        return hash("QQ")


class PrimeField(CoefficientDomain):
    """GF(p); elements are ints reduced to the range [0, p)."""

    kind = "prime-field"
    is_field = True

    def __init__(self, p: int):
        if not _is_prime(p):
            raise InvalidInputError(f"{p} is not prime")
        self.p = p
        self.characteristic = p
        self.size = p

    def zero(self):
        return 0

    def one(self):
        return 1

    def from_int(self, n):
        return n % self.p

    def add(self, a, b):
        c = a + b
        return c - self.p if c >= self.p else c

    def sub(self, a, b):
        c = a - b
        return c + self.p if c < 0 else c

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (self.p - a) % self.p

    def is_zero(self, a):
        return a == 0

    def is_unit(self, a):
        return a % self.p != 0

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError(f"inverse of 0 in GF({self.p})")
        return pow(a, self.p - 2, self.p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, k):
        if k < 0:
            return pow(self.inv(a), -k, self.p)
        return pow(a, k, self.p)

    def elements(self):
        return iter(range(self.p))

    def random_element(self, rng):
        return rng.randrange(self.p)

    def sort_key(self, a):
        return a

    def parse(self, s):
        return int(s) % self.p

    def __repr__(self):
        return f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))


# ---------------------------------------------------------------------------
# raw univariate helpers over GF(p), used for extension-field arithmetic and
# for validating extension moduli without depending on the polynomial layer
# ---------------------------------------------------------------------------

def _trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _polymul_p(a, b, p):
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _trim(out)


def _polymod_p(a, m, p):
    a = list(a)
    dm = len(m) - 1
    inv_lc = pow(m[-1], p - 2, p)
    while len(a) - 1 >= dm and _trim(a):
        a = _trim(a)
        if len(a) - 1 < dm:
            break
        k = len(a) - 1 - dm
        q = (a[-1] * inv_lc) % p
        for i, mi in enumerate(m):
            a[i + k] = (a[i + k] - q * mi) % p
    return _trim(a)


def _poly_divides_p(d, f, p):
    """True when d divides f in GF(p)[Y] (d nonzero)."""
    return not _polymod_p(f, d, p)


def _irreducible_p(m: list[int], p: int) -> bool:
    """Trial factorization: m (monic, degree >= 1) has no monic divisor of degree <= deg/2."""
    deg = len(m) - 1
    if deg == 1:
        return True
    for d in range(1, deg // 2 + 1):
        for tail in itertools.product(range(p), repeat=d):
            cand = list(tail) + [1]
            if _poly_divides_p(cand, m, p):
                return False
    return True


def default_modulus(p: int, r: int) -> tuple[int, ...]:
    """First monic irreducible of degree r over GF(p) in coefficient lex order."""
    for tail in itertools.product(range(p), repeat=r):
        cand = list(tail) + [1]
        if _irreducible_p(cand, p):
            return tuple(cand)
    raise AssertionError("unreachable: irreducibles of every degree exist")


class ExtensionField(CoefficientDomain):
    """GF(p^r) as GF(p)[w]/(modulus); elements are length-r coefficient tuples."""

    kind = "extension-field"
    is_field = True

    def __init__(self, p: int, modulus):
        if not _is_prime(p):
            raise InvalidInputError(f"{p} is not prime")
        mod = tuple(int(c) % p for c in modulus)
        if len(mod) < 3 or mod[-1] != 1:
            raise InvalidInputError("extension modulus must be monic of degree >= 2")
        if not _irreducible_p(list(mod), p):
            raise InvalidInputError(f"modulus {mod} is reducible over GF({p})")
        self.p = p
        self.modulus = mod
        self.degree = len(mod) - 1
        self.characteristic = p
        self.size = p ** self.degree

    def _wrap(self, coeffs):
        c = list(coeffs)[: self.degree] + [0] * max(0, self.degree - len(coeffs))
        return tuple(ci % self.p for ci in c)

    def zero(self):
        return (0,) * self.degree

    def one(self):
        return self._wrap([1])

    def generator(self):
        return self._wrap([0, 1])

    def from_int(self, n):
        return self._wrap([n % self.p])

    def add(self, a, b):
        return tuple((x + y) % self.p for x, y in zip(a, b))

    def sub(self, a, b):
        return tuple((x - y) % self.p for x, y in zip(a, b))

    def mul(self, a, b):
        prod = _polymul_p(list(a), list(b), self.p)
        return self._wrap(_polymod_p(prod, list(self.modulus), self.p))

    def neg(self, a):
        return tuple((-x) % self.p for x in a)

    def is_zero(self, a):
        return not any(a)

    def is_unit(self, a):
        return any(a)

    def inv(self, a):
        if not any(a):
            raise ZeroDivisionError(f"inverse of 0 in GF({self.p}^{self.degree})")
        # a^(q-2) by square and multiply
        return self.pow(a, self.size - 2)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def frobenius(self, a):
        return self.pow(a, self.p)

    def sqrt_char2(self, a):
        """Square root in characteristic 2 (the inverse Frobenius)."""
        if self.p != 2:
            raise InvalidInputError("sqrt_char2 needs characteristic 2")
        return self.pow(a, self.size // 2)

    def elements(self):
        for tail in itertools.product(range(self.p), repeat=self.degree):
            yield tuple(tail)

    def random_element(self, rng):
        return tuple(rng.randrange(self.p) for _ in range(self.degree))

    def sort_key(self, a):
        return a

    def render(self, a):
        if not any(a):
            return "0"
        parts = []
        for i, c in enumerate(a):
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            elif i == 1:
                parts.append("w" if c == 1 else f"{c}*w")
            else:
                parts.append(f"w^{i}" if c == 1 else f"{c}*w^{i}")
        return "(" + "+".join(parts) + ")"

    def __repr__(self):
        return f"GF({self.p}^{self.degree})"

    def __eq__(self, other):
        return (
            isinstance(other, ExtensionField)
            and other.p == self.p
            and other.modulus == self.modulus
        )

    def __hash__(self):
        return hash(("GFext", self.p, self.modulus))


ZZ = IntegerDomain()
QQ = RationalDomain()


def GF(p: int, r: int = 1, modulus=None) -> CoefficientDomain:
    """The finite field GF(p^r); a deterministic default modulus is chosen for r > 1."""
    if r == 1 and modulus is None:
        return PrimeField(p)
    if modulus is None:
        modulus = default_modulus(p, r)
    dom = ExtensionField(p, modulus)
    if r not in (1, dom.degree):
        raise InvalidInputError("modulus degree disagrees with requested extension degree")
    return dom

"""Dense univariate polynomials over a coefficient domain.

Used for finite-field factorization, minimal polynomials, Bezout certificates
and extension-field embeddings.  Division-based operations require a field
domain; arithmetic works over any domain.
"""

from __future__ import annotations

import random

from .domains import CoefficientDomain, ExtensionField, PrimeField
from ..errors import InvalidInputError


class UniPoly:
    """Coefficient list, ascending degree; trailing zeros stripped."""

    __slots__ = ("domain", "coeffs")

    def __init__(self, domain: CoefficientDomain, coeffs):
        cs = list(coeffs)
        while cs and domain.is_zero(cs[-1]):
            cs.pop()
        self.domain = domain
        self.coeffs = tuple(cs)

    @classmethod
    def from_ints(cls, domain, ints) -> "UniPoly":
        return cls(domain, [domain.from_int(c) for c in ints])

    @classmethod
    def zero(cls, domain) -> "UniPoly":
        return cls(domain, [])

    @classmethod
    def one(cls, domain) -> "UniPoly":
        return cls(domain, [domain.one()])

    @classmethod
    def gen(cls, domain) -> "UniPoly":
        return cls(domain, [domain.zero(), domain.one()])

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return len(self.coeffs) == 1 and self.coeffs[0] == self.domain.one()

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == self.domain.one()

    def lc(self):
        if not self.coeffs:
            raise InvalidInputError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __eq__(self, other):
        return (
            isinstance(other, UniPoly)
            and self.domain == other.domain
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.domain, self.coeffs))

    def _check(self, other):
        if self.domain != other.domain:
            raise InvalidInputError("univariate operands over different domains")

    def __add__(self, other):
        self._check(other)
        dom = self.domain
        n = max(len(self.coeffs), len(other.coeffs))
        out = []
        for i in range(n):
            a = self.coeffs[i] if i < len(self.coeffs) else dom.zero()
            b = other.coeffs[i] if i < len(other.coeffs) else dom.zero()
            out.append(dom.add(a, b))
        return UniPoly(dom, out)

    def __neg__(self):
        return UniPoly(self.domain, [self.domain.neg(c) for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._check(other)
        dom = self.domain
        if not self.coeffs or not other.coeffs:
            return UniPoly.zero(dom)
        out = [dom.zero()] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if dom.is_zero(a):
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = dom.add(out[i + j], dom.mul(a, b))
        return UniPoly(dom, out)

    def __pow__(self, k: int):
        if k < 0:
            raise InvalidInputError("negative polynomial power")
        out = UniPoly.one(self.domain)
        for _ in range(k):
            out = out * self
        return out

    def scale(self, c) -> "UniPoly":
        dom = self.domain
        return UniPoly(dom, [dom.mul(a, c) for a in self.coeffs])

    def shift(self, k: int) -> "UniPoly":
        """Multiply by Y^k."""
        if not self.coeffs:
            return self
        return UniPoly(self.domain, [self.domain.zero()] * k + list(self.coeffs))

    def monic(self) -> "UniPoly":
        if self.is_zero():
            return self
        return self.scale(self.domain.inv(self.lc()))

    def divmod(self, other):
        """Polynomial division; requires an invertible leading coefficient."""
        self._check(other)
        dom = self.domain
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        inv_lc = dom.inv(other.lc())
        rem = list(self.coeffs)
        db = other.degree()
        q = [dom.zero()] * max(0, len(rem) - db)
        while len(rem) - 1 >= db and rem:
            while rem and dom.is_zero(rem[-1]):
                rem.pop()
            if len(rem) - 1 < db or not rem:
                break
            k = len(rem) - 1 - db
            c = dom.mul(rem[-1], inv_lc)
            q[k] = c
            for i, b in enumerate(other.coeffs):
                rem[i + k] = dom.sub(rem[i + k], dom.mul(c, b))
        return UniPoly(dom, q), UniPoly(dom, rem)

    def __mod__(self, other):
        return self.divmod(other)[1]

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def gcd(self, other) -> "UniPoly":
        """Monic gcd (field domains)."""
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic() if not a.is_zero() else a

    def xgcd(self, other):
        """(g, u, v) with u*self + v*other = g, g monic (field domains)."""
        dom = self.domain
        a, b = self, other
        ua, va = UniPoly.one(dom), UniPoly.zero(dom)
        ub, vb = UniPoly.zero(dom), UniPoly.one(dom)
        while not b.is_zero():
            q, r = a.divmod(b)
            a, b = b, r
            ua, ub = ub, ua - q * ub
            va, vb = vb, va - q * vb
        if a.is_zero():
            return a, ua, va
        c = dom.inv(a.lc())
        return a.scale(c), ua.scale(c), va.scale(c)

    def powmod(self, k: int, modulus: "UniPoly") -> "UniPoly":
        out = UniPoly.one(self.domain) % modulus
        base = self % modulus
        while k:
            if k & 1:
                out = (out * base) % modulus
            base = (base * base) % modulus
            k >>= 1
        return out

    def derivative(self) -> "UniPoly":
        dom = self.domain
        out = []
        for i in range(1, len(self.coeffs)):
            c = self.coeffs[i]
            out.append(dom.mul(c, dom.from_int(i)))
        return UniPoly(dom, out)

    def evaluate(self, x):
        dom = self.domain
        acc = dom.zero()
        for c in reversed(self.coeffs):
            acc = dom.add(dom.mul(acc, x), c)
        return acc

    def map_coeffs(self, fn, new_domain) -> "UniPoly":
        return UniPoly(new_domain, [fn(c) for c in self.coeffs])

    def sort_key(self):
        dom = self.domain
        return (self.degree(), tuple(dom.sort_key(c) for c in self.coeffs))

    def render(self, name: str = "Y") -> str:
        if self.is_zero():
            return "0"
        dom = self.domain
        parts = []
        for i in range(self.degree(), -1, -1):
            c = self.coeffs[i]
            if dom.is_zero(c):
                continue
            if i == 0:
                mono = dom.render(c)
            else:
                v = name if i == 1 else f"{name}^{i}"
                mono = v if c == dom.one() else f"{dom.render(c)}*{v}"
            parts.append(mono)
        return " + ".join(parts)

    def __repr__(self):
        return f"UniPoly({self.render()!r} over {self.domain!r})"


# ---------------------------------------------------------------------------
# factorization over finite fields
# ---------------------------------------------------------------------------

def _field_q(domain) -> int:
    if isinstance(domain, PrimeField):
        return domain.p
    if isinstance(domain, ExtensionField):
        return domain.size
    raise InvalidInputError("factorization requires a finite field")


def _coeff_pth_root(domain, c):
    if isinstance(domain, PrimeField):
        return c
    # inverse Frobenius: c^(p^(r-1))
    return domain.pow(c, domain.size // domain.p)


def _squarefree_parts(f: UniPoly) -> list[tuple[UniPoly, int]]:
    """Yun-style decomposition in characteristic p: [(g, m)] with f = prod g^m."""
    dom = f.domain
    p = dom.characteristic
    out: list[tuple[UniPoly, int]] = []

    def rec(g: UniPoly, mult: int):
        if g.degree() == 0:
            return
        d = g.derivative()
        if d.is_zero():
            # g is a p-th power: take the p-th root of coefficients and exponents
            root = UniPoly(dom, [_coeff_pth_root(dom, g.coeffs[i]) for i in range(0, len(g.coeffs), p)])
            rec(root, mult * p)
            return
        c = g.gcd(d)
        w = (g // c).monic()
        i = 1
        while w.degree() > 0:
            y = w.gcd(c)
            piece = (w // y).monic()
            if piece.degree() > 0:
                out.append((piece, mult * i))
            w = y
            c = (c // y).monic()
            i += 1
        if c.degree() > 0:
            rec(c, mult)

    rec(f.monic(), 1)
    # merge equal multiplicities of coprime pieces is unnecessary; pieces are pairwise coprime
    return out


def _distinct_degree(f: UniPoly) -> list[tuple[UniPoly, int]]:
    """Split a squarefree monic f into products of irreducibles of equal degree d."""
    dom = f.domain
    q = _field_q(dom)
    out = []
    g = f.monic()
    h = UniPoly.gen(dom) % g
    d = 0
    while g.degree() >= 2 * (d + 1):
        d += 1
        h = h.powmod(q, g)
        part = g.gcd(h - UniPoly.gen(dom))
        if part.degree() > 0:
            out.append((part, d))
            g = (g // part).monic()
            h = h % g
    if g.degree() > 0:
        out.append((g, g.degree()))
    return out


def _equal_degree_split(f: UniPoly, d: int, rng: random.Random) -> list[UniPoly]:
    """Cantor-Zassenhaus splitting of a product of distinct degree-d irreducibles."""
    dom = f.domain
    q = _field_q(dom)
    if f.degree() == d:
        return [f.monic()]
    while True:
        a = UniPoly(dom, [dom.random_element(rng) for _ in range(f.degree())])
        if a.degree() < 1:
            continue
        if q % 2 == 1:
            b = a.powmod((q ** d - 1) // 2, f) - UniPoly.one(dom)
        else:
            # trace map for characteristic 2
            r = 1
            if isinstance(dom, ExtensionField):
                r = dom.degree
            b = UniPoly.zero(dom)
            t = a % f
            for _ in range(d * r):
                b = (b + t) % f
                t = (t * t) % f
        g = f.gcd(b)
        if 0 < g.degree() < f.degree():
            g = g.monic()
            rest = (f // g).monic()
            return _equal_degree_split(g, d, rng) + _equal_degree_split(rest, d, rng)


def factor_gf(f: UniPoly, seed: int = 0) -> list[tuple[UniPoly, int]]:
    """Factor a monic univariate over GF(q) into irreducibles with multiplicities.

    Squarefree decomposition, then distinct-degree splitting, then seeded
    Cantor-Zassenhaus equal-degree splitting.  The output order is
    deterministic: sorted by degree, then by coefficient sequence.
    """
    _field_q(f.domain)
    if f.is_zero() or not f.is_monic():
        raise InvalidInputError("factor_gf needs a monic nonzero polynomial")
    if f.degree() < 1:
        raise InvalidInputError("factor_gf needs degree >= 1")
    rng = random.Random(f"factor_gf:{seed}:{f.degree()}")
    result: list[tuple[UniPoly, int]] = []
    for part, mult in _squarefree_parts(f):
        for block, d in _distinct_degree(part):
            for irr in _equal_degree_split(block, d, rng):
                result.append((irr, mult))
    result.sort(key=lambda fm: fm[0].sort_key())
    return result


def is_irreducible_gf(f: UniPoly, seed: int = 0) -> bool:
    fac = factor_gf(f.monic(), seed=seed)
    return len(fac) == 1 and fac[0][1] == 1


def roots_gf(f: UniPoly, seed: int = 0) -> list:
    """Roots in the coefficient field, each listed once, deterministic order."""
    out = []
    for g, _m in factor_gf(f.monic(), seed=seed):
        if g.degree() == 1:
            out.append(f.domain.neg(g.coeffs[0]))
    out.sort(key=f.domain.sort_key)
    return out


def field_embedding(src, dst):
    """A ring embedding GF(p^r) -> GF(p^s) (r | s), as a callable on elements.

    Deterministic: the image of the source generator is the first root (in
    canonical order) of the source modulus inside the destination field.
    """
    if isinstance(src, PrimeField):
        if dst.characteristic != src.p:
            raise InvalidInputError("embedding must preserve characteristic")
        return lambda c: dst.from_int(c)
    if not isinstance(src, ExtensionField):
        raise InvalidInputError("source must be a finite field")
    if src.characteristic != dst.characteristic:
        raise InvalidInputError("embedding must preserve characteristic")
    if src == dst:
        return lambda c: c
    modulus = UniPoly(dst, [dst.from_int(c) for c in src.modulus])
    rts = roots_gf(modulus)
    if not rts:
        raise InvalidInputError(f"{src!r} does not embed into {dst!r}")
    gamma = rts[0]

    def embed(c):
        acc = dst.zero()
        for ci in reversed(c):
            acc = dst.add(dst.mul(acc, gamma), dst.from_int(ci))
        return acc

    return embed


def minimal_polynomial(powers: list[list], domain) -> UniPoly:
    """Monic minimal polynomial given coordinate rows for 1, x, x^2, ...

    ``powers`` must contain enough rows for a dependence to appear (one more
    than the dimension suffices).
    """
    from .linalg import solve_field  # local import to avoid a cycle

    n = len(powers[0])
    for k in range(1, len(powers)):
        # look for c_0..c_{k-1} with x^k = sum c_i x^i
        mat = [[powers[i][j] for i in range(k)] for j in range(n)]
        rhs = [powers[k][j] for j in range(n)]
        sol = solve_field(mat, rhs, domain)
        if sol is not None:
            return UniPoly(domain, [domain.neg(c) for c in sol] + [domain.one()])
    raise InvalidInputError("no linear dependence found; supply more powers")

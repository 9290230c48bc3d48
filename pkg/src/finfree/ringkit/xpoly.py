"""Univariate polynomials in a named outer variable with MultiPoly coefficients.

This is the carrier for characteristic polynomials (outer variable ``X`` over
the parameter ring) and for resultant computations where the inner variable
(``T`` in shift constructions, ``Y`` in presentations) is eliminated.
"""

from __future__ import annotations

from .multipoly import MultiPoly
from .linalg import PolyMatrix
from ..errors import InvalidInputError


class XPoly:
    """Coefficients ascending in the outer variable; leading coefficient nonzero."""

    __slots__ = ("var", "vars", "domain", "coeffs")

    def __init__(self, var: str, variables, domain, coeffs):
        cs = list(coeffs)
        while cs and cs[-1].is_zero():
            cs.pop()
        for c in cs:
            if c.domain != domain or c.vars != tuple(variables):
                raise InvalidInputError("coefficient registry or domain mismatch")
        self.var = var
        self.vars = tuple(variables)
        self.domain = domain
        self.coeffs = tuple(cs)

    # -- constructors ---------------------------------------------------------

    @classmethod
    def zero(cls, var, variables, domain):
        return cls(var, variables, domain, [])

    @classmethod
    def one(cls, var, variables, domain):
        return cls(var, variables, domain, [MultiPoly.one(domain, variables)])

    @classmethod
    def gen(cls, var, variables, domain):
        return cls(var, variables, domain,
                   [MultiPoly.zero(domain, variables), MultiPoly.one(domain, variables)])

    @classmethod
    def from_const(cls, var, c: MultiPoly):
        return cls(var, c.vars, c.domain, [c])

    @classmethod
    def from_ints(cls, var, variables, domain, ints):
        return cls(var, variables, domain,
                   [MultiPoly.from_int(domain, variables, n) for n in ints])

    # -- queries ----------------------------------------------------------------

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1].is_one()

    def coeff(self, k: int) -> MultiPoly:
        if k < 0 or k > self.degree():
            return MultiPoly.zero(self.domain, self.vars)
        return self.coeffs[k]

    def lc(self) -> MultiPoly:
        if not self.coeffs:
            raise InvalidInputError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __eq__(self, other):
        return (
            isinstance(other, XPoly)
            and self.var == other.var
            and self.vars == other.vars
            and self.domain == other.domain
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.var, self.vars, self.domain, self.coeffs))

    def _check(self, other):
        if (self.var != other.var or self.vars != other.vars
                or self.domain != other.domain):
            raise InvalidInputError("outer-polynomial operands disagree")

    # -- arithmetic ----------------------------------------------------------------

    def __add__(self, other):
        self._check(other)
        zero = MultiPoly.zero(self.domain, self.vars)
        n = max(len(self.coeffs), len(other.coeffs))
        out = []
        for i in range(n):
            a = self.coeffs[i] if i < len(self.coeffs) else zero
            b = other.coeffs[i] if i < len(other.coeffs) else zero
            out.append(a + b)
        return XPoly(self.var, self.vars, self.domain, out)

    def __neg__(self):
        return XPoly(self.var, self.vars, self.domain, [-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._check(other)
        zero = MultiPoly.zero(self.domain, self.vars)
        if self.is_zero() or other.is_zero():
            return XPoly.zero(self.var, self.vars, self.domain)
        out = [zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return XPoly(self.var, self.vars, self.domain, out)

    def scale(self, c: MultiPoly) -> "XPoly":
        return XPoly(self.var, self.vars, self.domain, [a * c for a in self.coeffs])

    def __pow__(self, k: int):
        if k < 0:
            raise InvalidInputError("negative power")
        out = XPoly.one(self.var, self.vars, self.domain)
        base = self
        while k:
            if k & 1:
                out = out * base
            if k > 1:
                base = base * base
            k >>= 1
        return out

    def divmod_monic(self, other: "XPoly"):
        """Division by a monic divisor; valid over any coefficient ring."""
        self._check(other)
        if not other.is_monic():
            raise InvalidInputError("divisor must be monic")
        zero = MultiPoly.zero(self.domain, self.vars)
        rem = list(self.coeffs)
        db = other.degree()
        q = [zero] * max(0, len(rem) - db)
        while len(rem) - 1 >= db:
            while rem and rem[-1].is_zero():
                rem.pop()
            if len(rem) - 1 < db:
                break
            k = len(rem) - 1 - db
            c = rem[-1]
            q[k] = c
            for i, b in enumerate(other.coeffs):
                rem[i + k] = rem[i + k] - c * b
            rem.pop()
        return (XPoly(self.var, self.vars, self.domain, q),
                XPoly(self.var, self.vars, self.domain, rem))

    def derivative(self) -> "XPoly":
        out = []
        for i in range(1, len(self.coeffs)):
            out.append(self.coeffs[i].scale(self.domain.from_int(i)))
        return XPoly(self.var, self.vars, self.domain, out)

    def evaluate(self, value: MultiPoly) -> MultiPoly:
        """Horner evaluation at a MultiPoly over the same registry."""
        acc = MultiPoly.zero(self.domain, self.vars)
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def compose(self, g: "XPoly") -> "XPoly":
        """Substitution of the outer variable by g (same coefficient registry)."""
        self._check(g)
        acc = XPoly.zero(self.var, self.vars, self.domain)
        for c in reversed(self.coeffs):
            acc = acc * g + XPoly.from_const(self.var, c)
        return acc

    def map_coeffs(self, fn) -> "XPoly":
        return XPoly(self.var, self.vars, self.domain, [fn(c) for c in self.coeffs])

    def change_ring(self, fn, new_domain) -> "XPoly":
        return XPoly(self.var, self.vars, new_domain,
                     [c.map_coeffs(fn, new_domain) for c in self.coeffs])

    def extend(self, new_vars) -> "XPoly":
        return XPoly(self.var, tuple(new_vars), self.domain,
                     [c.extend(new_vars) for c in self.coeffs])

    def to_multipoly(self, flat_vars=None) -> MultiPoly:
        """Flatten into a MultiPoly whose registry includes the outer variable."""
        flat = tuple(flat_vars) if flat_vars is not None else (self.var,) + self.vars
        if self.var not in flat:
            raise InvalidInputError("flat registry must contain the outer variable")
        x = MultiPoly.var(self.domain, flat, self.var)
        acc = MultiPoly.zero(self.domain, flat)
        for c in reversed(self.coeffs):
            acc = acc * x + c.extend(flat)
        return acc

    @classmethod
    def from_multipoly(cls, p: MultiPoly, var: str, inner_vars) -> "XPoly":
        """Split a flat MultiPoly into coefficients of powers of ``var``."""
        inner_vars = tuple(inner_vars)
        d = p.degree_in(var)
        coeffs = []
        for k in range(max(d + 1, 1)):
            coeffs.append(p.coeff_of(var, k).restrict(inner_vars))
        return cls(var, inner_vars, p.domain, coeffs)

    def canonical_str(self, display_order=None) -> str:
        return self.to_multipoly().canonical_str(display_order)

    def __repr__(self):
        return f"XPoly({self.canonical_str()!r})"


# ---------------------------------------------------------------------------
# resultants and discriminants
# ---------------------------------------------------------------------------

def resultant(p: XPoly, q: XPoly) -> MultiPoly:
    """Sylvester-determinant resultant eliminating the shared outer variable.

    Convention: res(p, q) = lc(p)^deg(q) * prod q(roots of p), computed as the
    determinant of the Sylvester matrix via fraction-free elimination.
    """
    p._check(q)
    if p.is_zero() or q.is_zero():
        raise InvalidInputError("resultant of the zero polynomial")
    m, n = p.degree(), q.degree()
    dom, vs = p.domain, p.vars
    zero = MultiPoly.zero(dom, vs)
    if m == 0 and n == 0:
        return MultiPoly.one(dom, vs)
    if m == 0:
        return p.coeffs[0] ** n
    if n == 0:
        return q.coeffs[0] ** m
    size = m + n
    rows = []
    prow = [p.coeffs[m - i] for i in range(m + 1)]  # descending
    qrow = [q.coeffs[n - i] for i in range(n + 1)]
    for i in range(n):
        rows.append([zero] * i + prow + [zero] * (size - m - 1 - i))
    for i in range(m):
        rows.append([zero] * i + qrow + [zero] * (size - n - 1 - i))
    return PolyMatrix(rows).det()


def discriminant_in_x(f: XPoly) -> MultiPoly:
    """(-1)^(n(n-1)/2) * res(f, f') for monic f of degree n >= 1."""
    if f.is_zero() or not f.is_monic():
        raise InvalidInputError("discriminant needs a monic polynomial")
    n = f.degree()
    if n < 1:
        raise InvalidInputError("discriminant needs degree >= 1")
    fp = f.derivative()
    if fp.is_zero():
        return MultiPoly.zero(f.domain, f.vars)
    r = resultant(f, fp)
    return -r if (n * (n - 1) // 2) % 2 else r

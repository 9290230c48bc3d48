"""Sparse exact multivariate polynomials over a coefficient domain.

A polynomial carries its domain, an ordered variable registry and a map from
exponent tuples to nonzero coefficients.  Equality is equality of term maps,
so every value is in canonical form by construction.  Values are immutable by
convention; all operations return fresh polynomials.
"""

from __future__ import annotations

from .domains import CoefficientDomain, ZZ
from ..errors import InvalidInputError


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


class MultiPoly:
    __slots__ = ("domain", "vars", "terms")

    def __init__(self, domain: CoefficientDomain, variables, terms: dict):
        self.domain = domain
        self.vars = tuple(variables)
        clean = {}
        n = len(self.vars)
        for exp, c in terms.items():
            if len(exp) != n:
                raise InvalidInputError(
                    f"exponent vector {exp} does not match registry of length {n}"
                )
            if not domain.is_zero(c):
                clean[tuple(exp)] = c
        self.terms = clean

    # -- constructors -------------------------------------------------------

    @classmethod
    def const(cls, domain, variables, c) -> "MultiPoly":
        z = (0,) * len(tuple(variables))
        return cls(domain, variables, {z: c})

    @classmethod
    def from_int(cls, domain, variables, n: int) -> "MultiPoly":
        return cls.const(domain, variables, domain.from_int(n))

    @classmethod
    def zero(cls, domain, variables) -> "MultiPoly":
        return cls(domain, variables, {})

    @classmethod
    def one(cls, domain, variables) -> "MultiPoly":
        return cls.const(domain, variables, domain.one())

    @classmethod
    def var(cls, domain, variables, name: str) -> "MultiPoly":
        variables = tuple(variables)
        if name not in variables:
            raise InvalidInputError(f"variable {name!r} not in registry {variables}")
        exp = tuple(1 if v == name else 0 for v in variables)
        return cls(domain, variables, {exp: domain.one()})

    # -- basic queries -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_value(self):
        """The coefficient of the constant term (the value itself for constants)."""
        if not self.terms:
            return self.domain.zero()
        z = (0,) * len(self.vars)
        if set(self.terms) != {z}:
            raise InvalidInputError("polynomial is not constant")
        return self.terms[z]

    def is_one(self) -> bool:
        return self.is_constant() and not self.is_zero() and (
            self.constant_value() == self.domain.one()
        )

    def total_degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def degree_in(self, name: str) -> int:
        if name not in self.vars:
            return 0
        i = self.vars.index(name)
        if not self.terms:
            return -1
        return max(e[i] for e in self.terms)

    def degree_in_vars(self, names) -> int:
        """Total degree counting only the listed variables; -1 for zero."""
        idx = [self.vars.index(v) for v in names]
        if not self.terms:
            return -1
        return max(sum(e[i] for i in idx) for e in self.terms)

    def coeff_of(self, name: str, k: int) -> "MultiPoly":
        """Coefficient of name**k, as a polynomial in the same registry."""
        i = self.vars.index(name)
        out = {}
        for e, c in self.terms.items():
            if e[i] == k:
                e2 = list(e)
                e2[i] = 0
                out[tuple(e2)] = c
        return MultiPoly(self.domain, self.vars, out)

    def __eq__(self, other):
        return (
            isinstance(other, MultiPoly)
            and self.domain == other.domain
            and self.vars == other.vars
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.domain, self.vars, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    # -- arithmetic ----------------------------------------------------------

    def _check(self, other: "MultiPoly"):
        if self.domain != other.domain or self.vars != other.vars:
            raise InvalidInputError(
                f"operands disagree: {self.domain}{self.vars} vs {other.domain}{other.vars}"
            )

    def _coerce(self, other):
        if isinstance(other, MultiPoly):
            return other
        if isinstance(other, int):
            return MultiPoly.from_int(self.domain, self.vars, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        self._check(other)
        dom = self.domain
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = dom.add(out.get(e, dom.zero()), c)
            if dom.is_zero(s):
                out.pop(e, None)
            else:
                out[e] = s
        return MultiPoly(dom, self.vars, out)

    __radd__ = __add__

    def __neg__(self):
        dom = self.domain
        return MultiPoly(dom, self.vars, {e: dom.neg(c) for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        self._check(other)
        dom = self.domain
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                p = dom.mul(c1, c2)
                s = dom.add(out.get(e, dom.zero()), p)
                if dom.is_zero(s):
                    out.pop(e, None)
                else:
                    out[e] = s
        return MultiPoly(dom, self.vars, out)

    __rmul__ = __mul__

    def scale(self, c) -> "MultiPoly":
        dom = self.domain
        if dom.is_zero(c):
            return MultiPoly.zero(dom, self.vars)
        out = {}
        for e, a in self.terms.items():
            p = dom.mul(a, c)
            if not dom.is_zero(p):
                out[e] = p
        return MultiPoly(dom, self.vars, out)

    def __pow__(self, k: int):
        if k < 0:
            raise InvalidInputError("negative polynomial power")
        out = MultiPoly.one(self.domain, self.vars)
        base = self
        while k:
            if k & 1:
                out = out * base
            if k > 1:
                base = base * base
            k >>= 1
        return out

    # -- leading terms and division -------------------------------------------

    def leading_term(self):
        """(exponent, coefficient) of the graded-lex maximal term."""
        if not self.terms:
            raise InvalidInputError("zero polynomial has no leading term")
        e = max(self.terms, key=lambda t: (sum(t), t))
        return e, self.terms[e]

    def _sub_scaled_shift(self, g: "MultiPoly", shift, c):
        """self - c * x^shift * g, in place on a dict copy (internal)."""
        dom = self.domain
        out = dict(self.terms)
        for e, a in g.terms.items():
            e2 = tuple(x + y for x, y in zip(e, shift))
            s = dom.sub(out.get(e2, dom.zero()), dom.mul(c, a))
            if dom.is_zero(s):
                out.pop(e2, None)
            else:
                out[e2] = s
        return MultiPoly(dom, self.vars, out)

    def div_exact(self, g: "MultiPoly") -> "MultiPoly":
        """Quotient self / g when the division is exact; raises otherwise."""
        self._check(g)
        if g.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        dom = self.domain
        ge, gc = g.leading_term()
        rem = self
        out: dict = {}
        while rem.terms:
            re, rc = rem.leading_term()
            shift = tuple(a - b for a, b in zip(re, ge))
            if any(s < 0 for s in shift):
                raise InvalidInputError("division is not exact")
            q = dom.div(rc, gc)
            out[shift] = q
            rem = rem._sub_scaled_shift(g, shift, q)
        return MultiPoly(dom, self.vars, out)

    def divmod_by(self, g: "MultiPoly"):
        """Multivariate division with remainder by a single divisor (field domains)."""
        self._check(g)
        if g.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        dom = self.domain
        ge, gc = g.leading_term()
        rem = self
        quo: dict = {}
        tail: dict = {}
        while rem.terms:
            re, rc = rem.leading_term()
            shift = tuple(a - b for a, b in zip(re, ge))
            if any(s < 0 for s in shift):
                tail[re] = rc
                rem = MultiPoly(dom, self.vars, {e: c for e, c in rem.terms.items() if e != re})
                continue
            q = dom.div(rc, gc)
            quo[shift] = q
            rem = rem._sub_scaled_shift(g, shift, q)
        return MultiPoly(dom, self.vars, quo), MultiPoly(dom, self.vars, tail)

    def divides(self, f: "MultiPoly") -> bool:
        q, r = f.divmod_by(self)
        return r.is_zero()

    # -- registry and coefficient maps ----------------------------------------

    def extend(self, new_vars) -> "MultiPoly":
        """Reinterpret over a larger registry (matching variables by name)."""
        new_vars = tuple(new_vars)
        if new_vars == self.vars:
            return self
        pos = []
        for v in self.vars:
            if v not in new_vars:
                raise InvalidInputError(f"variable {v!r} missing from target registry")
            pos.append(new_vars.index(v))
        n = len(new_vars)
        out = {}
        for e, c in self.terms.items():
            e2 = [0] * n
            for i, x in enumerate(e):
                e2[pos[i]] = x
            out[tuple(e2)] = c
        return MultiPoly(self.domain, new_vars, out)

    def restrict(self, new_vars) -> "MultiPoly":
        """Drop unused variables from the registry (they must not occur)."""
        new_vars = tuple(new_vars)
        keep = {v: new_vars.index(v) for v in self.vars if v in new_vars}
        n = len(new_vars)
        out = {}
        for e, c in self.terms.items():
            e2 = [0] * n
            for i, x in enumerate(e):
                if x == 0:
                    continue
                v = self.vars[i]
                if v not in keep:
                    raise InvalidInputError(f"variable {v!r} occurs but is being dropped")
                e2[keep[v]] = x
            out[tuple(e2)] = c
        return MultiPoly(self.domain, new_vars, out)

    def map_coeffs(self, fn, new_domain: CoefficientDomain) -> "MultiPoly":
        """Apply a coefficient map (e.g. reduction mod p) termwise."""
        out = {}
        dom = new_domain
        for e, c in self.terms.items():
            c2 = fn(c)
            if not dom.is_zero(c2):
                out[e] = c2
        return MultiPoly(dom, self.vars, out)

    def subst(self, mapping: dict, target_vars) -> "MultiPoly":
        """Substitute variables by polynomials over ``target_vars`` (same domain).

        Every variable of the registry must either appear in ``mapping`` (value:
        MultiPoly over the target registry, or an int) or be present by name in
        the target registry, in which case it is kept.
        """
        dom = self.domain
        target_vars = tuple(target_vars)
        images = []
        for v in self.vars:
            if v in mapping:
                img = mapping[v]
                if isinstance(img, int):
                    img = MultiPoly.from_int(dom, target_vars, img)
                if img.vars != target_vars or img.domain != dom:
                    raise InvalidInputError(f"substitution image for {v!r} has wrong registry")
                images.append(img)
            else:
                images.append(MultiPoly.var(dom, target_vars, v))
        out = MultiPoly.zero(dom, target_vars)
        for e, c in self.terms.items():
            term = MultiPoly.const(dom, target_vars, c)
            for i, x in enumerate(e):
                if x:
                    term = term * images[i] ** x
            out = out + term
        return out

    def eval_all(self, values: dict):
        """Evaluate at domain elements for every variable; returns a domain element."""
        dom = self.domain
        acc = dom.zero()
        vals = [values[v] for v in self.vars]
        for e, c in self.terms.items():
            t = c
            for i, x in enumerate(e):
                if x:
                    t = dom.mul(t, dom.pow(vals[i], x))
            acc = dom.add(acc, t)
        return acc

    # -- integer content -------------------------------------------------------

    def content(self) -> int:
        """gcd of the coefficients over ZZ (0 for the zero polynomial)."""
        if self.domain != ZZ:
            raise InvalidInputError("content is defined over the integers")
        g = 0
        for c in self.terms.values():
            g = _gcd(g, c)
            if g == 1:
                return 1
        return g

    # -- rendering ---------------------------------------------------------------

    def sorted_terms(self):
        """Terms in descending graded-lex order (registry order breaks ties)."""
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)

    def canonical_str(self, display_order=None) -> str:
        """Canonical text form: graded-lex sorted terms, explicit ``^`` and ``*``.

        ``display_order`` only affects how variables are listed inside each
        term; term order always follows the registry.
        """
        if not self.terms:
            return "0"
        dom = self.domain
        order = list(display_order) if display_order is not None else list(self.vars)
        idx = [self.vars.index(v) for v in order]
        pieces = []
        for e, c in self.sorted_terms():
            neg = dom.is_negative(c)
            mag = dom.neg(c) if neg else c
            factors = []
            for j, i in enumerate(idx):
                x = e[i]
                if x == 1:
                    factors.append(order[j])
                elif x > 1:
                    factors.append(f"{order[j]}^{x}")
            if not factors:
                body = dom.render(mag)
            elif mag == dom.one():
                body = "*".join(factors)
            else:
                body = dom.render(mag) + "*" + "*".join(factors)
            pieces.append(("- " if neg else "+ ") + body)
        first = pieces[0]
        out = ("-" + first[2:]) if first.startswith("- ") else first[2:]
        for p in pieces[1:]:
            out += " " + p[0] + " " + p[2:]
        return out

    def __repr__(self):
        return f"MultiPoly({self.canonical_str()!r})"

"""The ring of parameters, the generic element, its characteristic polynomial,
specialization, and the contravariant parameter maps with their identities.

Parameter variables are named T1..Tn, one per basis vector (Ti is dual to
e_i); they are prepended to the algebra's base variables so that symbolic
bases flow through every identity as ordinary polynomial variables.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import (
    AlgebraElement,
    AlgebraMorphism,
    FiniteFreeAlgebra,
    charpoly_elt,
    mul_matrix,
)
from .errors import InvalidInputError
from .report import VerificationReport, algebra_fingerprint
from .ringkit import MultiPoly, XPoly, rank_field

FUNCTORIALITY_CASES = (
    "automorphism-invariance",
    "free-extension-power",
    "nilpotent-quotient-power",
    "product-factorization",
)


@dataclass(frozen=True)
class ParameterRing:
    """A[T1..Tn] together with the algebra the T-variables are dual to."""

    algebra: FiniteFreeAlgebra
    tvars: tuple[str, ...]
    registry: tuple[str, ...]  # tvars followed by the base variables

    def tvar(self, i: int) -> MultiPoly:
        """The parameter variable dual to basis vector i (0-based)."""
        return MultiPoly.var(self.algebra.domain, self.registry, self.tvars[i])


def parameter_ring(b: FiniteFreeAlgebra) -> ParameterRing:
    tvars = tuple(f"T{i + 1}" for i in range(b.rank))
    clash = set(tvars) & set(b.base_vars)
    if clash:
        raise InvalidInputError(f"base variables clash with parameter names: {clash}")
    return ParameterRing(b, tvars, tvars + b.base_vars)


def generic_element(b: FiniteFreeAlgebra) -> AlgebraElement:
    """sum_i Ti * e_i over the parameter ring."""
    ring = parameter_ring(b)
    return b.element([ring.tvar(i) for i in range(b.rank)], ring.registry)


@dataclass(frozen=True)
class GenericCharPoly:
    """Monic degree-n characteristic polynomial of the generic element."""

    algebra: FiniteFreeAlgebra
    ring: ParameterRing
    poly: XPoly

    def __post_init__(self):
        n = self.algebra.rank
        if not self.poly.is_monic() or self.poly.degree() != n:
            raise InvalidInputError("generic characteristic polynomial must be monic of degree rank")
        # coefficient of X^(n-1) must be minus the generic trace
        want = MultiPoly.zero(self.algebra.domain, self.ring.registry)
        for i in range(n):
            tr = self.algebra.trace_of_basis(i).extend(self.ring.registry)
            want = want + self.ring.tvar(i) * tr
        if self.poly.coeff(n - 1) != -want:
            raise InvalidInputError("subleading coefficient disagrees with the generic trace")

    @property
    def flat_registry(self):
        return ("X",) + self.ring.registry

    def to_multipoly(self) -> MultiPoly:
        return self.poly.to_multipoly(self.flat_registry)

    def canonical_str(self) -> str:
        return self.poly.canonical_str(_display_order(self.flat_registry))


def _display_order(flat_registry):
    """Within-term variable listing: base variables, then T's, then X last."""
    xs = [v for v in flat_registry if v == "X"]
    ts = [v for v in flat_registry if v.startswith("T") and v[1:].isdigit()]
    rest = [v for v in flat_registry if v not in xs and v not in ts]
    return rest + ts + xs


def gcp(b: FiniteFreeAlgebra) -> GenericCharPoly:
    """The generic characteristic polynomial, via the division-free kernel."""
    cached = b._caches.get("gcp")
    if cached is not None:
        return cached
    xi = generic_element(b)
    poly = mul_matrix(xi).charpoly("X")
    ring = parameter_ring(b)
    out = GenericCharPoly(b, ring, poly)
    b._caches["gcp"] = out
    return out


def specialize(f, x: AlgebraElement):
    """Substitute Ti by the coordinates of x.

    For a GenericCharPoly returns the element's characteristic polynomial; for
    the generic element returns x itself.
    """
    if isinstance(f, GenericCharPoly):
        b = f.algebra
        if x.algebra is not b:
            raise InvalidInputError("element belongs to a different algebra")
        if len(x.coords) != b.rank:
            raise InvalidInputError("coordinate length mismatch")
        mapping = {f.ring.tvars[i]: x.coords[i] for i in range(b.rank)}
        coeffs = [c.subst(mapping, x.vars) for c in f.poly.coeffs]
        return XPoly("X", x.vars, b.domain, coeffs)
    if isinstance(f, AlgebraElement):
        ring = parameter_ring(f.algebra)
        if f.vars != ring.registry:
            raise InvalidInputError("expected an element over the parameter ring")
        mapping = {ring.tvars[i]: x.coords[i] for i in range(f.algebra.rank)}
        coords = [c.subst(mapping, x.vars) for c in f.coords]
        return f.algebra.element(coords, x.vars)
    raise InvalidInputError("specialize expects a GenericCharPoly or a generic element")


@dataclass(frozen=True)
class ParameterMap:
    """Sym of the dual of an algebra morphism u: a linear substitution on T-variables.

    For u: B -> C with u(e_j) = sum_k u_kj f_k, the map sends the parameter
    T^C_k of C to the linear form sum_j u_kj T^B_j of B's parameter ring.
    """

    source: ParameterRing  # parameters of B (the codomain of the substitution)
    target: ParameterRing  # parameters of C
    images: dict  # target tvar name -> MultiPoly over source registry

    def apply(self, p: MultiPoly) -> MultiPoly:
        if p.vars != self.target.registry:
            raise InvalidInputError("polynomial does not live over the target parameters")
        return p.subst(self.images, self.source.registry)

    def apply_x(self, f: XPoly) -> XPoly:
        coeffs = [self.apply(c) for c in f.coeffs]
        return XPoly(f.var, self.source.registry, f.domain, coeffs)

    def substitution_matrix(self):
        """Rows = coordinates of each image in the source T-variables."""
        rows = []
        for name in self.target.tvars:
            img = self.images[name]
            row = []
            for tv in self.source.tvars:
                row.append(img.coeff_of(tv, 1).restrict(self.source.algebra.base_vars))
            rows.append(row)
        return rows

    def is_injective_on_parameters(self) -> bool:
        """Full row rank of the substitution matrix (checked over field bases)."""
        dom = self.source.algebra.domain
        if not dom.is_field:
            raise InvalidInputError("rank check implemented over field bases")
        mat = [[c.constant_value() for c in row] for row in self.substitution_matrix()]
        return rank_field(mat, dom) == len(self.target.tvars)


def parameter_map(u: AlgebraMorphism) -> ParameterMap:
    src_ring = parameter_ring(u.source)
    tgt_ring = parameter_ring(u.target)
    images = {}
    for k in range(u.target.rank):
        acc = MultiPoly.zero(u.source.domain, src_ring.registry)
        for j in range(u.source.rank):
            c = u.matrix[k][j]
            if not c.is_zero():
                acc = acc + c.extend(src_ring.registry) * src_ring.tvar(j)
        images[tgt_ring.tvars[k]] = acc
    return ParameterMap(src_ring, tgt_ring, images)


# ---------------------------------------------------------------------------
# functoriality identities
# ---------------------------------------------------------------------------

def _report(case, inputs, lhs: XPoly, rhs: XPoly, extra=None) -> VerificationReport:
    witnesses = {
        "lhs": lhs.canonical_str(),
        "rhs": rhs.canonical_str(),
    }
    if extra:
        witnesses.update(extra)
    return VerificationReport(
        check=f"functoriality:{case}",
        inputs=inputs,
        passed=lhs == rhs,
        witnesses=witnesses,
    )


def check_automorphism_invariance(u: AlgebraMorphism) -> VerificationReport:
    """The generic characteristic polynomial is invariant under algebra automorphisms."""
    if u.source is not u.target:
        raise InvalidInputError("expected an automorphism (source == target)")
    f = gcp(u.source)
    v = parameter_map(u)
    lhs = v.apply_x(f.poly)
    return _report("automorphism-invariance",
                   {"algebra": algebra_fingerprint(u.source)}, lhs, f.poly)


def check_free_extension_power(u: AlgebraMorphism, degree: int) -> VerificationReport:
    """For B -> C free of rank d over B: applying the parameter map to the big
    characteristic polynomial gives the small one raised to the d-th power."""
    fb = gcp(u.source)
    fc = gcp(u.target)
    v = parameter_map(u)
    lhs = v.apply_x(fc.poly)
    rhs = fb.poly ** degree
    return _report("free-extension-power",
                   {"source": algebra_fingerprint(u.source),
                    "target": algebra_fingerprint(u.target), "degree": degree},
                   lhs, rhs)


def check_nilpotent_quotient_power(u: AlgebraMorphism, exponent: int) -> VerificationReport:
    """For a quotient B -> C = B/J by a nilpotent ideal with free graded pieces:
    the characteristic polynomial of B equals the image of the quotient's raised
    to the filtration exponent."""
    fb = gcp(u.source)
    fc = gcp(u.target)
    v = parameter_map(u)
    rhs = v.apply_x(fc.poly ** exponent)
    return _report("nilpotent-quotient-power",
                   {"source": algebra_fingerprint(u.source),
                    "target": algebra_fingerprint(u.target), "exponent": exponent},
                   fb.poly, rhs)


def check_product_factorization(b: FiniteFreeAlgebra) -> VerificationReport:
    """The characteristic polynomial of a product is the product of the factors',
    embedded along the parameter maps of the projections."""
    if not b.projections:
        raise InvalidInputError("algebra does not record product projections")
    f = gcp(b)
    rhs = XPoly.one("X", f.ring.registry, b.domain)
    for proj in b.projections:
        qi = parameter_map(proj)
        rhs = rhs * qi.apply_x(gcp(proj.target).poly)
    return _report("product-factorization",
                   {"algebra": algebra_fingerprint(b)}, f.poly, rhs)


def verify_functoriality(case: str, **data) -> VerificationReport:
    """Dispatch one of the four parameter-map identities by name."""
    if case == "automorphism-invariance":
        return check_automorphism_invariance(data["morphism"])
    if case == "free-extension-power":
        return check_free_extension_power(data["morphism"], data["degree"])
    if case == "nilpotent-quotient-power":
        return check_nilpotent_quotient_power(data["morphism"], data["exponent"])
    if case == "product-factorization":
        return check_product_factorization(data["algebra"])
    raise InvalidInputError(f"unknown functoriality case {case!r}; known: {FUNCTORIALITY_CASES}")

"""The power matrix of the generic element, determinant-based injectivity
certificates, norm forms, and the brute-force reducibility probe.

The algebra map S[X]/(F) -> S (x) B sending X to the generic element is
injective (and stays so under base change) exactly when the determinant of
the power matrix is a regular element of the parameter ring.  For a recorded
monogenic presentation that determinant is monic in the parameter dual to the
degree-one basis vector, which is a proof-grade certificate; otherwise the
artifact reports sampled evidence (nonzero over QQ and modulo each supplied
prime).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .algebra import FiniteFreeAlgebra, charpoly_elt
from .errors import BudgetExceededError, InvalidInputError
from .generic import GenericCharPoly, gcp, generic_element, parameter_ring, _display_order
from .report import VerificationReport, algebra_fingerprint
from .ringkit import GF, MultiPoly, PolyMatrix, XPoly, ZZ
from .ringkit.domains import ExtensionField, PrimeField


@dataclass(frozen=True)
class PowerMatrix:
    """Columns j = coordinates of the j-th power of the generic element, j < n."""

    algebra: FiniteFreeAlgebra
    matrix: PolyMatrix
    det: MultiPoly

    def __post_init__(self):
        # column 0 carries the unit; entry (i, j) is homogeneous of degree j
        n = self.algebra.rank
        ring = parameter_ring(self.algebra)
        for i in range(n):
            c = self.matrix[i, 0]
            want = self.algebra.unit[i].extend(ring.registry)
            if c != want:
                raise InvalidInputError("column 0 of the power matrix must be the unit")
        for j in range(n):
            for i in range(n):
                e = self.matrix[i, j]
                if not e.is_zero() and e.degree_in_vars(ring.tvars) != j:
                    raise InvalidInputError("power-matrix entries must be homogeneous of degree j")


def power_matrix(b: FiniteFreeAlgebra) -> PowerMatrix:
    cached = b._caches.get("power_matrix")
    if cached is not None:
        return cached
    xi = generic_element(b)
    n = b.rank
    cols = []
    cur = b.one(xi.vars)
    for _ in range(n):
        cols.append(cur.coords)
        cur = cur * xi
    mat = PolyMatrix([[cols[j][i] for j in range(n)] for i in range(n)])
    out = PowerMatrix(b, mat, mat.det())
    b._caches["power_matrix"] = out
    return out


@dataclass(frozen=True)
class InjectivityCertificate:
    """Certificate that the determinant of the power matrix is regular.

    kinds: ``monic-in-variable`` (with the variable and its degree, which is
    always n(n-1)/2), ``nonzero-mod-primes`` (sampled evidence), or ``failed``
    (witness prime, or the identically-zero flag).
    """

    kind: str
    grade: str
    determinant: MultiPoly
    variable: str | None = None
    degree: int | None = None
    primes: tuple[int, ...] = ()
    witness_prime: int | None = None
    identically_zero: bool = False

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "grade": self.grade,
            "determinant": self.determinant.canonical_str(_display_order(self.determinant.vars)),
            "variable": self.variable,
            "degree": self.degree,
            "primes": list(self.primes),
            "witness_prime": self.witness_prime,
            "identically_zero": self.identically_zero,
        }


def _monic_in(det: MultiPoly, var: str, tvars) -> bool:
    n_deg = det.degree_in(var)
    lead = det.coeff_of(var, n_deg)
    return lead.is_one()


def injectivity_certificate(b: FiniteFreeAlgebra, primes=()) -> InjectivityCertificate:
    """Certify (or refute) that the power-matrix determinant is regular.

    With a recorded monogenic presentation, checks the determinant is monic of
    degree n(n-1)/2 in the parameter dual to the generator (proof grade).
    Otherwise tries the monic shape in each parameter in turn (evidence grade),
    then falls back to sampling: nonzero over the base and modulo each prime
    in ``primes`` (required for integer bases without a presentation).
    """
    ring = parameter_ring(b)
    u = power_matrix(b)
    det = u.det
    n = b.rank
    target_degree = n * (n - 1) // 2

    if det.is_zero():
        return InjectivityCertificate("failed", "proof", det, identically_zero=True)

    if b.presentation is not None and b.rank >= 1:
        var = ring.tvars[1] if n >= 2 else ring.tvars[0]
        if n == 1 or (
            det.degree_in(var) == target_degree
            and det.degree_in_vars(ring.tvars) == target_degree
            and _monic_in(det, var, ring.tvars)
        ):
            return InjectivityCertificate(
                "monic-in-variable", "proof", det, variable=var, degree=target_degree
            )

    for var in ring.tvars:
        if det.degree_in(var) == target_degree and _monic_in(det, var, ring.tvars):
            return InjectivityCertificate(
                "monic-in-variable", "evidence", det, variable=var, degree=target_degree
            )

    if b.domain == ZZ:
        if not primes:
            raise InvalidInputError(
                "a nonempty prime sample is required for integer bases without a presentation"
            )
        for p in primes:
            dom = GF(p)
            red = det.map_coeffs(lambda c: dom.from_int(c), dom)
            if red.is_zero():
                return InjectivityCertificate(
                    "failed", "evidence", det, primes=tuple(primes), witness_prime=p
                )
        return InjectivityCertificate(
            "nonzero-mod-primes", "evidence", det, primes=tuple(primes)
        )

    # field bases: the determinant is nonzero as a polynomial, hence regular
    return InjectivityCertificate("nonzero-mod-primes", "evidence", det)


# ---------------------------------------------------------------------------
# norm forms
# ---------------------------------------------------------------------------

def norm_form(b: FiniteFreeAlgebra) -> MultiPoly:
    """Norm of the generic element: (-1)^n times the constant coefficient."""
    f = gcp(b)
    c = f.poly.coeff(0)
    return -c if b.rank % 2 else c


def norm_gcp_relation(b: FiniteFreeAlgebra) -> VerificationReport:
    """The substitution Ti -> unit_i * X - Ti turns the norm form into the
    generic characteristic polynomial, bit-exactly."""
    f = gcp(b)
    ring = f.ring
    nf = norm_form(b)
    flat = f.flat_registry
    x = MultiPoly.var(b.domain, flat, "X")
    mapping = {}
    for i in range(b.rank):
        ui = b.unit[i].extend(flat)
        ti = MultiPoly.var(b.domain, flat, ring.tvars[i])
        mapping[ring.tvars[i]] = ui * x - ti
    lhs = nf.subst(mapping, flat)
    rhs = f.to_multipoly()
    disp = _display_order(flat)
    return VerificationReport(
        check="norm-to-charpoly-substitution",
        inputs={"algebra": algebra_fingerprint(b)},
        passed=lhs == rhs,
        witnesses={
            "norm_form": nf.canonical_str(_display_order(nf.vars)),
            "substituted": lhs.canonical_str(disp),
            "charpoly": rhs.canonical_str(disp),
        },
    )


# ---------------------------------------------------------------------------
# brute-force reducibility probe
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SmokeReport:
    """Outcome of the exhaustive low-degree factor search."""

    reducible: bool | None  # None would mean "not determined"; never emitted
    witness: tuple[str, str] | None
    candidates_tried: int
    note: str = ""


def _char2_sqrt(f: MultiPoly):
    """Exact square root in characteristic 2, or None."""
    dom = f.domain
    if dom.characteristic != 2 or not isinstance(dom, (PrimeField, ExtensionField)):
        return None
    terms = {}
    for e, c in f.terms.items():
        if any(x % 2 for x in e):
            return None
        root = c if isinstance(dom, PrimeField) else dom.sqrt_char2(c)
        terms[tuple(x // 2 for x in e)] = root
    g = MultiPoly(dom, f.vars, terms)
    return g if g * g == f else None


def _monomials_up_to(nvars: int, degree: int):
    """All exponent tuples with total degree <= degree, graded-lex order."""
    out = []
    for d in range(degree + 1):
        for combo in itertools.combinations_with_replacement(range(nvars), d):
            e = [0] * nvars
            for i in combo:
                e[i] += 1
            out.append(tuple(e))
    return sorted(set(out), key=lambda e: (sum(e), e))


def irreducibility_smoke(f: MultiPoly, max_factor_degree: int = 2,
                         budget: int = 200000) -> SmokeReport:
    """Exhaustively search for a factorization with a factor of small degree.

    A perfect-square fast path (characteristic 2) runs first regardless of
    size.  The exhaustive search budget is documented as: candidate factor
    degree <= 2, at most 3 variables, characteristic at most 3.
    """
    dom = f.domain
    if not dom.is_field or dom.size is None:
        raise InvalidInputError("the reducibility probe runs over finite fields")
    if f.total_degree() < 1:
        raise InvalidInputError("constant polynomials are out of scope")

    sqrt = _char2_sqrt(f)
    if sqrt is not None and sqrt.total_degree() >= 1:
        s = sqrt.canonical_str(_display_order(sqrt.vars))
        return SmokeReport(True, (s, s), 0, note="perfect square")

    nvars = len(f.vars)
    if max_factor_degree > 2 or nvars > 3 or dom.characteristic > 3:
        raise BudgetExceededError(
            "documented probe budget: factor degree <= 2, <= 3 variables, characteristic <= 3"
        )
    monos = _monomials_up_to(nvars, min(max_factor_degree, f.total_degree() - 1))
    if dom.size ** len(monos) > budget:
        raise BudgetExceededError(
            f"candidate space {dom.size}**{len(monos)} exceeds budget {budget}"
        )
    elems = list(dom.elements())
    tried = 0
    disp = _display_order(f.vars)
    for coeffs in itertools.product(elems, repeat=len(monos)):
        g = MultiPoly(dom, f.vars, dict(zip(monos, coeffs)))
        if g.total_degree() < 1:
            continue
        # normalize: leading coefficient 1 avoids rescaled duplicates
        _, lc = g.leading_term()
        if lc != dom.one():
            continue
        tried += 1
        q, r = f.divmod_by(g)
        if r.is_zero() and q.total_degree() >= 1:
            return SmokeReport(True, (g.canonical_str(disp), q.canonical_str(disp)), tried)
    return SmokeReport(False, None, tried)

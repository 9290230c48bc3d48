import random

import pytest

from finfree.algebra import base_change, diagonal, from_monogenic, product
from finfree.catalog import (
    CATALOG,
    gaussian_integers,
    nilpotent_biquadratic,
    radicial_biquadratic,
    symbolic_cubic,
)
from finfree.errors import BudgetExceededError, InvalidInputError
from finfree.generic import gcp, parameter_map, parameter_ring
from finfree.kronecker import (
    injectivity_certificate,
    irreducibility_smoke,
    norm_form,
    norm_gcp_relation,
    power_matrix,
)
from finfree.ringkit import GF, QQ, ZZ, MultiPoly, kernel_basis_field
from fractions import Fraction

PRIMES_TO_50 = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)


def test_power_matrix_gaussian():
    zi = gaussian_integers()
    u = power_matrix(zi)
    reg = ("T1", "T2")
    t1 = MultiPoly.var(ZZ, reg, "T1")
    t2 = MultiPoly.var(ZZ, reg, "T2")
    one = MultiPoly.one(ZZ, reg)
    zero = MultiPoly.zero(ZZ, reg)
    assert u.matrix.entries == [[one, t1], [zero, t2]]
    assert u.det == t2


def test_power_matrix_cubic_golden():
    cubic = symbolic_cubic()
    u = power_matrix(cubic)
    reg = parameter_ring(cubic).registry

    def v(name):
        return MultiPoly.var(ZZ, reg, name)

    T2, T3 = v("T2"), v("T3")
    a0, a1, a2 = v("a0"), v("a1"), v("a2")
    expected = (T2 ** 3 - 2 * a2 * T2 ** 2 * T3 + (a1 + a2 ** 2) * T2 * T3 ** 2
                + (a0 - a1 * a2) * T3 ** 3)
    assert u.det == expected


def test_power_matrix_nilpotent_is_singular():
    bq = nilpotent_biquadratic()
    # (xi - T1)^3 = 0 forces a linear dependence among 1, xi, xi^2, xi^3
    from finfree.generic import generic_element

    xi = generic_element(bq)
    t1 = MultiPoly.var(ZZ, xi.vars, "T1")
    shifted = xi - bq.one(xi.vars) * t1
    assert (shifted * shifted * shifted).is_zero()
    assert power_matrix(bq).det.is_zero()


def test_certificates_catalog():
    zi = gaussian_integers()
    cert = injectivity_certificate(zi, (2, 3, 5))
    assert cert.kind == "monic-in-variable"
    assert cert.variable == "T2" and cert.degree == 1 and cert.grade == "proof"

    cubic = symbolic_cubic()
    cert = injectivity_certificate(cubic)
    assert cert.kind == "monic-in-variable"
    assert cert.variable == "T2" and cert.degree == 3 and cert.grade == "proof"

    bq = nilpotent_biquadratic()
    cert = injectivity_certificate(bq, (2,))
    assert cert.kind == "failed" and cert.identically_zero

    br = radicial_biquadratic()
    cert = injectivity_certificate(br)
    assert cert.kind == "failed" and cert.identically_zero


def test_certificate_monic_scan_without_presentation():
    # split rank 2 has det U = T2 - T1: monic in T2 but no presentation -> evidence
    d2 = diagonal(ZZ, 2)
    cert = injectivity_certificate(d2, (2, 3))
    assert cert.kind == "monic-in-variable" and cert.grade == "evidence"
    # split rank 3: Vandermonde determinant is not monic in any variable
    d3 = diagonal(ZZ, 3)
    cert = injectivity_certificate(d3, PRIMES_TO_50)
    assert cert.kind == "nonzero-mod-primes" and cert.grade == "evidence"


def test_certificate_needs_primes_for_structure_constants():
    d3 = diagonal(ZZ, 3)
    with pytest.raises(InvalidInputError):
        injectivity_certificate(d3, ())


def test_homogeneity_and_monicity_across_monogenic_catalog():
    ring_names = ["gaussian-integers", "sqrt2-ring", "cbrt2-ring", "dual-numbers",
                  "quartic-ring", "quintic-ring"]
    for entry in CATALOG:
        if not entry.monogenic:
            continue
        assert entry.name in ring_names
        b = entry.build()
        n = b.rank
        u = power_matrix(b)
        ring = parameter_ring(b)
        target = n * (n - 1) // 2
        for e in u.det.terms:
            d = sum(e[ring.registry.index(tv)] for tv in ring.tvars)
            assert d == target
        cert = injectivity_certificate(b)
        assert cert.kind == "monic-in-variable" and cert.degree == target


def test_det_nonzero_mod_small_primes_for_simple_members():
    for entry in CATALOG:
        if entry.field_base or not entry.locally_simple:
            continue
        det = power_matrix(entry.build()).det
        for p in PRIMES_TO_50:
            dom = GF(p)
            assert not det.map_coeffs(lambda c: dom.from_int(c), dom).is_zero(), (entry.name, p)


def test_dependence_prob_at_specializations():
    """det U = 0 exactly when some nonzero tuple (s_j) kills sum s_j xi^j,
    probed at integer parameter values."""
    rng = random.Random(37)
    zi = gaussian_integers()
    u = power_matrix(zi)
    found_nonzero = False
    for _ in range(10):
        vals = {v: Fraction(rng.randint(-5, 5)) for v in u.matrix.vars}
        spec = [[c.map_coeffs(lambda x: Fraction(x), QQ).eval_all(vals) for c in row]
                for row in u.matrix.entries]
        from finfree.ringkit import det_field

        if det_field(spec, QQ) != 0:
            found_nonzero = True
    assert found_nonzero

    # nilpotent biquadratic: the specialized power matrix always has a kernel
    bq = nilpotent_biquadratic()
    ub = power_matrix(bq)
    vals = {v: Fraction(rng.randint(1, 5)) for v in ub.matrix.vars}
    spec = [[c.map_coeffs(lambda x: Fraction(x), QQ).eval_all(vals) for c in row]
            for row in ub.matrix.entries]
    ker = kernel_basis_field(spec, QQ)
    assert ker
    # the kernel tuple really annihilates the powers of the specialized element
    s = ker[0]
    x = bq.element([int(vals[f"T{i+1}"]) for i in range(4)])
    acc = bq.zero()
    cur = bq.one()
    for j in range(4):
        num = s[j]
        assert num.denominator in (1, 2, 4)  # clear denominators below
    scale = 1
    for j in range(4):
        scale = scale * s[j].denominator // __import__("math").gcd(scale, s[j].denominator)
    for j in range(4):
        acc = acc + cur * int(s[j] * scale)
        cur = cur * x
    assert acc.is_zero()


def test_norm_forms():
    zi = gaussian_integers()
    reg = ("T1", "T2")
    t1 = MultiPoly.var(ZZ, reg, "T1")
    t2 = MultiPoly.var(ZZ, reg, "T2")
    assert norm_form(zi) == t1 * t1 + t2 * t2
    d2 = diagonal(ZZ, 2)
    assert norm_form(d2) == t1 * t2

    br = radicial_biquadratic()
    nf = norm_form(br)
    reg4 = ("T1", "T2", "T3", "T4", "x", "y")
    F2 = GF(2)

    def v(name):
        return MultiPoly.var(F2, reg4, name)

    inner = v("T1") ** 2 + v("T2") ** 2 * v("x") + v("T3") ** 2 * v("y") \
        + v("T4") ** 2 * v("x") * v("y")
    assert nf == inner ** 2


def test_norm_form_multiplicative_across_products():
    for entry in CATALOG:
        b = entry.build()
        if not b.projections:
            continue
        nf = norm_form(b)
        rhs = MultiPoly.one(b.domain, parameter_ring(b).registry)
        for proj in b.projections:
            qi = parameter_map(proj)
            rhs = rhs * qi.apply(norm_form(proj.target))
        assert nf == rhs, entry.name


def test_norm_gcp_relation():
    cases = [gaussian_integers(), diagonal(ZZ, 2), diagonal(ZZ, 1),
             nilpotent_biquadratic(), radicial_biquadratic(), symbolic_cubic()]
    for b in cases:
        r = norm_gcp_relation(b)
        assert r.passed, r.witnesses


def test_smoke_irreducible_quadratic_extension():
    # the norm form of GF(4)/GF(2) is T1^2 + T1*T2 + T2^2: no degree-1 factor
    f4 = from_monogenic(GF(2), [1, 1])
    nf = norm_form(f4)
    rep = irreducibility_smoke(nf, 1)
    assert rep.reducible is False
    assert rep.candidates_tried > 0


def test_smoke_square_witness():
    rep = irreducibility_smoke(norm_form(radicial_biquadratic()))
    assert rep.reducible is True
    assert rep.note == "perfect square"
    g, h = rep.witness
    assert g == h


def test_smoke_split_witness():
    d2 = diagonal(GF(3), 2)
    rep = irreducibility_smoke(norm_form(d2), 1)
    assert rep.reducible is True
    assert rep.witness == ("T1", "T2")


def test_smoke_budget_guard():
    # four variables exceed the documented probe budget
    d4 = diagonal(GF(2), 4)
    with pytest.raises(BudgetExceededError):
        irreducibility_smoke(norm_form(d4), 2)

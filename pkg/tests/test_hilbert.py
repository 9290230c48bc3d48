import random

import pytest

from finfree.algebra import base_change, change_basis, charpoly_elt, diagonal, from_monogenic
from finfree.catalog import (
    cbrt2_ring,
    dedekind_order,
    gaussian_integers,
    nilpotent_biquadratic,
    sqrt2_ring,
)
from finfree.errors import BudgetExceededError
from finfree.generic import gcp, specialize
from finfree.hilbert import (
    splitting_data,
    suite_verdict,
    theorem33_check,
    theorem34_check,
    theorem35_check,
    zahlbericht_suite,
)
from finfree.ringkit import GF, ZZ, MultiPoly, UniPoly, XPoly, factor_gf


def test_splitting_data_gaussian():
    zi = gaussian_integers()
    for p, nfac in ((2, 1), (3, 1), (5, 2)):
        data = splitting_data(zi, p)
        assert len(data.factors) == nfac
        assert sum(e * g.degree() for g, e in data.factors) == 2
        for vmap in data.maps:
            assert vmap.is_injective_on_parameters()


def test_splitting_idempotents_sum_to_one():
    zc = cbrt2_ring()
    dom = GF(31)
    data = splitting_data(zc, 31)
    g = UniPoly(dom, [dom.from_int(-2), dom.zero(), dom.zero(), dom.one()])
    total = UniPoly.zero(dom)
    for e in data.idempotents:
        total = total + e
    assert (total % g).is_one()


def test_theorem34_gaussian():
    zi = gaussian_integers()
    for p in (2, 3, 5):
        r = theorem34_check(zi, p)
        assert r.passed
        assert r.witnesses["degree_n_congruence_holds"] is True
    r = theorem34_check(zi, 3)
    assert r.witnesses["power_matrix_det_mod_p"] == "T2"


def test_theorem34_error_branch():
    r = theorem34_check(nilpotent_biquadratic(), 2)
    assert r.passed is None and "presentation" in r.error


def test_theorem33_gaussian_split_prime():
    """p = 5: independent oracle by direct factorization of (X-T1)^2 + T2^2 mod 5."""
    zi = gaussian_integers()
    r = theorem33_check(zi, 5)
    assert r.passed
    dom = GF(5)
    reg = ("T1", "T2")
    flat = ("X",) + reg

    def v(name):
        return MultiPoly.var(dom, flat, name)

    # roots of Y^2+1 mod 5 are 2 and 3: F factors as (X - T1 - 2 T2)(X - T1 - 3 T2)
    pi1 = v("X") - v("T1") - 2 * v("T2")
    pi2 = v("X") - v("T1") - 3 * v("T2")
    fiber = base_change(zi, dom)
    f_mod = gcp(fiber).to_multipoly()
    assert f_mod == pi1 * pi2
    shapes = r.witnesses["factor_shapes"]
    assert sorted(s["pi"] for s in shapes) == sorted(
        [pi1.canonical_str(("T1", "T2", "X")), pi2.canonical_str(("T1", "T2", "X"))]
    )


def test_theorem33_gaussian_ramified_prime():
    """p = 2: F = Pi^2 with Pi = X + T1 + T2 (direct expansion oracle)."""
    zi = gaussian_integers()
    r = theorem33_check(zi, 2)
    assert r.passed
    shapes = r.witnesses["factor_shapes"]
    assert len(shapes) == 1 and shapes[0]["e"] == 2
    assert shapes[0]["pi"] == "X + T1 + T2"
    dom = GF(2)
    flat = ("X", "T1", "T2")

    def v(name):
        return MultiPoly.var(dom, flat, name)

    pi = v("X") + v("T1") + v("T2")
    fiber = base_change(zi, dom)
    assert gcp(fiber).to_multipoly() == pi * pi


def test_theorem33_cbrt2_patterns():
    zc = cbrt2_ring()
    # p = 5: Y^3 - 2 = (Y - 3)(Y^2 + 3Y + 4) mod 5: degrees 1 and 2
    r = theorem33_check(zc, 5)
    assert r.passed
    assert sorted(s["deg_X"] for s in r.witnesses["factor_shapes"]) == [1, 2]
    # p = 3: (Y + 1)^3 shape
    r = theorem33_check(zc, 3)
    assert r.passed
    shapes = r.witnesses["factor_shapes"]
    assert len(shapes) == 1 and shapes[0]["e"] == 3 and shapes[0]["deg_X"] == 1
    # oracle: the univariate factorization pattern matches
    dom = GF(3)
    g = UniPoly(dom, [dom.from_int(-2), dom.zero(), dom.zero(), dom.one()])
    fac = factor_gf(g)
    assert len(fac) == 1 and fac[0][1] == 3
    # p in {2, 7, 31} all pass
    for p in (2, 7, 31):
        assert theorem33_check(zc, p).passed


def test_theorem33_rhs_specializes_to_element_charpoly():
    """CRT bookkeeping consistency: the factored right-hand side, specialized at
    any element, reproduces that element's characteristic polynomial mod p."""
    rng = random.Random(47)
    zi = gaussian_integers()
    p = 5
    dom = GF(p)
    fiber = base_change(zi, dom)
    data = splitting_data(zi, p)
    f = gcp(fiber)
    rhs = XPoly.one("X", f.ring.registry, dom)
    for (gi, ei), quot, vmap in zip(data.factors, data.quotients, data.maps):
        rhs = rhs * vmap.apply_x(gcp(quot).poly) ** ei
    for _ in range(20):
        x = fiber.element([dom.from_int(rng.randint(0, p - 1)) for _ in range(2)])
        mapping = {f.ring.tvars[i]: x.coords[i] for i in range(2)}
        spec = XPoly("X", x.vars, dom, [c.subst(mapping, x.vars) for c in rhs.coeffs])
        assert spec == charpoly_elt(x)


def test_theorem35_frozen_values():
    r = theorem35_check(gaussian_integers())
    assert r.passed and r.witnesses["content_of_generic_discriminant"] == 4
    assert r.witnesses["trace_form_discriminant"] == -4
    r = theorem35_check(sqrt2_ring())
    assert r.passed and r.witnesses["content_of_generic_discriminant"] == 8
    r = theorem35_check(cbrt2_ring())
    assert r.passed and r.witnesses["content_of_generic_discriminant"] == 108
    assert r.witnesses["trace_form_discriminant"] == -108


def test_theorem35_structure_constants_input():
    r = theorem35_check(dedekind_order())
    assert r.passed and r.witnesses["content_of_generic_discriminant"] == 503


def test_theorem35_degenerate_zero():
    r = theorem35_check(nilpotent_biquadratic())
    assert r.passed
    assert r.witnesses["content_of_generic_discriminant"] == 0
    assert r.witnesses["trace_form_discriminant"] == 0


def test_theorem35_budget():
    with pytest.raises(BudgetExceededError):
        theorem35_check(diagonal(ZZ, 5))


def test_theorem35_content_invariant_under_unimodular_basis_change():
    zi = gaussian_integers()
    sheared = change_basis(zi, [[1, 1], [0, 1]])
    r1 = theorem35_check(zi)
    r2 = theorem35_check(sheared)
    assert r1.passed and r2.passed
    assert (r1.witnesses["content_of_generic_discriminant"]
            == r2.witnesses["content_of_generic_discriminant"] == 4)


def test_suite_counts_and_verdicts():
    zi = gaussian_integers()
    reports = zahlbericht_suite(zi, [2, 3, 5])
    assert len(reports) == 7 and all(r.passed for r in reports)
    assert suite_verdict(reports) == "pass"

    zc = cbrt2_ring()
    reports = zahlbericht_suite(zc, [2, 3, 5, 7])
    assert len(reports) == 9 and all(r.passed for r in reports)

    bq = nilpotent_biquadratic()
    reports = zahlbericht_suite(bq, [2])
    assert len(reports) == 3
    assert reports[0].passed is None and reports[1].passed is None
    assert reports[2].passed is True  # content(0) = 0 = |0|
    assert suite_verdict(reports) == "error"


def test_suite_deterministic_order():
    zi = gaussian_integers()
    reports = zahlbericht_suite(zi, [5, 2])
    labels = [(r.check, r.inputs.get("prime")) for r in reports]
    assert labels == [
        ("hilbert-theorem-33", 2), ("hilbert-theorem-34", 2),
        ("hilbert-theorem-33", 5), ("hilbert-theorem-34", 5),
        ("hilbert-theorem-35", None),
    ]

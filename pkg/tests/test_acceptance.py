"""Acceptance battery: one test per criterion, each printing a PASS line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the per-criterion
lines.  Expected values tagged as derived were computed by the independent
oracles embedded in each test (cofactor expansion, Euclidean resultants,
direct expansion, exhaustive searches); golden formulas are frozen from the
rank-3 and rank-4 closed forms with the documented index shift (the classical
T0-based parameter names correspond to the 1-based T1.. names used here).
"""

import itertools
import json
import random

import pytest

from finfree.algebra import base_change, charpoly_elt, diagonal, from_monogenic
from finfree.catalog import (
    CATALOG,
    cbrt2_ring,
    gaussian_integers,
    nilpotent_biquadratic,
    radicial_biquadratic,
    sqrt2_ring,
    symbolic_cubic,
    dedekind_order,
)
from finfree.cli import main as cli_main
from finfree.fibers import (
    find_generator,
    generator_tower,
    local_factors,
    locally_simple,
    locally_simple_at,
    sampled_points_verdicts,
)
from finfree.generic import gcp, parameter_ring
from finfree.hilbert import splitting_data, theorem33_check, theorem35_check
from finfree.kronecker import (
    injectivity_certificate,
    irreducibility_smoke,
    norm_form,
    power_matrix,
)
from finfree.ringkit import (
    GF,
    ZZ,
    MultiPoly,
    PolyMatrix,
    UniPoly,
    XPoly,
    factor_gf,
    resultant,
)

PRIMES_TO_50 = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)


def _pass(num, msg):
    print(f"ACCEPTANCE {num}: PASS - {msg}")


def test_criterion_1_split_algebra_golden():
    """gcp(diagonal(A, n)) equals the expanded product of (X - Ti), n <= 6."""
    for n in range(1, 7):
        d = diagonal(ZZ, n)
        f = gcp(d)
        flat = f.flat_registry
        x = MultiPoly.var(ZZ, flat, "X")
        expect = MultiPoly.one(ZZ, flat)
        for i in range(n):
            expect = expect * (x - MultiPoly.var(ZZ, flat, f"T{i+1}"))
        assert f.to_multipoly() == expect, n
    _pass(1, "split-algebra characteristic polynomial bit-exact for n <= 6")


def test_criterion_2_symbolic_cubic_golden():
    """The four-line rank-3 closed form, bit-exact after the index shift."""
    f = gcp(symbolic_cubic())
    flat = f.flat_registry

    def v(name):
        return MultiPoly.var(ZZ, flat, name)

    X, T1, T2, T3 = v("X"), v("T1"), v("T2"), v("T3")
    a0, a1, a2 = v("a0"), v("a1"), v("a2")
    expected = (
        (X - T1) ** 3
        + (X - T1) ** 2 * (a2 * T2 + (2 * a1 - a2 ** 2) * T3)
        + (X - T1)
        * (a1 * T2 ** 2 + (3 * a0 - a1 * a2) * T2 * T3 + (a1 ** 2 - 2 * a0 * a2) * T3 ** 2)
        + (a0 * T2 ** 3 - a0 * a2 * T2 ** 2 * T3 + a0 * a1 * T2 * T3 ** 2 - a0 ** 2 * T3 ** 3)
    )
    assert f.to_multipoly() == expected
    _pass(2, "symbolic cubic reproduces the four-line closed form bit-exactly")


def test_criterion_3_rank4_shapes():
    """Nilpotent rank 4: (X - T1)^4; radicial rank 4: the squared norm form,
    exhibited as a square by the reducibility probe."""
    f = gcp(nilpotent_biquadratic())
    flat = f.flat_registry
    x = MultiPoly.var(ZZ, flat, "X")
    t1 = MultiPoly.var(ZZ, flat, "T1")
    assert f.to_multipoly() == (x - t1) ** 4

    br = radicial_biquadratic()
    nf = norm_form(br)
    F2 = GF(2)
    reg = ("T1", "T2", "T3", "T4", "x", "y")

    def v(name):
        return MultiPoly.var(F2, reg, name)

    inner = (v("T1") ** 2 + v("T2") ** 2 * v("x") + v("T3") ** 2 * v("y")
             + v("T4") ** 2 * v("x") * v("y"))
    assert nf == inner ** 2
    probe = irreducibility_smoke(nf)
    assert probe.reducible is True and probe.note == "perfect square"
    g, h = probe.witness
    assert g == h
    _pass(3, "rank-4 golden shapes hold; the radicial norm form is a witnessed square")


def test_criterion_4_power_matrix_certificates():
    """Cubic determinant golden formula; homogeneity and monicity for every
    monogenic catalog member of rank <= 5."""
    u = power_matrix(symbolic_cubic())
    reg = parameter_ring(symbolic_cubic()).registry

    def v(name):
        return MultiPoly.var(ZZ, reg, name)

    T2, T3 = v("T2"), v("T3")
    a0, a1, a2 = v("a0"), v("a1"), v("a2")
    assert u.det == (T2 ** 3 - 2 * a2 * T2 ** 2 * T3 + (a1 + a2 ** 2) * T2 * T3 ** 2
                     + (a0 - a1 * a2) * T3 ** 3)

    checked = 0
    for entry in CATALOG:
        if not entry.monogenic:
            continue
        b = entry.build()
        assert b.rank <= 5
        n = b.rank
        target = n * (n - 1) // 2
        det = power_matrix(b).det
        ring = parameter_ring(b)
        for e in det.terms:
            assert sum(e[ring.registry.index(tv)] for tv in ring.tvars) == target
        cert = injectivity_certificate(b)
        assert cert.kind == "monic-in-variable"
        assert cert.degree == target and cert.grade == "proof"
        checked += 1
    assert checked >= 5
    _pass(4, f"cubic determinant golden; homogeneity and monicity on {checked} "
             "monogenic members up to rank 5")


def test_criterion_5_equivalence_at_desk_scale():
    """Local simplicity (decided through fibers) agrees with nonvanishing of
    the power-matrix determinant mod every p <= 50 and over the rationals,
    across the whole catalog; the two rank-4 degenerate members fail both."""
    assert len(CATALOG) >= 10
    names = {e.name for e in CATALOG}
    for required in ("gaussian-integers", "sqrt2-ring", "cbrt2-ring", "split-rank-2",
                     "split-rank-3", "split-rank-4", "gaussian-pair",
                     "nilpotent-biquadratic", "radicial-biquadratic", "dedekind-order"):
        assert required in names

    failing = set()
    for entry in CATALOG:
        b = entry.build()
        det = power_matrix(b).det

        if entry.field_base:
            det_side = not det.is_zero()
            verds = sampled_points_verdicts(b, max_ext=2, want_witnesses=False)
            simple_side = all(v.locally_simple for v in verds)
        else:
            det_side = not det.is_zero()
            if det_side:
                for p in PRIMES_TO_50:
                    dom = GF(p)
                    if det.map_coeffs(lambda c: dom.from_int(c), dom).is_zero():
                        det_side = False
                        break

            rep = locally_simple(b, extra_primes=entry.extra_primes)
            simple_side = rep.locally_simple
            if simple_side is None:
                cert = injectivity_certificate(b, PRIMES_TO_50)
                if cert.kind == "monic-in-variable" and cert.grade == "proof":
                    simple_side = True

        assert simple_side == entry.locally_simple, entry.name
        assert det_side == entry.locally_simple, entry.name
        if not entry.locally_simple:
            failing.add(entry.name)
            assert det.is_zero(), entry.name  # degenerate members: determinant vanishes

    assert failing == {"nilpotent-biquadratic", "radicial-biquadratic"}
    _pass(5, f"verdict/determinant equivalence sampled over {len(CATALOG)} algebras; "
             "exactly the two degenerate rank-4 members fail both sides")


def test_criterion_6_cotangent_vs_generator_sampling():
    """Cotangent criterion agrees with generator search over GF(p^r), r <= n,
    for the catalog at p in {2, 3, 5}; the split rank-3 algebra over GF(2) has
    its absence proof by exhausting all 8 elements; the classical cubic order
    has no generator mod 2, a generator over GF(8), and the intermediate verdict."""
    for entry in CATALOG:
        if entry.field_base:
            continue
        b = entry.build()
        for p in (2, 3, 5):
            fiber = base_change(b, GF(p))
            cotangent_ok = all(f.cotangent_dimension <= 1 for f in local_factors(fiber))
            tower = generator_tower(fiber, budget=1024)
            found = any(r is not None and r.found is not None for r in tower.values())
            assert cotangent_ok == found, (entry.name, p)

    # sampled fibers of the radicial member at characteristic 2: never a generator
    br = radicial_biquadratic()
    verds = sampled_points_verdicts(br, max_ext=1, want_witnesses=False)
    assert all(v.verdict == "not-locally-simple" for v in verds)
    from finfree.algebra import specialize_base
    F2 = GF(2)
    fib = specialize_base(br, {"x": F2.one(), "y": F2.one()}, F2)
    tower = generator_tower(fib, budget=1024)
    assert not any(r is not None and r.found is not None for r in tower.values())

    # the split rank-3 algebra over GF(2): absence proved by exhausting 8 elements
    f2cubed = base_change(diagonal(ZZ, 3), GF(2))
    search = find_generator(f2cubed)
    assert search.absent and search.tried == 8 and search.space == 8

    # the classical cubic order at 2
    ded = dedekind_order()
    v2 = locally_simple_at(ded, 2)
    assert v2.verdict == "locally-simple-not-simple"
    fiber2 = base_change(ded, GF(2))
    assert find_generator(fiber2).absent
    over8 = find_generator(base_change(fiber2, GF(2, 3)))
    assert over8.found is not None
    _pass(6, "cotangent test and generator search agree at p in {2,3,5}; "
             "split GF(2)^3 absence by exhaustion; cubic order: no generator over "
             "GF(2), generator over GF(8), verdict locally-simple-not-simple")


def _direct_factor_product(b, p, seed=0):
    """Independent route for the splitting identity: rebuild each factor from
    the univariate factorization (verified by re-expansion) and multiply."""
    dom = GF(p)
    fiber = base_change(b, dom)
    g = UniPoly(dom, [c.constant_value() for c in fiber.presentation.coeffs] + [dom.one()])
    factors = factor_gf(g, seed=seed)
    # oracle guard: the factorization re-expands to g
    check = UniPoly.one(dom)
    for gi, ei in factors:
        for _ in range(ei):
            check = check * gi
    assert check == g
    data = splitting_data(b, p, seed=seed)
    assert [(gi.coeffs, ei) for gi, ei in data.factors] == \
        [(gi.coeffs, ei) for gi, ei in factors]
    f = gcp(fiber)
    rhs = XPoly.one("X", f.ring.registry, dom)
    for (gi, ei), quot, vmap in zip(data.factors, data.quotients, data.maps):
        pi = vmap.apply_x(gcp(quot).poly)
        assert pi.degree() == gi.degree()
        rhs = rhs * pi ** ei
    return f.poly, rhs, factors


def test_criterion_7_splitting_identity():
    """F = prod v_i(G_i)^(e_i) mod p bit-exactly, shapes matching the
    univariate factorization, for the two number rings at the listed primes."""
    rng = random.Random(53)
    cases = [(gaussian_integers(), (2, 3, 5)), (cbrt2_ring(), (2, 3, 5, 7, 31))]
    for b, primes in cases:
        for p in primes:
            lhs, rhs, factors = _direct_factor_product(b, p)
            assert lhs == rhs, (p,)
            r = theorem33_check(b, p)
            assert r.passed
            shapes = r.witnesses["factor_shapes"]
            assert [(s["deg_X"], s["e"]) for s in shapes] == \
                [(gi.degree(), ei) for gi, ei in factors]
            # specialization oracle: the factored side evaluates to element
            # characteristic polynomials mod p
            dom = GF(p)
            fiber = base_change(b, dom)
            ring = gcp(fiber).ring
            for _ in range(5):
                x = fiber.element([dom.from_int(rng.randint(0, p - 1))
                                   for _ in range(b.rank)])
                mapping = {ring.tvars[i]: x.coords[i] for i in range(b.rank)}
                spec = XPoly("X", x.vars, dom,
                             [c.subst(mapping, x.vars) for c in rhs.coeffs])
                assert spec == charpoly_elt(x)

    # shape notes from the statement: squared factor at p = 2 for the Gaussian
    # ring, cubed factor at p = 3 for the cube-root ring
    r = theorem33_check(gaussian_integers(), 2)
    assert [s["e"] for s in r.witnesses["factor_shapes"]] == [2]
    r = theorem33_check(cbrt2_ring(), 3)
    assert [s["e"] for s in r.witnesses["factor_shapes"]] == [3]
    _pass(7, "splitting identity bit-exact at all listed primes with matching "
             "ramification shapes")


def test_criterion_8_discriminant_content():
    """content(disc_X(F)) = |trace-form discriminant| by disjoint code paths:
    4 for the Gaussian ring, 8 for the sqrt(2) ring, 108 for the cbrt(2) ring."""
    expected = [(gaussian_integers(), 4), (sqrt2_ring(), 8), (cbrt2_ring(), 108)]
    for b, value in expected:
        r = theorem35_check(b)
        assert r.passed
        assert r.witnesses["content_of_generic_discriminant"] == value
        assert abs(r.witnesses["trace_form_discriminant"]) == value
    # rank-4 budget boundary: the nilpotent rank-4 member runs (degenerate zero)
    r = theorem35_check(nilpotent_biquadratic())
    assert r.passed and r.witnesses["content_of_generic_discriminant"] == 0
    _pass(8, "discriminant content matches |trace-form discriminant|: 4, 8, 108 "
             "(independent Sylvester vs trace-matrix routes)")


def _cofactor_int(mat):
    """Plain integer cofactor determinant, independent of the package."""
    n = len(mat)
    if n == 1:
        return mat[0][0]
    acc = 0
    for j in range(n):
        minor = [row[:j] + row[j + 1:] for row in mat[1:]]
        term = mat[0][j] * _cofactor_int(minor)
        acc += term if j % 2 == 0 else -term
    return acc


def test_criterion_9_kernel_oracles():
    """Characteristic polynomial vs an independent cofactor oracle on 200
    random matrices; factorization re-expansion; resultant laws on 500 pairs."""
    rng = random.Random(1009)
    # charpoly against a from-scratch integer cofactor expansion of det(X I - M)
    for _ in range(200):
        n = rng.randint(1, 4)
        raw = [[rng.randint(-5, 5) for _ in range(n)] for _ in range(n)]
        m = PolyMatrix([[MultiPoly.from_int(ZZ, (), c) for c in row] for row in raw])
        cp = m.charpoly("X")
        assert cp.is_monic() and cp.degree() == n
        # coefficients of det(X I - M) via integer interpolation of the oracle:
        # evaluate at n+1 points and compare (Vandermonde solve over Fractions)
        from fractions import Fraction

        pts = list(range(n + 1))
        vals = [_cofactor_int([[ (x if i == j else 0) - raw[i][j] for j in range(n)]
                               for i in range(n)]) for x in pts]
        for x, val in zip(pts, vals):
            got = cp.evaluate(MultiPoly.from_int(ZZ, (), x)).constant_value()
            assert got == val

    # factorization products re-expand exactly
    for dom in (GF(2), GF(3), GF(5), GF(2, 2)):
        for _ in range(25):
            deg = rng.randint(1, 6)
            f = UniPoly(dom, [dom.random_element(rng) for _ in range(deg)] + [dom.one()])
            fac = factor_gf(f, seed=3)
            prod = UniPoly.one(dom)
            for gi, mi in fac:
                for _ in range(mi):
                    prod = prod * gi
            assert prod == f

    # resultant sign and vanishing laws on 500 random monic pairs over GF(5)
    F5 = GF(5)

    def lift(u):
        return XPoly("T", (), F5, [MultiPoly.const(F5, (), c) for c in u.coeffs])

    for _ in range(500):
        dp, dq = rng.randint(1, 4), rng.randint(1, 4)
        pu = UniPoly(F5, [rng.randrange(5) for _ in range(dp)] + [1])
        qu = UniPoly(F5, [rng.randrange(5) for _ in range(dq)] + [1])
        r1 = resultant(lift(pu), lift(qu)).constant_value()
        r2 = resultant(lift(qu), lift(pu)).constant_value()
        assert r1 == F5.mul(F5.from_int((-1) ** (dp * dq)), r2)
        assert (r1 == 0) == (pu.gcd(qu).degree() > 0)
    _pass(9, "charpoly vs cofactor on 200 matrices; factorization re-expansion; "
             "resultant laws on 500 pairs")


def test_criterion_10_determinism(tmp_path, capsys):
    """Two runs with the same seed produce byte-identical JSON (timing excluded)."""
    zi_doc = {"base": {"kind": "int"}, "presentation": {"kind": "monogenic", "coeffs": [1, 0]}}
    ded_doc = {
        "base": {"kind": "int"},
        "presentation": {
            "kind": "structure_constants",
            "rank": 3,
            "table": [
                [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
                [[0, 1, 0], [0, -1, 2], [4, 0, 2]],
                [[0, 0, 1], [4, 0, 2], [6, 2, 3]],
            ],
            "unit": [1, 0, 0],
        },
    }
    zi_path = tmp_path / "zi.json"
    zi_path.write_text(json.dumps(zi_doc))
    ded_path = tmp_path / "ded.json"
    ded_path.write_text(json.dumps(ded_doc))

    def capture(argv):
        cli_main(argv)
        return capsys.readouterr().out

    h1 = capture(["hilbert", str(zi_path), "--primes", "2,3,5", "--seed", "11",
                  "--json", "--no-timing"])
    h2 = capture(["hilbert", str(zi_path), "--primes", "2,3,5", "--seed", "11",
                  "--json", "--no-timing"])
    assert h1 == h2 and h1
    c1 = capture(["check", str(ded_path), "--seed", "11", "--json", "--no-timing"])
    c2 = capture(["check", str(ded_path), "--seed", "11", "--json", "--no-timing"])
    assert c1 == c2 and c1
    json.loads(h1)
    json.loads(c1)
    _pass(10, "hilbert and check runs are byte-identical given the same seed")

import random

import pytest

from finfree.errors import InvalidInputError
from finfree.ringkit import GF, ZZ, UniPoly, factor_gf, is_irreducible_gf, roots_gf


def expand(factors, dom):
    out = UniPoly.one(dom)
    for f, m in factors:
        for _ in range(m):
            out = out * f
    return out


def brute_force_irreducible(f: UniPoly) -> bool:
    """Exhaustive divisor search, valid for degree <= 4 over small fields."""
    dom = f.domain
    import itertools

    deg = f.degree()
    assert deg <= 4
    for d in range(1, deg // 2 + 1):
        for tail in itertools.product(list(dom.elements()), repeat=d):
            cand = UniPoly(dom, list(tail) + [dom.one()])
            if (f % cand).is_zero():
                return False
    return True


def test_divmod_is_euclidean():
    F7 = GF(7)
    rng = random.Random(3)
    for _ in range(50):
        a = UniPoly(F7, [rng.randrange(7) for _ in range(rng.randint(1, 7))])
        b = UniPoly(F7, [rng.randrange(7) for _ in range(rng.randint(1, 5))])
        if b.is_zero():
            continue
        q, r = a.divmod(b)
        assert q * b + r == a
        assert r.is_zero() or r.degree() < b.degree()


def test_gcd_and_xgcd():
    F5 = GF(5)
    # Y^2 + 2 is irreducible over GF(5) (3 is not a square mod 5)
    a = UniPoly.from_ints(F5, [2, 0, 1]) * UniPoly.from_ints(F5, [2, 1])
    b = UniPoly.from_ints(F5, [3, 1]) * UniPoly.from_ints(F5, [2, 1])
    g = a.gcd(b)
    assert g == UniPoly.from_ints(F5, [2, 1])
    gg, u, v = a.xgcd(b)
    assert u * a + v * b == gg == g


def test_factor_squarefree_split():
    # Y^2 + 1 over GF(5) = (Y+2)(Y+3): oracle = re-expansion
    F5 = GF(5)
    g = UniPoly.from_ints(F5, [1, 0, 1])
    fac = factor_gf(g)
    assert len(fac) == 2 and all(m == 1 for _, m in fac)
    assert expand(fac, F5) == g
    assert [f.coeffs for f, _ in fac] == [(2, 1), (3, 1)]  # deterministic order


def test_factor_wild_square():
    # Y^2 + 1 over GF(2) = (Y+1)^2
    F2 = GF(2)
    g = UniPoly.from_ints(F2, [1, 0, 1])
    fac = factor_gf(g)
    assert fac == [(UniPoly.from_ints(F2, [1, 1]), 2)]


def test_factor_irreducible_stays():
    F2 = GF(2)
    g = UniPoly.from_ints(F2, [1, 1, 1])
    assert factor_gf(g) == [(g, 1)]
    assert is_irreducible_gf(g)


@pytest.mark.parametrize("p,r", [(2, 1), (3, 1), (5, 1), (2, 2), (3, 2)])
def test_factor_random_reexpansion(p, r):
    dom = GF(p, r)
    rng = random.Random(p * 100 + r)
    for _ in range(25):
        deg = rng.randint(1, 6)
        coeffs = [dom.random_element(rng) for _ in range(deg)] + [dom.one()]
        f = UniPoly(dom, coeffs)
        fac = factor_gf(f, seed=11)
        assert expand(fac, dom) == f
        seen = set()
        for g, m in fac:
            assert g.is_monic() and m >= 1
            assert g.coeffs not in seen  # factors pairwise distinct
            seen.add(g.coeffs)
            if g.degree() <= 4:
                assert brute_force_irreducible(g)


def test_factor_rejects_nonmonic():
    F3 = GF(3)
    with pytest.raises(InvalidInputError):
        factor_gf(UniPoly.from_ints(F3, [1, 2]))


def test_factor_deterministic_across_runs():
    dom = GF(7)
    rng = random.Random(99)
    coeffs = [dom.random_element(rng) for _ in range(8)] + [dom.one()]
    f = UniPoly(dom, coeffs)
    assert factor_gf(f, seed=5) == factor_gf(f, seed=5)


def test_roots():
    F7 = GF(7)
    f = UniPoly.from_ints(F7, [3, 1]) * UniPoly.from_ints(F7, [5, 1]) * UniPoly.from_ints(F7, [1, 1, 1])
    assert roots_gf(f) == [2, 4]


def test_pth_power_factoring():
    # f = (Y^2 + Y + 1)^3 over GF(3): derivative-zero path exercised via Y^3 substitution
    F3 = GF(3)
    base = UniPoly.from_ints(F3, [1, 1, 1])
    f = expand([(base, 3)], F3)
    fac = factor_gf(f)
    assert expand(fac, F3) == f
    assert all(m % 3 == 0 or m >= 1 for _, m in fac)

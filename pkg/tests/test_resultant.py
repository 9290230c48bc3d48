import random

import pytest

from finfree.errors import InvalidInputError
from finfree.ringkit import GF, ZZ, MultiPoly, UniPoly, XPoly, discriminant_in_x, resultant


def xpoly_over(dom, var, variables, coeff_ints):
    return XPoly(var, variables, dom, [MultiPoly.from_int(dom, variables, c) for c in coeff_ints])


def from_unipoly(p: UniPoly, var="T"):
    return XPoly(var, (), p.domain, [MultiPoly.const(p.domain, (), c) for c in p.coeffs])


def test_linear_symbolic():
    vs = ("a", "b")
    a = MultiPoly.var(ZZ, vs, "a")
    b = MultiPoly.var(ZZ, vs, "b")
    one = MultiPoly.one(ZZ, vs)
    p = XPoly("T", vs, ZZ, [-a, one])
    q = XPoly("T", vs, ZZ, [-b, one])
    assert resultant(p, q) == a - b


def test_shifted_linear():
    vs = ("a", "b", "X")
    a = MultiPoly.var(ZZ, vs, "a")
    b = MultiPoly.var(ZZ, vs, "b")
    x = MultiPoly.var(ZZ, vs, "X")
    one = MultiPoly.one(ZZ, vs)
    p = XPoly("T", vs, ZZ, [x - a, one])  # T + X - a
    q = XPoly("T", vs, ZZ, [-b, one])
    assert resultant(p, q) == a - b - x


def test_eval_oracle():
    # res(T^2+1, T-2) equals T^2+1 evaluated at 2, i.e. 5
    p = xpoly_over(ZZ, "T", (), [1, 0, 1])
    q = xpoly_over(ZZ, "T", (), [-2, 1])
    assert resultant(p, q).constant_value() == 5


def test_rejects_zero():
    p = xpoly_over(ZZ, "T", (), [1, 0, 1])
    with pytest.raises(InvalidInputError):
        resultant(p, XPoly.zero("T", (), ZZ))


def _euclid_resultant(f: UniPoly, g: UniPoly):
    """Independent Euclidean recursion over a field (test oracle):
    res(A, B) = (-1)^(deg A * deg B) * lc(B)^(deg A - deg R) * res(B, R)."""
    dom = f.domain
    acc = dom.one()
    a, b = f, g
    while True:
        m, n = a.degree(), b.degree()
        if b.is_zero():
            return dom.zero() if m > 0 else acc
        if n == 0:
            return dom.mul(acc, dom.pow(b.coeffs[0], m))
        r = a % b
        if (m * n) % 2:
            acc = dom.neg(acc)
        if r.is_zero():
            return dom.zero()
        acc = dom.mul(acc, dom.pow(b.lc(), m - r.degree()))
        a, b = b, r


def test_sylvester_matches_euclid_over_field():
    F5 = GF(5)
    rng = random.Random(17)
    for _ in range(100):
        dp = rng.randint(1, 4)
        dq = rng.randint(1, 4)
        p = UniPoly(F5, [rng.randrange(5) for _ in range(dp)] + [1])
        q = UniPoly(F5, [rng.randrange(5) for _ in range(dq)] + [1])
        got = resultant(from_unipoly(p), from_unipoly(q)).constant_value()
        assert got == _euclid_resultant(p, q)


def test_swap_sign_law():
    F5 = GF(5)
    rng = random.Random(19)
    for _ in range(200):
        dp = rng.randint(1, 4)
        dq = rng.randint(1, 4)
        p = from_unipoly(UniPoly(F5, [rng.randrange(5) for _ in range(dp)] + [1]))
        q = from_unipoly(UniPoly(F5, [rng.randrange(5) for _ in range(dq)] + [1]))
        r1 = resultant(p, q).constant_value()
        r2 = resultant(q, p).constant_value()
        sign = F5.from_int((-1) ** (dp * dq))
        assert r1 == F5.mul(sign, r2)


def test_vanishing_iff_common_factor():
    F5 = GF(5)
    rng = random.Random(23)
    for _ in range(200):
        dp = rng.randint(1, 3)
        dq = rng.randint(1, 3)
        pu = UniPoly(F5, [rng.randrange(5) for _ in range(dp)] + [1])
        qu = UniPoly(F5, [rng.randrange(5) for _ in range(dq)] + [1])
        r = resultant(from_unipoly(pu), from_unipoly(qu)).constant_value()
        has_common = pu.gcd(qu).degree() > 0
        assert (r == 0) == has_common


def test_discriminant_classics():
    vs = ("b", "c")
    b = MultiPoly.var(ZZ, vs, "b")
    c = MultiPoly.var(ZZ, vs, "c")
    one = MultiPoly.one(ZZ, vs)
    f = XPoly("X", vs, ZZ, [c, b, one])
    assert discriminant_in_x(f) == b * b - 4 * c

    vs = ("p", "q")
    p = MultiPoly.var(ZZ, vs, "p")
    q = MultiPoly.var(ZZ, vs, "q")
    one = MultiPoly.one(ZZ, vs)
    zero = MultiPoly.zero(ZZ, vs)
    f = XPoly("X", vs, ZZ, [q, p, zero, one])
    assert discriminant_in_x(f) == -4 * p ** 3 - 27 * q ** 2


def test_discriminant_shifted_square():
    # (X - T1)^2 + T2^2 has discriminant -4*T2^2 (complete the square oracle)
    vs = ("T1", "T2")
    t1 = MultiPoly.var(ZZ, vs, "T1")
    t2 = MultiPoly.var(ZZ, vs, "T2")
    one = MultiPoly.one(ZZ, vs)
    f = XPoly("X", vs, ZZ, [t1 * t1 + t2 * t2, -2 * t1, one])
    assert discriminant_in_x(f) == -4 * t2 * t2


def test_discriminant_requires_monic():
    f = xpoly_over(ZZ, "X", (), [1, 2])  # 2X + 1
    with pytest.raises(InvalidInputError):
        discriminant_in_x(f)

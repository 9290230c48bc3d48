"""Finite free algebras over a base ring, given by structure constants.

An algebra of rank n stores a full multiplication table c[i][j] = coordinates
of e_i * e_j.  Scalars are MultiPoly values over the algebra's base-variable
registry, so symbolic bases such as ZZ[a0,a1,a2] or GF(2)[x,y] are ordinary
instances.  Commutativity, associativity and the unit law are verified at
construction; everything downstream assumes a valid table.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import InvalidInputError
from .ringkit import (
    MultiPoly,
    PolyMatrix,
    QQ,
    XPoly,
    ZZ,
    field_embedding,
    solve_field,
)
from .ringkit.domains import ExtensionField, PrimeField

_RESERVED = re.compile(r"^(X|T[0-9]+)$")


class MonogenicPresentation:
    """Records that the algebra is base[Y]/(g) on the basis 1, y, ..., y^(n-1)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        self.coeffs = tuple(coeffs)  # c_0..c_{n-1} of monic Y^n + sum c_i Y^i

    @property
    def degree(self):
        return len(self.coeffs)

    def modulus(self, algebra) -> XPoly:
        one = MultiPoly.one(algebra.domain, algebra.base_vars)
        return XPoly("Y", algebra.base_vars, algebra.domain, list(self.coeffs) + [one])


class FiniteFreeAlgebra:
    def __init__(self, domain, base_vars, rank: int, table, unit, *,
                 kind: str = "structure", presentation: MonogenicPresentation | None = None,
                 factors=None, projections=None, validate: bool = True):
        if rank < 1:
            raise InvalidInputError("rank must be >= 1")
        self.domain = domain
        self.base_vars = tuple(base_vars)
        for v in self.base_vars:
            if _RESERVED.match(v):
                raise InvalidInputError(f"base variable name {v!r} is reserved")
        self.rank = rank
        self.table = tuple(tuple(tuple(vec) for vec in row) for row in table)
        self.unit = tuple(unit)
        self.kind = kind
        self.presentation = presentation
        self.factors = tuple(factors) if factors else None
        self.projections = tuple(projections) if projections else None
        self._caches: dict = {}
        if len(self.table) != rank or any(len(r) != rank for r in self.table):
            raise InvalidInputError("structure-constant table must be rank x rank")
        for row in self.table:
            for vec in row:
                if len(vec) != rank:
                    raise InvalidInputError("structure-constant vectors must have length rank")
                for c in vec:
                    if c.domain != domain or c.vars != self.base_vars:
                        raise InvalidInputError("structure constants live over the base registry")
        if len(self.unit) != rank:
            raise InvalidInputError("unit vector must have length rank")
        if validate:
            self._validate()

    # -- scalar helpers ---------------------------------------------------------

    def scalar(self, c) -> MultiPoly:
        if isinstance(c, MultiPoly):
            return c
        return MultiPoly.from_int(self.domain, self.base_vars, c)

    def zero_scalar(self) -> MultiPoly:
        return MultiPoly.zero(self.domain, self.base_vars)

    def _lifted_table(self, variables):
        key = ("table", variables)
        if key not in self._caches:
            self._caches[key] = tuple(
                tuple(tuple(c.extend(variables) for c in vec) for vec in row)
                for row in self.table
            )
        return self._caches[key]

    def mul_coords(self, x, y, variables):
        """Coordinates of the product of two coordinate vectors over ``variables``."""
        table = self._lifted_table(variables)
        zero = MultiPoly.zero(self.domain, variables)
        out = [zero] * self.rank
        for i, xi in enumerate(x):
            if xi.is_zero():
                continue
            for j, yj in enumerate(y):
                if yj.is_zero():
                    continue
                f = xi * yj
                vec = table[i][j]
                for k in range(self.rank):
                    if not vec[k].is_zero():
                        out[k] = out[k] + f * vec[k]
        return out

    def _validate(self):
        n = self.rank
        for i in range(n):
            for j in range(i + 1, n):
                if self.table[i][j] != self.table[j][i]:
                    raise InvalidInputError(f"table is not commutative at basis pair ({i},{j})")
        unit = list(self.unit)
        for i in range(n):
            ei = self._basis_coords(i)
            prod = self.mul_coords(unit, ei, self.base_vars)
            if list(prod) != list(ei):
                raise InvalidInputError(f"unit law fails on basis vector {i}")
        for i in range(n):
            for j in range(n):
                ij = list(self.table[i][j])
                for l in range(n):
                    left = self.mul_coords(ij, self._basis_coords(l), self.base_vars)
                    jl = list(self.table[j][l])
                    right = self.mul_coords(self._basis_coords(i), jl, self.base_vars)
                    if left != right:
                        raise InvalidInputError(
                            f"associativity fails on basis triple ({i},{j},{l})"
                        )

    def _basis_coords(self, i, variables=None):
        variables = variables if variables is not None else self.base_vars
        one = MultiPoly.one(self.domain, variables)
        zero = MultiPoly.zero(self.domain, variables)
        return [one if k == i else zero for k in range(self.rank)]

    # -- elements ----------------------------------------------------------------

    def element(self, coords, variables=None) -> "AlgebraElement":
        variables = tuple(variables) if variables is not None else self.base_vars
        cs = []
        for c in coords:
            if isinstance(c, int):
                c = MultiPoly.from_int(self.domain, variables, c)
            elif c.vars != variables:
                c = c.extend(variables)
            cs.append(c)
        return AlgebraElement(self, tuple(cs))

    def basis_element(self, i, variables=None) -> "AlgebraElement":
        return AlgebraElement(self, tuple(self._basis_coords(i, variables)))

    def one(self, variables=None) -> "AlgebraElement":
        return self.element(list(self.unit), variables)

    def zero(self, variables=None) -> "AlgebraElement":
        variables = tuple(variables) if variables is not None else self.base_vars
        z = MultiPoly.zero(self.domain, variables)
        return AlgebraElement(self, tuple(z for _ in range(self.rank)))

    def generator(self) -> "AlgebraElement":
        """The presentation generator y (monogenic algebras only)."""
        if self.presentation is None:
            raise InvalidInputError("algebra has no recorded monogenic presentation")
        if self.rank == 1:
            return self.element([-self.presentation.coeffs[0]])
        return self.basis_element(1)

    # -- derived quantities ---------------------------------------------------------

    def trace_of_basis(self, i) -> MultiPoly:
        acc = self.zero_scalar()
        for j in range(self.rank):
            acc = acc + self.table[i][j][j]
        return acc

    def trace_matrix(self) -> PolyMatrix:
        """Matrix [Tr(e_i e_j)] of the trace bilinear form."""
        n = self.rank
        traces = [self.trace_of_basis(i) for i in range(n)]
        ent = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = self.zero_scalar()
                vec = self.table[i][j]
                for k in range(n):
                    if not vec[k].is_zero():
                        acc = acc + vec[k] * traces[k]
                row.append(acc)
            ent.append(row)
        return PolyMatrix(ent)

    def trace_form_disc(self) -> MultiPoly:
        """Determinant of the trace-form matrix (the discriminant of the algebra)."""
        return self.trace_matrix().det()

    def __repr__(self):
        return f"FiniteFreeAlgebra(rank={self.rank}, base={self.domain!r}{list(self.base_vars) or ''}, kind={self.kind})"


class AlgebraElement:
    __slots__ = ("algebra", "coords")

    def __init__(self, algebra: FiniteFreeAlgebra, coords):
        self.algebra = algebra
        self.coords = tuple(coords)
        if len(self.coords) != algebra.rank:
            raise InvalidInputError("coordinate length must equal the rank")

    @property
    def vars(self):
        return self.coords[0].vars

    def _check(self, other):
        if self.algebra is not other.algebra or self.vars != other.vars:
            raise InvalidInputError("elements of different algebras or registries")

    def __add__(self, other):
        self._check(other)
        return AlgebraElement(self.algebra, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        self._check(other)
        return AlgebraElement(self.algebra, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return AlgebraElement(self.algebra, tuple(-a for a in self.coords))

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            self._check(other)
            return AlgebraElement(
                self.algebra,
                tuple(self.algebra.mul_coords(self.coords, other.coords, self.vars)),
            )
        if isinstance(other, (int, MultiPoly)):
            c = other
            if isinstance(c, int):
                c = MultiPoly.from_int(self.algebra.domain, self.vars, c)
            return AlgebraElement(self.algebra, tuple(a * c for a in self.coords))
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise InvalidInputError("negative element power")
        out = self.algebra.one(self.vars)
        base = self
        for _ in range(k):
            out = out * base
        return out

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coords)

    def __eq__(self, other):
        return (
            isinstance(other, AlgebraElement)
            and self.algebra is other.algebra
            and self.coords == other.coords
        )

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        return f"AlgebraElement({[c.canonical_str() for c in self.coords]})"


class AlgebraMorphism:
    """Unital algebra morphism, stored as target coordinates of source basis images."""

    def __init__(self, source: FiniteFreeAlgebra, target: FiniteFreeAlgebra, matrix, *,
                 validate: bool = True):
        if source.domain != target.domain or source.base_vars != target.base_vars:
            raise InvalidInputError("morphism endpoints must share the base")
        self.source = source
        self.target = target
        # matrix[k][j]: coefficient of target basis e_k in the image of source e_j
        self.matrix = tuple(
            tuple(target.scalar(c) for c in row) for row in matrix
        )
        if len(self.matrix) != target.rank or any(len(r) != source.rank for r in self.matrix):
            raise InvalidInputError("morphism matrix must be target-rank x source-rank")
        if validate:
            self._validate()

    def apply_basis(self, j) -> AlgebraElement:
        return self.target.element([self.matrix[k][j] for k in range(self.target.rank)])

    def apply(self, x: AlgebraElement) -> AlgebraElement:
        if x.algebra is not self.source:
            raise InvalidInputError("element does not belong to the morphism source")
        variables = x.vars
        zero = MultiPoly.zero(self.target.domain, variables)
        out = [zero] * self.target.rank
        for j, xj in enumerate(x.coords):
            if xj.is_zero():
                continue
            for k in range(self.target.rank):
                c = self.matrix[k][j]
                if not c.is_zero():
                    out[k] = out[k] + xj * c.extend(variables)
        return self.target.element(out, variables)

    def _validate(self):
        unit_img = self.apply(self.source.one())
        if unit_img != self.target.one():
            raise InvalidInputError("morphism does not map unit to unit")
        n = self.source.rank
        for i in range(n):
            for j in range(i, n):
                lhs = self.apply(self.source.basis_element(i) * self.source.basis_element(j))
                rhs = self.apply_basis(i) * self.apply_basis(j)
                if lhs != rhs:
                    raise InvalidInputError(f"morphism not multiplicative on basis pair ({i},{j})")

    @classmethod
    def identity(cls, algebra) -> "AlgebraMorphism":
        one = algebra.scalar(1)
        zero = algebra.scalar(0)
        return cls(algebra, algebra,
                   [[one if i == j else zero for j in range(algebra.rank)]
                    for i in range(algebra.rank)])


# ---------------------------------------------------------------------------
# constructors
# ---------------------------------------------------------------------------

def from_monogenic(domain, coeffs, base_vars=()) -> FiniteFreeAlgebra:
    """base[Y]/(G) for monic G = Y^n + c_{n-1} Y^(n-1) + ... + c_0, basis 1, y, ..., y^(n-1)."""
    base_vars = tuple(base_vars)
    cs = []
    for c in coeffs:
        if isinstance(c, int):
            c = MultiPoly.from_int(domain, base_vars, c)
        elif c.vars != base_vars or c.domain != domain:
            raise InvalidInputError("presentation coefficients must live over the base")
        cs.append(c)
    n = len(cs)
    if n < 1:
        raise InvalidInputError("presentation must have degree >= 1")
    one = MultiPoly.one(domain, base_vars)
    g = XPoly("Y", base_vars, domain, cs + [one])
    # powers of y modulo g, as coordinate vectors of length n
    y = XPoly.gen("Y", base_vars, domain)
    powers = []
    cur = XPoly.one("Y", base_vars, domain)
    for _ in range(2 * n - 1):
        powers.append([cur.coeff(k) for k in range(n)])
        cur = (cur * y).divmod_monic(g)[1]
    table = [[powers[i + j] for j in range(n)] for i in range(n)]
    unit = [one if k == 0 else MultiPoly.zero(domain, base_vars) for k in range(n)]
    return FiniteFreeAlgebra(domain, base_vars, n, table, unit, kind="monogenic",
                             presentation=MonogenicPresentation(cs))


def diagonal(domain, n: int, base_vars=()) -> FiniteFreeAlgebra:
    """The split algebra base^n with componentwise product."""
    base_vars = tuple(base_vars)
    one = MultiPoly.one(domain, base_vars)
    zero = MultiPoly.zero(domain, base_vars)
    table = [[[one if (i == j == k) else zero for k in range(n)] for j in range(n)]
             for i in range(n)]
    unit = [one] * n
    return FiniteFreeAlgebra(domain, base_vars, n, table, unit, kind="diagonal")


def product(b: FiniteFreeAlgebra, c: FiniteFreeAlgebra) -> FiniteFreeAlgebra:
    """Product algebra with block-diagonal table; projections are recorded."""
    if b.domain != c.domain or b.base_vars != c.base_vars:
        raise InvalidInputError("product factors must share the base")
    n, m = b.rank, c.rank
    zero = MultiPoly.zero(b.domain, b.base_vars)

    def vec(first, second):
        return list(first) + list(second)

    table = []
    for i in range(n + m):
        row = []
        for j in range(n + m):
            if i < n and j < n:
                row.append(vec(b.table[i][j], [zero] * m))
            elif i >= n and j >= n:
                row.append(vec([zero] * n, c.table[i - n][j - n]))
            else:
                row.append([zero] * (n + m))
        table.append(row)
    unit = vec(b.unit, c.unit)
    prod = FiniteFreeAlgebra(b.domain, b.base_vars, n + m, table, unit,
                             kind="product", factors=(b, c))
    one = MultiPoly.one(b.domain, b.base_vars)
    p1 = AlgebraMorphism(prod, b, [[one if j == k else zero for j in range(n + m)]
                                   for k in range(n)])
    p2 = AlgebraMorphism(prod, c, [[one if j == n + k else zero for j in range(n + m)]
                                   for k in range(m)])
    prod.projections = (p1, p2)
    return prod


def tensor(b: FiniteFreeAlgebra, c: FiniteFreeAlgebra) -> FiniteFreeAlgebra:
    """Tensor product over the base; basis e_i (x) f_j in lexicographic order."""
    if b.domain != c.domain or b.base_vars != c.base_vars:
        raise InvalidInputError("tensor factors must share the base")
    n, m = b.rank, c.rank
    zero = MultiPoly.zero(b.domain, b.base_vars)

    def idx(i, j):
        return i * m + j

    table = []
    for i1 in range(n):
        for j1 in range(m):
            row = []
            for i2 in range(n):
                for j2 in range(m):
                    vec = [zero] * (n * m)
                    bvec = b.table[i1][i2]
                    cvec = c.table[j1][j2]
                    for k1 in range(n):
                        if bvec[k1].is_zero():
                            continue
                        for k2 in range(m):
                            if cvec[k2].is_zero():
                                continue
                            vec[idx(k1, k2)] = vec[idx(k1, k2)] + bvec[k1] * cvec[k2]
                    row.append(vec)
            table.append(row)
    unit = [zero] * (n * m)
    for k1, u1 in enumerate(b.unit):
        for k2, u2 in enumerate(c.unit):
            unit[idx(k1, k2)] = u1 * u2
    return FiniteFreeAlgebra(b.domain, b.base_vars, n * m, table, unit, kind="tensor")


def biquadratic(domain, variant: str = "nilpotent", base_vars=()) -> FiniteFreeAlgebra:
    """Rank-4 algebra on the basis 1, u, v, uv.

    * ``nilpotent``: u^2 = v^2 = 0 over any base.
    * ``radicial``: u^2 = x, v^2 = y over a characteristic-2 base carrying the
      two base variables (x, y); the rank-4 purely inseparable shape.
    """
    base_vars = tuple(base_vars)
    one = MultiPoly.one(domain, base_vars)
    zero = MultiPoly.zero(domain, base_vars)
    if variant == "nilpotent":
        usq = zero
        vsq = zero
    elif variant == "radicial":
        if domain.characteristic != 2 or len(base_vars) != 2:
            raise InvalidInputError(
                "radicial variant requires characteristic 2 and two base variables"
            )
        usq = MultiPoly.var(domain, base_vars, base_vars[0])
        vsq = MultiPoly.var(domain, base_vars, base_vars[1])
    else:
        raise InvalidInputError(f"unknown biquadratic variant {variant!r}")

    def v4(a, b, c, d):
        return [a, b, c, d]

    z = zero
    # basis order: 1, u, v, w = uv
    table = [
        [v4(one, z, z, z), v4(z, one, z, z), v4(z, z, one, z), v4(z, z, z, one)],
        [v4(z, one, z, z), v4(usq, z, z, z), v4(z, z, z, one), v4(z, z, usq, z)],
        [v4(z, z, one, z), v4(z, z, z, one), v4(vsq, z, z, z), v4(z, vsq, z, z)],
        [v4(z, z, z, one), v4(z, z, usq, z), v4(z, vsq, z, z), v4(usq * vsq, z, z, z)],
    ]
    unit = [one, z, z, z]
    return FiniteFreeAlgebra(domain, base_vars, 4, table, unit,
                             kind=f"biquadratic-{variant}")


# ---------------------------------------------------------------------------
# regular representation, trace, norm, characteristic polynomial
# ---------------------------------------------------------------------------

def mul_matrix(x: AlgebraElement) -> PolyMatrix:
    """Matrix of multiplication by x in the distinguished basis (column j = x * e_j)."""
    alg = x.algebra
    cols = []
    for j in range(alg.rank):
        ej = alg.basis_element(j, x.vars)
        cols.append((x * ej).coords)
    return PolyMatrix([[cols[j][i] for j in range(alg.rank)] for i in range(alg.rank)])


def trace(x: AlgebraElement) -> MultiPoly:
    alg = x.algebra
    acc = MultiPoly.zero(alg.domain, x.vars)
    for i, xi in enumerate(x.coords):
        if not xi.is_zero():
            acc = acc + xi * alg.trace_of_basis(i).extend(x.vars)
    return acc


def charpoly_elt(x: AlgebraElement, var: str = "X") -> XPoly:
    """Characteristic polynomial of multiplication by x; monic of degree rank."""
    return mul_matrix(x).charpoly(var)


def norm(x: AlgebraElement) -> MultiPoly:
    """(-1)^n times the constant term of the characteristic polynomial."""
    f = charpoly_elt(x)
    c = f.coeff(0)
    return -c if x.algebra.rank % 2 else c


def evaluate_poly_at_element(f: XPoly, x: AlgebraElement) -> AlgebraElement:
    """Evaluate an outer polynomial at an algebra element (Horner)."""
    alg = x.algebra
    acc = alg.zero(x.vars)
    for c in reversed(f.coeffs):
        acc = acc * x + alg.one(x.vars) * c.extend(x.vars)
    return acc


# ---------------------------------------------------------------------------
# base change and basis change
# ---------------------------------------------------------------------------

def _coeff_map(src, dst):
    """Canonical coefficient map between supported base domains."""
    if src == dst:
        return lambda c: c
    if src == ZZ and dst == QQ:
        return lambda c: Fraction(c)
    if src == ZZ and isinstance(dst, (PrimeField, ExtensionField)):
        return lambda c: dst.from_int(c)
    if src == QQ and isinstance(dst, (PrimeField, ExtensionField)):
        p = dst.characteristic

        def qmap(c):
            if c.denominator % p == 0:
                raise InvalidInputError(f"denominator of {c} not invertible mod {p}")
            return dst.div(dst.from_int(c.numerator), dst.from_int(c.denominator))

        return qmap
    if isinstance(src, (PrimeField, ExtensionField)) and isinstance(dst, (PrimeField, ExtensionField)):
        return field_embedding(src, dst)
    raise InvalidInputError(f"no canonical reduction {src!r} -> {dst!r}")


def base_change(b: FiniteFreeAlgebra, target, coeff_map=None) -> FiniteFreeAlgebra:
    """Scalar extension or reduction along the canonical (or supplied) coefficient map."""
    fn = coeff_map or _coeff_map(b.domain, target)

    def poly_map(p: MultiPoly) -> MultiPoly:
        return p.map_coeffs(fn, target)

    table = [[[poly_map(c) for c in vec] for vec in row] for row in b.table]
    unit = [poly_map(c) for c in b.unit]
    pres = b.presentation
    if pres is not None:
        pres = MonogenicPresentation([poly_map(c) for c in pres.coeffs])
    return FiniteFreeAlgebra(target, b.base_vars, b.rank, table, unit,
                             kind=b.kind, presentation=pres)


def specialize_base(b: FiniteFreeAlgebra, point: dict, target) -> FiniteFreeAlgebra:
    """Evaluate base variables at field elements of ``target`` (fiber at a point)."""
    fn = _coeff_map(b.domain, target)
    values = {v: point[v] for v in b.base_vars}

    def poly_map(p: MultiPoly) -> MultiPoly:
        lifted = p.map_coeffs(fn, target)
        return MultiPoly.const(target, (), lifted.eval_all(values))

    table = [[[poly_map(c) for c in vec] for vec in row] for row in b.table]
    unit = [poly_map(c) for c in b.unit]
    return FiniteFreeAlgebra(target, (), b.rank, table, unit, kind=b.kind)


def change_basis(b: FiniteFreeAlgebra, mat) -> FiniteFreeAlgebra:
    """New presentation on the basis f_j = sum_i mat[i][j] e_i (mat invertible over the base).

    Over ZZ the matrix must be unimodular; over fields any invertible matrix works.
    """
    n = b.rank
    if len(mat) != n or any(len(r) != n for r in mat):
        raise InvalidInputError("basis-change matrix must be rank x rank")
    if b.base_vars:
        raise InvalidInputError("basis change is supported for constant-coefficient bases")
    dom = b.domain
    qdom = QQ if dom == ZZ else dom
    fn = _coeff_map(dom, qdom)
    m = [[fn(dom.from_int(c)) if isinstance(c, int) else fn(c) for c in row] for row in mat]

    def to_scalar(c):
        if qdom == QQ and dom == ZZ:
            if c.denominator != 1:
                raise InvalidInputError("basis-change matrix is not unimodular over ZZ")
            return int(c)
        return c

    new_table = []
    cols = [[m[i][j] for i in range(n)] for j in range(n)]
    basis_elts = [b.element([MultiPoly.const(dom, (), to_scalar(c)) for c in col]) for col in cols]
    mat_rows = [[m[i][j] for j in range(n)] for i in range(n)]
    for i in range(n):
        row = []
        for j in range(n):
            prod = basis_elts[i] * basis_elts[j]
            rhs = [fn(c.constant_value()) for c in prod.coords]
            sol = solve_field(mat_rows, rhs, qdom)
            if sol is None:
                raise InvalidInputError("basis-change matrix is singular")
            row.append([MultiPoly.const(dom, (), to_scalar(c)) for c in sol])
        new_table.append(row)
    unit_rhs = [fn(u.constant_value()) for u in b.unit]
    unit_sol = solve_field(mat_rows, unit_rhs, qdom)
    if unit_sol is None:
        raise InvalidInputError("basis-change matrix is singular")
    unit = [MultiPoly.const(dom, (), to_scalar(c)) for c in unit_sol]
    return FiniteFreeAlgebra(dom, (), n, new_table, unit, kind=b.kind)

"""Matrices over polynomial rings and over field domains.

``PolyMatrix`` holds MultiPoly entries and provides a fraction-free Bareiss
determinant (valid over any integral coefficient domain) and a division-free
Berkowitz characteristic polynomial (valid over any commutative coefficient
structure).  The field helpers at the bottom do plain Gaussian elimination on
lists of domain elements.
"""

from __future__ import annotations

from .multipoly import MultiPoly
from ..errors import InvalidInputError


class PolyMatrix:
    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: list[list[MultiPoly]]):
        if not entries or not entries[0]:
            raise InvalidInputError("matrix must be nonempty")
        self.rows = len(entries)
        self.cols = len(entries[0])
        first = entries[0][0]
        for row in entries:
            if len(row) != self.cols:
                raise InvalidInputError("ragged matrix")
            for e in row:
                if e.domain != first.domain or e.vars != first.vars:
                    raise InvalidInputError("matrix entries disagree on domain or registry")
        self.entries = [list(row) for row in entries]

    @property
    def domain(self):
        return self.entries[0][0].domain

    @property
    def vars(self):
        return self.entries[0][0].vars

    @classmethod
    def identity(cls, domain, variables, n: int) -> "PolyMatrix":
        one = MultiPoly.one(domain, variables)
        zero = MultiPoly.zero(domain, variables)
        return cls([[one if i == j else zero for j in range(n)] for i in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other):
        return isinstance(other, PolyMatrix) and self.entries == other.entries

    def map_entries(self, fn) -> "PolyMatrix":
        return PolyMatrix([[fn(e) for e in row] for row in self.entries])

    def matmul(self, other: "PolyMatrix") -> "PolyMatrix":
        if self.cols != other.rows:
            raise InvalidInputError("matrix shapes do not compose")
        zero = MultiPoly.zero(self.domain, self.vars)
        out = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                acc = zero
                for k in range(self.cols):
                    acc = acc + self.entries[i][k] * other.entries[k][j]
                row.append(acc)
            out.append(row)
        return PolyMatrix(out)

    def matvec(self, vec: list[MultiPoly]) -> list[MultiPoly]:
        if self.cols != len(vec):
            raise InvalidInputError("matrix and vector shapes disagree")
        zero = MultiPoly.zero(self.domain, self.vars)
        out = []
        for i in range(self.rows):
            acc = zero
            for k in range(self.cols):
                acc = acc + self.entries[i][k] * vec[k]
            out.append(acc)
        return out

    def trace(self) -> MultiPoly:
        if self.rows != self.cols:
            raise InvalidInputError("trace of a non-square matrix")
        acc = MultiPoly.zero(self.domain, self.vars)
        for i in range(self.rows):
            acc = acc + self.entries[i][i]
        return acc

    def det(self) -> MultiPoly:
        """Fraction-free Bareiss determinant (exact divisions only)."""
        if self.rows != self.cols:
            raise InvalidInputError("determinant of a non-square matrix")
        n = self.rows
        m = [row[:] for row in self.entries]
        one = MultiPoly.one(self.domain, self.vars)
        sign = 1
        prev = one
        for k in range(n - 1):
            if m[k][k].is_zero():
                pivot = next((i for i in range(k + 1, n) if not m[i][k].is_zero()), None)
                if pivot is None:
                    return MultiPoly.zero(self.domain, self.vars)
                m[k], m[pivot] = m[pivot], m[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    num = m[i][j] * m[k][k] - m[i][k] * m[k][j]
                    m[i][j] = num.div_exact(prev)
            prev = m[k][k]
        d = m[n - 1][n - 1]
        return -d if sign < 0 else d

    def charpoly(self, var: str = "X"):
        """Division-free characteristic polynomial det(X*I - M), Berkowitz scheme.

        Returns an :class:`~finfree.ringkit.xpoly.XPoly`, monic of degree n,
        valid over any commutative coefficient structure.
        """
        from .xpoly import XPoly

        if self.rows != self.cols:
            raise InvalidInputError("characteristic polynomial of a non-square matrix")
        n = self.rows
        dom, vs = self.domain, self.vars
        one = MultiPoly.one(dom, vs)
        a = self.entries
        # poly: coefficients of the charpoly of the leading k x k block, degree-descending
        poly = [one]
        for k in range(n):
            # Toeplitz column: t0 = 1, t1 = -a[k][k], t_{j+1} = -(R . M^{j-1} . C)
            t = [one, -a[k][k]]
            if k:
                row = a[k][:k]
                w = [a[i][k] for i in range(k)]
                for j in range(2, k + 2):
                    if j > 2:
                        w = [sum((a[i][l] * w[l] for l in range(k)),
                                 MultiPoly.zero(dom, vs)) for i in range(k)]
                    dot = sum((row[l] * w[l] for l in range(k)), MultiPoly.zero(dom, vs))
                    t.append(-dot)
            new = []
            for i in range(k + 2):
                acc = MultiPoly.zero(dom, vs)
                for j, tj in enumerate(t):
                    if j > i or i - j >= len(poly):
                        continue
                    acc = acc + tj * poly[i - j]
                new.append(acc)
            poly = new
        coeffs = list(reversed(poly))  # ascending in X
        return XPoly(var, self.vars, self.domain, coeffs)

    def __repr__(self):
        body = "; ".join(
            "[" + ", ".join(e.canonical_str() for e in row) + "]" for row in self.entries
        )
        return f"PolyMatrix({body})"


def cofactor_det(m: PolyMatrix) -> MultiPoly:
    """Determinant by cofactor expansion; exponential, for cross-checks only."""
    n = m.rows
    if n != m.cols:
        raise InvalidInputError("determinant of a non-square matrix")
    ent = m.entries

    def rec(rows: list[int], cols: list[int]) -> MultiPoly:
        if len(rows) == 1:
            return ent[rows[0]][cols[0]]
        acc = MultiPoly.zero(m.domain, m.vars)
        r = rows[0]
        for idx, c in enumerate(cols):
            minor = rec(rows[1:], cols[:idx] + cols[idx + 1 :])
            term = ent[r][c] * minor
            acc = acc + (term if idx % 2 == 0 else -term)
        return acc

    return rec(list(range(n)), list(range(n)))


# ---------------------------------------------------------------------------
# Gaussian elimination over a field domain (plain element lists)
# ---------------------------------------------------------------------------

def rref_field(mat: list[list], domain):
    """Reduced row echelon form; returns (rref, pivot column indices)."""
    m = [row[:] for row in mat]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(cols):
        pr = next((i for i in range(r, rows) if not domain.is_zero(m[i][c])), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        inv = domain.inv(m[r][c])
        m[r] = [domain.mul(x, inv) for x in m[r]]
        for i in range(rows):
            if i != r and not domain.is_zero(m[i][c]):
                f = m[i][c]
                m[i] = [domain.sub(x, domain.mul(f, y)) for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, pivots


def rank_field(mat, domain) -> int:
    return len(rref_field(mat, domain)[1])


def kernel_basis_field(mat: list[list], domain) -> list[list]:
    """Basis of the right kernel {v : mat . v = 0}, canonical (RREF-derived)."""
    rows = len(mat)
    cols = len(mat[0]) if rows else 0
    rref, pivots = rref_field(mat, domain)
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for fc in free:
        v = [domain.zero()] * cols
        v[fc] = domain.one()
        for r, pc in enumerate(pivots):
            v[pc] = domain.neg(rref[r][fc])
        basis.append(v)
    return basis


def solve_field(mat: list[list], rhs: list, domain):
    """One solution of mat . x = rhs, or None when inconsistent."""
    rows = len(mat)
    cols = len(mat[0]) if rows else 0
    aug = [mat[i][:] + [rhs[i]] for i in range(rows)]
    rref, pivots = rref_field(aug, domain)
    if cols in pivots:
        return None
    x = [domain.zero()] * cols
    for r, pc in enumerate(pivots):
        x[pc] = rref[r][cols]
    return x


def det_field(mat: list[list], domain):
    """Determinant over a field by Gaussian elimination."""
    n = len(mat)
    m = [row[:] for row in mat]
    det = domain.one()
    for c in range(n):
        pr = next((i for i in range(c, n) if not domain.is_zero(m[i][c])), None)
        if pr is None:
            return domain.zero()
        if pr != c:
            m[c], m[pr] = m[pr], m[c]
            det = domain.neg(det)
        det = domain.mul(det, m[c][c])
        inv = domain.inv(m[c][c])
        for i in range(c + 1, n):
            if not domain.is_zero(m[i][c]):
                f = domain.mul(m[i][c], inv)
                m[i] = [domain.sub(x, domain.mul(f, y)) for x, y in zip(m[i], m[c])]
    return det


def in_span_field(basis: list[list], vec: list, domain) -> bool:
    """Whether vec lies in the row span of basis."""
    if not basis:
        return all(domain.is_zero(c) for c in vec)
    mat = [[row[j] for row in basis] for j in range(len(vec))]
    return solve_field(mat, vec, domain) is not None

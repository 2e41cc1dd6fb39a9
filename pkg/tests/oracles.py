"""Independent reference computations built on sympy only.

Nothing here calls library algorithms; the only thing read from a library
object is its raw structure-constant table (plain data).
"""

from __future__ import annotations

import math
import random
from fractions import Fraction

import sympy as sp
from sympy.polys.domains import QQ, QQ_I
from sympy.polys.matrices import DomainMatrix


def to_qqi(c):
    """Library scalar (anything with ``re``/``im`` rationals) or int to a QQ_I element."""
    if isinstance(c, int):
        return QQ_I(c)
    return QQ_I.dtype(QQ(int(c.re.numerator), int(c.re.denominator)),
                      QQ(int(c.im.numerator), int(c.im.denominator)))


def from_qqi(c):
    """QQ_I element to a ``(re, im)`` pair of Fractions."""
    return (Fraction(int(c.x.numerator), int(c.x.denominator)),
            Fraction(int(c.y.numerator), int(c.y.denominator)))


def dm(rows, ncols):
    rows = [list(r) for r in rows]
    return DomainMatrix(rows, (len(rows), ncols), QQ_I)


def rank(rows, ncols) -> int:
    return dm(rows, ncols).rank() if rows else 0


def basis(rows, ncols):
    """Row basis of a span (reduced echelon rows, zero rows dropped)."""
    if not rows:
        return []
    r, piv = dm(rows, ncols).rref()
    return r.to_list()[: len(piv)]


def nullspace(rows, ncols):
    """Basis of ``{x : row . x = 0 for every row}``."""
    if not rows:
        return [[QQ_I.one if k == j else QQ_I.zero for k in range(ncols)] for j in range(ncols)]
    return dm(rows, ncols).nullspace().to_list()


def same_span(a, b, ncols) -> bool:
    ra, rb = rank(a, ncols), rank(b, ncols)
    return ra == rb == rank(list(a) + list(b), ncols)


def contains(big, small, ncols) -> bool:
    return rank(list(big) + list(small), ncols) == rank(big, ncols)


class Model:
    """Structure constants copied into sympy: ``ad[i]`` is ad(b_i) as a DomainMatrix."""

    def __init__(self, dim, table):
        self.dim = dim
        self.c = {}
        for (i, j), row in table.items():
            self.c[(i, j)] = {k: to_qqi(v) for k, v in row.items()}
        # ad(b_i) sends b_j to sum_k c[(i, j)][k] b_k; kept sparse as {(k, j): value}
        self.ad_entries = [{(k, j): v for j in range(dim) for k, v in self.c.get((i, j), {}).items()}
                           for i in range(dim)]
        self.ad = [DomainMatrix({k: {j: v for (kk, j), v in e.items() if kk == k} for k in range(dim)},
                                (dim, dim), QQ_I) for e in self.ad_entries]

    @classmethod
    def of(cls, L):
        return cls(L.dim, L.table)

    def bracket(self, x, y):
        out = [QQ_I.zero] * self.dim
        for i, a in enumerate(x):
            if not a:
                continue
            for j, b in enumerate(y):
                if not b:
                    continue
                for k, v in self.c.get((i, j), {}).items():
                    out[k] += a * b * v
        return out

    def bracket_span(self, U, V):
        return basis([self.bracket(x, y) for x in U for y in V], self.dim)

    def whole(self):
        return [[QQ_I.one if k == j else QQ_I.zero for k in range(self.dim)] for j in range(self.dim)]

    def ad_of(self, x):
        m = DomainMatrix.zeros((self.dim, self.dim), QQ_I)
        for i, a in enumerate(x):
            if a:
                m = m + self.ad[i] * a
        return m

    def derived_dims(self, U=None):
        U = self.whole() if U is None else basis(U, self.dim)
        dims = [len(U)]
        while U:
            nxt = self.bracket_span(U, U)
            if len(nxt) == len(U):
                break
            U = nxt
            dims.append(len(U))
        return dims

    def lower_central_dims(self):
        W = self.whole()
        U, dims = W, [len(W)]
        while U:
            nxt = self.bracket_span(W, U)
            if len(nxt) == len(U):
                break
            U = nxt
            dims.append(len(U))
        return dims

    def solvability_index(self, U=None):
        dims = self.derived_dims(U)
        return len(dims) - 1 if dims[-1] == 0 else None

    def killing(self):
        def tr(a, b):
            return sum((v * b.get((j, k), QQ_I.zero) for (k, j), v in a.items()), QQ_I.zero)

        e = self.ad_entries
        return [[tr(e[i], e[j]) for j in range(self.dim)] for i in range(self.dim)]

    def solvable_radical(self):
        """Killing-orthogonal complement of [L, L] (Cartan's criterion)."""
        if self.dim == 0:
            return []
        D = self.bracket_span(self.whole(), self.whole())
        if not D:
            return self.whole()
        eqs = dm(D, self.dim) * dm(self.killing(), self.dim)
        return basis(nullspace(eqs.to_list(), self.dim), self.dim)

    def jacobson(self):
        return self.bracket_span(self.whole(), self.solvable_radical())

    def centre(self):
        if self.dim == 0:
            return []
        rows = []
        for i in range(self.dim):
            for k in range(self.dim):
                rows.append([self.c.get((j, i), {}).get(k, QQ_I.zero) for j in range(self.dim)])
        return basis(nullspace(rows, self.dim), self.dim)

    def is_nilpotent_element(self, x) -> bool:
        return (self.ad_of(x) ** self.dim).is_zero_matrix

    def is_ideal(self, U) -> bool:
        return contains(U, self.bracket_span(self.whole(), U), self.dim) if U else True

    def is_nilpotent_ideal(self, U) -> bool:
        cur = basis(U, self.dim)
        for _ in range(self.dim + 1):
            if not cur:
                return True
            cur = self.bracket_span(U, cur)
        return not cur

    def random_element(self, U, rng: random.Random, bound=3):
        out = [QQ_I.zero] * self.dim
        for row in U:
            c = QQ_I(rng.randint(-bound, bound), rng.randint(-1, 1))
            out = [a + c * b for a, b in zip(out, row)]
        return out


def lib_rows(U):
    """Library subspace basis rows as QQ_I lists."""
    return [[to_qqi(c) for c in row] for row in U.basis]


def ceil_log2(n: int) -> int:
    return math.ceil(math.log2(n)) if n > 1 else 0


# --------------------------------------------------------------------------
# matrix models built from scratch, independent of the catalog
# --------------------------------------------------------------------------
def unit(n, i, j):
    m = sp.zeros(n, n)
    m[i, j] = 1
    return m


def upper_triangular_mats(n, strict=False):
    return [unit(n, i, j) for i in range(n) for j in range(n) if (i < j if strict else i <= j)]


def matrix_span_dims(mats):
    """Derived-series dimensions of the matrix Lie algebra spanned by ``mats``."""
    def rk(ms):
        return sp.Matrix([list(m) for m in ms]).rank() if ms else 0

    def reduce(ms):
        if not ms:
            return []
        M = sp.Matrix([list(m) for m in ms])
        r, piv = M.T.rref()
        return [ms[p] for p in piv]

    cur = reduce(mats)
    dims = [len(cur)]
    while cur:
        nxt = reduce([a * b - b * a for a in cur for b in cur])
        if len(nxt) == len(cur):
            break
        cur = nxt
        dims.append(rk(cur))
    return dims

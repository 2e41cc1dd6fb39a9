"""Exact linear algebra over Q(i): matrices, solving and the subspace lattice.

Vectors are plain tuples of :class:`GaussianRational`.  Elimination runs on
sparse ``{column: value}`` rows because structure-constant systems are very
sparse; dense wrappers are provided for the public API.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import DimensionError
from .scalars import ONE, ZERO, GaussianRational, gr

Vec = tuple  # tuple[GaussianRational, ...]
SparseRow = dict  # dict[int, GaussianRational]


# --------------------------------------------------------------------------
# sparse helpers
# --------------------------------------------------------------------------
def to_sparse(vec: Sequence) -> SparseRow:
    return {k: v for k, v in enumerate(vec) if v}


def to_dense(row: SparseRow, n: int) -> Vec:
    out = [ZERO] * n
    for k, v in row.items():
        out[k] = v
    return tuple(out)


def axpy(target: SparseRow, coeff: GaussianRational, src: SparseRow) -> None:
    """In place ``target += coeff * src`` dropping cancelled entries."""
    for k, v in src.items():
        t = target.get(k)
        if t is None:
            target[k] = coeff * v
        else:
            t = t + coeff * v
            if t:
                target[k] = t
            else:
                del target[k]


def scale(row: SparseRow, coeff: GaussianRational) -> SparseRow:
    if not coeff:
        return {}
    return {k: coeff * v for k, v in row.items()}


def vec(*entries) -> Vec:
    return tuple(gr(x) for x in entries)


def zero_vec(n: int) -> Vec:
    return (ZERO,) * n


def unit_vec(n: int, k: int) -> Vec:
    out = [ZERO] * n
    out[k] = ONE
    return tuple(out)


def vadd(x: Vec, y: Vec) -> Vec:
    return tuple(a + b for a, b in zip(x, y))


def vsub(x: Vec, y: Vec) -> Vec:
    return tuple(a - b for a, b in zip(x, y))


def vscale(c, x: Vec) -> Vec:
    c = gr(c)
    return tuple(c * a for a in x)


def is_zero_vec(x: Iterable) -> bool:
    return not any(x)


def lincomb(coeffs: Sequence, vectors: Sequence[Vec], n: int) -> Vec:
    acc: SparseRow = {}
    for c, v in zip(coeffs, vectors):
        if c:
            axpy(acc, gr(c), to_sparse(v))
    return to_dense(acc, n)


class Echelon:
    """Incremental Gauss-Jordan elimination.

    Rows are kept fully reduced (each pivot column is zero in every other row)
    with unit pivots; a pivot is always the leftmost nonzero of its row, so
    :meth:`rows` is the reduced row-echelon basis of the span.
    """

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.pivot_rows: dict[int, SparseRow] = {}

    @property
    def rank(self) -> int:
        return len(self.pivot_rows)

    def reduce(self, row: SparseRow) -> SparseRow:
        r = dict(row)
        piv = self.pivot_rows
        for p in [c for c in r if c in piv]:
            c = r.get(p)
            if c:
                axpy(r, -c, piv[p])
        return r

    def add(self, row: SparseRow) -> bool:
        r = self.reduce(row)
        if not r:
            return False
        p = min(r)
        lead = r[p]
        if lead != ONE:
            inv = lead.inverse()
            r = {k: inv * v for k, v in r.items()}
        for q, other in self.pivot_rows.items():
            c = other.get(p)
            if c:
                axpy(other, -c, r)
        self.pivot_rows[p] = r
        return True

    def contains(self, row: SparseRow) -> bool:
        return not self.reduce(row)

    def rows(self) -> list[SparseRow]:
        return [self.pivot_rows[p] for p in sorted(self.pivot_rows)]

    def pivots(self) -> list[int]:
        return sorted(self.pivot_rows)

    def null_space(self) -> list[SparseRow]:
        """Basis of ``{x : row . x = 0}``; free variables set to unit vectors."""
        pivots = self.pivot_rows
        by_col: dict[int, list[tuple[int, GaussianRational]]] = {}
        for p, row in pivots.items():
            for k, v in row.items():
                if k != p:
                    by_col.setdefault(k, []).append((p, v))
        out = []
        for f in range(self.ncols):
            if f in pivots:
                continue
            x = {f: ONE}
            for p, v in by_col.get(f, ()):
                x[p] = -v
            out.append(x)
        return out


def null_space_rows(rows: Iterable[SparseRow], ncols: int) -> list[SparseRow]:
    ech = Echelon(ncols)
    for r in rows:
        if r:
            ech.add(r)
    return ech.null_space()


def solve_sparse(equations: Iterable[tuple[SparseRow, GaussianRational]], nvars: int) -> SparseRow | None:
    """One solution of ``row . x = rhs`` for every ``(row, rhs)``, free variables zero."""
    ech = Echelon(nvars + 1)
    for row, rhs in equations:
        r = dict(row)
        if rhs:
            r[nvars] = -gr(rhs)
        if r:
            ech.add(r)
    if nvars in ech.pivot_rows:
        return None
    out: SparseRow = {}
    for p, row in ech.pivot_rows.items():
        c = row.get(nvars)
        if c:
            out[p] = -c
    return out


# --------------------------------------------------------------------------
# Matrix
# --------------------------------------------------------------------------
class Matrix:
    """Immutable dense matrix of Gaussian rationals (row-major)."""

    __slots__ = ("rows", "cols", "_entries", "_sparse", "_cols", "_hash")

    def __init__(self, entries: Sequence[Sequence], cols: int | None = None):
        rows = tuple(tuple(gr(x) for x in row) for row in entries)
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise DimensionError("ragged matrix rows")
        self.rows = len(rows)
        self.cols = cols
        self._entries = rows
        self._sparse = None
        self._cols = None
        self._hash = None

    @classmethod
    def _from_trusted(cls, rows: tuple, cols: int) -> "Matrix":
        m = object.__new__(cls)
        m.rows = len(rows)
        m.cols = cols
        m._entries = rows
        m._sparse = None
        m._cols = None
        m._hash = None
        return m

    @classmethod
    def _own_sparse(cls, rows: list, cols: int) -> "Matrix":
        # takes ownership of ``rows``; the dense form is built on first use
        m = object.__new__(cls)
        m.rows = len(rows)
        m.cols = cols
        m._entries = None
        m._sparse = rows
        m._cols = None
        m._hash = None
        return m

    @classmethod
    def from_sparse(cls, rows: Sequence[SparseRow], cols: int) -> "Matrix":
        return cls._own_sparse([dict(r) for r in rows], cols)

    @property
    def entries(self) -> tuple:
        if self._entries is None:
            self._entries = tuple(to_dense(r, self.cols) for r in self._sparse)
        return self._entries

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        return cls._from_trusted(tuple((ZERO,) * cols for _ in range(rows)), cols)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls._from_trusted(tuple(unit_vec(n, i) for i in range(n)), n)

    @classmethod
    def from_columns(cls, columns: Sequence[Vec], rows: int) -> "Matrix":
        return cls._from_trusted(
            tuple(tuple(col[i] for col in columns) for i in range(rows)), len(columns)
        )

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @property
    def sparse_rows(self) -> list[SparseRow]:
        if self._sparse is None:
            self._sparse = [to_sparse(r) for r in self.entries]
        return self._sparse

    def __getitem__(self, idx):
        if isinstance(idx, tuple):
            i, j = idx
            return self.entries[i][j]
        return self.entries[idx]

    def __iter__(self):
        return iter(self.entries)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.cols == other.cols and self.entries == other.entries

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.cols, self.entries))
        return self._hash

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in row) for row in self.entries)
        return f"Matrix({self.rows}x{self.cols}: [{body}])"

    @property
    def sparse_columns(self) -> list[SparseRow]:
        if self._cols is None:
            cols: list[SparseRow] = [{} for _ in range(self.cols)]
            for i, row in enumerate(self.sparse_rows):
                for j, v in row.items():
                    cols[j][i] = v
            self._cols = cols
        return self._cols

    def apply_sparse(self, x: SparseRow) -> SparseRow:
        """``self @ x`` for a sparse vector."""
        cols = self.sparse_columns
        acc: SparseRow = {}
        for k, v in x.items():
            axpy(acc, v, cols[k])
        return acc

    def column(self, j: int) -> Vec:
        return tuple(row[j] for row in self.entries)

    def transpose(self) -> "Matrix":
        return Matrix._from_trusted(
            tuple(self.column(j) for j in range(self.cols)), self.rows
        )

    T = property(transpose)

    def is_zero(self) -> bool:
        return not any(self.sparse_rows)

    def trace(self) -> GaussianRational:
        if self.rows != self.cols:
            raise DimensionError("trace of a non-square matrix")
        acc = ZERO
        for i in range(self.rows):
            v = self.sparse_rows[i].get(i)
            if v:
                acc = acc + v
        return acc

    def _combine(self, other: "Matrix", c) -> "Matrix":
        self._check_same(other)
        out = []
        for r, t in zip(self.sparse_rows, other.sparse_rows):
            acc = dict(r)
            axpy(acc, c, t)
            out.append(acc)
        return Matrix._own_sparse(out, self.cols)

    def __add__(self, other: "Matrix") -> "Matrix":
        return self._combine(other, ONE)

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self._combine(other, -ONE)

    def __neg__(self):
        return self.scaled(-ONE)

    def scaled(self, c) -> "Matrix":
        c = gr(c)
        return Matrix._own_sparse([scale(r, c) for r in self.sparse_rows], self.cols)

    __rmul__ = scaled

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            if self.cols != other.rows:
                raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
            b_rows = other.sparse_rows
            out = []
            for row in self.sparse_rows:
                acc: SparseRow = {}
                for k, a in row.items():
                    src = b_rows[k]
                    if src:
                        axpy(acc, a, src)
                out.append(acc)
            return Matrix._own_sparse(out, other.cols)
        x = tuple(other)
        if len(x) != self.cols:
            raise DimensionError("matrix-vector shape mismatch")
        out = []
        for row in self.sparse_rows:
            acc = ZERO
            for k, a in row.items():
                xv = x[k]
                if xv:
                    acc = acc + a * xv
            out.append(acc)
        return tuple(out)

    def power(self, k: int) -> "Matrix":
        result = Matrix.identity(self.rows)
        for _ in range(k):
            result = result @ self
        return result

    def is_nilpotent(self) -> bool:
        if self.rows != self.cols:
            raise DimensionError("nilpotency of a non-square matrix")
        p = self
        for _ in range(self.rows):
            if p.is_zero():
                return True
            p = p @ self
        return p.is_zero()

    def flatten(self) -> Vec:
        return tuple(x for row in self.entries for x in row)

    def flat_sparse(self) -> SparseRow:
        n = self.cols
        out = {}
        for i, row in enumerate(self.sparse_rows):
            base = i * n
            for j, v in row.items():
                out[base + j] = v
        return out

    @classmethod
    def unflatten(cls, flat: Sequence, rows: int, cols: int) -> "Matrix":
        flat = tuple(flat)
        return cls._from_trusted(
            tuple(flat[i * cols:(i + 1) * cols] for i in range(rows)), cols
        )

    @classmethod
    def unflatten_sparse(cls, flat: SparseRow, rows: int, cols: int) -> "Matrix":
        srows: list[SparseRow] = [{} for _ in range(rows)]
        for k, v in flat.items():
            srows[k // cols][k % cols] = v
        return cls._own_sparse(srows, cols)

    def rank(self) -> int:
        return rref(self)[1]

    def _check_same(self, other):
        if self.shape != other.shape:
            raise DimensionError(f"shape mismatch {self.shape} vs {other.shape}")


def trace_of_product(a: Matrix, b: Matrix) -> GaussianRational:
    """tr(a @ b) without forming the product."""
    acc = ZERO
    b_rows = b.sparse_rows
    for i, row in enumerate(a.sparse_rows):
        for k, v in row.items():
            w = b_rows[k].get(i)
            if w:
                acc = acc + v * w
    return acc


def commutator(a: Matrix, b: Matrix) -> Matrix:
    return a @ b - b @ a


# --------------------------------------------------------------------------
# elimination-based operations
# --------------------------------------------------------------------------
def rref(m: Matrix) -> tuple[Matrix, int]:
    """Reduced row-echelon form (zero rows padded at the bottom) and rank."""
    ech = Echelon(m.cols)
    for r in m.sparse_rows:
        if r:
            ech.add(r)
    rows = ech.rows()
    rank = len(rows)
    rows = rows + [{} for _ in range(m.rows - rank)]
    return Matrix.from_sparse(rows, m.cols), rank


def solve(a: Matrix, b: Sequence) -> Vec | None:
    """Some ``x`` with ``a @ x == b`` (free variables zero), or ``None``."""
    b = tuple(gr(x) for x in b)
    if len(b) != a.rows:
        raise DimensionError("right-hand side length does not match rows")
    n = a.cols
    ech = Echelon(n + 1)
    for row, rhs in zip(a.sparse_rows, b):
        aug = dict(row)
        if rhs:
            aug[n] = rhs
        if aug:
            ech.add(aug)
    if n in ech.pivot_rows:
        return None
    x = [ZERO] * n
    for p, row in ech.pivot_rows.items():
        x[p] = row.get(n, ZERO)
    return tuple(x)


def kernel(a: Matrix) -> "Subspace":
    return Subspace._from_sparse_basis(a.cols, null_space_rows(a.sparse_rows, a.cols))


def image(a: Matrix) -> "Subspace":
    return Subspace.span(a.rows, [a.column(j) for j in range(a.cols)])


# --------------------------------------------------------------------------
# Subspace lattice
# --------------------------------------------------------------------------
class Subspace:
    """A linear subspace of Q(i)^n stored by its reduced row-echelon basis.

    The basis is canonical, so ``==`` compares subspaces, not presentations.
    """

    __slots__ = ("ambient_dim", "basis", "pivots", "_rows", "_hash")

    def __init__(self, ambient_dim: int, vectors: Iterable[Sequence] = ()):
        ech = Echelon(ambient_dim)
        for v in vectors:
            v = tuple(gr(x) for x in v)
            if len(v) != ambient_dim:
                raise DimensionError(
                    f"vector of length {len(v)} in ambient dimension {ambient_dim}"
                )
            ech.add(to_sparse(v))
        self._init_from_echelon(ech)

    def _init_from_echelon(self, ech: Echelon) -> None:
        rows = ech.rows()
        self.ambient_dim = ech.ncols
        self._rows = tuple(rows)
        self.basis = tuple(to_dense(r, ech.ncols) for r in rows)
        self.pivots = tuple(ech.pivots())
        self._hash = None

    @classmethod
    def span(cls, ambient_dim: int, vectors: Iterable[Sequence]) -> "Subspace":
        return cls(ambient_dim, vectors)

    @classmethod
    def _from_sparse_basis(cls, ambient_dim: int, rows: Iterable[SparseRow]) -> "Subspace":
        ech = Echelon(ambient_dim)
        for r in rows:
            if r:
                ech.add(r)
        obj = object.__new__(cls)
        obj._init_from_echelon(ech)
        return obj

    @classmethod
    def from_echelon(cls, ech: Echelon) -> "Subspace":
        obj = object.__new__(cls)
        obj._init_from_echelon(ech)
        return obj

    @classmethod
    def zero(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim)

    @classmethod
    def whole(cls, ambient_dim: int) -> "Subspace":
        ech = Echelon(ambient_dim)
        ech.pivot_rows = {i: {i: ONE} for i in range(ambient_dim)}
        return cls.from_echelon(ech)

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def sparse_basis(self) -> tuple:
        return self._rows

    def __len__(self):
        return self.dim

    def is_zero(self) -> bool:
        return not self.basis

    def is_whole(self) -> bool:
        return self.dim == self.ambient_dim

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.basis == other.basis

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ambient_dim, self.basis))
        return self._hash

    def __repr__(self):
        rows = ", ".join("(" + ", ".join(str(x) for x in b) + ")" for b in self.basis)
        return f"Subspace(dim={self.dim}/{self.ambient_dim}, basis=[{rows}])"

    def _check(self, other: "Subspace") -> None:
        if self.ambient_dim != other.ambient_dim:
            raise DimensionError(
                f"ambient dimensions differ: {self.ambient_dim} vs {other.ambient_dim}"
            )

    def echelon(self) -> Echelon:
        ech = Echelon(self.ambient_dim)
        for p, r in zip(self.pivots, self._rows):
            ech.pivot_rows[p] = dict(r)
        return ech

    def residual_sparse(self, x: SparseRow) -> SparseRow:
        r = dict(x)
        for p, row in zip(self.pivots, self._rows):
            c = r.get(p)
            if c:
                axpy(r, -c, row)
        return r

    def residual(self, x: Sequence) -> Vec:
        """Canonical representative of ``x`` modulo this subspace."""
        return to_dense(self.residual_sparse(to_sparse(x)), self.ambient_dim)

    def member(self, x: Sequence) -> bool:
        if len(x) != self.ambient_dim:
            raise DimensionError("vector length does not match ambient dimension")
        return not self.residual_sparse(to_sparse(x))

    __contains__ = member

    def contains(self, other: "Subspace") -> bool:
        self._check(other)
        return all(not self.residual_sparse(r) for r in other._rows)

    def coordinates(self, x: Sequence) -> Vec:
        """Coefficients of ``x`` in :attr:`basis`; raises if ``x`` is not a member."""
        if not self.member(x):
            raise ValueError("vector is not in the subspace")
        return tuple(gr(x[p]) for p in self.pivots)

    def sum(self, other: "Subspace") -> "Subspace":
        self._check(other)
        ech = self.echelon()
        for r in other._rows:
            ech.add(r)
        return Subspace.from_echelon(ech)

    __add__ = sum

    def intersect(self, other: "Subspace") -> "Subspace":
        self._check(other)
        if self.dim > other.dim:
            return other.intersect(self)
        if self.is_zero() or other.is_whole():
            return self
        # combinations a of self's basis whose image lies in other
        residues = [other.residual_sparse(r) for r in self._rows]
        n = self.dim
        eqs: list[SparseRow] = [{} for _ in range(self.ambient_dim)]
        for k, res in enumerate(residues):
            for col, v in res.items():
                eqs[col][k] = v
        coeffs = null_space_rows(eqs, n)
        vecs = []
        for a in coeffs:
            acc: SparseRow = {}
            for k, c in a.items():
                axpy(acc, c, self._rows[k])
            vecs.append(acc)
        return Subspace._from_sparse_basis(self.ambient_dim, vecs)

    __and__ = intersect

    def complement_indices(self) -> tuple:
        """Coordinates not used as pivots; their unit vectors span a complement."""
        piv = set(self.pivots)
        return tuple(k for k in range(self.ambient_dim) if k not in piv)

    def complement_in(self, bigger: "Subspace") -> list[Vec]:
        """Vectors of ``bigger`` forming a basis of a complement of ``self`` in it."""
        ech = self.echelon()
        out = []
        for r in bigger._rows:
            if ech.add(r):
                out.append(to_dense(r, self.ambient_dim))
        return out

    def image_under(self, m: Matrix) -> "Subspace":
        return Subspace.span(m.rows, [m @ b for b in self.basis])


def sum_all(spaces: Iterable[Subspace], ambient_dim: int) -> Subspace:
    ech = Echelon(ambient_dim)
    for s in spaces:
        for r in s.sparse_basis:
            ech.add(r)
    return Subspace.from_echelon(ech)


def intersect_all(spaces: Iterable[Subspace], ambient_dim: int) -> Subspace:
    out = Subspace.whole(ambient_dim)
    for s in spaces:
        out = out.intersect(s)
    return out


class LinearMap:
    """A linear map between coordinate spaces, stored as a target x source matrix."""

    __slots__ = ("source_dim", "target_dim", "matrix")

    def __init__(self, matrix: Matrix, source_dim: int | None = None, target_dim: int | None = None):
        self.matrix = matrix
        self.source_dim = matrix.cols if source_dim is None else source_dim
        self.target_dim = matrix.rows if target_dim is None else target_dim
        if (matrix.rows, matrix.cols) != (self.target_dim, self.source_dim):
            raise DimensionError("matrix shape does not match declared dimensions")

    def __call__(self, x: Sequence) -> Vec:
        return self.matrix @ x

    def apply_sparse(self, x: SparseRow) -> SparseRow:
        return self.matrix.apply_sparse(x)

    def compose(self, other: "LinearMap") -> "LinearMap":
        """``self o other``."""
        return LinearMap(self.matrix @ other.matrix)

    def __eq__(self, other):
        return isinstance(other, LinearMap) and self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    def __repr__(self):
        return f"LinearMap({self.source_dim} -> {self.target_dim})"

    def image(self) -> Subspace:
        return image(self.matrix)

    def kernel(self) -> Subspace:
        return kernel(self.matrix)

    def preimage(self, target: Subspace) -> Subspace:
        """``{x : self(x) in target}``."""
        res_rows = [{} for _ in range(self.target_dim)]
        for j, col in enumerate(self.matrix.sparse_columns):
            for k, v in target.residual_sparse(col).items():
                res_rows[k][j] = v
        return Subspace._from_sparse_basis(
            self.source_dim, null_space_rows(res_rows, self.source_dim)
        )

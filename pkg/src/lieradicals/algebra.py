"""Lie algebras presented by structure constants, and the subspace calculus on them."""

from __future__ import annotations

from typing import Iterable, Mapping, Sequence

from .errors import (
    AlgebraError,
    InconsistentEntry,
    InternalError,
    JacobiViolation,
    NotADerivation,
    NotAHomomorphism,
    NotAnIdeal,
    NotASubalgebra,
    ParentMismatch,
)
from .linalg import (
    Echelon,
    LinearMap,
    Matrix,
    SparseRow,
    Subspace,
    Vec,
    axpy,
    null_space_rows,
    to_dense,
    to_sparse,
    trace_of_product,
    unit_vec,
)
from .scalars import ONE, ZERO, gr


class LieAlgebra:
    """A finite-dimensional Lie algebra over Q(i).

    ``table[(i, j)]`` is the sparse coordinate vector of ``[b_i, b_j]``; both
    orders are stored and zero brackets are omitted.  Build instances through
    :func:`make_algebra`, which validates antisymmetry and the Jacobi identity.
    """

    def __init__(self, dim: int, labels: Sequence[str], table: Mapping, name: str = ""):
        self.dim = dim
        self.labels = tuple(labels)
        self.table: dict[tuple[int, int], SparseRow] = dict(table)
        self.name = name
        self._ad: list[Matrix] | None = None
        self._cache: dict = {}

    def __repr__(self):
        title = self.name or "LieAlgebra"
        return f"<{title}: dim {self.dim}, basis {', '.join(self.labels)}>"

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, LieAlgebra):
            return NotImplemented
        return self.dim == other.dim and self.table == other.table

    def __hash__(self):
        return hash((self.dim, frozenset((k, tuple(sorted(v.items(), key=lambda t: t[0]))) for k, v in self.table.items())))

    # elements ------------------------------------------------------------
    def basis_vector(self, k: int) -> Vec:
        return unit_vec(self.dim, k)

    def element(self, **coeffs) -> Vec:
        """Vector from label keyword arguments, e.g. ``L.element(x=1, z=2)``."""
        out = [ZERO] * self.dim
        for lab, c in coeffs.items():
            out[self.labels.index(lab)] = gr(c)
        return tuple(out)

    def structure_constants(self, i: int, j: int) -> Vec:
        return to_dense(self.table.get((i, j), {}), self.dim)

    def bracket_sparse(self, x: SparseRow, y: SparseRow) -> SparseRow:
        acc: SparseRow = {}
        table = self.table
        for i, xi in x.items():
            for j, yj in y.items():
                if i == j:
                    continue
                c = table.get((i, j))
                if c:
                    axpy(acc, xi * yj, c)
        return acc

    def bracket(self, x: Sequence, y: Sequence) -> Vec:
        return to_dense(self.bracket_sparse(to_sparse(x), to_sparse(y)), self.dim)

    def ad_basis(self) -> list[Matrix]:
        """``ad(b_i)`` for every basis vector; column j holds ``[b_i, b_j]``."""
        if self._ad is None:
            n = self.dim
            mats = []
            for i in range(n):
                rows: list[SparseRow] = [{} for _ in range(n)]
                for j in range(n):
                    c = self.table.get((i, j))
                    if c:
                        for k, v in c.items():
                            rows[k][j] = v
                mats.append(Matrix.from_sparse(rows, n))
            self._ad = mats
        return self._ad

    def ad(self, x: Sequence) -> Matrix:
        acc: list[SparseRow] = [{} for _ in range(self.dim)]
        for i, xi in enumerate(x):
            if xi:
                for k, row in enumerate(self.ad_basis()[i].sparse_rows):
                    if row:
                        axpy(acc[k], xi, row)
        return Matrix.from_sparse(acc, self.dim)

    def brackets_upper(self) -> list[tuple[int, int, SparseRow]]:
        return [(i, j, c) for (i, j), c in sorted(self.table.items()) if i < j]

    def whole(self) -> "AlgSubspace":
        return AlgSubspace.of(self, Subspace.whole(self.dim))

    def zero(self) -> "AlgSubspace":
        return AlgSubspace.of(self, Subspace.zero(self.dim))

    def span(self, vectors: Iterable[Sequence]) -> "AlgSubspace":
        return AlgSubspace.of(self, Subspace(self.dim, vectors))

    def span_labels(self, *labels: str) -> "AlgSubspace":
        return self.span(self.basis_vector(self.labels.index(lab)) for lab in labels)

    def is_abelian(self) -> bool:
        return not self.table


class AlgSubspace(Subspace):
    """A subspace of a specific Lie algebra (ideal, subalgebra, radical...)."""

    __slots__ = ("algebra",)

    @classmethod
    def of(cls, algebra: LieAlgebra, space: Subspace) -> "AlgSubspace":
        if space.ambient_dim != algebra.dim:
            raise ParentMismatch("subspace ambient dimension differs from algebra dimension")
        obj = object.__new__(cls)
        obj.ambient_dim = space.ambient_dim
        obj.basis = space.basis
        obj.pivots = space.pivots
        obj._rows = space._rows
        obj._hash = None
        obj.algebra = algebra
        return obj

    @property
    def space(self) -> Subspace:
        return Subspace._from_sparse_basis(self.ambient_dim, self._rows)

    def __repr__(self):
        name = self.algebra.name or "L"
        return f"AlgSubspace({name}, dim={self.dim}, basis={_label_basis(self.algebra, self)})"

    def sum(self, other):
        return AlgSubspace.of(self.algebra, Subspace.sum(self, other))

    __add__ = sum

    def intersect(self, other):
        return AlgSubspace.of(self.algebra, Subspace.intersect(self, other))

    __and__ = intersect


def _label_basis(L: LieAlgebra, U: Subspace) -> list[str]:
    out = []
    for row in U.sparse_basis:
        terms = []
        for k in sorted(row):
            c = row[k]
            terms.append(L.labels[k] if c == ONE else f"({c})*{L.labels[k]}")
        out.append(" + ".join(terms))
    return out


def describe(L: LieAlgebra, U: Subspace) -> str:
    basis = _label_basis(L, U)
    return "span{" + ", ".join(basis) + "}" if basis else "{0}"


def as_sub(L: LieAlgebra, U) -> AlgSubspace:
    """Coerce a subspace or vector list into an :class:`AlgSubspace` of ``L``."""
    if isinstance(U, AlgSubspace):
        if U.algebra is not L and U.algebra != L:
            raise ParentMismatch("subspace belongs to a different algebra")
        return U
    if isinstance(U, Subspace):
        return AlgSubspace.of(L, U)
    return L.span(U)


# --------------------------------------------------------------------------
# construction
# --------------------------------------------------------------------------
def _coeff_row(entry, dim: int) -> SparseRow:
    if isinstance(entry, Mapping):
        row = {}
        for k, v in entry.items():
            k = int(k)
            if not 0 <= k < dim:
                raise AlgebraError(f"coordinate index {k} out of range")
            v = gr(v)
            if v:
                row[k] = v
        return row
    entry = tuple(entry)
    if len(entry) != dim:
        raise AlgebraError("dense bracket vector has wrong length")
    return to_sparse(tuple(gr(v) for v in entry))


def make_algebra(dim: int, labels: Sequence[str] | None = None,
                 bracket_table: Mapping | None = None, name: str = "") -> LieAlgebra:
    """Validated Lie algebra from ``{(i, j): coordinates of [b_i, b_j]}``.

    Entries may be given for ``i < j`` only (the rest follows by antisymmetry);
    when both ``(i, j)`` and ``(j, i)`` are supplied they must be negatives.
    """
    if labels is None:
        labels = [f"b{k}" for k in range(dim)]
    labels = [str(x) for x in labels]
    if len(labels) != dim:
        raise AlgebraError(f"expected {dim} basis labels, got {len(labels)}")
    if len(set(labels)) != dim:
        raise AlgebraError("basis labels must be distinct")
    table: dict[tuple[int, int], SparseRow] = {}
    for (i, j), entry in (bracket_table or {}).items():
        i, j = int(i), int(j)
        if not (0 <= i < dim and 0 <= j < dim):
            raise AlgebraError(f"bracket index ({i}, {j}) out of range")
        row = _coeff_row(entry, dim)
        if i == j:
            if row:
                raise InconsistentEntry(i, j)
            continue
        if (i, j) in table:
            if table[(i, j)] != row:
                raise InconsistentEntry(i, j)
            continue
        if row:
            table[(i, j)] = row
            table[(j, i)] = {k: -v for k, v in row.items()}
        else:
            table[(i, j)] = {}
            table[(j, i)] = {}
    table = {k: v for k, v in table.items() if v}
    L = LieAlgebra(dim, labels, table, name)
    check_jacobi(L)
    return L


def jacobi_residual(L: LieAlgebra, i: int, j: int, k: int) -> SparseRow:
    e = lambda t: {t: ONE}  # noqa: E731
    acc: SparseRow = {}
    for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
        ab = L.table.get((a, b))
        if ab:
            axpy(acc, ONE, L.bracket_sparse(ab, e(c)))
    return acc


def check_jacobi(L: LieAlgebra) -> None:
    n = L.dim
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                res = jacobi_residual(L, i, j, k)
                if res:
                    raise JacobiViolation(i, j, k, to_dense(res, n))


# --------------------------------------------------------------------------
# subspace calculus
# --------------------------------------------------------------------------
def bracket_spaces(L: LieAlgebra, U, V) -> AlgSubspace:
    """Span of ``[u, v]`` over basis vectors of ``U`` and ``V``."""
    U, V = as_sub(L, U), as_sub(L, V)
    ech = Echelon(L.dim)
    same = U == V
    urows, vrows = U.sparse_basis, V.sparse_basis
    for a, u in enumerate(urows):
        for b, v in enumerate(vrows):
            if same and b <= a:
                continue
            br = L.bracket_sparse(u, v)
            if br:
                ech.add(br)
    return AlgSubspace.of(L, Subspace.from_echelon(ech))


def derived_algebra(L: LieAlgebra) -> AlgSubspace:
    key = "derived_algebra"
    if key not in L._cache:
        L._cache[key] = bracket_spaces(L, L.whole(), L.whole())
    return L._cache[key]


def is_subalgebra(L: LieAlgebra, U) -> bool:
    U = as_sub(L, U)
    rows = U.sparse_basis
    for a in range(len(rows)):
        for b in range(a + 1, len(rows)):
            if U.residual_sparse(L.bracket_sparse(rows[a], rows[b])):
                return False
    return True


def is_invariant(ops: Iterable[Matrix], U: Subspace) -> bool:
    for m in ops:
        for row in U.sparse_basis:
            if U.residual_sparse(m.apply_sparse(row)):
                return False
    return True


def is_ideal(L: LieAlgebra, U) -> bool:
    U = as_sub(L, U)
    if U.is_zero() or U.is_whole():
        return True
    return is_invariant(L.ad_basis(), U)


def derivations(L: LieAlgebra) -> list[Matrix]:
    """Basis of Der(L) = {D : D[a,b] = [Da,b] + [a,Db]} (one linear solve)."""
    key = "derivations"
    if key in L._cache:
        return L._cache[key]
    n = L.dim
    ad = L.ad_basis()
    ad_rows = [m.sparse_rows for m in ad]
    equations = []
    for i in range(n):
        for j in range(i + 1, n):
            cij = L.table.get((i, j), {})
            for k in range(n):
                eq: SparseRow = {}
                # D[b_i, b_j]_k = sum_l D[k][l] c_ij^l
                for l, v in cij.items():
                    eq[k * n + l] = eq.get(k * n + l, ZERO) + v
                # - [D b_i, b_j]_k = + sum_r D[r][i] (ad b_j)[k][r]
                for r, v in ad_rows[j][k].items():
                    eq[r * n + i] = eq.get(r * n + i, ZERO) + v
                # - [b_i, D b_j]_k = - sum_r D[r][j] (ad b_i)[k][r]
                for r, v in ad_rows[i][k].items():
                    eq[r * n + j] = eq.get(r * n + j, ZERO) - v
                eq = {c: v for c, v in eq.items() if v}
                if eq:
                    equations.append(eq)
    basis = null_space_rows(equations, n * n)
    result = [Matrix.unflatten_sparse(b, n, n) for b in basis]
    L._cache[key] = result
    return result


def is_derivation(L: LieAlgebra, D: Matrix) -> bool:
    n = L.dim
    cols = [D.column(j) for j in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            lhs = D @ L.structure_constants(i, j)
            rhs = tuple(a + b for a, b in zip(L.bracket(cols[i], L.basis_vector(j)),
                                              L.bracket(L.basis_vector(i), cols[j])))
            if lhs != rhs:
                return False
    return True


def is_characteristic(L: LieAlgebra, U) -> bool:
    """Invariance of ``U`` under every derivation of ``L``."""
    U = as_sub(L, U)
    if U.is_zero() or U.is_whole():
        return True
    return is_invariant(derivations(L), U)


def generated_subalgebra(L: LieAlgebra, S: Iterable[Sequence]) -> AlgSubspace:
    ech = Echelon(L.dim)
    basis: list[SparseRow] = []
    queue: list[SparseRow] = []
    for v in S:
        r = to_sparse(tuple(gr(x) for x in v))
        if ech.add(r):
            basis.append(r)
            queue.append(r)
    while queue:
        v = queue.pop()
        for w in list(basis):
            br = L.bracket_sparse(v, w)
            if br and ech.add(br):
                basis.append(br)
                queue.append(br)
    return AlgSubspace.of(L, Subspace.from_echelon(ech))


def generated_ideal(L: LieAlgebra, S: Iterable[Sequence]) -> AlgSubspace:
    ech = Echelon(L.dim)
    queue: list[SparseRow] = []
    for v in S:
        r = to_sparse(tuple(gr(x) for x in v))
        if ech.add(r):
            queue.append(r)
    ad = L.ad_basis()
    while queue:
        v = queue.pop()
        dv = to_dense(v, L.dim)
        for m in ad:
            br = to_sparse(m @ dv)
            if br and ech.add(br):
                queue.append(br)
    return AlgSubspace.of(L, Subspace.from_echelon(ech))


def centralizer(L: LieAlgebra, U) -> AlgSubspace:
    """``{a : [a, u] = 0 for all u in U}``."""
    U = as_sub(L, U)
    rows: list[SparseRow] = []
    for u in U.sparse_basis:
        # [a, u] = -ad(u) a
        adu = L.ad(to_dense(u, L.dim))
        rows.extend(r for r in adu.sparse_rows if r)
    return AlgSubspace.of(L, Subspace._from_sparse_basis(L.dim, null_space_rows(rows, L.dim)))


def centre(L: LieAlgebra) -> AlgSubspace:
    key = "centre"
    if key not in L._cache:
        # x central iff sum_i x_i c_ij = 0 for every j
        n = L.dim
        eqs: dict[tuple[int, int], SparseRow] = {}
        for (i, j), c in L.table.items():
            for k, v in c.items():
                eqs.setdefault((j, k), {})[i] = v
        L._cache[key] = AlgSubspace.of(L, Subspace._from_sparse_basis(n, null_space_rows(eqs.values(), n)))
    return L._cache[key]


def is_homomorphism(src: LieAlgebra, dst: LieAlgebra, f: LinearMap) -> bool:
    n = src.dim
    images = f.matrix.sparse_columns
    for i in range(n):
        for j in range(i + 1, n):
            lhs = f.apply_sparse(src.table.get((i, j), {}))
            rhs = dst.bracket_sparse(images[i], images[j])
            if lhs != rhs:
                return False
    return True


def quotient(L: LieAlgebra, I) -> tuple[LieAlgebra, LinearMap, LinearMap]:
    """``L / I`` on the non-pivot coordinates of ``I``, with projection and section."""
    I = as_sub(L, I)
    if not is_ideal(L, I):
        raise NotAnIdeal(f"{describe(L, I)} is not an ideal of {L.name or 'L'}")
    n = L.dim
    comp = I.complement_indices()
    pos = {c: t for t, c in enumerate(comp)}
    m = len(comp)

    def proj_sparse(x: SparseRow) -> SparseRow:
        r = I.residual_sparse(x)
        return {pos[k]: v for k, v in r.items()}

    proj_cols = [proj_sparse({j: ONE}) for j in range(n)]
    prows: list[SparseRow] = [{} for _ in range(m)]
    for j, col in enumerate(proj_cols):
        for t, v in col.items():
            prows[t][j] = v
    projection = LinearMap(Matrix.from_sparse(prows, n))
    srows: list[SparseRow] = [{} for _ in range(n)]
    for t, c in enumerate(comp):
        srows[c][t] = ONE
    section = LinearMap(Matrix.from_sparse(srows, m))
    table = {}
    for a in range(m):
        for b in range(a + 1, m):
            c = L.table.get((comp[a], comp[b]))
            if c:
                row = proj_sparse(c)
                if row:
                    table[(a, b)] = row
                    table[(b, a)] = {k: -v for k, v in row.items()}
    name = f"{L.name}/I" if L.name else ""
    Q = LieAlgebra(m, [L.labels[c] for c in comp], table, name)
    if not is_homomorphism(L, Q, projection):
        raise InternalError("quotient projection is not a homomorphism")
    return Q, projection, section


def induced_algebra(L: LieAlgebra, U) -> tuple[LieAlgebra, LinearMap]:
    """The subalgebra ``U`` as an algebra on its echelon basis, with the inclusion."""
    U = as_sub(L, U)
    if not is_subalgebra(L, U):
        raise NotASubalgebra(f"{describe(L, U)} is not a subalgebra")
    rows = U.sparse_basis
    d = len(rows)
    table = {}
    for a in range(d):
        for b in range(a + 1, d):
            br = L.bracket_sparse(rows[a], rows[b])
            if br:
                coords = {t: br[p] for t, p in enumerate(U.pivots) if p in br}
                table[(a, b)] = coords
                table[(b, a)] = {k: -v for k, v in coords.items()}
    labels = []
    for t, r in enumerate(rows):
        if len(r) == 1:
            labels.append(L.labels[next(iter(r))])
        else:
            labels.append(f"u{t}")
    if len(set(labels)) != len(labels):
        labels = [f"u{t}" for t in range(d)]
    inc = LinearMap(Matrix.from_columns(U.basis, L.dim) if d else Matrix.zeros(L.dim, 0), d, L.dim)
    A = LieAlgebra(d, labels, table, f"{L.name}|U" if L.name else "")
    return A, inc


def push_forward(L: LieAlgebra, f: LinearMap, U: Subspace) -> AlgSubspace:
    """Image of a subspace under a linear map into ``L``."""
    return AlgSubspace.of(L, Subspace(L.dim, (f(b) for b in U.basis)))


def direct_product(factors: Sequence[LieAlgebra], name: str = "") -> LieAlgebra:
    """Block-diagonal structure constants; factor k occupies a contiguous block."""
    labels: list[str] = []
    table = {}
    offset = 0
    all_labels = [lab for F in factors for lab in F.labels]
    clash = len(set(all_labels)) != len(all_labels)
    for idx, F in enumerate(factors):
        labels.extend(f"{lab}.{idx}" if clash else lab for lab in F.labels)
        for (i, j), c in F.table.items():
            table[(i + offset, j + offset)] = {k + offset: v for k, v in c.items()}
        offset += F.dim
    if not name:
        name = " + ".join(F.name or f"L{k}" for k, F in enumerate(factors))
    return LieAlgebra(offset, labels, table, name)


def factor_blocks(factors: Sequence[LieAlgebra]) -> list[range]:
    out, off = [], 0
    for F in factors:
        out.append(range(off, off + F.dim))
        off += F.dim
    return out


def semidirect_product(L1: LieAlgebra, L0: LieAlgebra, phi: Sequence[Matrix],
                       name: str = "") -> LieAlgebra:
    """``L1`` acting on ``L0`` through ``phi``:

    ``[(a; x), (b; y)] = ([a, b]; phi(a)y - phi(b)x + [x, y])``; basis of
    ``L1`` first, then ``L0``.
    """
    n1, n0 = L1.dim, L0.dim
    phi = [m if isinstance(m, Matrix) else Matrix(m) for m in phi]
    if len(phi) != n1 or any(m.shape != (n0, n0) for m in phi):
        raise AlgebraError("phi must give one dim(L0) x dim(L0) matrix per basis vector of L1")
    for i, D in enumerate(phi):
        if not is_derivation(L0, D):
            raise NotADerivation(i)
    for i in range(n1):
        for j in range(i + 1, n1):
            lhs = Matrix.zeros(n0, n0)
            for k, v in L1.table.get((i, j), {}).items():
                lhs = lhs + phi[k].scaled(v)
            rhs = phi[i] @ phi[j] - phi[j] @ phi[i]
            if lhs != rhs:
                raise NotAHomomorphism(i, j, lhs - rhs)
    table: dict[tuple[int, int], SparseRow] = {}
    for (i, j), c in L1.table.items():
        if i < j:
            table[(i, j)] = dict(c)
    for i in range(n1):
        cols = phi[i]
        for y in range(n0):
            col = {n1 + k: v for k, v in enumerate(cols.column(y)) if v}
            if col:
                table[(i, n1 + y)] = col
    for (x, y), c in L0.table.items():
        if x < y:
            table[(n1 + x, n1 + y)] = {n1 + k: v for k, v in c.items()}
    labels = list(L1.labels) + list(L0.labels)
    if len(set(labels)) != len(labels):
        labels = [f"{lab}.0" for lab in L1.labels] + [f"{lab}.1" for lab in L0.labels]
    if not name:
        name = f"{L1.name or 'L1'} x| {L0.name or 'L0'}"
    L = make_algebra(n1 + n0, labels, table, name)
    ideal = L.span(L.basis_vector(n1 + k) for k in range(n0))
    if not is_ideal(L, ideal):
        raise InternalError("acted-on factor is not an ideal of the semidirect product")
    Q, _, _ = quotient(L, ideal)
    if Q.table != L1.table:
        raise InternalError("semidirect product quotient does not reproduce the acting algebra")
    return L


def killing_form(L: LieAlgebra) -> Matrix:
    key = "killing"
    if key not in L._cache:
        ad = L.ad_basis()
        n = L.dim
        rows = [[ZERO] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                v = trace_of_product(ad[i], ad[j])
                rows[i][j] = v
                rows[j][i] = v
        L._cache[key] = Matrix(rows, n)
    return L._cache[key]


def killing_nondegenerate(L: LieAlgebra) -> bool:
    return killing_form(L).rank() == L.dim


def _module_ops(L: LieAlgebra, V) -> tuple[list[Matrix], int]:
    from .operators import restrict

    V = as_sub(L, V)
    return restrict(L.ad_basis(), V), V.dim


def module_is_semisimple(L: LieAlgebra, V) -> bool:
    """Complete reducibility of the ad(L)-invariant subspace ``V``; raises NotInvariant."""
    from .operators import is_semisimple_action

    ops, d = _module_ops(L, V)
    return is_semisimple_action(ops, d)


def module_is_abs_irreducible(L: LieAlgebra, V) -> bool:
    from .operators import is_abs_irreducible_action

    ops, d = _module_ops(L, V)
    return is_abs_irreducible_action(ops, d)

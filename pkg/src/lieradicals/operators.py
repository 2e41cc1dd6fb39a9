"""Associative operator algebras generated by linear maps, and module tests.

Complete reducibility is decided through the trace-form radical of the
enveloping algebra (Dickson's criterion in characteristic zero), so no
eigenvalues ever have to be computed.  Explicit splitting into summands uses
commutant elements whose minimal polynomials factor over Q(i).
"""

from __future__ import annotations

import random

import gmpy2
from dataclasses import dataclass, field
from typing import Sequence

from .errors import InternalError, NotInvariant
from .linalg import (
    Echelon,
    Matrix,
    SparseRow,
    Subspace,
    axpy,
    null_space_rows,
    to_dense,
    to_sparse,
    trace_of_product,
)
from .scalars import ONE, ZERO, GaussianRational, gr


@dataclass(frozen=True, eq=False)
class OperatorAlgebra:
    """Span of operators on a ``dim``-dimensional space, closed under composition."""

    dim: int
    gens: tuple
    basis: tuple  # Matrix elements spanning the algebra
    span: Subspace  # the same span, flattened into dim*dim coordinates

    @property
    def size(self) -> int:
        return len(self.basis)

    def contains(self, m: Matrix) -> bool:
        return not self.span.residual_sparse(m.flat_sparse())

    def verify_closure(self) -> bool:
        """Every product of two basis operators lies in the span."""
        return all(self.contains(a @ b) for a in self.basis for b in self.basis)


def restrict(ops: Sequence[Matrix], V: Subspace) -> list[Matrix]:
    """Matrices of ``ops`` on the invariant subspace ``V`` in its echelon basis."""
    out = []
    for m in ops:
        rows: list[SparseRow] = [{} for _ in range(V.dim)]
        for j, b in enumerate(V.sparse_basis):
            img = m.apply_sparse(b)
            if V.residual_sparse(img):
                raise NotInvariant("subspace is not invariant under the operators")
            for t, p in enumerate(V.pivots):
                v = img.get(p)
                if v:
                    rows[t][j] = v
        out.append(Matrix.from_sparse(rows, V.dim) if V.dim else Matrix.zeros(0, 0))
    return out


def enveloping_algebra(ops: Sequence[Matrix], dim: int | None = None,
                       unital: bool = False) -> OperatorAlgebra:
    """Smallest composition-closed span containing ``ops`` (plus identity if ``unital``)."""
    ops = list(ops)
    if dim is None:
        dim = ops[0].rows if ops else 0
    gens = list(ops)
    if unital and dim:
        gens.append(Matrix.identity(dim))
    ech = Echelon(dim * dim)
    basis: list[Matrix] = []
    kept: list[Matrix] = []
    queue: list[Matrix] = []
    for g in gens:
        if ech.add(g.flat_sparse()):
            basis.append(g)
            kept.append(g)
            queue.append(g)
    # words are closed under left multiplication by generators
    while queue:
        m = queue.pop()
        for g in kept:
            p = g @ m
            if ech.add(p.flat_sparse()):
                basis.append(p)
                queue.append(p)
    return OperatorAlgebra(dim, tuple(ops), tuple(basis), Subspace.from_echelon(ech))


def _combine(coeffs: SparseRow, mats: Sequence[Matrix], dim: int) -> Matrix:
    acc: SparseRow = {}
    for k, c in coeffs.items():
        axpy(acc, c, mats[k].flat_sparse())
    return Matrix.unflatten_sparse(acc, dim, dim)


def radical_operators(A: OperatorAlgebra) -> list[Matrix]:
    """Basis of the radical ``{a : tr(ab) = 0 for all b in A}``, each verified nilpotent."""
    n = A.size
    if n == 0:
        return []
    gram = [[ZERO] * n for _ in range(n)]
    for a in range(n):
        for b in range(a, n):
            v = trace_of_product(A.basis[a], A.basis[b])
            gram[a][b] = v
            gram[b][a] = v
    coeffs = null_space_rows([to_sparse(r) for r in gram], n)
    rad = [_combine(c, A.basis, A.dim) for c in coeffs]
    for m in rad:
        if not m.is_nilpotent():
            raise InternalError("trace-form radical contains a non-nilpotent operator")
    return rad


def assoc_radical(A: OperatorAlgebra) -> Subspace:
    """The radical as a subspace of the flattened operator space."""
    return Subspace._from_sparse_basis(A.dim * A.dim, (m.flat_sparse() for m in radical_operators(A)))


def is_semisimple_action(ops: Sequence[Matrix], dim: int) -> bool:
    return not radical_operators(enveloping_algebra(ops, dim))


def is_abs_irreducible_action(ops: Sequence[Matrix], dim: int) -> bool:
    """Burnside: the unital enveloping algebra is the full operator algebra."""
    if dim == 0:
        return False
    return enveloping_algebra(ops, dim, unital=True).size == dim * dim


# --------------------------------------------------------------------------
# commutants, minimal polynomials, splitting
# --------------------------------------------------------------------------
def commutant(ops: Sequence[Matrix], dim: int) -> list[Matrix]:
    """Basis of ``{T : T g = g T for every g in ops}``.

    Generators are imposed one at a time, so after the first one the linear
    systems only involve the surviving coefficient space.
    """
    basis: list[SparseRow] = [{k: ONE} for k in range(dim * dim)]
    for g in ops:
        if g.is_zero():
            continue
        images = []
        for t in basis:
            T = Matrix.unflatten_sparse(t, dim, dim)
            images.append((T @ g - g @ T).flat_sparse())
        eqs: dict[int, SparseRow] = {}
        for k, img in enumerate(images):
            for c, v in img.items():
                eqs.setdefault(c, {})[k] = v
        coeffs = null_space_rows(eqs.values(), len(basis))
        new = []
        for a in coeffs:
            acc: SparseRow = {}
            for k, c in a.items():
                axpy(acc, c, basis[k])
            new.append(acc)
        basis = [r for r in Subspace._from_sparse_basis(dim * dim, new).sparse_basis]
        if len(basis) <= 1:
            break
    return [Matrix.unflatten_sparse(t, dim, dim) for t in basis]


def minimal_polynomial(T: Matrix) -> list[GaussianRational]:
    """Monic minimal polynomial, coefficients from the constant term upward."""
    n = T.rows
    width = n * n
    ech = Echelon(width + n + 1)
    power = Matrix.identity(n)
    for k in range(n + 1):
        row = power.flat_sparse()
        row[width + k] = ONE
        r = ech.reduce(row)
        if all(c >= width for c in r):
            # r encodes sum_j r[width+j] T^j = 0 with leading term at degree k
            lead = r[width + k]
            coeffs = [ZERO] * (k + 1)
            for c, v in r.items():
                coeffs[c - width] = v / lead
            return coeffs
        ech.add(row)
        power = power @ T
    raise InternalError("minimal polynomial search exceeded the Cayley-Hamilton bound")


def poly_eval(coeffs: Sequence[GaussianRational], T: Matrix) -> Matrix:
    n = T.rows
    acc = Matrix.zeros(n, n)
    eye = Matrix.identity(n)
    for c in reversed(coeffs):
        acc = acc @ T
        if c:
            acc = acc + eye.scaled(c)
    return acc


def factor_qi(coeffs: Sequence[GaussianRational]) -> list[tuple[list[GaussianRational], int]]:
    """Irreducible factorization over Q(i) as ``[(monic coeffs low->high, multiplicity)]``.

    Powers of x and factors of degree <= 2 are handled in closed form.  Real
    polynomials are factored over Q first, so the slow Q(i) factorizer only
    sees real irreducibles of degree >= 3 or complex polynomials of degree >= 3.
    """
    key = tuple((c.re, c.im) for c in coeffs)
    hit = _FACTOR_CACHE.get(key)
    if hit is not None:
        return hit
    k = next(t for t, c in enumerate(coeffs) if c)
    out = [([ZERO, ONE], k)] if k else []
    g = list(coeffs[k:])
    if len(g) <= 3:
        out.extend(_small_factors(g))
    elif all(c.is_real for c in g):
        for f, mult in _sympy_factor(g, "QQ"):
            if len(f) > 3:
                out.extend((h, mult * m) for h, m in _sympy_factor(f, "QQ_I"))
            else:
                out.extend((h, mult * m) for h, m in _small_factors(f))
    else:
        out.extend(_sympy_factor(g, "QQ_I"))
    _FACTOR_CACHE[key] = out
    return out


_FACTOR_CACHE: dict = {}


def _sympy_factor(coeffs, domain: str):
    import sympy

    x = sympy.Symbol("x")
    poly = sympy.Poly([c.to_sympy() for c in reversed(coeffs)], x, domain=getattr(sympy, domain))
    out = []
    for f, mult in poly.factor_list()[1]:
        f = f.monic()
        out.append(([_from_sympy(c) for c in reversed(f.all_coeffs())], mult))
    return out


def _small_factors(f):
    """Factor a polynomial of degree <= 2 over Q(i) with the quadratic formula."""
    lead = f[-1]
    f = [c / lead for c in f]
    if len(f) <= 1:
        return []
    if len(f) == 2:
        return [(f, 1)]
    c, b = f[0], f[1]
    disc = b * b - c * 4
    half = GaussianRational(1, 0) / 2
    if not disc:
        return [([b * half, ONE], 2)]
    root = qi_sqrt(disc)
    if root is None:
        return [(f, 1)]
    r1, r2 = (-b + root) * half, (-b - root) * half
    return [([-r1, ONE], 1), ([-r2, ONE], 1)]


def qi_sqrt(z: GaussianRational) -> GaussianRational | None:
    """A square root of ``z`` in Q(i), or ``None``."""
    a, b = z.re, z.im
    modulus = _rational_sqrt(a * a + b * b)
    if modulus is None:
        return None
    x2 = (a + modulus) / 2
    x = _rational_sqrt(x2)
    if x is None:
        return None
    if x == 0:
        y = _rational_sqrt(-a)
        return None if y is None else GaussianRational(0, y)
    return GaussianRational(x, b / (2 * x))


def _rational_sqrt(q):
    q = gmpy2.mpq(q)
    if q < 0:
        return None
    num, den = gmpy2.isqrt_rem(q.numerator), gmpy2.isqrt_rem(q.denominator)
    if num[1] or den[1]:
        return None
    return gmpy2.mpq(num[0], den[0])


def _from_sympy(c) -> GaussianRational:
    import sympy

    c = sympy.sympify(c)
    re, im = sympy.re(c), sympy.im(c)
    return GaussianRational(_rat(re), _rat(im))


def _rat(q):
    from fractions import Fraction

    return Fraction(int(q.p), int(q.q))


def linear_roots(coeffs: Sequence[GaussianRational]) -> list[GaussianRational]:
    return [-f[0] for f, _ in factor_qi(coeffs) if len(f) == 2]


def _kernel_and_image(F: Matrix) -> tuple[Subspace, Subspace]:
    n = F.rows
    ker = Subspace._from_sparse_basis(n, null_space_rows(F.sparse_rows, n))
    img = Subspace(n, (F.column(j) for j in range(n)))
    return ker, img


def _fitting_split(T: Matrix) -> tuple[Subspace, Subspace] | None:
    """Primary decomposition of ``T`` at its first irreducible factor, if proper."""
    mp = minimal_polynomial(T)
    factors = factor_qi(mp)
    if len(factors) < 2:
        return None
    f, mult = factors[0]
    F = poly_eval(f, T)
    P = F
    for _ in range(mult - 1):
        P = P @ F
    ker, img = _kernel_and_image(P)
    if ker.is_zero() or img.is_zero():
        return None
    return ker, img


@dataclass
class ModuleSplit:
    """Invariant summands (coordinate subspaces) of a module.

    ``complete`` is False when some summand could not be proven indecomposable
    because the relevant splitting idempotents are not defined over Q(i).
    """

    blocks: list = field(default_factory=list)
    complete: bool = True
    unsplit: list = field(default_factory=list)


def _candidates(E: Sequence[Matrix], rng: random.Random, extra: int = 12):
    yield from E
    m = len(E)
    for a in range(m):
        for b in range(m):
            if a != b:
                yield E[a] @ E[b]
    for a in range(m):
        for b in range(a + 1, m):
            yield E[a] + E[b]
    for _ in range(extra):
        acc = Matrix.zeros(E[0].rows, E[0].rows)
        for M in E:
            acc = acc + M.scaled(rng.randint(-3, 3))
        yield acc


def _local(E: Sequence[Matrix], dim: int) -> bool:
    if len(E) <= 1:
        return True
    A = OperatorAlgebra(dim, tuple(E), tuple(E),
                        Subspace._from_sparse_basis(dim * dim, (m.flat_sparse() for m in E)))
    return len(E) - len(radical_operators(A)) == 1


def split_module(ops: Sequence[Matrix], dim: int, seed: int = 0,
                 max_candidates: int = 200) -> ModuleSplit:
    """Decompose ``Q(i)^dim`` into indecomposable ``ops``-invariant summands.

    Summands are found by Fitting decompositions of commutant elements; a piece
    is final once its commutant is local (commutant modulo its radical is one
    dimensional), which over C means indecomposable.
    """
    rng = random.Random(seed)
    result = ModuleSplit()
    if dim == 0:
        return result
    todo = [Subspace.whole(dim)]
    while todo:
        W = todo.pop()
        local_ops = restrict(ops, W)
        E = commutant(local_ops, W.dim)
        if _local(E, W.dim):
            result.blocks.append(W)
            continue
        split = None
        for count, T in enumerate(_candidates(E, rng)):
            if count >= max_candidates:
                break
            split = _fitting_split(T)
            if split:
                break
        if split is None:
            result.blocks.append(W)
            result.unsplit.append(W)
            result.complete = False
            continue
        for piece in split:
            # back to ambient coordinates: basis vectors of W combined by piece coords
            vecs = []
            for coords in piece.sparse_basis:
                acc: SparseRow = {}
                for t, c in coords.items():
                    axpy(acc, c, W.sparse_basis[t])
                vecs.append(acc)
            todo.append(Subspace._from_sparse_basis(dim, vecs))
    result.blocks.sort(key=lambda s: (s.pivots, [[(c.re, c.im) for c in b] for b in s.basis]))
    return result


def scalar_action(op: Matrix, V: Subspace) -> GaussianRational | None:
    """The scalar by which ``op`` acts on ``V``, or ``None`` if it is not scalar."""
    if V.is_zero():
        return ZERO
    lam = None
    for b in V.basis:
        img = op @ b
        p = next(k for k, v in enumerate(b) if v)
        c = img[p] / b[p]
        if lam is None:
            lam = c
        elif c != lam:
            return None
        if tuple(x - c * y for x, y in zip(img, b)) != (ZERO,) * len(b):
            return None
    return lam


def apply_ops_span(ops: Sequence[Matrix], vectors: Sequence, dim: int) -> Subspace:
    """Span of ``op(v)`` over the given operators and vectors."""
    ech = Echelon(dim)
    for m in ops:
        for v in vectors:
            ech.add(to_sparse(m @ v))
    return Subspace.from_echelon(ech)


def to_vectors(space: Subspace) -> list:
    return [to_dense(r, space.ambient_dim) for r in space.sparse_basis]

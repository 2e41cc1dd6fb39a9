"""Random direct and semidirect combinations of catalog algebras (dim <= 15)."""

from __future__ import annotations

import random

from lieradicals import catalog as cat
from lieradicals.algebra import derivations, direct_product, semidirect_product
from lieradicals.linalg import Matrix
from lieradicals.scalars import I

SMALL = [
    lambda: cat.abelian(1), lambda: cat.abelian(2), cat.heisenberg3, cat.borel2, cat.cext4,
    lambda: cat.sl(2), lambda: cat.gl(2), lambda: cat.upper_triangular(2),
    lambda: cat.upper_triangular(3), lambda: cat.strictly_upper(3), lambda: cat.strictly_upper(4),
    lambda: cat.class_two(2),
]

# matrix algebras with their defining representation
MATRIX = [
    (lambda: cat.sl(2), lambda: cat.sl_basis(2)[0]),
    (lambda: cat.gl(2), lambda: [cat.unit_matrix(2, i, j) for i in range(2) for j in range(2)]),
    (cat.borel2, lambda: [Matrix([[1, 0], [0, -1]]), cat.unit_matrix(2, 0, 1)]),
    (lambda: cat.upper_triangular(2), lambda: [cat.unit_matrix(2, i, j) for i in range(2) for j in range(2) if i <= j]),
    (lambda: cat.upper_triangular(3), lambda: [cat.unit_matrix(3, i, j) for i in range(3) for j in range(3) if i <= j]),
    (lambda: cat.strictly_upper(3), lambda: [cat.unit_matrix(3, i, j) for i in range(3) for j in range(3) if i < j]),
    (lambda: cat.sl(3), lambda: cat.sl_basis(3)[0]),
]


def _direct(rng):
    while True:
        A, B = rng.choice(SMALL)(), rng.choice(SMALL)()
        if A.dim + B.dim <= 15:
            return direct_product([A, B])


def _derivation_extension(rng):
    """One-dimensional algebra acting on L0 by a random derivation (Gaussian-integer weights)."""
    L0 = rng.choice(SMALL)()
    ders = derivations(L0)
    D = Matrix.zeros(L0.dim, L0.dim)
    for d in ders:
        c = rng.randint(-2, 2) + (rng.randint(-1, 1) * I if rng.random() < 0.3 else 0)
        D = D + d.scaled(c)
    return semidirect_product(cat.abelian(1), L0, [D])


def _representation(rng):
    """Matrix algebra acting on C^n by its defining (or adjoint, or doubled) representation."""
    build, mats = rng.choice(MATRIX)
    L1 = build()
    kind = rng.choice(["defining", "adjoint", "double", "trivial_plus"])
    if kind == "adjoint" and 2 * L1.dim <= 15:
        phi = L1.ad_basis()
    else:
        base = mats()
        n = base[0].rows
        if kind == "double" and L1.dim + 2 * n <= 15:
            phi = [_block_diag(m, m) for m in base]
        elif kind == "trivial_plus" and L1.dim + n + 1 <= 15:
            phi = [_block_diag(m, Matrix.zeros(1, 1)) for m in base]
        else:
            phi = base
    n = phi[0].rows
    return semidirect_product(L1, cat.abelian(n), phi)


def _block_diag(a: Matrix, b: Matrix) -> Matrix:
    n, m = a.rows, b.rows
    rows = [[0] * (n + m) for _ in range(n + m)]
    for i in range(n):
        for j in range(n):
            rows[i][j] = a[i][j]
    for i in range(m):
        for j in range(m):
            rows[n + i][n + j] = b[i][j]
    return Matrix(rows)


def random_population(count: int = 105, seed: int = 2024):
    rng = random.Random(seed)
    makers = [_direct, _derivation_extension, _representation]
    out = []
    while len(out) < count:
        L = rng.choice(makers)(rng)
        if L.dim <= 15:
            out.append(L)
    return out

import random

import pytest
import sympy as sp
from hypothesis import given, settings, strategies as st

from lieradicals import catalog
from lieradicals.errors import NotInvariant
from lieradicals.linalg import Matrix, Subspace, solve
from lieradicals.operators import (
    commutant,
    enveloping_algebra,
    factor_qi,
    is_abs_irreducible_action,
    is_semisimple_action,
    minimal_polynomial,
    poly_eval,
    qi_sqrt,
    radical_operators,
    restrict,
    scalar_action,
    split_module,
)
from lieradicals.scalars import I, ONE, ZERO, GaussianRational

gauss = st.builds(GaussianRational, st.integers(-6, 6), st.integers(-6, 6))


def to_sympy_poly(coeffs):
    x = sp.Symbol("x")
    return sp.Poly(sum(c.to_sympy() * x ** k for k, c in enumerate(coeffs)), x), x


def test_enveloping_algebra_of_defining_sl2_is_everything():
    mats, _ = catalog.sl_basis(2)
    assert enveloping_algebra(mats, 2).size == 4
    assert is_abs_irreducible_action(mats, 2)


def test_radical_of_upper_triangular_operators():
    ops = [catalog.unit_matrix(3, i, j) for i in range(3) for j in range(3) if i <= j]
    A = enveloping_algebra(ops, 3)
    assert A.size == 6
    assert A.verify_closure()
    rad = radical_operators(A)
    assert len(rad) == 3
    assert all(m.is_nilpotent() for m in rad)
    assert not is_semisimple_action(ops, 3)


def test_weights_one_and_i_are_not_cancelled():
    # diag(1, i): tr(T^2) = 1 + i^2 = 0, yet T is semisimple
    T = Matrix([[1, 0], [0, I]])
    assert is_semisimple_action([T], 2)
    assert radical_operators(enveloping_algebra([T], 2)) == []


def test_commutant():
    mats, _ = catalog.sl_basis(2)
    com = commutant(mats, 2)
    assert len(com) == 1 and com[0] == Matrix.identity(2).scaled(com[0][0, 0])
    assert len(commutant([Matrix([[1, 0], [0, 2]])], 2)) == 2


def test_minimal_polynomial():
    T = Matrix([[2, 1], [0, 2]])
    mp = minimal_polynomial(T)
    assert mp == [GaussianRational(4), GaussianRational(-4), ONE]
    assert poly_eval(mp, T).is_zero()
    assert minimal_polynomial(Matrix.identity(3)) == [-ONE, ONE]


def polymul(p, q):
    out = [ZERO] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] = out[i + j] + a * b
    return out


@settings(max_examples=25, deadline=None)
@given(gauss, gauss, gauss)
def test_factor_quadratic_products(a, b, c):
    # (x - a)(x - b)(x^2 + c), compared with sympy's factorisation over Q(i)
    coeffs = polymul(polymul([-a, ONE], [-b, ONE]), [c, ZERO, ONE])
    factors = factor_qi(coeffs)
    product = [ONE]
    for f, m in factors:
        for _ in range(m):
            product = polymul(product, f)
    assert product == coeffs
    poly, x = to_sympy_poly(coeffs)
    _, expected = sp.factor_list(poly.as_expr(), gaussian=True)
    degrees = sorted(sp.degree(f, x) for f, m in expected for _ in range(m))
    assert sorted(len(f) - 1 for f, m in factors for _ in range(m)) == degrees


@settings(max_examples=60, deadline=None)
@given(gauss)
def test_qi_sqrt(z):
    w = qi_sqrt(z * z)
    assert w is not None and w * w == z * z


def test_qi_sqrt_of_non_squares():
    assert qi_sqrt(GaussianRational(2)) is None
    assert qi_sqrt(I) is None
    assert qi_sqrt(GaussianRational(-4)) in (GaussianRational(0, 2), GaussianRational(0, -2))
    assert qi_sqrt(GaussianRational(0, 2)) in (GaussianRational(1, 1), GaussianRational(-1, -1))


def test_split_module_into_eigenlines():
    T = Matrix([[0, 1], [-1, 0]])  # eigenvalues +-i
    split = split_module([T], 2)
    assert split.complete
    assert sorted(b.dim for b in split.blocks) == [1, 1]
    weights = {scalar_action(T, b) for b in split.blocks}
    assert weights == {I, -I}


def test_split_module_irreducible_over_qi_only():
    T = Matrix([[0, 2], [1, 0]])  # eigenvalues +-sqrt(2)
    split = split_module([T], 2)
    assert not split.complete
    assert [b.dim for b in split.blocks] == [2]
    assert scalar_action(T, split.blocks[0]) is None


def test_split_module_is_a_direct_sum():
    rng = random.Random(3)
    base = [Matrix([[1, 0, 0], [0, 2, 0], [0, 0, 2]]), Matrix([[0, 0, 0], [0, 0, 1], [0, 0, 0]])]
    # conjugate by a random invertible matrix to hide the block structure
    while True:
        P = Matrix([[rng.randint(-2, 2) for _ in range(3)] for _ in range(3)])
        if P.rank() == 3:
            break
    cols = [solve(P, [1 if i == j else 0 for i in range(3)]) for j in range(3)]
    Pinv = Matrix.from_columns(cols, 3)
    ops = [P @ m @ Pinv for m in base]
    split = split_module(ops, 3)
    total = Subspace(3)
    for b in split.blocks:
        total = total + b
    assert total.is_whole()
    assert sum(b.dim for b in split.blocks) == 3


def test_restrict_requires_invariance():
    T = Matrix([[0, 1], [0, 0]])
    assert restrict([T], Subspace(2, [[1, 0]]))[0].is_zero()
    with pytest.raises(NotInvariant):
        restrict([T], Subspace(2, [[0, 1]]))


def test_scalar_action_zero_space():
    assert scalar_action(Matrix.identity(2), Subspace(2, [[1, 1]])) == ONE
    assert scalar_action(Matrix.zeros(2, 2), Subspace(2, [[1, 0]])) == ZERO

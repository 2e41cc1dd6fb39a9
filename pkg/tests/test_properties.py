from functools import lru_cache

from hypothesis import given, settings, strategies as st

import lieradicals.radicals as rd
from lieradicals.algebra import bracket_spaces, generated_ideal, is_ideal
from lieradicals.checks import invariant_suite
from lieradicals.linalg import Subspace
from population import random_population

coeff = st.integers(-2, 2)


@lru_cache(maxsize=1)
def members():
    return random_population(40, seed=7)


member = st.integers(0, 39).map(lambda k: members()[k])


@settings(max_examples=15, deadline=None)
@given(member)
def test_invariant_suite_holds(L):
    failed = [c.name for c in invariant_suite(L, samples=10) if not c.passed]
    assert failed == []


@settings(max_examples=30, deadline=None)
@given(member, st.data())
def test_generated_ideals_form_a_lattice(L, data):
    def ideal():
        vec = data.draw(st.lists(coeff, min_size=L.dim, max_size=L.dim))
        return generated_ideal(L, [tuple(vec)] if any(vec) else [])

    A, B = ideal(), ideal()
    for U in (A + B, A & B, bracket_spaces(L, A, B)):
        assert is_ideal(L, U)
    assert (A + B).dim + (A & B).dim == A.dim + B.dim
    assert (A & B).contains(bracket_spaces(L, A, B))


@settings(max_examples=20, deadline=None)
@given(member)
def test_radical_chain(L):
    F, N, J, R = rd.frattini_ideal(L), rd.nilradical(L, samples=0), rd.jacobson_ideal(L), rd.solvable_radical(L)
    assert N.contains(F) and N.contains(J) and R.contains(N)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.lists(coeff, min_size=4, max_size=4), max_size=3),
       st.lists(st.lists(coeff, min_size=4, max_size=4), max_size=3),
       st.lists(st.lists(coeff, min_size=4, max_size=4), max_size=3))
def test_subspace_lattice_laws(a, b, c):
    U, V, W = Subspace(4, a), Subspace(4, b), Subspace(4, c)
    assert U + V == V + U and U & V == V & U
    assert (U + V) + W == U + (V + W) and (U & V) & W == U & (V & W)
    assert U & (U + V) == U and U + (U & V) == U
    if W.contains(U):
        assert U + (V & W) == (U + V) & W

import pytest

import lieradicals.radicals as rd
from lieradicals import catalog
from lieradicals.algebra import centre, derived_algebra, make_algebra
from lieradicals.errors import InternalError
from oracles import Model, ceil_log2, lib_rows, matrix_span_dims, same_span, upper_triangular_mats

CATALOG = ["abelian(3)", "heisenberg3", "borel2", "cext4", "sl(2)", "sl(3)", "gl(2)", "gl(3)",
           "t(2)", "t(3)", "t(4)", "n(3)", "n(4)", "n(5)", "classII(2)", "classII(3)", "classI"]


@pytest.mark.parametrize("name", CATALOG)
def test_series_dims_match_oracle(name):
    L = catalog.build(name)
    M = Model.of(L)
    assert rd.derived_series(L).dims == M.derived_dims()
    assert rd.lower_central_series(L).dims == M.lower_central_dims()


@pytest.mark.parametrize("name", CATALOG)
def test_radical_and_jacobson_match_oracle(name):
    L = catalog.build(name)
    M = Model.of(L)
    assert same_span(lib_rows(rd.solvable_radical(L)), M.solvable_radical(), L.dim)
    assert same_span(lib_rows(rd.jacobson_ideal(L)), M.jacobson(), L.dim)
    assert same_span(lib_rows(centre(L)), M.centre(), L.dim)


@pytest.mark.parametrize("name", CATALOG)
def test_nilradical_is_a_nilpotent_ideal(name):
    L = catalog.build(name)
    M = Model.of(L)
    N = lib_rows(rd.nilradical(L, samples=20))
    assert M.is_ideal(N) and M.is_nilpotent_ideal(N)


def test_matrix_model_derived_series():
    for n in range(2, 6):
        assert matrix_span_dims(upper_triangular_mats(n)) == rd.derived_series(catalog.upper_triangular(n)).dims


def test_indices_and_flags():
    H = catalog.heisenberg3()
    assert rd.is_nilpotent(H) and rd.nilpotency_index(H) == 2 and rd.solvability_index(H) == 2
    S = catalog.sl(2)
    assert rd.is_semisimple(S) and not rd.is_solvable(S)
    assert rd.solvability_index(S) is None and rd.nilpotency_index(S) is None
    B = catalog.borel2()
    assert rd.is_solvable(B) and not rd.is_nilpotent(B)


@pytest.mark.parametrize("n", range(2, 8))
def test_strictly_upper_solvability_index(n):
    assert rd.solvability_index(catalog.strictly_upper(n)) == ceil_log2(n)


def test_nilradical_examples():
    B = catalog.borel2()
    assert rd.nilradical(B) == B.span_labels("e")
    G = catalog.gl(2)
    assert rd.nilradical(G) == centre(G)
    C = catalog.class_two(2)
    assert rd.nilradical(C) == C.span_labels("v1", "v2")


def test_nilradical_on_non_split_weights():
    # x acts on span{a, b} with eigenvalues 1 and i: the Killing-kernel shortcut would fail here
    L = make_algebra(3, ["x", "a", "b"], {(0, 1): {1: 1}, (0, 2): {2: "i"}})
    assert rd.nilradical(L) == L.span_labels("a", "b")


def test_frattini_examples():
    H = catalog.heisenberg3()
    assert rd.frattini_ideal(H) == centre(H)
    assert rd.frattini_ideal(catalog.borel2()).is_zero()
    C = catalog.cext4()
    assert rd.frattini_ideal(C) == C.span_labels("n1")
    obs = rd.frattini_obstruction(C)
    assert obs.central_derived == C.span_labels("n1")
    for n in (3, 4, 5):
        N = catalog.strictly_upper(n)
        assert rd.frattini_ideal(N) == derived_algebra(N)


def test_radical_indices():
    assert tuple(rd.radical_indices(catalog.upper_triangular(3))) == (2, 3)
    assert tuple(rd.radical_indices(catalog.sl(2))) == (1, 1)
    assert tuple(rd.radical_indices(make_algebra(0))) == (0, 0)
    assert tuple(rd.radical_indices(catalog.abelian(2))) == (1, 1)


def test_superposition_and_star():
    T = catalog.upper_triangular(4)
    limit, record = rd.superposition_series(rd.JACOBSON, T)
    assert limit.is_zero()
    assert record.r == rd.radical_indices(T).r_jacobson
    assert record.stages[0] == T.dim
    assert rd.star(rd.JACOBSON)(T) == rd.jacobson_ideal(T)
    G = catalog.gl(2)
    assert rd.superpose(rd.derived_step)(G) == rd.levi_radical(G) == derived_algebra(G)


def test_convolution():
    # RAD * centre on gl(2): the quotient by the centre is sl(2), which has no radical
    G = catalog.gl(2)
    Z = rd.Preradical("Z", centre)
    assert rd.convolve(rd.RAD, Z)(G) == centre(G)
    H = catalog.heisenberg3()
    assert rd.convolve(rd.RAD, Z)(H).is_whole()


def test_preradical_must_return_an_ideal():
    bad = rd.Preradical("bad", lambda L: L.span_labels("h"))
    with pytest.raises(InternalError):
        bad(catalog.borel2())


def test_levi_and_lower_central_radicals():
    C = catalog.class_two(2)
    assert rd.levi_radical(C).is_whole()
    assert rd.lower_central_radical(C).is_whole()
    assert rd.levi_radical(catalog.borel2()).is_zero()


def test_vasilescu_radical_of_semisimple_is_zero():
    assert rd.vasilescu_radical(catalog.sl(3)).is_zero()


def test_results_are_memoised():
    T = catalog.upper_triangular(3)
    assert rd.frattini_ideal(T) is rd.frattini_ideal(T)

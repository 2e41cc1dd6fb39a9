import pytest

import lieradicals.radicals as rd
import lieradicals.structure as st
from lieradicals import catalog
from lieradicals.algebra import (
    centre,
    derived_algebra,
    direct_product,
    induced_algebra,
    killing_nondegenerate,
    make_algebra,
    semidirect_product,
)
from lieradicals.errors import NotFrattiniFree, NotSemisimple
from lieradicals.linalg import Matrix


def irrational_rotation():
    # x acts on span{a, b} with char. polynomial t^2 - t + 4, whose roots are not in Q(i)
    return semidirect_product(catalog.abelian(1), catalog.abelian(2), [Matrix([[0, 2], [-2, 1]])])


@pytest.mark.parametrize("name", ["gl(2)", "gl(3)", "classII(2)", "t(3)", "cext4", "classI", "borel2"])
def test_levi_decomposition(name):
    L = catalog.build(name)
    w = st.levi_decomposition(L)
    assert w.radical == rd.solvable_radical(L)
    assert (w.levi + w.radical).is_whole() and (w.levi & w.radical).is_zero()
    if w.levi.dim:
        assert killing_nondegenerate(induced_algebra(L, w.levi)[0])


def test_levi_of_adjoint_module_extension():
    S = catalog.sl(2)
    L = semidirect_product(S, catalog.abelian(3), S.ad_basis())
    w = st.levi_decomposition(L)
    assert w.levi.dim == 3 and w.radical.dim == 3
    st.check_levi(L, w)
    # sl2 acting on its own adjoint copy is just sl2 + sl2
    assert st.levi_decomposition(semidirect_product(S, S, S.ad_basis())).radical.is_zero()


def test_largest_semisimple_ideal():
    G = catalog.gl(3)
    assert st.largest_semisimple_ideal(G) == derived_algebra(G)
    assert st.largest_semisimple_ideal(catalog.class_two(2)).is_zero()
    P = direct_product([catalog.sl(2), catalog.borel2()])
    assert st.largest_semisimple_ideal(P).dim == 3
    assert st.semisimple_ideal_hereditary(P, P.whole())


def test_direct_summands():
    P = direct_product([catalog.sl(2), catalog.heisenberg3(), catalog.abelian(1)])
    parts = st.direct_summands(P)
    assert sorted(p.dim for p in parts) == [1, 3, 3]


def test_simple_components():
    comps = st.simple_components(catalog.class_one())
    assert sorted(c.dim for c in comps) == [3, 3]
    assert len(st.simple_components(catalog.sl(3))) == 1
    with pytest.raises(NotSemisimple):
        st.simple_components(catalog.heisenberg3())


def test_frattini_free_verdicts():
    v = st.frattini_free(catalog.heisenberg3())
    assert not v and {x.condition for x in v.violations} >= {"central_derived"}
    v = st.frattini_free(catalog.cext4())
    assert not v and {x.condition for x in v.violations} == {"nonsemisimple", "central_derived"}
    for name in ["borel2", "sl(2)", "classII(2)", "classI", "gl(2)", "abelian(2)"]:
        L = catalog.build(name)
        v = st.frattini_free(L)
        assert v and st.check_frattini_witness(L, v.witness) == []


def test_frattini_free_witness_blocks():
    B = catalog.borel2()
    w = st.frattini_free(B).witness
    assert w.J == B.span_labels("e") and w.C.dim == 1 and w.complete
    assert [b.weights for b in w.blocks] != [None]


def test_nonabelian_nilradical_violation():
    v = st.frattini_free(catalog.strictly_upper(4))
    assert "nil_bracket" in {x.condition for x in v.violations}


def test_jacobson_free():
    v = st.jacobson_free(catalog.gl(2))
    assert v and v.witness.centre == centre(catalog.gl(2))
    assert not st.jacobson_free(catalog.borel2())
    assert st.jacobson_free(catalog.abelian(3))
    assert st.jacobson_free(catalog.sl(2))


@pytest.mark.parametrize("name, tag", [
    ("abelian(1)", "dim1"),
    ("sl(2)", "simple"),
    ("sl(3)", "simple"),
    ("classI", "classI"),
    ("borel2", "classII"),
    ("classII(2)", "classII"),
    ("classII(3)", "classII"),
])
def test_subsimple_positive(name, tag):
    v = st.subsimple(catalog.build(name))
    assert v and v.tag == tag


@pytest.mark.parametrize("name", ["heisenberg3", "abelian(2)", "gl(2)", "t(3)", "cext4"])
def test_subsimple_negative(name):
    v = st.subsimple(catalog.build(name))
    assert not v and v.tag == "not_subsimple"


def test_subsimple_unequal_components():
    assert not st.subsimple(direct_product([catalog.sl(2), catalog.sl(3)]))


def test_zero_algebra():
    Z = make_algebra(0)
    assert not st.subsimple(Z)
    assert st.frattini_free(Z)


def test_submaximal_family():
    L = direct_product([catalog.sl(2), catalog.borel2()])
    fam = st.submaximal_witness_family(L)
    assert not isinstance(fam, st.PartialSplit)
    assert st.check_submaximal_family(L, fam) == []
    meet = L.whole()
    for J in fam:
        meet = meet & J
    assert meet.is_zero()
    with pytest.raises(NotFrattiniFree):
        st.submaximal_witness_family(catalog.heisenberg3())


def test_submaximal_family_not_defined_over_qi():
    L = irrational_rotation()
    v = st.frattini_free(L)
    assert v and not v.witness.complete
    fam = st.submaximal_witness_family(L)
    assert isinstance(fam, st.PartialSplit)
    assert st.check_submaximal_family(L, fam.parts, require_subsimple=False) == []


def test_subdirect_product():
    A, B = catalog.sl(2), catalog.borel2()
    P = direct_product([A, B])
    assert st.is_subdirect_product(P, P.whole(), [A, B])


def test_decomposable_rep():
    v = st.decomposable_rep([Matrix([[0, 1], [0, 0]])])
    assert not v and v.violations[0].condition == "trace_radical"
    v = st.decomposable_rep([Matrix([[1, 0], [0, 2]])])
    assert v and sorted(b.dim for b in v.witness) == [1, 1]
    v = st.decomposable_rep([Matrix([[0, 2], [1, 0]])])
    assert v and v.tag == "partial"


def test_reductive_decomposition():
    assert st.reductive_decomposition_holds(catalog.gl(3))
    assert not st.reductive_decomposition_holds(catalog.borel2())

"""Invariant suite run by ``verify`` and by the property tests.

Each check is an independent recomputation; a check that raises counts as a
failure carrying the exception text.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from . import radicals as rd
from . import structure as st
from .algebra import (
    LieAlgebra,
    bracket_spaces,
    centre,
    check_jacobi,
    derived_algebra,
    induced_algebra,
    is_characteristic,
    is_ideal,
    push_forward,
    quotient,
)
from .errors import LieRadicalsError

CHARACTERISTIC_DIM_LIMIT = 12


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""


def _run(name: str, fn: Callable[[], object]) -> Check:
    try:
        out = fn()
    except LieRadicalsError as exc:
        return Check(name, False, f"{type(exc).__name__}: {exc}")
    if isinstance(out, str):
        return Check(name, not out, out)
    return Check(name, bool(out))


def _chain(L):
    Z = derived_algebra(L) & centre(L)
    phi, K = rd.frattini_ideal(L), rd.jacobson_ideal(L)
    N, R = rd.nilradical(L, samples=0), rd.solvable_radical(L)
    bad = [name for name, a, b in (("Z cap [L,L] <= phi", Z, phi), ("phi <= K", phi, K),
                                   ("K <= N", K, N), ("N <= rad", N, R)) if not b.contains(a)]
    return ", ".join(bad)


def _sample_ideals(L):
    seen = []
    terms = list(rd.derived_series(L).terms) + list(rd.lower_central_series(L).terms)
    terms += [rd.solvable_radical(L), rd.nilradical(L, samples=0), rd.jacobson_ideal(L), centre(L)]
    for I in terms:
        if I not in seen and 0 < I.dim < L.dim:
            seen.append(I)
    return seen


def _indices(L):
    if L.dim == 0:
        return ""
    rf, rj = rd.radical_indices(L, cross_check=True)
    i_n = rd.subspace_solvability_index(L, rd.nilradical(L, samples=0))
    i_k = rd.subspace_solvability_index(L, rd.jacobson_ideal(L))
    ok = i_n <= rf <= rj == i_k + 1 <= i_n + 1 and rj <= rf + 1
    return "" if ok else f"i_s(N)={i_n}, r_F={rf}, r_J={rj}, i_s(K)={i_k}"


def _nilpotent_case(L):
    if not rd.is_nilpotent(L) or L.dim == 0:
        return ""
    phi, K, D = rd.frattini_ideal(L), rd.jacobson_ideal(L), derived_algebra(L)
    if not (phi == K == D):
        return "phi, K and [L,L] differ"
    r = rd.radical_indices(L, cross_check=False)
    s = rd.solvability_index(L)
    return "" if r == (s, s) else f"indices {tuple(r)} but i_s(L) = {s}"


def _levi_radical(L):
    P = rd.levi_radical(L)
    if bracket_spaces(L, P, P) != P:
        return "levi radical is not perfect"
    if P.dim < L.dim and not rd.is_solvable(quotient(L, P)[0]):
        return "quotient by levi radical is not solvable"
    if not P.contains(st.levi_decomposition(L).levi):
        return "levi subalgebra not inside levi radical"
    return ""


def _combinators(L):
    P = rd.levi_radical(L)
    a = rd.superpose(rd.derived_step)(L)
    b = rd.superpose(rd.LOWER_CENTRAL)(L)
    return "" if a == P == b else "superposition of D or P_C differs from the levi radical"


def _stars(L):
    bad = [R.name for R in (rd.FRATTINI, rd.JACOBSON) if rd.star(R)(L) != R(L)]
    return ", ".join(f"star({n}) != {n}" for n in bad)


def _jacobson_iteration(L):
    return rd.superpose(rd.JACOBSON)(L).is_zero()


def _subsimple_consequences(L):
    v = st.subsimple(L)
    if not v.answer:
        return ""
    if not st.frattini_free(L).answer:
        return "subsimple but not Frattini-free"
    if L.dim >= 2 and not centre(L).is_zero():
        return "subsimple of dim >= 2 with nonzero centre"
    if rd.is_solvable(L) and L.dim > 2:
        return "solvable subsimple of dim > 2"
    if rd.is_nilpotent(L) and L.dim > 1:
        return "nilpotent subsimple of dim > 1"
    return ""


def _frattini_consistency(L):
    ff = st.frattini_free(L).answer
    if ff != rd.frattini_ideal(L).is_zero():
        return "frattini_free disagrees with frattini_ideal = 0"
    if not ff:
        return ""
    s = rd.derived_series(L)
    if rd.is_solvable(L) and len(s.terms) > 2 and not s.terms[2].is_zero():
        return "solvable Frattini-free algebra with L_[2] != 0"
    i = rd.subspace_solvability_index(L, rd.solvable_radical(L))
    if i is None or i > 2:
        return f"Frattini-free algebra with i_s(rad) = {i}"
    return ""


def _witness(L):
    v = st.frattini_free(L)
    if not v.answer:
        return ""
    failures = st.check_frattini_witness(L, v.witness)
    fam = st.submaximal_witness_family(L, verify=False)
    if isinstance(fam, st.PartialSplit):
        failures += st.check_submaximal_family(L, fam.parts, require_subsimple=False)
    else:
        failures += st.check_submaximal_family(L, fam)
    return "; ".join(failures)


def _jacobson_free(L):
    v = st.jacobson_free(L)
    if v.answer and rd.is_solvable(L) and not L.is_abelian():
        return "solvable Jacobson-free algebra is not abelian"
    return ""


def _hereditary(L):
    bad = [I for I in _sample_ideals(L) if not st.semisimple_ideal_hereditary(L, I)]
    return f"{len(bad)} sampled ideals violate S(I) = I cap S(L)" if bad else ""


def _balanced(L):
    phi, K = rd.frattini_ideal(L), rd.jacobson_ideal(L)
    for I in _sample_ideals(L):
        A, inc = induced_algebra(L, I)
        if not phi.contains(push_forward(L, inc, rd.frattini_ideal(A))):
            return "phi(I) not inside phi(L)"
        if not K.contains(push_forward(L, inc, rd.jacobson_ideal(A))):
            return "K_I not inside K_L"
    return ""


def _characteristic_series(L):
    if L.dim > CHARACTERISTIC_DIM_LIMIT:
        return True
    terms = list(rd.derived_series(L).terms) + list(rd.lower_central_series(L).terms)
    return all(is_characteristic(L, T) for T in terms)


def _solvable_jacobson(L):
    return not rd.is_solvable(L) or rd.jacobson_ideal(L) == derived_algebra(L)


def invariant_suite(L: LieAlgebra, samples: int = 50) -> list[Check]:
    """All structural invariants of one algebra, in a fixed order."""
    checks = [
        ("jacobi identity", lambda: check_jacobi(L) is None),
        ("rad certificate", lambda: is_ideal(L, rd.solvable_radical(L))),
        ("nilradical sampling", lambda: rd.check_nilradical_sampling(L, rd.nilradical(L, samples=0), samples) is None),
        ("inclusion chain Z cap [L,L] <= phi <= K <= N <= rad", lambda: _chain(L)),
        ("solvable: K = [L,L]", lambda: _solvable_jacobson(L)),
        ("levi radical perfect with solvable quotient", lambda: _levi_radical(L)),
        ("superpose(D) = levi radical = superpose(P_C)", lambda: _combinators(L)),
        ("star(phi) = phi and star(K) = K", lambda: _stars(L)),
        ("iterated Jacobson ideal reaches 0", lambda: _jacobson_iteration(L)),
        ("index sandwich and shortcut", lambda: _indices(L)),
        ("nilpotent: phi = K = [L,L], r = i_s(L)", lambda: _nilpotent_case(L)),
        ("series terms are characteristic", lambda: _characteristic_series(L)),
        ("levi witness", lambda: st.levi_decomposition(L) is not None),
        ("largest semisimple ideal is hereditary", lambda: _hereditary(L)),
        ("phi and K are balanced on sampled ideals", lambda: _balanced(L)),
        ("direct summands", lambda: st.direct_summands(L) is not None),
        ("frattini_free agrees with phi = 0", lambda: _frattini_consistency(L)),
        ("Frattini-free witness and submaximal family", lambda: _witness(L)),
        ("Jacobson-free consequences", lambda: _jacobson_free(L)),
        ("subsimple consequences", lambda: _subsimple_consequences(L)),
    ]
    return [_run(name, fn) for name, fn in checks]

"""Levi decomposition, direct summands and the Frattini-free / subsimple verdicts.

Every positive answer comes with a witness that is re-verified by independent
checks before it is returned; a verdict that cannot be certified raises
:class:`InternalError` instead of answering.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Sequence

from .algebra import (
    AlgSubspace,
    LieAlgebra,
    as_sub,
    bracket_spaces,
    centralizer,
    centre,
    derived_algebra,
    describe,
    factor_blocks,
    induced_algebra,
    is_ideal,
    is_invariant,
    is_subalgebra,
    killing_nondegenerate,
    push_forward,
    quotient,
)
from .errors import (
    InternalError,
    NotASubalgebra,
    NotFrattiniFree,
    NotSemisimple,
    WitnessConstructionFailed,
)
from .linalg import (
    LinearMap,
    Matrix,
    SparseRow,
    Subspace,
    axpy,
    intersect_all,
    solve_sparse,
    sum_all,
    to_dense,
    to_sparse,
)
from .operators import (
    ModuleSplit,
    enveloping_algebra,
    is_abs_irreducible_action,
    radical_operators,
    restrict,
    scalar_action,
    split_module,
)
from .radicals import (
    _memo,
    derived_series,
    frattini_obstruction,
    is_semisimple,
    frattini_ideal,
    jacobson_ideal,
    nilradical,
    random_element,
    solvable_radical,
)
from .scalars import ONE, ZERO


# --------------------------------------------------------------------------
# result types
# --------------------------------------------------------------------------
@dataclass(frozen=True)
class LeviWitness:
    levi: AlgSubspace
    radical: AlgSubspace


@dataclass(frozen=True)
class PartialSplit:
    """Coarsest decomposition found when idempotents are not defined over Q(i)."""

    parts: list
    reason: str


@dataclass(frozen=True)
class Violation:
    condition: str
    subspace: Subspace
    detail: str = ""


@dataclass(frozen=True)
class Block:
    space: AlgSubspace
    weights: tuple | None  # scalar of each C basis vector on the block; None if not scalar


@dataclass(frozen=True)
class FrattiniFreeWitness:
    C: AlgSubspace
    S: AlgSubspace
    J: AlgSubspace
    blocks: tuple
    complete: bool = True  # False when some block is irreducible over Q(i) but not split further


@dataclass(frozen=True)
class JacobsonFreeWitness:
    semisimple: AlgSubspace
    centre: AlgSubspace


@dataclass
class Verdict:
    answer: bool
    witness: object = None
    violations: list = field(default_factory=list)
    tag: str | None = None
    notes: list = field(default_factory=list)
    heuristic: bool = False

    def __bool__(self):
        return self.answer


CONDITION_TEXT = {
    "nil_bracket": "nilradical is not abelian",
    "nonsemisimple": "nilradical is not a semisimple L-module",
    "central_derived": "Z(L) cap [L,L] is nonzero",
    "jacobson": "[L, rad L] is nonzero",
    "trace_radical": "enveloping algebra has a nonzero radical",
}


def _lift(L: LieAlgebra, U: Subspace, inc: LinearMap) -> AlgSubspace:
    return push_forward(L, inc, U)


def _subspace_from_coords(W: Subspace, piece: Subspace) -> list[SparseRow]:
    """Vectors of ``W`` whose coordinates (in W's echelon basis) span ``piece``."""
    out = []
    for coords in piece.sparse_basis:
        acc: SparseRow = {}
        for t, c in coords.items():
            axpy(acc, c, W.sparse_basis[t])
        out.append(acc)
    return out


# --------------------------------------------------------------------------
# Levi decomposition
# --------------------------------------------------------------------------
def levi_decomposition(L: LieAlgebra) -> LeviWitness:
    """Semisimple complement of rad(L), lifted modulo the derived series of rad."""
    return _memo(L, "levi", lambda: _levi(L))


def _levi(L: LieAlgebra) -> LeviWitness:
    R = solvable_radical(L)
    if R.is_whole():
        w = LeviWitness(L.zero(), R)
    elif R.is_zero():
        w = LeviWitness(L.whole(), R)
    else:
        Q, _, section = quotient(L, R)
        m = Q.dim
        sigma = [to_sparse(section(Q.basis_vector(a))) for a in range(m)]
        A, inc = induced_algebra(L, R)
        for term in derived_series(A).terms[: derived_series(A).stabilized_at]:
            Rk = _lift(L, term, inc)
            if Rk.is_zero():
                break
            Rnext = bracket_spaces(L, Rk, Rk)
            sigma = _levi_step(L, Q, sigma, Rk, Rnext)
        w = LeviWitness(L.span(to_dense(s, L.dim) for s in sigma), R)
    check_levi(L, w)
    return w


def _levi_step(L, Q, sigma, Rk, Rnext):
    """Correct ``sigma`` by ``tau: Q -> Rk`` so that its bracket defect lands in ``Rnext``."""
    m, d = Q.dim, Rk.dim
    rk = Rk.sparse_basis
    nvars = m * d
    eqs = []
    for a in range(m):
        for b in range(a + 1, m):
            # defect(a,b) + [sigma a, tau b] - [sigma b, tau a] - tau([a,b]) in Rnext
            defect = dict(L.bracket_sparse(sigma[a], sigma[b]))
            for k, v in Q.table.get((a, b), {}).items():
                axpy(defect, -v, sigma[k])
            const = Rnext.residual_sparse(defect)
            rows: dict[int, SparseRow] = {}

            def add(var, vecrow):
                for c, v in Rnext.residual_sparse(vecrow).items():
                    rows.setdefault(c, {})
                    rows[c][var] = rows[c].get(var, ZERO) + v

            for t in range(d):
                add(b * d + t, L.bracket_sparse(sigma[a], rk[t]))
                add(a * d + t, {c: -v for c, v in L.bracket_sparse(sigma[b], rk[t]).items()})
                for k, v in Q.table.get((a, b), {}).items():
                    add(k * d + t, {c: -v * x for c, x in rk[t].items()})
            for c in set(rows) | set(const):
                row = {var: v for var, v in rows.get(c, {}).items() if v}
                eqs.append((row, -const.get(c, ZERO)))
    sol = solve_sparse(eqs, nvars)
    if sol is None:
        raise InternalError("Levi lifting: correction system is inconsistent")
    out = []
    for a in range(m):
        s = dict(sigma[a])
        for t in range(d):
            c = sol.get(a * d + t)
            if c:
                axpy(s, c, rk[t])
        out.append(s)
    return out


def check_levi(L: LieAlgebra, w: LeviWitness) -> None:
    S, R = w.levi, w.radical
    if not is_subalgebra(L, S):
        raise InternalError("Levi witness: complement is not a subalgebra")
    if not (S & R).is_zero() or (S + R).dim != L.dim:
        raise InternalError("Levi witness: complement and radical do not form a direct sum")
    if S.dim:
        A, _ = induced_algebra(L, S)
        if not killing_nondegenerate(A):
            raise InternalError("Levi witness: complement is not semisimple")


# --------------------------------------------------------------------------
# semisimple ideal and decompositions
# --------------------------------------------------------------------------
def largest_semisimple_ideal(L: LieAlgebra) -> AlgSubspace:
    """``[M, M]`` for ``M`` the centralizer of rad(L)."""
    return _memo(L, "semisimple_ideal", lambda: _semisimple_ideal(L))


def _semisimple_ideal(L: LieAlgebra) -> AlgSubspace:
    R = solvable_radical(L)
    M = centralizer(L, R)
    S = bracket_spaces(L, M, M)
    if not is_ideal(L, S):
        raise InternalError("largest semisimple ideal: [M, M] is not an ideal")
    if not (S & R).is_zero():
        raise InternalError("largest semisimple ideal meets the radical")
    if S.dim and not killing_nondegenerate(induced_algebra(L, S)[0]):
        raise InternalError("largest semisimple ideal is not semisimple")
    return S


def semisimple_ideal_hereditary(L: LieAlgebra, I) -> bool:
    """``S(I) = I cap S(L)`` for an ideal ``I``."""
    I = as_sub(L, I)
    A, inc = induced_algebra(L, I)
    return _lift(L, largest_semisimple_ideal(A), inc) == (I & largest_semisimple_ideal(L))


def _ad_summands(L: LieAlgebra) -> ModuleSplit:
    return _memo(L, "ad_split", lambda: split_module(L.ad_basis(), L.dim))


def _check_summands(L: LieAlgebra, parts: Sequence[AlgSubspace]) -> None:
    for P in parts:
        if not is_ideal(L, P):
            raise InternalError(f"summand {describe(L, P)} is not an ideal")
    if sum(P.dim for P in parts) != L.dim or sum_all(parts, L.dim).dim != L.dim:
        raise InternalError("summands do not span L as a direct sum")
    for a in range(len(parts)):
        for b in range(a + 1, len(parts)):
            if not bracket_spaces(L, parts[a], parts[b]).is_zero():
                raise InternalError("distinct summands do not commute")


def direct_summands(L: LieAlgebra):
    """Indecomposable ideal summands, or :class:`PartialSplit` if idempotents leave Q(i)."""
    if L.dim == 0:
        return []
    split = _ad_summands(L)
    parts = [AlgSubspace.of(L, b) for b in split.blocks]
    _check_summands(L, parts)
    if not split.complete:
        return PartialSplit(parts, "centroid idempotents are not defined over Q(i)")
    return parts


def simple_components(L: LieAlgebra):
    if not is_semisimple(L):
        raise NotSemisimple(f"{L.name or 'L'} has nonzero radical")
    return direct_summands(L)


# --------------------------------------------------------------------------
# Frattini-free
# --------------------------------------------------------------------------
def frattini_free(L: LieAlgebra) -> Verdict:
    return _memo(L, "frattini_free", lambda: _frattini_free(L))


def _frattini_free(L: LieAlgebra) -> Verdict:
    obs = frattini_obstruction(L)
    violations = [
        Violation(name, space, CONDITION_TEXT[name])
        for name, space in (
            ("nil_bracket", obs.nil_bracket),
            ("nonsemisimple", obs.nonsemisimple),
            ("central_derived", obs.central_derived),
        )
        if not space.is_zero()
    ]
    if violations:
        return Verdict(False, violations=violations)
    w = _frattini_witness(L)
    failures = check_frattini_witness(L, w)
    if failures:
        raise WitnessConstructionFailed("; ".join(failures))
    notes = [] if w.complete else ["some blocks are irreducible over Q(i) but split only over C"]
    return Verdict(True, witness=w, notes=notes)


def _frattini_witness(L: LieAlgebra) -> FrattiniFreeWitness:
    lw = levi_decomposition(L)
    S, R = lw.levi, lw.radical
    J = nilradical(L, samples=0)
    raw = [to_sparse(v) for v in J.complement_in(R)]
    C = _correct_torus(L, S, J, raw)
    ops = restrict(L.ad_basis(), J)
    split = split_module(ops, J.dim)
    blocks = []
    for b in split.blocks:
        X = L.span(to_dense(r, L.dim) for r in _subspace_from_coords(J, b))
        weights = []
        for c in C.basis:
            lam = scalar_action(L.ad(c), X)
            if lam is None:
                weights = None
                break
            weights.append(lam)
        blocks.append(Block(X, tuple(weights) if weights is not None else None))
    return FrattiniFreeWitness(C, S, J, tuple(blocks), split.complete)


def _correct_torus(L, S, J, raw):
    """Solve for ``n_i`` in J with ``[S, c_i + n_i] = 0`` and ``[c_i + n_i, c_j + n_j] = 0``."""
    k, d = len(raw), J.dim
    if k == 0:
        return L.zero()
    jb = J.sparse_basis
    nvars = k * d
    eqs = []

    def emit(lin: dict[int, SparseRow], const: SparseRow):
        coords: dict[int, SparseRow] = {}
        for var, vecrow in lin.items():
            for c, v in vecrow.items():
                coords.setdefault(c, {})
                coords[c][var] = coords[c].get(var, ZERO) + v
        for c in set(coords) | set(const):
            eqs.append(({var: v for var, v in coords.get(c, {}).items() if v}, -const.get(c, ZERO)))

    for s in S.sparse_basis:
        for i in range(k):
            emit({i * d + t: L.bracket_sparse(s, jb[t]) for t in range(d)}, L.bracket_sparse(s, raw[i]))
    for i in range(k):
        for j in range(i + 1, k):
            lin: dict[int, SparseRow] = {}
            for t in range(d):
                lin[j * d + t] = L.bracket_sparse(raw[i], jb[t])
                lin[i * d + t] = {c: -v for c, v in L.bracket_sparse(raw[j], jb[t]).items()}
            emit(lin, L.bracket_sparse(raw[i], raw[j]))
    sol = solve_sparse(eqs, nvars)
    if sol is None:
        raise WitnessConstructionFailed("no commutative complement of the nilradical centralizes S")
    vecs = []
    for i in range(k):
        v = dict(raw[i])
        for t in range(d):
            c = sol.get(i * d + t)
            if c:
                axpy(v, c, jb[t])
        vecs.append(to_dense(v, L.dim))
    return L.span(vecs)


def check_frattini_witness(L: LieAlgebra, w: FrattiniFreeWitness) -> list[str]:
    """Every invariant of the decomposition ``L = C + S + J``; returns the failures."""
    out = []
    C, S, J = w.C, w.S, w.J
    if C.dim + S.dim + J.dim != L.dim or sum_all([C, S, J], L.dim).dim != L.dim:
        out.append("C + S + J is not a direct sum equal to L")
    if not is_ideal(L, J) or not bracket_spaces(L, J, J).is_zero():
        out.append("J is not a commutative ideal")
    if not bracket_spaces(L, C, C).is_zero():
        out.append("C is not commutative")
    if not is_subalgebra(L, S) or (S.dim and not killing_nondegenerate(induced_algebra(L, S)[0])):
        out.append("S is not a semisimple subalgebra")
    if not bracket_spaces(L, C, S).is_zero():
        out.append("[C, S] is nonzero")
    ad = L.ad_basis()
    if sum(b.space.dim for b in w.blocks) != J.dim or sum_all([b.space for b in w.blocks], L.dim) != J:
        out.append("blocks do not decompose J")
    for b in w.blocks:
        X = b.space
        if not is_invariant(ad, X):
            out.append(f"block {describe(L, X)} is not L-invariant")
            continue
        ops = restrict(ad, X)
        if radical_operators(enveloping_algebra(ops, X.dim)):
            out.append(f"block {describe(L, X)} is not a semisimple module")
        if b.weights is not None:
            for c, lam in zip(C.basis, b.weights):
                if scalar_action(L.ad(c), X) != lam:
                    out.append(f"C does not act on {describe(L, X)} by the recorded scalars")
        elif w.complete:
            out.append(f"C does not act on {describe(L, X)} by scalars")
    return out


# --------------------------------------------------------------------------
# Jacobson-free
# --------------------------------------------------------------------------
def jacobson_free(L: LieAlgebra) -> Verdict:
    K = jacobson_ideal(L)
    if not K.is_zero():
        return Verdict(False, violations=[Violation("jacobson", K, CONDITION_TEXT["jacobson"])])
    S, Z = derived_algebra(L), centre(L)
    if solvable_radical(L) != Z:
        raise InternalError("Jacobson-free algebra whose radical is not its centre")
    if (S & Z).dim or (S + Z).dim != L.dim:
        raise InternalError("Jacobson-free algebra is not [L,L] + Z(L)")
    if S.dim and not killing_nondegenerate(induced_algebra(L, S)[0]):
        raise InternalError("Jacobson-free algebra has non-semisimple derived algebra")
    return Verdict(True, witness=JacobsonFreeWitness(S, Z))


# --------------------------------------------------------------------------
# subsimple
# --------------------------------------------------------------------------
def _rank_proxy(L: LieAlgebra, X: AlgSubspace, samples: int, seed: int) -> int:
    """Smallest centralizer dimension of sampled elements of the ideal ``X``."""
    A, inc = induced_algebra(L, X)
    rng = random.Random(seed)
    best = A.dim
    for _ in range(samples):
        x = random_element(A.whole(), rng)
        best = min(best, centralizer(A, A.span([x])).dim)
    return best


def subsimple(L: LieAlgebra, samples: int = 3, seed: int = 0) -> Verdict:
    """Classify ``L`` as dim1, simple, classI, classII or not_subsimple."""
    if L.dim == 1:
        return Verdict(True, tag="dim1")
    if L.dim == 0:
        return Verdict(False, tag="not_subsimple", notes=["zero algebra"])
    if is_semisimple(L):
        comps = simple_components(L)
        if isinstance(comps, PartialSplit):
            return Verdict(False, tag="not_subsimple", witness=comps.parts,
                           notes=["simple components not split over Q(i)"])
        if len(comps) == 1:
            return Verdict(True, tag="simple", witness=comps)
        if len(comps) == 2 and comps[0].dim == comps[1].dim:
            r0 = _rank_proxy(L, comps[0], samples, seed)
            r1 = _rank_proxy(L, comps[1], samples, seed)
            if r0 == r1:
                return Verdict(True, tag="classI", witness=comps, heuristic=True,
                               notes=["component isomorphism checked by dimension and centralizer rank only"])
        return Verdict(False, tag="not_subsimple", witness=comps,
                       notes=[f"{len(comps)} simple components"])
    X = nilradical(L, samples=0)
    reasons = []
    if not bracket_spaces(L, X, X).is_zero():
        reasons.append("nilradical is not abelian")
    elif centralizer(L, X) != X:
        reasons.append("nilradical is not self-centralizing")
    elif not is_abs_irreducible_action(restrict(L.ad_basis(), X), X.dim):
        reasons.append("action on the nilradical is not absolutely irreducible")
    if reasons:
        return Verdict(False, tag="not_subsimple", notes=reasons)
    return Verdict(True, tag="classII", witness=X)


# --------------------------------------------------------------------------
# submaximal ideals
# --------------------------------------------------------------------------
def submaximal_witness_family(L: LieAlgebra, verify: bool = True):
    """Ideals with subsimple quotients whose intersection is zero.

    When a block of the nilradical is irreducible over Q(i) but not absolutely
    irreducible, the submaximal ideals are not defined over Q(i); the ideals
    found are then returned as a :class:`PartialSplit` (still intersecting in 0).
    """
    v = frattini_free(L)
    if not v.answer:
        raise NotFrattiniFree(f"{L.name or 'L'} is not Frattini-free")
    if L.dim == 0:
        return []
    w: FrattiniFreeWitness = v.witness
    C, S, J = w.C, w.S, w.J
    family: list[AlgSubspace] = []
    # one ideal per simple component of S
    if S.dim:
        A, inc = induced_algebra(L, S)
        comps = direct_summands(A)
        comps = comps.parts if isinstance(comps, PartialSplit) else comps
        lifted = [_lift(L, c, inc) for c in comps]
        for k in range(len(lifted)):
            others = [lifted[j] for j in range(len(lifted)) if j != k]
            family.append(AlgSubspace.of(L, sum_all([C, J] + others, L.dim)))
    # one ideal per irreducible block of J
    CS = C + S
    annihilators = []
    for i, b in enumerate(w.blocks):
        K = _annihilator(L, CS, b.space)
        annihilators.append(K)
        others = [w.blocks[j].space for j in range(len(w.blocks)) if j != i]
        family.append(AlgSubspace.of(L, sum_all([K] + others, L.dim)))
    # hyperplanes through central directions of C
    ZC = AlgSubspace.of(L, intersect_all([C] + annihilators, L.dim))
    if ZC.dim:
        basis = list(ZC.basis) + ZC.complement_in(C)
        for t in range(ZC.dim):
            H = L.span(basis[:t] + basis[t + 1:])
            family.append(H + S + J)
    unique: list[AlgSubspace] = []
    for I in family:
        if I not in unique:
            unique.append(I)
    if verify:
        failures = check_submaximal_family(L, unique, require_subsimple=w.complete)
        if failures:
            raise InternalError("submaximal family: " + "; ".join(failures))
    if not w.complete:
        return PartialSplit(unique, "some irreducible blocks of J split only over an extension of Q(i)")
    return unique


def _annihilator(L: LieAlgebra, U: AlgSubspace, X: AlgSubspace) -> AlgSubspace:
    return U & centralizer(L, X)


def check_submaximal_family(L: LieAlgebra, family: Sequence[AlgSubspace],
                            require_subsimple: bool = True) -> list[str]:
    out = []
    phi = frattini_ideal(L)
    for I in family:
        if not is_ideal(L, I):
            out.append(f"{describe(L, I)} is not an ideal")
            continue
        if not I.contains(phi):
            out.append(f"{describe(L, I)} does not contain the Frattini ideal")
        Q = quotient(L, I)[0] if I.dim else L
        if require_subsimple and not subsimple(Q).answer:
            out.append(f"quotient by {describe(L, I)} is not subsimple")
    if not intersect_all(family, L.dim).is_zero():
        out.append("family has nonzero intersection")
    return out


# --------------------------------------------------------------------------
# products and representations
# --------------------------------------------------------------------------
def is_subdirect_product(P: LieAlgebra, M, factors: Sequence[LieAlgebra]) -> bool:
    """Whether every factor projection maps the subalgebra ``M`` of ``P`` onto its factor."""
    M = as_sub(P, M)
    if not is_subalgebra(P, M):
        raise NotASubalgebra(f"{describe(P, M)} is not a subalgebra")
    blocks = factor_blocks(factors)
    if not blocks or blocks[-1].stop != P.dim:
        raise ValueError("factor dimensions do not add up to the product dimension")
    for rng in blocks:
        proj = Subspace(len(rng), ([b[k] for k in rng] for b in M.basis))
        if proj.dim != len(rng):
            return False
    return True


def decomposable_rep(ops: Sequence, dim: int | None = None) -> Verdict:
    """Complete reducibility of an operator family, with irreducible blocks when they split."""
    mats = [m.matrix if isinstance(m, LinearMap) else (m if isinstance(m, Matrix) else Matrix(m))
            for m in ops]
    if dim is None:
        if not mats:
            raise ValueError("dimension required for an empty operator list")
        dim = mats[0].rows
    env = enveloping_algebra(mats, dim)
    rad = radical_operators(env)
    if rad:
        img = Subspace(dim, (m.column(k) for m in rad for k in range(dim)))
        return Verdict(False, violations=[Violation("trace_radical", img, CONDITION_TEXT["trace_radical"])])
    split = split_module(mats, dim)
    for b in split.blocks:
        if not is_invariant(mats, b):
            raise InternalError("representation block is not invariant")
    if split.complete:
        return Verdict(True, witness=list(split.blocks))
    return Verdict(True, witness=PartialSplit(list(split.blocks), "blocks irreducible over Q(i) only"),
                   tag="partial")


def reductive_decomposition_holds(L: LieAlgebra) -> bool:
    """``L = [L,L] + Z(L)`` with ``[L,L]`` semisimple."""
    D, Z = derived_algebra(L), centre(L)
    if (D & Z).dim or (D + Z).dim != L.dim:
        return False
    return D.dim == 0 or killing_nondegenerate(induced_algebra(L, D)[0])

"""Series, radicals, Frattini/Jacobson ideals and the preradical combinators.

Every radical is returned as an :class:`AlgSubspace` of its input.  Results
are memoised on the algebra instance (algebras are immutable), so repeated
analyses of one algebra do not redo eliminations.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, NamedTuple

from .algebra import (
    AlgSubspace,
    LieAlgebra,
    as_sub,
    bracket_spaces,
    centre,
    derived_algebra,
    describe,
    induced_algebra,
    is_ideal,
    killing_nondegenerate,
    killing_form,
    push_forward,
    quotient,
)
from .errors import InternalError
from .linalg import LinearMap, Matrix, Subspace, lincomb, null_space_rows, sum_all, to_sparse
from .operators import enveloping_algebra, radical_operators, restrict


def _memo(L: LieAlgebra, key: str, compute: Callable):
    if key not in L._cache:
        L._cache[key] = compute()
    return L._cache[key]


# --------------------------------------------------------------------------
# series
# --------------------------------------------------------------------------
@dataclass(frozen=True)
class SeriesRecord:
    kind: str  # "derived" or "lower_central"
    terms: tuple  # AlgSubspace terms; the stable term appears twice
    stabilized_at: int

    @property
    def dims(self) -> list[int]:
        return [t.dim for t in self.terms[: self.stabilized_at + 1]]

    @property
    def limit(self) -> AlgSubspace:
        return self.terms[self.stabilized_at]


def _series(L: LieAlgebra, kind: str) -> SeriesRecord:
    terms = [L.whole()]
    while True:
        last = terms[-1]
        nxt = bracket_spaces(L, last, last) if kind == "derived" else bracket_spaces(L, L.whole(), last)
        terms.append(nxt)
        if nxt == last:
            return SeriesRecord(kind, tuple(terms), len(terms) - 2)


def derived_series(L: LieAlgebra) -> SeriesRecord:
    return _memo(L, "derived_series", lambda: _series(L, "derived"))


def lower_central_series(L: LieAlgebra) -> SeriesRecord:
    return _memo(L, "lower_central_series", lambda: _series(L, "lower_central"))


def is_solvable(L: LieAlgebra) -> bool:
    return derived_series(L).limit.is_zero()


def is_nilpotent(L: LieAlgebra) -> bool:
    return lower_central_series(L).limit.is_zero()


def solvability_index(L: LieAlgebra) -> int | None:
    """Least n with ``L_[n] = 0``; ``None`` when ``L`` is not solvable.  ``i_s({0}) = 0``."""
    s = derived_series(L)
    return s.stabilized_at if s.limit.is_zero() else None


def nilpotency_index(L: LieAlgebra) -> int | None:
    s = lower_central_series(L)
    return s.stabilized_at if s.limit.is_zero() else None


def subspace_solvability_index(L: LieAlgebra, U) -> int | None:
    """Solvability index of a subalgebra viewed as an algebra in its own right."""
    A, _ = induced_algebra(L, U)
    return solvability_index(A)


def is_semisimple(L: LieAlgebra) -> bool:
    return killing_nondegenerate(L)


# --------------------------------------------------------------------------
# classical radicals
# --------------------------------------------------------------------------
def solvable_radical(L: LieAlgebra) -> AlgSubspace:
    """Killing-orthogonal complement of ``[L, L]``, certified before return."""
    return _memo(L, "rad", lambda: _solvable_radical(L))


def _solvable_radical(L: LieAlgebra) -> AlgSubspace:
    if L.dim == 0:
        return L.zero()
    kappa = killing_form(L)
    D = derived_algebra(L)
    rows = [to_sparse(kappa @ y) for y in D.basis]
    rad = AlgSubspace.of(L, Subspace._from_sparse_basis(L.dim, null_space_rows(rows, L.dim)))
    if not is_ideal(L, rad):
        raise InternalError("rad certificate: Killing complement of [L,L] is not an ideal")
    A, _ = induced_algebra(L, rad)
    if not is_solvable(A):
        raise InternalError("rad certificate: Killing complement of [L,L] is not solvable")
    Q, _, _ = quotient(L, rad)
    if not killing_nondegenerate(Q):
        raise InternalError("rad certificate: quotient by rad is not semisimple")
    return rad


def vasilescu_radical(L: LieAlgebra) -> AlgSubspace:
    """Finite-dimensional realisation of the Vasilescu radical: it coincides with rad."""
    return solvable_radical(L)


def nilradical(L: LieAlgebra, samples: int = 5, seed: int = 0) -> AlgSubspace:
    """Largest nilpotent ideal.

    Elements of ``rad(L)`` whose adjoint action on ``[L, rad L]`` lies in the
    trace-form radical of the enveloping algebra, joined with the centre.
    """
    N = _memo(L, "nilrad", lambda: _nilradical(L))
    if samples:
        check_nilradical_sampling(L, N, samples, seed)
    return N


def _nilradical(L: LieAlgebra) -> AlgSubspace:
    R = solvable_radical(L)
    if R.is_zero():
        return R
    # ad x (x in R) maps L into K = [L, R], so it is nilpotent iff its restriction to K is
    K = bracket_spaces(L, L.whole(), R)
    if K.is_zero():
        N = R
    else:
        ops = restrict([L.ad(r) for r in R.basis], K)
        d = K.dim
        env = enveloping_algebra(ops, d)
        rad_space = Subspace._from_sparse_basis(d * d, (m.flat_sparse() for m in radical_operators(env)))
        # coordinates in R -> flattened restricted operator, a (d^2 x dim R) matrix
        cols: list[dict] = [{} for _ in range(d * d)]
        for j, m in enumerate(ops):
            for k, v in m.flat_sparse().items():
                cols[k][j] = v
        ad_map = LinearMap(Matrix.from_sparse(cols, R.dim), R.dim, d * d)
        pre = ad_map.preimage(rad_space)
        N = L.span(lincomb(c, R.basis, L.dim) for c in pre.basis) + centre(L)
    if not is_ideal(L, N):
        raise InternalError("nilradical certificate: result is not an ideal")
    B, _ = induced_algebra(L, N)
    if not is_nilpotent(B):
        raise InternalError("nilradical certificate: result is not nilpotent")
    return N


def random_element(U: Subspace, rng: random.Random, bound: int = 3) -> tuple:
    acc = [0] * U.ambient_dim
    out = None
    for b in U.basis:
        c = rng.randint(-bound, bound)
        out = [a + c * x for a, x in zip(out or acc, b)]
    return tuple(out) if out is not None else tuple(acc)


def check_nilradical_sampling(L: LieAlgebra, N: AlgSubspace, samples: int, seed: int = 0) -> None:
    """For random r in rad(L): ad(r) nilpotent iff r lies in the nilradical."""
    R = solvable_radical(L)
    rng = random.Random(seed)
    for _ in range(samples):
        r = random_element(R, rng)
        nil = L.ad(r).is_nilpotent()
        if nil != N.member(r):
            raise InternalError(
                f"nilradical certificate: element {[str(x) for x in r]} has "
                f"ad-nilpotent={nil} but membership={not nil}"
            )


def jacobson_ideal(L: LieAlgebra) -> AlgSubspace:
    """``K_L = [L, rad L]``, checked to be a nilpotent ideal inside the nilradical."""
    return _memo(L, "jacobson", lambda: _jacobson(L))


def _jacobson(L: LieAlgebra) -> AlgSubspace:
    K = bracket_spaces(L, L.whole(), solvable_radical(L))
    if not nilradical(L, samples=0).contains(K):
        raise InternalError("Jacobson ideal is not contained in the nilradical")
    return K


def levi_radical(L: LieAlgebra) -> AlgSubspace:
    """Stable term of the derived series (the smallest characteristic ideal with solvable quotient)."""
    return derived_series(L).limit


def lower_central_radical(L: LieAlgebra) -> AlgSubspace:
    """Stable term of the lower central series."""
    return lower_central_series(L).limit


# --------------------------------------------------------------------------
# Frattini ideal
# --------------------------------------------------------------------------
@dataclass
class Obstruction:
    """The three pieces that every Frattini-free quotient must kill."""

    nil_bracket: AlgSubspace  # [N, N]
    nonsemisimple: AlgSubspace  # Rad(enveloping of ad L on N) . N
    central_derived: AlgSubspace  # Z(L) cap [L, L]

    @property
    def total(self) -> AlgSubspace:
        return self.nil_bracket + self.nonsemisimple + self.central_derived

    def is_zero(self) -> bool:
        return self.total.is_zero()


def frattini_obstruction(L: LieAlgebra) -> Obstruction:
    return _memo(L, "frattini_obstruction", lambda: _obstruction(L))


def _obstruction(L: LieAlgebra) -> Obstruction:
    N = nilradical(L, samples=0)
    nn = bracket_spaces(L, N, N)
    if N.is_zero():
        ns = L.zero()
    else:
        ops = restrict(L.ad_basis(), N)
        rad_ops = radical_operators(enveloping_algebra(ops, N.dim))
        vecs = [_combine_basis(m.column(k), N) for m in rad_ops for k in range(N.dim)]
        ns = L.span(vecs)
    zc = centre(L) & derived_algebra(L)
    return Obstruction(nn, ns, zc)


def _combine_basis(coords, U: Subspace) -> tuple:
    return lincomb(coords, U.basis, U.ambient_dim)


def frattini_ideal(L: LieAlgebra) -> AlgSubspace:
    """Frattini ideal: the smallest ideal whose quotient is Frattini-free.

    Built by adding obstructions until the quotient passes the Frattini-free
    decision procedure, whose witness is then constructed and re-verified.
    """
    return _memo(L, "frattini", lambda: _frattini(L))


def _frattini(L: LieAlgebra) -> AlgSubspace:
    from .structure import frattini_free

    I = L.zero()
    for _ in range(L.dim + 1):
        if I.is_zero():
            M, section = L, None
        else:
            M, _, section = quotient(L, I)
        obs = frattini_obstruction(M).total
        if obs.is_zero():
            break
        lifted = [section(b) for b in obs.basis] if section else list(obs.basis)
        I = I + L.span(lifted)
    else:
        raise InternalError("Frattini obstruction iteration did not terminate")
    M = quotient(L, I)[0] if not I.is_zero() else L
    verdict = frattini_free(M)
    if not verdict.answer:
        raise InternalError(
            "Frattini obstruction vanished but the quotient was not accepted as Frattini-free"
        )
    if not jacobson_ideal(L).contains(I):
        raise InternalError("Frattini ideal is not contained in the Jacobson ideal")
    if not I.contains(centre(L) & derived_algebra(L)):
        raise InternalError("Frattini ideal misses Z(L) cap [L, L]")
    return I


# --------------------------------------------------------------------------
# preradicals and combinators
# --------------------------------------------------------------------------
@dataclass(frozen=True)
class Preradical:
    """A named ideal-valued map on Lie algebras."""

    name: str
    func: Callable[[LieAlgebra], Subspace] = field(compare=False)

    def __call__(self, L: LieAlgebra) -> AlgSubspace:
        U = as_sub(L, self.func(L))
        if not is_ideal(L, U):
            raise InternalError(f"preradical {self.name} returned {describe(L, U)}, not an ideal")
        return U

    def __repr__(self):
        return f"Preradical({self.name})"


class IndexRecord(NamedTuple):
    preradical: str
    stages: list  # dimensions of R^0(L) = L, R^1(L), ... up to the first repeat
    r: int


def superposition_series(R: Preradical, L: LieAlgebra) -> tuple[AlgSubspace, IndexRecord]:
    """Iterate ``R^{k+1}(L) = R(R^k(L))`` on the ideals-as-algebras until it repeats."""
    current = L.whole()
    stages = [current.dim]
    k = 0
    while True:
        A, inc = induced_algebra(L, current)
        nxt = push_forward(L, inc, R(A))
        if nxt == current:
            return current, IndexRecord(R.name, stages, k)
        if not current.contains(nxt):
            raise InternalError(f"{R.name} is not decreasing on {L.name or 'L'}")
        current = nxt
        stages.append(current.dim)
        k += 1


def superpose(R: Preradical) -> Preradical:
    return Preradical(f"{R.name}°", lambda L: superposition_series(R, L)[0])


def convolution_value(R: Preradical, T_value: AlgSubspace) -> AlgSubspace:
    """``q^{-1}(R(L / T(L)))`` for a precomputed ideal ``T(L)``."""
    L = T_value.algebra
    if T_value.is_zero():
        out = R(L)
    else:
        Q, _, section = quotient(L, T_value)
        out = T_value + L.span(section(b) for b in R(Q).basis)
    if not out.contains(T_value):
        raise InternalError("convolution result does not contain T(L)")
    return out


def convolve(R: Preradical, T: Preradical) -> Preradical:
    return Preradical(f"{R.name}*{T.name}", lambda L: convolution_value(R, T(L)))


def star_series(R: Preradical, L: LieAlgebra) -> tuple[AlgSubspace, list[int]]:
    """``R^(0) = 0``, ``R^(k+1) = R * R^(k)`` until stable; returns the limit and stage dims."""
    current = L.zero()
    dims = [0]
    while True:
        nxt = convolution_value(R, current)
        if nxt == current:
            return current, dims
        current = nxt
        dims.append(current.dim)


def star(R: Preradical) -> Preradical:
    return Preradical(f"{R.name}*", lambda L: star_series(R, L)[0])


derived_step = Preradical("D", derived_algebra)
centre_preradical = Preradical("Z", centre)
RAD = Preradical("rad", solvable_radical)
NILRAD = Preradical("nilrad", lambda L: nilradical(L, samples=0))
JACOBSON = Preradical("P_Jmax", jacobson_ideal)
FRATTINI = Preradical("P_Smax", frattini_ideal)
LEVI = Preradical("P_Levi", levi_radical)
LOWER_CENTRAL = Preradical("P_C", lower_central_radical)


# --------------------------------------------------------------------------
# indices
# --------------------------------------------------------------------------
class RadicalIndices(NamedTuple):
    r_frattini: int
    r_jacobson: int


def radical_indices(L: LieAlgebra, cross_check: bool = True) -> RadicalIndices:
    """Frattini and Jacobson indices from ``i_s(R(L)) + 1``.

    With ``cross_check`` the literal superposition series of both ideals is
    iterated as well and must give the same counts.  The zero algebra has
    both indices 0 (its series is already stable at stage 0).
    """
    if L.dim == 0:
        return RadicalIndices(0, 0)
    phi, K = frattini_ideal(L), jacobson_ideal(L)
    rf = subspace_solvability_index(L, phi) + 1
    rj = subspace_solvability_index(L, K) + 1
    if cross_check:
        lit_f = superposition_series(FRATTINI, L)[1].r
        lit_j = superposition_series(JACOBSON, L)[1].r
        if (lit_f, lit_j) != (rf, rj):
            raise InternalError(
                f"index shortcut ({rf}, {rj}) disagrees with superposition counts ({lit_f}, {lit_j})"
            )
    return RadicalIndices(rf, rj)


def largest_characteristic_chain(L: LieAlgebra) -> list[AlgSubspace]:
    """``[L,L] cap Z``, phi, K, N, rad in increasing order."""
    return [
        derived_algebra(L) & centre(L),
        frattini_ideal(L),
        jacobson_ideal(L),
        nilradical(L, samples=0),
        solvable_radical(L),
    ]


def sum_of(L: LieAlgebra, spaces) -> AlgSubspace:
    return AlgSubspace.of(L, sum_all(spaces, L.dim))

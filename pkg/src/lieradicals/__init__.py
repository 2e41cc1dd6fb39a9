"""Exact radical and structure theory of finite-dimensional Lie algebras over Q(i)."""

from .algebra import (
    AlgSubspace,
    LieAlgebra,
    bracket_spaces,
    centralizer,
    centre,
    derivations,
    derived_algebra,
    direct_product,
    generated_ideal,
    generated_subalgebra,
    induced_algebra,
    is_characteristic,
    is_ideal,
    is_subalgebra,
    killing_form,
    make_algebra,
    module_is_abs_irreducible,
    module_is_semisimple,
    quotient,
    semidirect_product,
)
from .errors import (
    AlgebraError,
    InternalError,
    JacobiViolation,
    LieRadicalsError,
    NotFrattiniFree,
    NotSemisimple,
    ParseError,
    WitnessConstructionFailed,
)
from .linalg import LinearMap, Matrix, Subspace, image, kernel, rref, solve
from .operators import assoc_radical, enveloping_algebra
from .radicals import (
    FRATTINI,
    JACOBSON,
    LEVI,
    LOWER_CENTRAL,
    NILRAD,
    RAD,
    Preradical,
    convolve,
    derived_series,
    frattini_ideal,
    is_nilpotent,
    is_solvable,
    jacobson_ideal,
    levi_radical,
    lower_central_radical,
    lower_central_series,
    nilpotency_index,
    nilradical,
    radical_indices,
    solvability_index,
    solvable_radical,
    star,
    superpose,
    vasilescu_radical,
)
from .scalars import GaussianRational, parse_scalar
from .structure import (
    PartialSplit,
    Verdict,
    decomposable_rep,
    direct_summands,
    frattini_free,
    is_subdirect_product,
    jacobson_free,
    largest_semisimple_ideal,
    levi_decomposition,
    simple_components,
    submaximal_witness_family,
    subsimple,
)

__all__ = [name for name in dir() if not name.startswith("_")]

"""Exception hierarchy shared by all modules."""

from __future__ import annotations


class LieRadicalsError(Exception):
    """Base class for every error raised by this package."""


class DimensionError(LieRadicalsError, ValueError):
    """Operands live in spaces of different dimension."""


class ScalarParseError(LieRadicalsError, ValueError):
    """A scalar text form could not be parsed."""


class AlgebraError(LieRadicalsError, ValueError):
    """Input does not describe a valid Lie algebra (CLI exit code 2)."""


class InconsistentEntry(AlgebraError):
    def __init__(self, i: int, j: int):
        super().__init__(f"brackets [{i},{j}] and [{j},{i}] are not antisymmetric")
        self.i, self.j = i, j


class JacobiViolation(AlgebraError):
    def __init__(self, i: int, j: int, k: int, residual):
        super().__init__(
            f"Jacobi identity fails on basis triple ({i}, {j}, {k}); "
            f"residual {[str(c) for c in residual]}"
        )
        self.triple = (i, j, k)
        self.residual = tuple(residual)


class ParentMismatch(LieRadicalsError, ValueError):
    """Subspaces belong to different algebras."""


class NotAnIdeal(AlgebraError):
    pass


class NotASubalgebra(AlgebraError):
    pass


class NotInvariant(AlgebraError):
    pass


class NotADerivation(AlgebraError):
    def __init__(self, index: int):
        super().__init__(f"phi(b_{index}) is not a derivation of the acted-on algebra")
        self.index = index


class NotAHomomorphism(AlgebraError):
    def __init__(self, i: int, j: int, residual):
        super().__init__(f"phi([b_{i}, b_{j}]) != [phi(b_{i}), phi(b_{j})]")
        self.pair = (i, j)
        self.residual = residual


class NotSemisimple(LieRadicalsError, ValueError):
    pass


class NotFrattiniFree(LieRadicalsError, ValueError):
    pass


class InternalError(LieRadicalsError, RuntimeError):
    """A computed certificate failed re-verification (CLI exit code 3)."""


class WitnessConstructionFailed(InternalError):
    pass


class ParseError(LieRadicalsError, ValueError):
    """Malformed input file (CLI exit code 1); ``location`` points into the document."""

    def __init__(self, message: str, location: str = ""):
        super().__init__(f"{location}: {message}" if location else message)
        self.location = location

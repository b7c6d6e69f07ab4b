"""Exception hierarchy shared by every subpackage.

Each error carries the witness needed to reproduce the failure; the CLI
renders ``str(err)`` and exits with status 2.
"""

from __future__ import annotations


class SliceError(Exception):
    """Base class for all domain errors raised by the library."""


# -- exactpoly ---------------------------------------------------------------

class ZeroPolynomial(SliceError):
    pass


class NonQuasiHomogeneous(SliceError):
    def __init__(self, poly, first, second):
        self.poly = poly
        self.monomials = (first, second)
        super().__init__(
            f"{poly} is not quasi-homogeneous: monomials {first} and {second} "
            "have different weighted degrees"
        )


class NonConstantDeterminant(SliceError):
    def __init__(self, det):
        self.det = det
        super().__init__(f"determinant is not a nonzero constant: {det}")


class SingularMatrix(SliceError):
    pass


class SingularEliminationMatrix(SliceError):
    pass


class NotLinear(SliceError):
    pass


class InfiniteDimensional(SliceError):
    pass


class BudgetExceeded(SliceError):
    pass


class NotExactlyDivisible(SliceError):
    pass


# -- liecore -----------------------------------------------------------------

class UnsupportedType(SliceError):
    pass


class ValidationFailure(SliceError):
    def __init__(self, message, witness=None):
        self.witness = witness
        super().__init__(message if witness is None else f"{message}: {witness}")


class DimensionMismatch(SliceError):
    pass


class IrrationalSpectrum(SliceError):
    pass


class FieldExtensionRequired(SliceError):
    pass


# -- orbitkit ----------------------------------------------------------------

class NonIntegralSolution(SliceError):
    pass


class NonIntegerEigenvalue(SliceError):
    pass


class NoTripleFound(SliceError):
    pass


class InconsistentHint(SliceError):
    pass


class NotComplementary(SliceError):
    pass


class NotAdHInvariant(SliceError):
    def __init__(self, index, image):
        self.index = index
        self.image = image
        super().__init__(
            f"complement vector X{index + 1} is mapped by ad_h outside the complement "
            f"(image {list(map(str, image))})"
        )


# -- diracred ----------------------------------------------------------------

class PolynomialityFailure(SliceError):
    def __init__(self, entry, det):
        self.entry = entry
        self.det = det
        super().__init__(
            f"Dirac reduction entry {entry} keeps the denominator {det}; "
            "the complement is probably not ad_h-invariant"
        )


class JacobiFailure(SliceError):
    def __init__(self, triple, jacobiator):
        self.triple = triple
        self.jacobiator = jacobiator
        super().__init__(f"Jacobi identity fails on {triple}: {jacobiator}")


# -- subregular --------------------------------------------------------------

class CasimirFailure(SliceError):
    def __init__(self, index, residual):
        self.index = index
        self.residual = residual
        super().__init__(f"chi{index + 1} is not a Casimir, residual {residual}")


class DependentCasimirs(SliceError):
    pass


class NotProportional(SliceError):
    def __init__(self, first, second):
        self.entries = (first, second)
        super().__init__(f"entries {first} and {second} give different ratios")


class ZeroStructure(SliceError):
    pass


class NoLinearEliminationFound(SliceError):
    pass


class UnknownType(SliceError):
    pass


# -- cli ---------------------------------------------------------------------

class ConfigError(SliceError):
    pass


class FixtureMissing(SliceError):
    pass

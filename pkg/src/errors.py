"""Toolkit Errors

Exception hierarchy shared by every package. Each class corresponds to
one named failure of a toolkit operation.
"""


class DensityToolkitError(Exception):
    """Base class for all toolkit errors"""


class ConfigError(DensityToolkitError, ValueError):
    """Invalid configuration or run request"""


class NotPrimeError(DensityToolkitError, ValueError):
    """Characteristic is not a prime"""


class EvenCharacteristicError(DensityToolkitError, ValueError):
    """Characteristic 2 is not supported"""


class TooLargeError(DensityToolkitError, ValueError):
    """Object exceeds a configured size bound"""


class DivisionByZeroError(DensityToolkitError, ZeroDivisionError):
    """Inverse of the zero field element requested"""


class MixedFieldsError(DensityToolkitError, TypeError):
    """Operands belong to different fields"""


class NoRootError(DensityToolkitError, ValueError):
    """Square root of a nonsquare requested"""


class SingularMatrixError(DensityToolkitError, ValueError):
    """Matrix has zero determinant"""


class NoSuchInvolutionError(DensityToolkitError):
    """No involution outside PSL(2,q) inverts h"""


class NotS3Error(DensityToolkitError, ValueError):
    """Generators do not span a subgroup isomorphic to S3"""


class NotCoreFreeError(DensityToolkitError, ValueError):
    """Subgroup contains a nontrivial normal subgroup of the group"""


class WrongCharacteristicError(DensityToolkitError, ValueError):
    """Operation is not defined in this characteristic"""


class WrongCongruenceError(DensityToolkitError, ValueError):
    """Operation requires a different congruence class of q"""


class UnexpectedDegreeError(DensityToolkitError):
    """Subconstituent has a degree outside {0, 1, 2}"""


class BudgetExceededError(DensityToolkitError):
    """Exact search stopped at its node budget"""

    def __init__(self, message: str, result=None):
        super().__init__(message)
        self.result = result


class SeedNotCliqueError(DensityToolkitError, ValueError):
    """Seed vertices are not pairwise adjacent"""


class UnsupportedCaseError(DensityToolkitError, ValueError):
    """No closed-form density is defined for this q"""


class VerificationError(DensityToolkitError, AssertionError):
    """A structural property failed to hold"""


class NotFoundError(DensityToolkitError):
    """Requested structure does not exist for this q"""

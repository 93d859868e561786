"""Exception types raised across the package."""


class PermastatError(ValueError):
    pass


class UnpairableGammaArguments(PermastatError):
    pass


class NonpositiveGammaArgument(PermastatError):
    pass


class NonSquareMatrix(PermastatError):
    pass


class PadLengthTooSmall(PermastatError):
    pass


class WeightMismatch(PermastatError):
    pass


class DegreeTooLarge(PermastatError):
    pass


class LengthExceedsAlphabet(PermastatError):
    pass


class SingularDenominator(PermastatError):
    pass


class SizeTooLargeForBruteForce(PermastatError):
    pass


class UnitMismatch(PermastatError):
    pass


class ZeroDenominatorParameter(PermastatError):
    pass


class UnsupportedSize(PermastatError):
    pass


class NonIntegerAlpha(PermastatError):
    pass

"""Exception types shared across the package."""


class ShadowCodeError(Exception):
    """Base class for all package errors."""


class NotPrime(ShadowCodeError):
    pass


class Overflow(ShadowCodeError):
    pass


class ZeroPolynomial(ShadowCodeError):
    pass


class NotEnoughPolynomials(ShadowCodeError):
    def __init__(self, requested, available):
        super().__init__(
            f"requested {requested} polynomials but only {available} exist"
        )
        self.requested = requested
        self.available = available


class OrderMismatch(ShadowCodeError):
    pass


class ZeroArgument(ShadowCodeError):
    """A character was evaluated at 0 (the polynomial has a root)."""


class DimensionMismatch(ShadowCodeError):
    pass


class BadPositions(ShadowCodeError):
    pass


class Ambiguous(ShadowCodeError):
    """Erasure decoding admits more than one consistent message."""


class Inconsistent(ShadowCodeError):
    """Received word is not compatible with any codeword."""


class TooLarge(ShadowCodeError):
    def __init__(self, size, cap):
        super().__init__(f"enumeration size {size} exceeds cap {cap}")
        self.size = size
        self.cap = cap


class DomainError(ShadowCodeError):
    pass


class NotApplicable(ShadowCodeError):
    """A bound's validity condition does not hold; carries diagnostics."""

    def __init__(self, message, lambda_km1=None):
        super().__init__(message)
        self.lambda_km1 = lambda_km1


class ZeroExponentVector(ShadowCodeError):
    pass


class ConditionFailed(ShadowCodeError):
    pass

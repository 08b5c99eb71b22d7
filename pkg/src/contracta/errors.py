"""Error types shared across the package."""


class ContractaError(Exception):
    pass


class MixedPrime(ContractaError):
    pass


class MixedModulus(ContractaError):
    pass


class UnsupportedOperands(ContractaError):
    pass


class InsufficientPrecision(ContractaError):
    pass


class NegativePowerUnsupported(ContractaError):
    pass


class ZeroCharacter(ContractaError):
    pass


class DepthExceeded(ContractaError):
    pass


class MixedCocycle(ContractaError):
    pass


class EmptySupport(ContractaError):
    pass


class NonCharacterProfile(ContractaError):
    pass


class WitnessWindowTooSmall(ContractaError):
    pass


class MixedShape(ContractaError):
    pass


class ParseError(ContractaError):
    """Raised on malformed series text; carries position and expected tokens."""

    def __init__(self, message, position=None, expected=None):
        super().__init__(message)
        self.position = position
        self.expected = tuple(expected) if expected else ()


class UnknownSuite(ContractaError):
    pass


class InvalidParams(ContractaError):
    pass


class IoError(ContractaError):
    pass


class SchemaError(ContractaError):
    pass


class InvariantViolation(ContractaError):
    pass

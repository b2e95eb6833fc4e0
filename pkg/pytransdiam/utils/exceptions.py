"""
Hold exceptions used throughout the package
"""


class TransdiamError(Exception):
    """Base exception class for all pytransdiam exceptions"""

    msg = None

    def __init__(self, *args, **kwargs):
        super().__init__(*args)
        self.kwargs = kwargs

    def message(self):
        return str(self)

    def __str__(self):
        if self.msg is None or self.args:
            return ' '.join(str(a) for a in self.args)
        return self.msg.format(**self.kwargs)

    __repr__ = __str__


class DimensionMismatchError(TransdiamError, ValueError):
    """Raised when a point or polynomial has the wrong number of variables."""
    msg = 'Expected dimension {expected}, {provided} was provided.'


class InstanceTooLargeError(TransdiamError, OverflowError):
    """Raised when a combinatorial count leaves the supported range."""
    msg = 'Instance too large: {what} = {value} exceeds {limit}.'


class InvalidScalarDomainError(TransdiamError, ValueError):
    msg = ('domain must be one of "COMPLEX_FLOAT", "EXACT_RATIONAL", '
           '"GAUSSIAN_RATIONAL" or "SYMBOLIC_GENERIC". {domain} was provided.')


class UnsupportedDomainError(TransdiamError, TypeError):
    """Raised when an operation needs a scalar domain it was not given."""
    msg = '{operation} does not support the {domain} domain.'


class InvalidSetKindError(TransdiamError, ValueError):
    msg = ('kind must be one of "polydisc", "ball", "interval", "preimage", '
           '"filled_julia" or "points". {kind} was provided.')


class InvalidVerdictError(TransdiamError, ValueError):
    msg = 'verdict must be "PASS" or "FAIL". {verdict} was provided.'


class MalformedMapError(TransdiamError, ValueError):
    """Raised when the components of a polynomial map do not fit together."""
    msg = 'Malformed polynomial map: {reason}'


class NonRegularMapError(TransdiamError, ArithmeticError):
    """
    Raised when the leading homogeneous part of a map has a nonzero common
    root, i.e. its resultant vanishes.
    """
    msg = 'The map is not regular: {reason}'


class RegularityAdvisoryError(TransdiamError, ArithmeticError):
    """
    Raised when the sampled sphere minimum of the leading part is not
    positive, so no radius bound can be derived.
    """
    msg = ('Sphere minimum of the leading part is {minimum}; '
           'cannot derive a bounding radius.')


class DenominatorSingularError(TransdiamError, ArithmeticError):
    """Raised when every Macaulay partition has a vanishing denominator."""
    msg = ('The Macaulay denominator vanished for all {tried} variable '
           'priorities.')


class ResultantBudgetExceeded(TransdiamError, MemoryError):
    """
    Raised when a symbolic expansion grows past its term budget. The partial
    statistics collected so far are kept on the exception.
    """
    msg = ('Symbolic expansion exceeded {budget} terms '
           '(stage: {stage}, terms so far: {terms}).')


class DegenerateOracleError(TransdiamError, ValueError):
    """
    Raised when an oracle cannot produce a configuration with a nonzero
    Vandermonde determinant.
    """
    msg = ('Could not find a nondegenerate configuration of {count} points '
           'for {oracle} after {retries} retries.')


class InvalidPointCountError(TransdiamError, ValueError):
    msg = 'Expected {expected} points, {provided} were provided.'


class NotPrimeError(TransdiamError, ValueError):
    msg = 'p must be a prime. {p} was provided.'


class ZeroResultantError(TransdiamError, ArithmeticError):
    msg = 'The resultant vanishes; |Res|_{p} is not defined for this map.'


class PreconditionFailure(TransdiamError):
    """
    Raised when the hypotheses of a check are not met. This is not a
    falsification of the statement being checked.
    """
    msg = 'Precondition failed: {reason}'


class InvalidDescriptorError(TransdiamError, ValueError):
    msg = 'Invalid {what} descriptor: {reason}'


class ConfigError(TransdiamError, ValueError):
    msg = 'Invalid configuration: {reason}'


class ToleranceFailure(TransdiamError):
    msg = '{command}: gap {gap} exceeds tolerance {tol}.'

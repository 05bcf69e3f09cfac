class IsocoverError(Exception):
    """Base class for all errors raised by the package."""


class SingularMatrixError(IsocoverError, ValueError):
    pass


class NotUnimodularError(IsocoverError, ValueError):
    pass


class ReducibleError(IsocoverError, ValueError):
    """The pair generates a reducible group (trace of commutator equals 2)."""


class DegenerateError(IsocoverError, ValueError):
    """An input sits on a boundary case excluded by the construction."""


class SamplerError(IsocoverError, RuntimeError):
    """A random sampler exhausted its attempts."""


class NoConjugatorError(IsocoverError, ValueError):
    pass


class InvariantViolation(IsocoverError, AssertionError):
    """A mathematically guaranteed identity failed at runtime: a bug, not bad input."""


class MalformedCandidateError(IsocoverError, ValueError):
    pass

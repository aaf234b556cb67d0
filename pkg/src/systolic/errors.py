"""Exception hierarchy.

Input problems and lemma violations are kept apart because the CLI maps
them to different exit statuses (2 and 3).
"""


class SystolicError(Exception):
    """Base class for every error raised by this package."""


class InputError(SystolicError):
    """Bad user input: exit status 2."""


class MalformedInput(InputError):
    pass


class UnknownSimplex(InputError):
    pass


class Unreachable(InputError):
    pass


class CapacityError(InputError):
    """A desk-scale bound was exceeded; the bound is echoed in the message."""


class GeneratorContractError(InputError):
    pass


class ConsistencyError(SystolicError):
    """A structural lemma or internal invariant failed: exit status 3."""


class DegenerateJoin(ConsistencyError):
    pass


class InvalidCollapse(ConsistencyError):
    pass


class ConvexityViolation(ConsistencyError):
    def __init__(self, message, vertex=None):
        super().__init__(message)
        self.vertex = vertex


class OutOfBall(ConsistencyError):
    pass


class LemmaViolation(ConsistencyError):
    pass


class NotSpherical(ConsistencyError):
    pass


class UndefinedPointer(ConsistencyError):
    pass


class MatchingConflict(ConsistencyError):
    def __init__(self, message, first=None, second=None):
        super().__init__(message)
        self.first = first
        self.second = second


class SingleCriticalCellViolation(ConsistencyError):
    def __init__(self, message, critical=()):
        super().__init__(message)
        self.critical = list(critical)


class SchedulingError(ConsistencyError):
    pass


class InternalConsistencyError(ConsistencyError):
    pass

"""Exception hierarchy. Each family maps to one stable CLI exit code."""


class XModError(Exception):
    exit_code = 5


class ParseError(XModError):
    exit_code = 2


class PreconditionFailed(XModError):
    exit_code = 3


class NotNormal(PreconditionFailed):
    pass


class NotGenerating(PreconditionFailed):
    pass


class KernelNotCentral(PreconditionFailed):
    pass


class ActionViolation(PreconditionFailed):
    pass


class CokernelNotCyclic(PreconditionFailed):
    pass


class ResourceLimit(XModError):
    exit_code = 4


class CosetLimitExceeded(ResourceLimit):
    pass


class TooLarge(ResourceLimit):
    pass


class RewriteLimitExceeded(ResourceLimit):
    pass


class InternalAssertion(XModError):
    exit_code = 5


class RelatorNotKilled(InternalAssertion):
    pass

"""Exception hierarchy.

``InstanceError`` subclasses signal invalid input (CLI exit code 3);
``ResourceLimit`` subclasses signal a guard tripping (exit code 4).
"""


class InstanceError(ValueError):
    pass


class InstanceSyntaxError(InstanceError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class NotSeparator(InstanceError):
    def __init__(self, name: str):
        self.name = name
        super().__init__(f"{name} does not separate s from t")


class NotMinimum(InstanceError):
    pass


class TerminalsAdjacent(InstanceError):
    pass


class InvalidSet(InstanceError):
    pass


class SeparatorOffPath(InstanceError):
    pass


class NotOnePerPath(InstanceError):
    pass


class NotForward(InstanceError):
    pass


class MismatchedSizes(InstanceError):
    pass


class ResourceLimit(RuntimeError):
    pass


class StateSpaceExceeded(ResourceLimit):
    pass


class TooLarge(ResourceLimit):
    pass


class GenerationFailed(ResourceLimit):
    pass

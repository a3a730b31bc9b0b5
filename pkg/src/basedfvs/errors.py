"""Exception hierarchy shared by every module of the package."""


class BasedFvsError(Exception):
    """Root of all errors raised by basedfvs."""


class EmbeddingInconsistent(BasedFvsError):
    """Rotation system is not simple, not symmetric, or not planar."""


class AnchorMissing(BasedFvsError):
    """The outer anchor dart is not an edge of the graph."""


class UnknownVertex(BasedFvsError, LookupError):
    pass


class NotDegreeTwo(BasedFvsError, ValueError):
    pass


class WouldCreateMultiEdge(BasedFvsError, ValueError):
    pass


class NoGoodTriangle(BasedFvsError):
    """No good triangle exists. Carries a serialized dump of the graph."""

    def __init__(self, message: str, dump: str = "") -> None:
        super().__init__(message)
        self.dump = dump


class Claim1Precondition(BasedFvsError):
    """Input falls outside the single-tree case of the constructive search."""


class MultipleComponents(Claim1Precondition):
    pass


class NotAllOuterDegreeThree(Claim1Precondition):
    pass


class NoBaseFace(BasedFvsError):
    pass


class NotBasedPlanar(BasedFvsError):
    pass


class InvariantViolation(BasedFvsError):
    """An internal check failed; ``dump`` holds enough state to reproduce it."""

    def __init__(self, message: str, dump: str = "") -> None:
        super().__init__(message)
        self.dump = dump


class NoStep(BasedFvsError):
    pass


class TooLarge(BasedFvsError):
    """Instance exceeds the exact oracle's vertex or cycle budget."""


class GenerationFailed(BasedFvsError):
    pass


class ParseError(BasedFvsError):
    def __init__(self, message: str, line: int = 0, column: int = 0) -> None:
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column

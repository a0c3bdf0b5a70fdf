class SchurBoundError(Exception):
    pass

class PartitionError(SchurBoundError):
    pass

class NotWeaklyDecreasing(PartitionError):
    pass

class SizeMismatch(PartitionError):
    pass

class PartitionParseError(PartitionError):
    pass

class RankError(SchurBoundError):
    pass

class RankExceeded(RankError):
    pass

class RankMismatch(RankError):
    pass

class RankTooSmall(RankError):
    pass

class NotComparable(SchurBoundError):
    pass

class NotACover(SchurBoundError):
    pass

class NotHomogeneous(SchurBoundError):
    pass

class ArithmeticOverflow(SchurBoundError):
    pass

class ConfigurationError(SchurBoundError):
    pass

class LimitExceeded(SchurBoundError):
    def __init__(self, message: str, found: int = 0):
        super().__init__(message)
        self.found = found

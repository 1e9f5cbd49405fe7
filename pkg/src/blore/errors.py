class WordSyntaxError(ValueError):
    """Raised when word text cannot be parsed or violates alphabet bounds."""


class ResourceLimitError(RuntimeError):
    """Raised when an exhaustive operation would exceed its configured bound.

    ``attempted`` is the size of the space that would have been explored
    (number of block partitions, or number of words in a sweep).
    """

    def __init__(self, message: str, attempted: int | None = None, limit: int | None = None):
        super().__init__(message)
        self.attempted = attempted
        self.limit = limit

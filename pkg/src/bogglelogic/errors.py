"""Exception types shared across the package."""


class BoggleError(Exception):
    """Base class for all bogglelogic errors."""


class InvalidDimensionError(BoggleError):
    """Board side length out of range, or two boards of different sizes compared."""


class InvalidPermutationError(BoggleError):
    """A label relabeling was not a bijection on the board's alphabet."""


class InvalidComparisonError(BoggleError):
    """Two boards cannot be compared (size or label-type mismatch)."""


class InvalidWordError(BoggleError):
    """A word is too short or repeats a label where repeats are not allowed."""


class InvalidPuzzleError(BoggleError):
    """A word list cannot be a puzzle instance for the requested board size."""


class PuzzlePreconditionError(BoggleError):
    """An operation that requires a puzzle was called on a non-puzzle."""


class ResourceLimitError(BoggleError):
    """The requested computation exceeds the configured exhaustive-search budget."""


class PatternError(BoggleError):
    """A word-pattern template could not be parsed."""


class ParseError(BoggleError):
    """A text input failed to parse; carries the 1-based line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)

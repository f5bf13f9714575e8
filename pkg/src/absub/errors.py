"""Exception types shared across the package."""


class AbsubError(Exception):
    """Base class for all library errors."""


class EmptyInput(AbsubError):
    """The input word has length zero."""


class InvalidSymbol(AbsubError):
    """A symbol in the raw input cannot be parsed as a letter."""


class OutOfRange(AbsubError):
    """A position or letter argument lies outside its admissible range."""


class AlphabetMismatch(AbsubError):
    """A query word uses a letter that the indexed word does not contain."""


class NotMasPrefix(AbsubError):
    """Completion was requested for a word that is not a valid prefix."""


class TooLarge(AbsubError):
    """A brute-force oracle was asked to handle an input beyond its guard."""


class DuplicateKey(AbsubError):
    """Insertion of a key that is already present in the set."""


class CapacityExceeded(AbsubError):
    """Insertion would grow the set beyond its fixed capacity."""


class NoCurrentPath(AbsubError):
    """materialize_current was called before the first enumeration step."""

"""Exceptions raised by the nur4 library."""


class Nur4Error(Exception):
    """Base class for every error the library raises on purpose."""


class LengthMismatch(Nur4Error):
    """Two words (or a word and a code) do not share the same length."""


class InvalidType(Nur4Error):
    """A type {k0,k1} outside the enumeration universe (k0, k1 >= 0, k0 + k1 < n)."""


class TooFewCodewords(Nur4Error):
    """Minimum distance asked of a code with fewer than two codewords."""


class NotLinear(Nur4Error):
    """A word set that is not closed under addition."""


class LengthTooLarge(Nur4Error):
    """A length beyond the guard of an exhaustive scan."""


class ParseError(Nur4Error):
    """Malformed textual input (words, generator specs, records)."""


class InvalidParameter(Nur4Error):
    """A run configuration that violates its guards."""

"""Exception hierarchy.

Every domain failure derives from :class:`BooklinkError`, so callers (and the
CLI) can separate domain errors from programming errors with one ``except``.
"""

from __future__ import annotations


class BooklinkError(Exception):
    """Base class for all domain errors raised by the package."""


# -- word format / validity -------------------------------------------------

class WordSyntaxError(BooklinkError):
    """A token in a word file does not match the grammar."""


class InvalidWord(BooklinkError):
    """A word violates one of the structural invariants."""

    def __init__(self, message: str, index: int | None = None):
        super().__init__(message)
        self.index = index


class PositionError(InvalidWord):
    """A generator's position is out of range for the strand count at its slice."""


class ClosureError(InvalidWord):
    """The strand count after the last generator differs from the seam count."""


class ParityError(InvalidWord):
    """Cap and cup counts differ."""


class MultiComponent(BooklinkError):
    """An operation that needs a knot was given a multi-component word."""


class NoSuchSite(BooklinkError):
    pass


# -- invariants ---------------------------------------------------------------

class TooManyCrossings(BooklinkError):
    pass


class NoMatch(BooklinkError):
    """No table entry has the word's Jones polynomial (up to mirror)."""


# -- moves -------------------------------------------------------------------

class MoveError(BooklinkError):
    pass


class NotDestabilizable(MoveError):
    pass


class PatternMismatch(MoveError):
    pass


class NoFreeStrand(MoveError):
    pass


class NotAPlat(MoveError):
    pass


class NotABraid(MoveError):
    pass


class NoBackwardArc(MoveError):
    pass


class InvalidChoice(MoveError):
    pass


class BudgetExceeded(MoveError):
    pass


# -- spectra -----------------------------------------------------------------

class InvalidSpectrum(BooklinkError):
    """Raised with the full list of violations, first one in the message."""

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(str(v) for v in self.violations))

    @property
    def code(self) -> str:
        return self.violations[0].code


class BadIndex(BooklinkError):
    pass


# -- table -------------------------------------------------------------------

class TableError(BooklinkError):
    pass


class SchemaError(TableError):
    pass


class CountMismatch(TableError):
    pass


class InvariantViolation(TableError):
    pass


class MissingWitness(TableError):
    def __init__(self, names):
        self.names = sorted(names, key=_knot_sort_key)
        super().__init__("missing witness for " + ", ".join(self.names))


class NotA12Representative(TableError):
    pass


class IndexMismatch(TableError):
    pass


class IdentityMismatch(TableError):
    pass


class Ambiguous(TableError):
    pass


class RowMismatch(TableError):
    pass


def _knot_sort_key(name: str):
    crossings, _, index = name.partition("_")
    try:
        return (int(crossings), int(index))
    except ValueError:
        return (10**9, name)

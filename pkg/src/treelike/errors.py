"""Exception types shared across the package."""

from __future__ import annotations

from dataclasses import dataclass


class TreelikeError(Exception):
    """Base class for all errors raised by this package."""


class InvalidCharacter(TreelikeError):
    """A border word contains a symbol other than 'S' or 'W'."""


class NonexistentCell(TreelikeError):
    """A point or arrow references a cell outside its diagram."""


class InvalidTableau(TreelikeError):
    """A tableau fails its validity conditions."""


class InvalidPartition(TreelikeError):
    """An arc set violates the in-degree or endpoint rules."""


class InvalidInput(TreelikeError):
    """Input outside a bijection's domain."""


class NotStar(InvalidInput):
    """A column without an up arrow where every column needs one."""


class NotSymmetric(InvalidInput):
    """A tableau that is not fixed by diagonal reflection."""


class NotADestination(TreelikeError):
    """Path requested from a vertex that is not a destination."""


class NotALegalDestination(TreelikeError):
    """Good-path requested from a vertex that is not a legal destination."""


class NotNearlyDisjoint(TreelikeError):
    """Two blocks overlap in a way the block model forbids."""


class CoverageGap(TreelikeError):
    """A block family does not cover the ground set exactly."""


class UnknownPredicate(TreelikeError):
    """Subset predicate id not in the registry."""


class IndexOutOfRange(TreelikeError):
    """Subset predicate index outside its admissible range."""


class UnknownIdentity(TreelikeError):
    """Identity id not in the catalog."""


class OutOfRange(TreelikeError):
    """Closed form or aggregation evaluated outside its stated range."""


class Overflow(TreelikeError):
    """Reserved: exact integer arithmetic exceeded a configured limit.

    Python integers are arbitrary precision, so coefficient arithmetic here
    is always exact and never wraps; this type exists so callers can still
    catch a dedicated error class if a limit is ever introduced.
    """


class SizeTooLargeForOracle(TreelikeError):
    """Brute-force generation requested beyond its configured bound."""


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of a validator: ``ok`` plus the violated conditions."""

    ok: bool
    problems: tuple[str, ...] = ()

    def __bool__(self) -> bool:
        return self.ok

"""Exception types shared across weakdeg modules."""
from __future__ import annotations


class WeakdegError(Exception):
    """Base class for all weakdeg errors."""


# --- plane-graph construction -------------------------------------------------

class AsymmetricAdjacency(WeakdegError):
    """A rotation lists w at v without the reciprocal entry at w."""


class Loop(WeakdegError):
    """A vertex appears in its own rotation."""


class DuplicateNeighbor(WeakdegError):
    """A neighbor appears more than once in a rotation."""


class UnknownVertex(WeakdegError):
    """A vertex id is not present in the graph."""


class OrientationError(WeakdegError):
    """A face list cannot be oriented into a coherent rotation system."""


class NotPlane(WeakdegError):
    """The rotation system does not embed the graph in the sphere."""


class Disconnected(WeakdegError):
    """The operation requires a connected graph."""


# --- cycle and face analysis --------------------------------------------------

class NotACycle(WeakdegError):
    """The given vertex sequence is not a cycle of the graph."""


class HypothesisNotMet(WeakdegError):
    """The graph fails a structural hypothesis the operation relies on."""


class UnknownElement(WeakdegError):
    """No vertex or face with the requested id."""


# --- the deletion game --------------------------------------------------------

class IllegalMove(WeakdegError):
    """A game operation violates its legality condition."""


class NotAdjacent(IllegalMove):
    """DeleteSave applied to a non-adjacent pair."""


# --- reductions and certificates ----------------------------------------------

class DegreeTooHigh(WeakdegError):
    """Degree-2 extension applied to a vertex of degree three or more."""


class BadSubcertificate(WeakdegError):
    """A sub-certificate does not remove exactly the smaller graph."""


class ReplayFailed(WeakdegError):
    """A certificate was rejected during replay."""


class BothChordsPresent(WeakdegError):
    """Both optional chords of a pattern occur at once."""


class NotClassMember(WeakdegError):
    """The graph is outside the graph class the operation requires."""


class TheoremViolated(WeakdegError):
    """No reduction applies to a graph that should admit one."""


# --- corpus and formats -------------------------------------------------------

class UnknownName(WeakdegError):
    """No named constructor with the requested name."""


class BadParam(WeakdegError):
    """A constructor parameter is out of range."""


class ParseError(WeakdegError):
    """Malformed input; `offset` locates the failure (line or byte)."""

    def __init__(self, message: str, offset: int | None = None):
        super().__init__(message if offset is None else f"{message} (offset {offset})")
        self.offset = offset


class UnsupportedHeader(ParseError):
    """The stream announces a format this reader does not handle."""

"""Exception types shared across the toolkit."""

from __future__ import annotations


class CapacityError(ValueError):
    """An operation was asked to enumerate more states than its resource guard allows."""


class UnsupportedRuleError(ValueError):
    """The requested rule (or rule/size/boundary combination) is outside the supported set."""


class NotReversibleError(ValueError):
    """Circuit synthesis was requested for an irreversible automaton.

    When the state space is small enough to search, ``witness`` holds a pair of
    distinct configurations that step to the same successor.
    """

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class CircuitParseError(ValueError):
    """Serialized circuit text could not be parsed.

    ``location`` is a JSON-path-like string pointing at the offending element.
    """

    def __init__(self, message: str, location: str = "$"):
        super().__init__(f"{location}: {message}")
        self.location = location

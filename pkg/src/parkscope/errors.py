"""Shared exception types.

Error taxonomy used across the package:

* ``ValueError`` -- malformed arguments (wrong sizes, ids that do not
  resolve, words that are not permutations).  Raised eagerly.
* ``NonRealizableError`` -- structurally well-formed input that cannot be
  completed to the geometric object it claims to describe (negative or
  fractional genus, impossible node signature, failed involution search).
* ``ResourceLimitError`` -- the request exceeds the configured search
  bounds; nothing was computed.
* ``InconsistencyError`` -- an internal invariant failed.  Reaching this
  from public entry points on validated input is a bug.
"""

from __future__ import annotations


class NonRealizableError(Exception):
    """Input is valid data but describes no realizable surface."""


class ResourceLimitError(Exception):
    """Requested computation exceeds the configured bounds."""


class InconsistencyError(Exception):
    """An internal cross-check failed; indicates a bug, not bad input."""

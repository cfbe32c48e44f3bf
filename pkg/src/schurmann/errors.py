"""Shared exception types."""

from __future__ import annotations


class RelationViolation(Exception):
    """Raised when a candidate object fails relation validation.

    violations is a list of (relation label, offending value) pairs; the
    value is whatever the evaluation produced (matrix, vector or scalar).
    """

    def __init__(self, what: str, violations: list):
        self.what = what
        self.violations = violations
        lines = ", ".join(lbl for lbl, _ in violations[:6])
        more = "" if len(violations) <= 6 else f" (+{len(violations) - 6} more)"
        super().__init__(f"{what}: nonzero on relations {lines}{more}")


class InputError(ValueError):
    """Malformed user input (JSON payloads, parameters)."""


class ObstructionError(Exception):
    """Raised when a 2-cocycle has a nonzero defect, so no primitive exists.

    Carries the defect matrix that witnesses the obstruction.
    """

    def __init__(self, flavor: str, defect):
        self.flavor = flavor
        self.defect = defect
        super().__init__(f"nonzero {flavor} defect, the 2-cocycle is not a coboundary")

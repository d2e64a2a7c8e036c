"""Exception hierarchy shared by every checker.

Two families matter for the CLI exit-code contract:

* ``CheckFailed`` -- an exhaustive check ran and found the claimed law or
  universal property verifiably false (exit code 1).  Instances carry the
  complete violation list, sorted by canonical key, so reports are
  schedule-independent.
* ``InputError`` -- the inputs are malformed, incompatible, or exceed a
  size cap, so the check could not even run (exit code 2).
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Violation:
    """One counterexample found by an exhaustive check."""

    kind: str
    key: tuple
    message: str


class EngineError(Exception):
    pass


class InputError(EngineError):
    pass


class CheckFailed(EngineError):
    def __init__(self, message: str, violations: tuple[Violation, ...] = ()):
        super().__init__(message)
        self.violations = tuple(violations)


def fail(cls: type[CheckFailed], kind: str, violations) -> CheckFailed:
    """Build a CheckFailed subclass instance from a sorted violation list."""
    violations = tuple(sorted(violations, key=lambda v: v.key))
    head = violations[0].message if violations else kind
    more = f" (+{len(violations) - 1} more)" if len(violations) > 1 else ""
    return cls(f"{kind}: {head}{more}", violations)


# --- poset checks ---

class ReflexivityViolation(CheckFailed):
    pass


class TransitivityViolation(CheckFailed):
    pass


class AntisymmetryViolation(CheckFailed):
    pass


class MonotonicityViolation(CheckFailed):
    pass


class AdjointnessViolation(CheckFailed):
    pass


# --- category checks ---

class CompositionGap(CheckFailed):
    pass


class EndpointMismatch(CheckFailed):
    pass


class AssociativityViolation(CheckFailed):
    pass


class IdentityViolation(CheckFailed):
    pass


class InverseViolation(CheckFailed):
    pass


class EndpointViolation(CheckFailed):
    pass


class CompositionViolation(CheckFailed):
    pass


class IsoConstructionFailure(CheckFailed):
    pass


# --- het bimodule checks ---

class UnitActionViolation(CheckFailed):
    pass


class ActionAssociativityViolation(CheckFailed):
    pass


class MixedAssociativityViolation(CheckFailed):
    pass


class DanglingHet(CheckFailed):
    pass


class FactorizationMissing(CheckFailed):
    pass


class FactorizationNotUnique(CheckFailed):
    pass


class BijectionFailure(CheckFailed):
    pass


# --- malformed / incompatible inputs ---

class UnknownLabel(InputError):
    pass


class TotalityViolation(InputError):
    pass


class DomainMismatch(InputError):
    pass


class BimoduleMismatch(InputError):
    pass


class SizeCapExceeded(InputError):
    pass


class DimensionMismatch(InputError):
    pass


class PrimeMismatch(InputError):
    pass


class UnknownGenerator(InputError):
    pass


class UnsupportedWitness(InputError):
    pass


class SchemaError(InputError):
    pass


class IoError(InputError):
    pass

"""Exception hierarchy.

Three families matter for the CLI exit-code contract:

* usage problems                     -> exit code 2
* mathematical rejections            -> exit code 1
* internal inconsistencies (a proven
  statement failed to verify; always
  a bug or a bad input slipping past
  the preconditions)                 -> exit code 3
"""

from __future__ import annotations


class FusionError(Exception):
    """Base class for all package errors."""

    exit_code = 1

    @property
    def code(self) -> str:
        return type(self).__name__

    def payload(self) -> dict:
        return {"code": self.code, "message": str(self)}


class UsageError(FusionError):
    exit_code = 2


class SuiteUnknown(UsageError):
    pass


class InternalInconsistency(FusionError):
    """A theorem-backed assertion failed."""

    exit_code = 3


# -- construction / guardrail errors ------------------------------------

class ClosureTooLarge(FusionError):
    pass


class NotBijection(FusionError):
    pass


class GroupTooLarge(FusionError):
    pass


class GuardrailExceeded(FusionError):
    pass


class NotSubgroup(FusionError):
    pass


class NotPGroup(FusionError):
    pass


class NotAbelian(FusionError):
    pass


class NotSylow(FusionError):
    pass


class NotSubsystem(FusionError):
    pass


class NotSaturated(FusionError):
    pass


# -- mathematical rejections with witnesses ------------------------------

class RejectionError(FusionError):
    """Rejection carrying a machine-readable witness."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness

    def payload(self) -> dict:
        data = super().payload()
        if self.witness is not None:
            data["witness"] = _jsonable(self.witness)
        return data


class NotFusionPreserving(RejectionError):
    pass


class NotCommuting(RejectionError):
    pass


class NotSummable(RejectionError):
    pass


class NotNormal(RejectionError):
    pass


class HypothesisFailed(RejectionError):
    pass


class GenerationMismatch(InternalInconsistency):
    pass


def _jsonable(obj):
    if isinstance(obj, (list, tuple)):
        return [_jsonable(x) for x in obj]
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (int, str, bool)) or obj is None:
        return obj
    return repr(obj)

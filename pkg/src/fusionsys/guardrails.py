"""Configurable size limits for the exhaustive algorithms.

Every enumeration in the package is exact, so the limits below are what
keep worst cases tractable.  ``FUSIONSYS_GUARDRAIL=<n>`` overrides all of
them with a single value.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, replace


@dataclass(frozen=True)
class Guardrails:
    closure_limit: int = 20000      # max group order for generator closure
    subgroup_limit: int = 512       # max group order for subgroup enumeration
    hom_search_limit: int = 2_000_000   # max backtracking candidates per hom search
    table_limit: int = 500_000      # max stored fusion-system morphisms
    omega_limit: int = 10000        # max closure size for automorphism contexts

    def scaled_to(self, value: int) -> "Guardrails":
        return replace(
            self,
            closure_limit=value,
            subgroup_limit=value,
            hom_search_limit=max(value, self.hom_search_limit),
            table_limit=max(value, self.table_limit),
            omega_limit=value,
        )


def from_env() -> Guardrails:
    raw = os.environ.get("FUSIONSYS_GUARDRAIL")
    base = Guardrails()
    if not raw:
        return base
    try:
        value = int(raw)
    except ValueError:
        return base
    if value <= 0:
        return base
    return base.scaled_to(value)


_ACTIVE = from_env()


def active() -> Guardrails:
    return _ACTIVE


def set_active(g: Guardrails) -> None:
    global _ACTIVE
    _ACTIVE = g

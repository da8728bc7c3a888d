"""Two-tuple conflict models and the threshold verdict.

Each model pairs the conflict coefficient K with a distance. The liu
model uses the pignistic betting distance, which cannot tell an evenly
split assignment from total ignorance; the modified model swaps in the
Jaccard-weighted evidence distance to fix that; the generalized model uses
the open-world coefficient and distance so incomplete frames are covered
too, and it degenerates to the modified model on classical inputs.

Two pieces of evidence are declared in conflict only when both components
strictly exceed the caller-chosen tolerance. No default tolerance exists:
a universally meaningful threshold does not, so callers must pick one.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .combination import conflict_coefficient
from .distances import gbpa_distance
from .errors import DomainError
from .frames import Gbpa, _require_same_frame
from .transforms import dif_betp


class ConflictModel(str, Enum):
    LIU = "liu"
    MODIFIED = "modified"
    GENERALIZED = "generalized"


@dataclass(frozen=True)
class ConflictMeasure:
    """A ⟨coefficient, distance⟩ pair produced by one of the three models."""

    coefficient: float
    distance: float
    model: ConflictModel


@dataclass(frozen=True)
class ConflictVerdict:
    in_conflict: bool
    epsilon: float


def _require_classical(model: ConflictModel, *bodies: Gbpa) -> None:
    for m in bodies:
        if not m.is_classical:
            raise DomainError(
                f"the {model.value} model needs classical inputs (no empty-set mass); "
                "use the generalized model for open-world evidence"
            )


def liu_cf(m1: Gbpa, m2: Gbpa) -> ConflictMeasure:
    """⟨K, pignistic betting distance⟩ for two classical assignments."""
    _require_same_frame(m1, m2)
    _require_classical(ConflictModel.LIU, m1, m2)
    return ConflictMeasure(conflict_coefficient(m1, m2), dif_betp(m1, m2), ConflictModel.LIU)


def modified_cf(m1: Gbpa, m2: Gbpa) -> ConflictMeasure:
    """⟨K, evidence distance⟩ for two classical assignments."""
    _require_same_frame(m1, m2)
    _require_classical(ConflictModel.MODIFIED, m1, m2)
    return ConflictMeasure(
        conflict_coefficient(m1, m2), gbpa_distance(m1, m2), ConflictModel.MODIFIED
    )


def generalized_cf(m1: Gbpa, m2: Gbpa) -> ConflictMeasure:
    """⟨K, evidence distance⟩ with open-world semantics for both components."""
    _require_same_frame(m1, m2)
    return ConflictMeasure(
        conflict_coefficient(m1, m2), gbpa_distance(m1, m2), ConflictModel.GENERALIZED
    )


def judge_conflict(cf: ConflictMeasure, epsilon: float) -> ConflictVerdict:
    """Conflict holds only when both components strictly exceed ``epsilon``."""
    if not 0.0 <= epsilon <= 1.0:
        raise DomainError(f"epsilon must lie in [0, 1], got {epsilon!r}")
    return ConflictVerdict(cf.coefficient > epsilon and cf.distance > epsilon, epsilon)

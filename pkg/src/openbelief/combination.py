"""Belief and plausibility evaluation, plus the two combination rules.

Belief of a non-empty set sums the mass of its non-empty subsets; mass on
the empty set never supports a proposition inside the frame, so it is
excluded even though the empty set is a subset of everything. Belief and
plausibility of the empty set itself both equal its own mass.

Two conjunctive combination rules are provided. Dempster's rule requires
closed-world inputs and renormalises away the conflict ``K``. The
generalized rule (GCR) accepts empty-set mass: the fused empty-set mass is
the product of the inputs' empty-set masses, the remaining mass is spread
over the non-empty intersections, and total conflict (``K`` = 1) yields
the assignment putting everything on the empty set instead of failing.

All sums use ``math.fsum``, which is exactly rounded; combination is
therefore bit-for-bit commutative.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import fsum
from typing import Iterable

from .errors import DomainError
from .frames import Gbpa, Subset, _require_same_frame

#: ``1 - K`` at or below this is treated as total conflict (K = 1).
TOTAL_CONFLICT_TOLERANCE = 1e-12


class Rule(str, Enum):
    DEMPSTER = "dempster"
    GCR = "gcr"


@dataclass(frozen=True)
class CombinationOutcome:
    """A fused mass assignment together with the conflict of the final step."""

    result: Gbpa
    conflict_k: float
    rule: Rule


def gbel(m: Gbpa, subset: Subset) -> float:
    """Belief in ``subset``: total mass of its non-empty subsets.

    For the empty set this is the empty-set mass itself.
    """
    _require_same_frame(m, subset)
    if subset.is_empty:
        return m.empty_mass
    target = subset.bits
    return fsum(v for bits, v in m._masses.items() if bits and bits & ~target == 0)


def gpl(m: Gbpa, subset: Subset) -> float:
    """Plausibility of ``subset``: total mass not contradicting it.

    For the empty set this is the empty-set mass itself.
    """
    _require_same_frame(m, subset)
    if subset.is_empty:
        return m.empty_mass
    target = subset.bits
    return fsum(v for bits, v in m._masses.items() if bits & target)


def conflict_coefficient(m1: Gbpa, m2: Gbpa) -> float:
    """Conflict ``K``: total product mass on disjoint focal pairs.

    Pairs where either focal set is empty count as disjoint, so the
    coefficient covers open-world assignments; on classical inputs it is
    the familiar closed-world coefficient.
    """
    _require_same_frame(m1, m2)
    k = fsum(
        v1 * v2
        for b1, v1 in m1._masses.items()
        for b2, v2 in m2._masses.items()
        if b1 & b2 == 0
    )
    return min(k, 1.0)


def _product_buckets(m1: Gbpa, m2: Gbpa) -> dict[int, list[float]]:
    """Products of mass pairs, grouped by the bit mask of their intersection."""
    buckets: dict[int, list[float]] = {}
    for b1, v1 in m1._masses.items():
        for b2, v2 in m2._masses.items():
            buckets.setdefault(b1 & b2, []).append(v1 * v2)
    return buckets


def dempster_combine(m1: Gbpa, m2: Gbpa) -> CombinationOutcome:
    """Dempster's rule: conjunctive combination renormalised by 1 - K.

    Defined only for classical inputs with ``K`` < 1; open-world inputs
    must go through :func:`gcr_combine`.
    """
    _require_same_frame(m1, m2)
    if not (m1.is_classical and m2.is_classical):
        raise DomainError(
            "Dempster's rule needs classical inputs (no empty-set mass); "
            "use the GCR for open-world mass functions"
        )
    buckets = _product_buckets(m1, m2)
    k = min(fsum(buckets.pop(0, [])), 1.0)
    if 1.0 - k <= TOTAL_CONFLICT_TOLERANCE:
        raise DomainError("total conflict (K = 1): Dempster's rule is undefined")
    frame = m1.frame
    masses = {
        Subset(frame, bits): fsum(values) / (1.0 - k)
        for bits, values in buckets.items()
    }
    return CombinationOutcome(Gbpa(frame, masses), k, Rule.DEMPSTER)


def gcr_combine(m1: Gbpa, m2: Gbpa) -> CombinationOutcome:
    """Generalized combination rule, defined for any same-frame pair.

    Under total conflict the fused assignment is exactly {empty set: 1}.
    Otherwise the fused empty-set mass is the product of the inputs'
    empty-set masses and each non-empty intersection receives its product
    mass scaled by (1 - fused empty mass) / (1 - K). On classical inputs
    this reduces to Dempster's rule, bit for bit.
    """
    _require_same_frame(m1, m2)
    frame = m1.frame
    buckets = _product_buckets(m1, m2)
    k = min(fsum(buckets.pop(0, [])), 1.0)
    if 1.0 - k <= TOTAL_CONFLICT_TOLERANCE:
        return CombinationOutcome(Gbpa(frame, {frame.empty: 1.0}), k, Rule.GCR)
    empty_mass = m1.empty_mass * m2.empty_mass
    masses: dict[Subset, float] = {
        Subset(frame, bits): fsum(values) * (1.0 - empty_mass) / (1.0 - k)
        for bits, values in buckets.items()
    }
    if empty_mass > 0.0:
        masses[frame.empty] = empty_mass
    return CombinationOutcome(Gbpa(frame, masses), k, Rule.GCR)


def combine_sequence(rule: Rule | str, bodies: Iterable[Gbpa]) -> CombinationOutcome:
    """Left-fold the chosen rule over two or more mass assignments.

    Both rules are commutative and associative (short of a total-conflict
    step), so the fold order does not change the result; the reported
    conflict is the one of the final fold step.
    """
    rule = Rule(rule)
    bodies = tuple(bodies)
    if len(bodies) < 2:
        raise DomainError("need at least two mass functions to combine")
    pairwise = dempster_combine if rule is Rule.DEMPSTER else gcr_combine
    outcome = pairwise(bodies[0], bodies[1])
    for body in bodies[2:]:
        outcome = pairwise(outcome.result, body)
    return outcome

"""Jaccard-weighted evidence distance between mass assignments.

The distance is the quadratic form sqrt(1/2 (m1 - m2)^T D (m1 - m2)) with
D(A, B) = |A ∩ B| / |A ∪ B|. The full D matrix over all 2^N subsets is
never materialised: the quadratic form expands into inner products that
only visit pairs of focal sets, which keeps the evaluation exact and fast
even on large frames.

The Jaccard formula is 0/0 for two empty sets. The empty set behaves as
one extra "unknown" hypothesis, so D(empty, empty) defaults to 1 (which
also keeps identical assignments at distance zero) and D(empty, B) = 0 for
non-empty B. The alternative convention D(empty, empty) = 0 is available
through the ``empty_empty`` keyword for sensitivity checks.
"""

from __future__ import annotations

from math import fsum, sqrt

from .frames import Gbpa, Subset, _require_same_frame

#: Similarity assigned to the empty-set/empty-set pair.
EMPTY_EMPTY_SIMILARITY = 1.0

#: Squared distances this far below zero are floating-point cancellation noise.
_NEGATIVE_CLAMP = 1e-12


def jaccard_index(a: Subset, b: Subset, *, empty_empty: float = EMPTY_EMPTY_SIMILARITY) -> float:
    """|A ∩ B| / |A ∪ B|, with the documented convention for two empty sets."""
    _require_same_frame(a, b)
    union = a.bits | b.bits
    if union == 0:
        return empty_empty
    return (a.bits & b.bits).bit_count() / union.bit_count()


def _inner_product(m1: Gbpa, m2: Gbpa, empty_empty: float) -> float:
    terms = []
    for b1, v1 in m1._masses.items():
        for b2, v2 in m2._masses.items():
            union = b1 | b2
            if union == 0:
                weight = empty_empty
            else:
                inter = b1 & b2
                if inter == 0:
                    continue
                weight = inter.bit_count() / union.bit_count()
            terms.append(v1 * v2 * weight)
    return fsum(terms)


def gbpa_distance(m1: Gbpa, m2: Gbpa, *, empty_empty: float = EMPTY_EMPTY_SIMILARITY) -> float:
    """Jaccard-weighted distance between two mass assignments, in [0, 1].

    Works uniformly for classical and open-world assignments; on classical
    inputs the empty-set row of D is never touched, so the value coincides
    with the classical evidence distance.
    """
    _require_same_frame(m1, m2)
    n1 = _inner_product(m1, m1, empty_empty)
    n2 = _inner_product(m2, m2, empty_empty)
    ip = _inner_product(m1, m2, empty_empty)
    squared = 0.5 * fsum([n1, n2, -ip, -ip])
    if squared < 0.0:
        if squared < -_NEGATIVE_CLAMP:
            raise ArithmeticError(f"squared distance {squared!r} is not a rounding artefact")
        squared = 0.0
    return sqrt(squared)

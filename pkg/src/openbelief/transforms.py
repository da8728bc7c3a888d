"""Pignistic probability transform and the pignistic betting distance."""

from __future__ import annotations

from math import fsum

from .errors import DomainError
from .frames import Gbpa, ProbDist, _require_same_frame


def betp(m: Gbpa) -> ProbDist:
    """Pignistic transform: split each focal mass equally over its members.

    Empty-set mass is discounted away by the 1 / (1 - m(empty)) factor, so
    the output is a proper probability distribution. Undefined when all
    mass sits on the empty set.
    """
    denom = 1.0 - m.empty_mass
    if denom <= 0.0:
        raise DomainError(
            "pignistic transform is undefined when the empty set carries all mass"
        )
    shares: list[list[float]] = [[] for _ in range(m.frame.size)]
    for bits, mass in m._masses.items():
        if bits == 0:
            continue
        share = mass / bits.bit_count() / denom
        while bits:
            low = bits & -bits
            shares[low.bit_length() - 1].append(share)
            bits ^= low
    return ProbDist(m.frame, (fsum(s) for s in shares))


def dif_betp(m1: Gbpa, m2: Gbpa) -> float:
    """Pignistic betting distance: largest subset probability gap.

    Computed in total-variation form: for probability measures the maximum
    of |BetP1(A) - BetP2(A)| over every subset A is attained by the set of
    all positive pointwise gaps (or its complement), so summing each side
    costs O(N) instead of O(2^N). Taking the max of the two one-sided sums
    keeps the value exactly symmetric in floating point.
    """
    _require_same_frame(m1, m2)
    p1 = betp(m1)
    p2 = betp(m2)
    up = fsum(max(0.0, a - b) for a, b in zip(p1.probs, p2.probs))
    down = fsum(max(0.0, b - a) for a, b in zip(p1.probs, p2.probs))
    return max(up, down)

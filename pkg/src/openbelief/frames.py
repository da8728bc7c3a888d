"""Frames of discernment, bit-coded subsets, and mass assignments.

A :class:`Frame` fixes an ordered set of hypothesis labels. Subsets of the
frame are held as membership bit masks over one machine word, so set
algebra is O(1) and a subset is a cheap, hashable value. A :class:`Gbpa`
assigns mass to subsets; unlike a classical basic probability assignment,
the empty set may carry mass, which models hypotheses outside the known
frame (an open world). A classical assignment is simply the special case
with no empty-set mass.
"""

from __future__ import annotations

from math import fsum, isfinite
from typing import Iterable, Iterator, Mapping, Union

from .errors import FrameError, MassError

#: Hard cap on frame size so subsets fit in one 64-bit word.
MAX_FRAME_SIZE = 64

#: Masses of a valid assignment must total 1 within this tolerance.
MASS_SUM_TOLERANCE = 1e-9

#: Probabilities this close outside [0, 1] are clamped, anything worse is rejected.
_PROB_CLAMP = 1e-9


class Frame:
    """An ordered frame of discernment with at most 64 labelled elements.

    Label positions are fixed at construction; two frames are equal exactly
    when they list the same labels in the same order.
    """

    __slots__ = ("_labels", "_index")

    def __init__(self, labels: Iterable[str]):
        labels = tuple(labels)
        if not labels:
            raise FrameError("a frame needs at least one element")
        if len(labels) > MAX_FRAME_SIZE:
            raise FrameError(
                f"frame has {len(labels)} elements; the limit is {MAX_FRAME_SIZE}"
            )
        index: dict[str, int] = {}
        for position, label in enumerate(labels):
            if not isinstance(label, str) or not label:
                raise FrameError(f"label at position {position} is not a non-empty string")
            if label in index:
                raise FrameError(f"duplicate label {label!r}")
            index[label] = position
        self._labels = labels
        self._index = index

    @property
    def labels(self) -> tuple[str, ...]:
        return self._labels

    @property
    def size(self) -> int:
        return len(self._labels)

    def index(self, label: str) -> int:
        """Stable position of ``label`` within the frame."""
        try:
            return self._index[label]
        except KeyError:
            raise FrameError(f"unknown label {label!r}") from None

    def subset(self, members: Iterable[str] = ()) -> "Subset":
        """Build the subset holding exactly ``members`` (empty iterable = empty set)."""
        bits = 0
        for label in members:
            bits |= 1 << self.index(label)
        return Subset(self, bits)

    def singleton(self, label: str) -> "Subset":
        return Subset(self, 1 << self.index(label))

    @property
    def empty(self) -> "Subset":
        return Subset(self, 0)

    @property
    def full(self) -> "Subset":
        return Subset(self, (1 << self.size) - 1)

    def __contains__(self, label: object) -> bool:
        return label in self._index

    def __len__(self) -> int:
        return len(self._labels)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Frame) and self._labels == other._labels

    def __hash__(self) -> int:
        return hash(self._labels)

    def __repr__(self) -> str:
        return f"Frame({list(self._labels)!r})"


class Subset:
    """A subset of a frame, stored as a membership bit mask.

    The all-zero mask is the empty set, which in an open world doubles as
    the focal element for "something outside the frame".
    """

    __slots__ = ("_frame", "_bits")

    def __init__(self, frame: Frame, bits: int):
        if bits < 0 or bits >> frame.size:
            raise FrameError(f"bit mask {bits:#x} does not fit a frame of size {frame.size}")
        self._frame = frame
        self._bits = bits

    @property
    def frame(self) -> Frame:
        return self._frame

    @property
    def bits(self) -> int:
        return self._bits

    @property
    def cardinality(self) -> int:
        return self._bits.bit_count()

    @property
    def is_empty(self) -> bool:
        return self._bits == 0

    def members(self) -> tuple[str, ...]:
        """Labels of this subset, in frame order."""
        return tuple(
            label for i, label in enumerate(self._frame.labels) if self._bits >> i & 1
        )

    def issubset(self, other: "Subset") -> bool:
        _require_same_frame(self, other)
        return self._bits & ~other._bits == 0

    def __and__(self, other: "Subset") -> "Subset":
        _require_same_frame(self, other)
        return Subset(self._frame, self._bits & other._bits)

    def __or__(self, other: "Subset") -> "Subset":
        _require_same_frame(self, other)
        return Subset(self._frame, self._bits | other._bits)

    def __contains__(self, label: object) -> bool:
        return isinstance(label, str) and label in self._frame and (
            self._bits >> self._frame.index(label) & 1 == 1
        )

    def __len__(self) -> int:
        return self.cardinality

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Subset)
            and self._frame == other._frame
            and self._bits == other._bits
        )

    def __hash__(self) -> int:
        return hash((self._frame, self._bits))

    def __repr__(self) -> str:
        return f"Subset({{{', '.join(self.members())}}})"


def _require_same_frame(a, b) -> None:
    if a.frame != b.frame:
        raise FrameError("operands belong to different frames")


MassAssignments = Union[Mapping["Subset", float], Iterable[tuple["Subset", float]]]


class Gbpa:
    """A mass assignment over frame subsets; the empty set may carry mass.

    Invariants enforced at construction: every stored mass is finite and
    strictly positive (zero entries are dropped), no focal set repeats, all
    focal sets belong to the given frame, and the masses total 1 within
    ``MASS_SUM_TOLERANCE``. Out-of-tolerance input is rejected, never
    silently rescaled; rescaling is an explicit opt-in of the document
    layer. Instances are immutable.
    """

    __slots__ = ("_frame", "_masses")

    def __init__(self, frame: Frame, assignments: MassAssignments):
        items = assignments.items() if isinstance(assignments, Mapping) else assignments
        by_bits: dict[int, float] = {}
        for subset, mass in items:
            if not isinstance(subset, Subset):
                raise MassError(f"focal set must be a Subset, got {type(subset).__name__}")
            if subset.frame != frame:
                raise FrameError(f"focal set {subset!r} belongs to a different frame")
            if isinstance(mass, bool) or not isinstance(mass, (int, float)):
                raise MassError(f"mass for {subset!r} must be a number, got {mass!r}")
            mass = float(mass)
            if not isfinite(mass):
                raise MassError(f"mass for {subset!r} must be finite, got {mass!r}")
            if mass < 0.0:
                raise MassError(f"negative mass {mass!r} on {subset!r}")
            if subset.bits in by_bits:
                raise MassError(f"duplicate focal set {subset!r}")
            by_bits[subset.bits] = mass
        total = fsum(by_bits.values())
        if abs(total - 1.0) > MASS_SUM_TOLERANCE:
            raise MassError(
                f"masses sum to {total!r}, not 1 (tolerance {MASS_SUM_TOLERANCE:g})"
            )
        self._frame = frame
        self._masses = {bits: m for bits, m in sorted(by_bits.items()) if m > 0.0}

    @property
    def frame(self) -> Frame:
        return self._frame

    @property
    def empty_mass(self) -> float:
        """Mass on the empty set; 0 for a classical assignment."""
        return self._masses.get(0, 0.0)

    @property
    def is_classical(self) -> bool:
        return 0 not in self._masses

    def mass(self, subset: Subset) -> float:
        _require_same_frame(self, subset)
        return self._masses.get(subset.bits, 0.0)

    def items(self) -> Iterator[tuple[Subset, float]]:
        """(focal set, mass) pairs in ascending bit-mask order."""
        for bits, mass in self._masses.items():
            yield Subset(self._frame, bits), mass

    def focal_sets(self) -> tuple[Subset, ...]:
        return tuple(Subset(self._frame, bits) for bits in self._masses)

    def __len__(self) -> int:
        return len(self._masses)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Gbpa)
            and self._frame == other._frame
            and self._masses == other._masses
        )

    def __repr__(self) -> str:
        body = ", ".join(
            f"{{{','.join(s.members())}}}: {m:g}" for s, m in self.items()
        )
        return f"Gbpa({body})"


class ProbDist:
    """A probability distribution over the singletons of a frame."""

    __slots__ = ("_frame", "_probs")

    def __init__(self, frame: Frame, probs: Iterable[float]):
        values = [float(p) for p in probs]
        if len(values) != frame.size:
            raise MassError(
                f"expected {frame.size} probabilities, got {len(values)}"
            )
        clamped = []
        for label, p in zip(frame.labels, values):
            if not isfinite(p) or p < -_PROB_CLAMP or p > 1.0 + _PROB_CLAMP:
                raise MassError(f"probability {p!r} for {label!r} is outside [0, 1]")
            clamped.append(min(max(p, 0.0), 1.0))
        total = fsum(clamped)
        if abs(total - 1.0) > MASS_SUM_TOLERANCE:
            raise MassError(f"probabilities sum to {total!r}, not 1")
        self._frame = frame
        self._probs = tuple(clamped)

    @property
    def frame(self) -> Frame:
        return self._frame

    @property
    def probs(self) -> tuple[float, ...]:
        return self._probs

    def prob(self, label: str) -> float:
        return self._probs[self._frame.index(label)]

    def as_mapping(self) -> dict[str, float]:
        return dict(zip(self._frame.labels, self._probs))

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, ProbDist)
            and self._frame == other._frame
            and self._probs == other._probs
        )

    def __repr__(self) -> str:
        body = ", ".join(f"{l}: {p:g}" for l, p in self.as_mapping().items())
        return f"ProbDist({body})"


def make_frame(labels: Iterable[str]) -> Frame:
    """Build a frame from distinct, non-empty labels (at most 64)."""
    return Frame(labels)


def make_subset(frame: Frame, members: Iterable[str]) -> Subset:
    """Build the subset of ``frame`` holding exactly ``members``."""
    return frame.subset(members)


def make_gbpa(frame: Frame, assignments: MassAssignments) -> Gbpa:
    """Validate and build a mass assignment (see :class:`Gbpa`)."""
    return Gbpa(frame, assignments)


def is_classical(m: Gbpa) -> bool:
    """True when no mass sits on the empty set (closed-world assignment)."""
    return m.is_classical


class SetAlgebra:
    """Intersection, union, and cardinalities of one subset pair."""

    __slots__ = ("intersection", "union", "card_a", "card_b")

    def __init__(self, intersection: Subset, union: Subset, card_a: int, card_b: int):
        self.intersection = intersection
        self.union = union
        self.card_a = card_a
        self.card_b = card_b


def set_algebra(a: Subset, b: Subset) -> SetAlgebra:
    """Intersection, union and cardinalities of two same-frame subsets."""
    _require_same_frame(a, b)
    return SetAlgebra(a & b, a | b, a.cardinality, b.cardinality)

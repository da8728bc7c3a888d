"""Shared fixtures: frames, worked-example bodies, and random generators."""

from __future__ import annotations

import random
from math import fsum

import pytest
from hypothesis import settings

from openbelief import Frame, Gbpa, Subset, make_gbpa

settings.register_profile("suite", deadline=None, max_examples=60)
settings.load_profile("suite")


def build_gbpa(frame: Frame, mapping: dict[tuple[str, ...], float]) -> Gbpa:
    """Build a mass assignment from {(labels...): mass}; () is the empty set."""
    return make_gbpa(frame, {frame.subset(labels): mass for labels, mass in mapping.items()})


def random_gbpa(
    rng: random.Random,
    frame: Frame,
    *,
    allow_empty_set: bool = True,
    ensure_full_set: bool = False,
    max_focal: int = 6,
) -> Gbpa:
    """A random valid assignment with 1..max_focal focal sets.

    ``ensure_full_set`` keeps mass on the whole frame, which guarantees
    K < 1 in any pairwise combination (the full-set/full-set pair always
    intersects).
    """
    n_subsets = 1 << frame.size
    lo = 0 if allow_empty_set else 1
    count = rng.randint(1, min(max_focal, n_subsets - lo))
    bits = rng.sample(range(lo, n_subsets), count)
    if ensure_full_set and n_subsets - 1 not in bits:
        bits[0] = n_subsets - 1
    weights = [rng.uniform(0.05, 1.0) for _ in bits]
    total = fsum(weights)
    return Gbpa(frame, {Subset(frame, b): w / total for b, w in zip(bits, weights)})


@pytest.fixture
def abc() -> Frame:
    return Frame(["a", "b", "c"])


@pytest.fixture
def gb():
    return build_gbpa


@pytest.fixture
def example1(abc) -> Gbpa:
    """Closed-world body: 0.6 on {a}, 0.2 on {c}, 0.2 on {b,c}."""
    return build_gbpa(abc, {("a",): 0.6, ("c",): 0.2, ("b", "c"): 0.2})


@pytest.fixture
def example2(abc) -> Gbpa:
    """Open-world body: 0.6 on {a}, 0.1 on {b}, 0.2 on {b,c}, 0.1 on the empty set."""
    return build_gbpa(abc, {("a",): 0.6, ("b",): 0.1, ("b", "c"): 0.2, (): 0.1})


@pytest.fixture
def example3_pair(abc) -> tuple[Gbpa, Gbpa]:
    """Classical pair with K = 0.15."""
    m1 = build_gbpa(abc, {("a",): 0.5, ("a", "b"): 0.5})
    m2 = build_gbpa(abc, {("a",): 0.5, ("b",): 0.3, ("a", "b", "c"): 0.2})
    return m1, m2


@pytest.fixture
def example4_pair(abc) -> tuple[Gbpa, Gbpa]:
    """Open-world pair with K = 0.94 and fused empty mass 0.42."""
    m1 = build_gbpa(abc, {("a",): 0.2, ("b",): 0.2, (): 0.6})
    m2 = build_gbpa(abc, {("a",): 0.2, ("b", "c"): 0.1, (): 0.7})
    return m1, m2


@pytest.fixture
def example5_pair(abc) -> tuple[Gbpa, Gbpa]:
    """Totally conflicting open-world pair (K = 1)."""
    m1 = build_gbpa(abc, {("a",): 0.2, (): 0.8})
    m2 = build_gbpa(abc, {("b",): 0.5, (): 0.5})
    return m1, m2


@pytest.fixture
def omega5() -> Frame:
    return Frame(["w1", "w2", "w3", "w4", "w5"])


@pytest.fixture
def example7_pair(omega5) -> tuple[Gbpa, Gbpa]:
    """Specific report vs total ignorance on a five-element frame."""
    m1 = build_gbpa(omega5, {("w1",): 0.8, ("w2", "w3", "w4", "w5"): 0.2})
    m2 = build_gbpa(omega5, {("w1", "w2", "w3", "w4", "w5"): 1.0})
    return m1, m2


@pytest.fixture
def example8_pair(abc) -> tuple[Gbpa, Gbpa]:
    """Uniform singletons vs the vacuous body."""
    m1 = build_gbpa(abc, {("a",): 1 / 3, ("b",): 1 / 3, ("c",): 1 / 3})
    m2 = build_gbpa(abc, {("a", "b", "c"): 1.0})
    return m1, m2


@pytest.fixture
def fig3_pair(abc) -> tuple[Gbpa, Gbpa]:
    """Two identical heavily open-world bodies: 0.1 on {b}, 0.9 on the empty set."""
    m1 = build_gbpa(abc, {("b",): 0.1, (): 0.9})
    m2 = build_gbpa(abc, {("b",): 0.1, (): 0.9})
    return m1, m2

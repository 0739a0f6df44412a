"""Exact-integer domain objects for weighted complete intersection screening.

A candidate is a pair of integer tuples: the ambient weights
(a_0, ..., a_N) of a weighted projective space and the multidegree
(d_1, ..., d_k) of a would-be complete intersection of codimension k
inside it.  All arithmetic is exact; Python integers never overflow, so
the Fano index and every gcd computed here are exact values.

Convention used across the package: weight positions are 0-based and
degree positions are 1-based, mirroring the usual a_i / d_j notation.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt

__all__ = [
    "Candidate",
    "CandidateError",
    "EmptyWeights",
    "GcdClass",
    "NonPositiveEntry",
    "NotNormalized",
    "TooManyDegrees",
    "canonical_key",
    "fano_index",
    "gcd_classes",
    "new_candidate",
    "normalize",
]


class CandidateError(ValueError):
    """Invalid weight/degree data."""


class EmptyWeights(CandidateError):
    """A candidate needs at least one weight."""


class NonPositiveEntry(CandidateError):
    """Weights and degrees must be positive integers."""


class TooManyDegrees(CandidateError):
    """The codimension k may not exceed the ambient dimension N."""


class NotNormalized(ValueError):
    """The operation requires weights and degrees sorted non-decreasing."""


@dataclass(frozen=True)
class Candidate:
    """A (weights, degrees) pair with derived dimension data.

    N = len(weights) - 1 is the ambient dimension, k = len(degrees) the
    codimension, n = N - k the dimension of the cut.  k = 0 is legal and
    denotes the ambient space itself.  Construction validates shape only;
    no geometric condition is implied.
    """

    weights: tuple[int, ...]
    degrees: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "weights", tuple(self.weights))
        object.__setattr__(self, "degrees", tuple(self.degrees))
        if not self.weights:
            raise EmptyWeights("candidate needs at least one weight")
        for value in self.weights + self.degrees:
            if not isinstance(value, int) or value < 1:
                raise NonPositiveEntry(f"entries must be positive integers, got {value!r}")
        if len(self.degrees) > len(self.weights) - 1:
            raise TooManyDegrees(
                f"{len(self.degrees)} degrees against ambient dimension {len(self.weights) - 1}"
            )

    @property
    def ambient_dim(self) -> int:
        """N, the dimension of the ambient weighted projective space."""
        return len(self.weights) - 1

    @property
    def codim(self) -> int:
        """k, the number of degrees."""
        return len(self.degrees)

    @property
    def dim(self) -> int:
        """n = N - k, the dimension of the complete intersection."""
        return len(self.weights) - 1 - len(self.degrees)

    @property
    def is_normalized(self) -> bool:
        """True when both tuples are sorted non-decreasing."""
        return _is_sorted(self.weights) and _is_sorted(self.degrees)


@dataclass(frozen=True)
class GcdClass:
    """Weight positions sharing a common divisor delta > 1.

    member_indices holds every position whose weight delta divides;
    class_gcd is the gcd of those weights.  Classes with identical member
    sets are merged, keeping the largest generator, so after merging
    delta == class_gcd.
    """

    delta: int
    member_indices: frozenset[int]
    class_gcd: int


def new_candidate(weights, degrees=()) -> Candidate:
    """Validating constructor; accepts any integer iterables."""
    return Candidate(tuple(weights), tuple(degrees))


def normalize(c: Candidate) -> Candidate:
    """The canonical representative: both tuples sorted non-decreasing."""
    if c.is_normalized:
        return c
    return Candidate(tuple(sorted(c.weights)), tuple(sorted(c.degrees)))


def canonical_key(c: Candidate) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Total order key: lexicographic on (sorted weights, sorted degrees)."""
    n = normalize(c)
    return (n.weights, n.degrees)


def fano_index(c: Candidate) -> int:
    """sum(weights) - sum(degrees); positive for Fano, zero for Calabi-Yau."""
    return sum(c.weights) - sum(c.degrees)


def _is_sorted(values: tuple[int, ...]) -> bool:
    return all(values[p] <= values[p + 1] for p in range(len(values) - 1))


def _divisors_above_one(value: int) -> list[int]:
    out = []
    for small in range(2, isqrt(value) + 1):
        if value % small == 0:
            out.append(small)
            if small != value // small:
                out.append(value // small)
    if value > 1:
        out.append(value)
    return out


def gcd_classes(c: Candidate) -> list[GcdClass]:
    """All divisibility classes of the weights, merged by member set.

    For every integer delta > 1 dividing at least one weight, the class
    of delta collects every position it divides.  Distinct divisors that
    cut out the same position set describe the same class; the merged
    class keeps the gcd of the member weights as its generator.  Classes
    are returned sorted by (delta, member positions).
    """
    members_by_divisor: dict[int, list[int]] = {}
    for pos, w in enumerate(c.weights):
        if w > 1:
            for d in _divisors_above_one(w):
                members_by_divisor.setdefault(d, []).append(pos)
    merged: dict[frozenset[int], int] = {}
    for positions in members_by_divisor.values():
        key = frozenset(positions)
        if key not in merged:
            merged[key] = gcd(*(c.weights[p] for p in key))
    classes = [
        GcdClass(delta=g, member_indices=key, class_gcd=g) for key, g in merged.items()
    ]
    classes.sort(key=lambda cls: (cls.delta, tuple(sorted(cls.member_indices))))
    return classes

"""Necessary-condition screens for smooth well formed Fano candidates.

Every filter expresses one numerical condition a smooth well formed Fano
(or Calabi-Yau) weighted complete intersection must satisfy, stated
purely on the (weights, degrees) tuples.  The screens are necessary
conditions only: a candidate passing all of them is not thereby proved
to carry a smooth family.

Verdicts carry machine-checkable witnesses on failure.  Witness fields
follow the notation convention: weight positions 0-based, degree
positions 1-based.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from math import gcd

from .core import Candidate, NotNormalized, _divisors_above_one, fano_index, gcd_classes

__all__ = [
    "CALABI_YAU_PROFILE",
    "FILTER_ORDER",
    "FilterId",
    "FilterReport",
    "FilterVerdict",
    "NoDegrees",
    "SMOOTH_FANO_PROFILE",
    "TooLarge",
    "ambient_well_formed",
    "deltas_ok",
    "fano_positive",
    "gcd_cover_bruteforce",
    "gcd_cover_ok",
    "is_linear_cone",
    "is_normalized",
    "last_weight_ok",
    "passes_profile",
    "run_all",
    "unit_prefix_ok",
]


class NoDegrees(ValueError):
    """The filter needs at least one degree (k >= 1)."""


class TooLarge(ValueError):
    """Instance too big for the brute-force oracle (N > 12)."""


class FilterId(str, Enum):
    NORMALIZED = "Normalized"
    AMBIENT_WELL_FORMED = "AmbientWellFormed"
    FANO_POSITIVITY = "FanoPositivity"
    LINEAR_CONE = "LinearCone"
    DELTAS = "Deltas"
    LAST_WEIGHT = "LastWeight"
    GCD_COVER = "GcdCover"
    UNIT_PREFIX = "UnitPrefix"


# Canonical evaluation and reporting order.
FILTER_ORDER: tuple[FilterId, ...] = (
    FilterId.NORMALIZED,
    FilterId.AMBIENT_WELL_FORMED,
    FilterId.FANO_POSITIVITY,
    FilterId.LINEAR_CONE,
    FilterId.DELTAS,
    FilterId.LAST_WEIGHT,
    FilterId.GCD_COVER,
    FilterId.UNIT_PREFIX,
)

SMOOTH_FANO_PROFILE: frozenset[FilterId] = frozenset(FILTER_ORDER)

# Same screens without index positivity; meant for index-0 searches.
CALABI_YAU_PROFILE: frozenset[FilterId] = SMOOTH_FANO_PROFILE - {FilterId.FANO_POSITIVITY}


@dataclass(frozen=True)
class FilterVerdict:
    filter_id: FilterId
    passed: bool
    witness: dict | None = None


@dataclass(frozen=True)
class FilterReport:
    """All requested verdicts for one candidate, in FILTER_ORDER."""

    candidate: Candidate
    verdicts: tuple[FilterVerdict, ...]
    profile: frozenset[FilterId]

    @property
    def survives(self) -> bool:
        return all(v.passed for v in self.verdicts)

    def failing(self) -> tuple[FilterVerdict, ...]:
        return tuple(v for v in self.verdicts if not v.passed)


def is_normalized(c: Candidate) -> FilterVerdict:
    """Both tuples sorted non-decreasing; witness is the first inversion."""
    for name, values in (("weights", c.weights), ("degrees", c.degrees)):
        for p in range(len(values) - 1):
            if values[p] > values[p + 1]:
                return _fail(FilterId.NORMALIZED, {"list": name, "position": p})
    return _pass(FilterId.NORMALIZED)


def ambient_well_formed(c: Candidate) -> FilterVerdict:
    """gcd of any N of the N+1 weights is 1.

    Witness: the omitted position and the offending gcd.  For N = 0 the
    single weight itself must be 1 (the degenerate reading under which
    wellformization of a one-weight space always lands on a pass).
    """
    w = c.weights
    if len(w) == 1:
        if w[0] == 1:
            return _pass(FilterId.AMBIENT_WELL_FORMED)
        return _fail(FilterId.AMBIENT_WELL_FORMED, {"omitted_index": 0, "gcd": w[0]})
    prefix = [0] * (len(w) + 1)
    for p, value in enumerate(w):
        prefix[p + 1] = gcd(prefix[p], value)
    suffix = [0] * (len(w) + 1)
    for p in range(len(w) - 1, -1, -1):
        suffix[p] = gcd(suffix[p + 1], w[p])
    for omitted in range(len(w)):
        g = gcd(prefix[omitted], suffix[omitted + 1])
        if g != 1:
            return _fail(FilterId.AMBIENT_WELL_FORMED, {"omitted_index": omitted, "gcd": g})
    return _pass(FilterId.AMBIENT_WELL_FORMED)


def fano_positive(c: Candidate) -> FilterVerdict:
    """sum(weights) - sum(degrees) > 0."""
    value = fano_index(c)
    if value > 0:
        return _pass(FilterId.FANO_POSITIVITY)
    return _fail(FilterId.FANO_POSITIVITY, {"fano_index": value})


def is_linear_cone(c: Candidate) -> FilterVerdict:
    """Fails iff some degree equals some weight (a cone over a smaller cut).

    Witness: (weight_index, degree_index, value), first in degree order.
    """
    weight_positions: dict[int, int] = {}
    for pos, w in enumerate(c.weights):
        if w not in weight_positions:
            weight_positions[w] = pos
    for j, d in enumerate(c.degrees, start=1):
        if d in weight_positions:
            return _fail(
                FilterId.LINEAR_CONE,
                {"weight_index": weight_positions[d], "degree_index": j, "value": d},
            )
    return _pass(FilterId.LINEAR_CONE)


def deltas_ok(c: Candidate) -> FilterVerdict:
    """d_j > a_{n+j} for j = 1..k, pairing the degrees with the top weights.

    Requires a normalized candidate.  Vacuous pass for k = 0.
    """
    if not c.is_normalized:
        raise NotNormalized("deltas_ok needs sorted weights and degrees")
    n = c.dim
    for j in range(1, c.codim + 1):
        d = c.degrees[j - 1]
        a = c.weights[n + j]
        if d <= a:
            return _fail(FilterId.DELTAS, {"j": j, "degree": d, "weight": a})
    return _pass(FilterId.DELTAS)


def last_weight_ok(c: Candidate) -> FilterVerdict:
    """d_k >= 2 a_N: the top degree dominates twice the top weight."""
    if not c.is_normalized:
        raise NotNormalized("last_weight_ok needs sorted weights and degrees")
    if c.codim == 0:
        raise NoDegrees("last_weight_ok needs at least one degree")
    d_k = c.degrees[-1]
    a_n = c.weights[-1]
    if d_k >= 2 * a_n:
        return _pass(FilterId.LAST_WEIGHT)
    return _fail(FilterId.LAST_WEIGHT, {"d_k": d_k, "a_N": a_n})


def gcd_cover_ok(c: Candidate) -> FilterVerdict:
    """Divisibility-class form of the quasi-smoothness count condition.

    For every merged class (members S, class gcd g) at least |S| degrees
    must be divisible by g.  Witness: the first class, in class order,
    with fewer divisible degrees than members.
    """
    for cls in gcd_classes(c):
        required = len(cls.member_indices)
        available = sum(1 for d in c.degrees if d % cls.class_gcd == 0)
        if available < required:
            return _fail(
                FilterId.GCD_COVER,
                {"class_gcd": cls.class_gcd, "required": required, "available": available},
            )
    return _pass(FilterId.GCD_COVER)


def gcd_cover_bruteforce(c: Candidate) -> FilterVerdict:
    """Literal quantifier form of the count condition, for cross-checking.

    For every subset of weight positions with gcd delta > 1, searches for
    as many degrees with gcd divisible by delta as the subset has
    members.  Exponential in N; guarded to N <= 12.  The verdict always
    matches gcd_cover_ok; witnesses may differ in shape.
    """
    if c.ambient_dim > 12:
        raise TooLarge(f"brute-force oracle capped at N <= 12, got N = {c.ambient_dim}")
    positions = range(len(c.weights))
    searched: dict[tuple[int, int], bool] = {}
    for r in range(1, len(c.weights) + 1):
        for subset in combinations(positions, r):
            delta = gcd(*(c.weights[p] for p in subset))
            if delta == 1:
                continue
            key = (delta, r)
            if key not in searched:
                searched[key] = any(
                    gcd(*combo) % delta == 0 for combo in combinations(c.degrees, r)
                )
            if not searched[key]:
                return _fail(
                    FilterId.GCD_COVER,
                    {"delta": delta, "weight_positions": list(subset), "required": r},
                )
    return _pass(FilterId.GCD_COVER)


def unit_prefix_ok(c: Candidate, index: int) -> FilterVerdict:
    """a_0 = ... = a_{k+i-1} = 1 where i = max(index, 0).

    Requires a normalized candidate, so the check reduces to the single
    position k+i-1.  An empty prefix (k = 0, i <= 0) passes vacuously; a
    prefix longer than the weight tuple fails as infeasible.
    """
    if not c.is_normalized:
        raise NotNormalized("unit_prefix_ok needs sorted weights and degrees")
    prefix_len = c.codim + max(index, 0)
    if prefix_len == 0:
        return _pass(FilterId.UNIT_PREFIX)
    if prefix_len > len(c.weights):
        return _fail(
            FilterId.UNIT_PREFIX,
            {"infeasible_prefix": True, "required_length": prefix_len, "num_weights": len(c.weights)},
        )
    for p in range(prefix_len):
        if c.weights[p] != 1:
            return _fail(FilterId.UNIT_PREFIX, {"position": p, "weight": c.weights[p]})
    return _pass(FilterId.UNIT_PREFIX)


def run_all(c: Candidate, profile: frozenset[FilterId] = SMOOTH_FANO_PROFILE) -> FilterReport:
    """Evaluate every requested filter in FILTER_ORDER, no short-circuit.

    The Fano index is computed once and shared.  For k = 0 candidates the
    LastWeight screen is reported as a vacuous pass (there is no degree
    for it to constrain); the standalone last_weight_ok still raises.
    Filters that need normalization propagate NotNormalized.
    """
    index = fano_index(c)
    verdicts = tuple(
        _evaluate(c, fid, index) for fid in FILTER_ORDER if fid in profile
    )
    return FilterReport(candidate=c, verdicts=verdicts, profile=frozenset(profile))


def passes_profile(c: Candidate, profile: frozenset[FilterId]) -> bool:
    """True iff every filter in the profile passes.

    Exactly run_all(...).survives, including the NotNormalized raise
    when a normalization-requiring filter is in the profile, evaluated
    fail-fast without building verdicts; the enumerator's hot path.
    """
    return _passes_tuples(c.weights, c.degrees, profile)


def _passes_tuples(
    weights: tuple[int, ...], degrees: tuple[int, ...], profile: frozenset[FilterId]
) -> bool:
    sorted_ok = all(
        weights[p] <= weights[p + 1] for p in range(len(weights) - 1)
    ) and all(degrees[p] <= degrees[p + 1] for p in range(len(degrees) - 1))
    if not sorted_ok and (
        FilterId.DELTAS in profile
        or FilterId.UNIT_PREFIX in profile
        or (FilterId.LAST_WEIGHT in profile and degrees)
    ):
        raise NotNormalized("profile includes filters that need sorted tuples")
    if FilterId.NORMALIZED in profile and not sorted_ok:
        return False
    if FilterId.FANO_POSITIVITY in profile and sum(weights) <= sum(degrees):
        return False
    if FilterId.UNIT_PREFIX in profile:
        plen = len(degrees) + max(sum(weights) - sum(degrees), 0)
        if plen > 0 and (plen > len(weights) or weights[plen - 1] != 1):
            return False
    if FilterId.LAST_WEIGHT in profile and degrees and degrees[-1] < 2 * weights[-1]:
        return False
    if FilterId.DELTAS in profile:
        n = len(weights) - 1 - len(degrees)
        for j, d in enumerate(degrees):
            if d <= weights[n + 1 + j]:
                return False
    if FilterId.LINEAR_CONE in profile and set(degrees) & set(weights):
        return False
    if FilterId.AMBIENT_WELL_FORMED in profile and not _ambient_ok(weights):
        return False
    if FilterId.GCD_COVER in profile and not _gcd_cover(weights, degrees):
        return False
    return True


def _ambient_ok(weights: tuple[int, ...]) -> bool:
    if len(weights) == 1:
        return weights[0] == 1
    prefix = 0
    prefixes = []
    for value in weights:
        prefixes.append(prefix)
        prefix = gcd(prefix, value)
    suffix = 0
    for omitted in range(len(weights) - 1, -1, -1):
        if gcd(prefixes[omitted], suffix) != 1:
            return False
        suffix = gcd(suffix, weights[omitted])
    return True


def _gcd_cover(weights: tuple[int, ...], degrees: tuple[int, ...]) -> bool:
    members_by_divisor: dict[int, list[int]] = {}
    for pos, value in enumerate(weights):
        if value > 1:
            for divisor in _divisors_above_one(value):
                members_by_divisor.setdefault(divisor, []).append(pos)
    seen: set[tuple[int, ...]] = set()
    for positions in members_by_divisor.values():
        key = tuple(positions)
        if key in seen:
            continue
        seen.add(key)
        g = gcd(*(weights[p] for p in positions))
        required = len(positions)
        available = 0
        for d in degrees:
            if d % g == 0:
                available += 1
                if available == required:
                    break
        if available < required:
            return False
    return True


def _evaluate(c: Candidate, fid: FilterId, index: int) -> FilterVerdict:
    if fid is FilterId.NORMALIZED:
        return is_normalized(c)
    if fid is FilterId.AMBIENT_WELL_FORMED:
        return ambient_well_formed(c)
    if fid is FilterId.FANO_POSITIVITY:
        return fano_positive(c)
    if fid is FilterId.LINEAR_CONE:
        return is_linear_cone(c)
    if fid is FilterId.DELTAS:
        return deltas_ok(c)
    if fid is FilterId.LAST_WEIGHT:
        if c.codim == 0:
            return _pass(FilterId.LAST_WEIGHT)
        return last_weight_ok(c)
    if fid is FilterId.GCD_COVER:
        return gcd_cover_ok(c)
    if fid is FilterId.UNIT_PREFIX:
        return unit_prefix_ok(c, index)
    raise ValueError(f"unknown filter id {fid!r}")


def _pass(fid: FilterId) -> FilterVerdict:
    return FilterVerdict(filter_id=fid, passed=True)


def _fail(fid: FilterId, witness: dict) -> FilterVerdict:
    return FilterVerdict(filter_id=fid, passed=False, witness=witness)

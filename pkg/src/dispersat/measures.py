"""Solution collections and their dispersion measures."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum


class DispersionObjective(Enum):
    MIN_PD = "min"
    SUM_PD = "sum"
    SUM_PD_DISTINCT = "sum-distinct"


class WeightKind(Enum):
    NONE = "none"
    AT_LEAST = "at-least"
    AT_MOST = "at-most"


@dataclass(frozen=True)
class WeightConstraint:
    kind: WeightKind = WeightKind.NONE
    w: int | None = None

    def __post_init__(self):
        if (self.kind is WeightKind.NONE) != (self.w is None):
            raise ValueError("W must be given exactly when kind != NONE")

    def admits(self, assignment):
        if self.kind is WeightKind.NONE:
            return True
        if self.kind is WeightKind.AT_LEAST:
            return assignment.weight() >= self.w
        return assignment.weight() <= self.w


NO_WEIGHT = WeightConstraint()


class SolutionCollection:
    """An ordered set or multiset of assignments of common length.

    With distinct=True no two members may be equal; order is insertion
    order either way.
    """

    def __init__(self, members, distinct=True):
        self.members = tuple(members)
        self.distinct = bool(distinct)
        if self.members:
            n = self.members[0].n
            if any(z.n != n for z in self.members):
                raise ValueError("members have differing lengths")
        if self.distinct and len(set(self.members)) != len(self.members):
            raise ValueError("duplicate member in a distinct collection")

    @property
    def n(self):
        if not self.members:
            raise ValueError("empty collection has no dimension")
        return self.members[0].n

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, z):
        return z in self.members

    def __eq__(self, other):
        return (
            isinstance(other, SolutionCollection)
            and self.members == other.members
            and self.distinct == other.distinct
        )

    def __repr__(self):
        inner = ",".join(z.to_string() for z in self.members)
        kind = "set" if self.distinct else "multiset"
        return f"SolutionCollection({kind}:[{inner}])"

    def sorted(self):
        return SolutionCollection(sorted(self.members), distinct=self.distinct)


def min_pairwise_distance(collection):
    """minPD; a singleton gets the sentinel n+1 (acts as +infinity)."""
    members = collection.members
    if not members:
        raise ValueError("minPD of an empty collection")
    if len(members) == 1:
        return members[0].n + 1
    return min(
        members[i].distance(members[j])
        for i in range(len(members))
        for j in range(i + 1, len(members))
    )


def sum_pairwise_distance(collection):
    """sumPD: half the sum of distances over ordered pairs."""
    members = collection.members
    if not members:
        raise ValueError("sumPD of an empty collection")
    return sum(
        members[i].distance(members[j])
        for i in range(len(members))
        for j in range(i + 1, len(members))
    )


def min_distance_to(collection, x):
    return min(z.distance(x) for z in collection.members)


def sum_distance_to(collection, x):
    return sum(z.distance(x) for z in collection.members)


@dataclass(frozen=True)
class Measures:
    min_pd: int
    sum_pd: int
    min_to: int | None = None
    sum_to: int | None = None


def dispersion_measures(collection, x=None):
    """minPD and sumPD of a collection, plus min/sum distance to `x` if given."""
    if not collection.members:
        raise ValueError("measures of an empty collection")
    min_to = sum_to = None
    if x is not None:
        min_to = min_distance_to(collection, x)
        sum_to = sum_distance_to(collection, x)
    return Measures(
        min_pd=min_pairwise_distance(collection),
        sum_pd=sum_pairwise_distance(collection),
        min_to=min_to,
        sum_to=sum_to,
    )

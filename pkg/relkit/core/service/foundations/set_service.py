"""Finite set operations, families of sets, covers and partitions."""
from itertools import combinations
from typing import Iterable, Optional, Union

import logfire

from relkit.core.config.general_config import settings
from relkit.core.errors import EmptyFamilyError, LimitExceededError, PartitionError
from relkit.core.models.kind_models import SetOpKind
from relkit.core.models.value_models import FinSet, Partition


def set_ops(a: FinSet, b: FinSet, kind: Union[SetOpKind, str]) -> FinSet:
    """Union, intersection or difference of two finite sets."""
    kind = SetOpKind(kind)
    if kind is SetOpKind.UNION:
        return FinSet(a.elements | b.elements)
    if kind is SetOpKind.INTERSECTION:
        return FinSet(a.elements & b.elements)
    return FinSet(a.elements - b.elements)


def is_subset(a: FinSet, b: FinSet, proper: bool = False) -> bool:
    if proper:
        return a.elements < b.elements
    return a.elements <= b.elements


def powerset(s: FinSet, limit: Optional[int] = None) -> FinSet:
    """All 2^|s| subsets of s.

    Raises:
        LimitExceededError: if |s| is above the powerset limit.
    """
    limit = settings.limits.powerset if limit is None else limit
    if len(s) > limit:
        logfire.warning(f"Refusing powerset of a {len(s)}-element set (limit {limit})")
        raise LimitExceededError("powerset", len(s), limit)
    elements = s.sorted()
    subsets = [
        FinSet(frozenset(combo))
        for size in range(len(elements) + 1)
        for combo in combinations(elements, size)
    ]
    return FinSet(frozenset(subsets))


def _members(family: FinSet) -> list[FinSet]:
    members = family.sorted()
    for m in members:
        if not isinstance(m, FinSet):
            raise TypeError(f"Expected a set of sets, found the atom {m}")
    return members


def big_union(family: FinSet) -> FinSet:
    """Elements belonging to some member of the family."""
    result: frozenset = frozenset()
    for member in _members(family):
        result |= member.elements
    return FinSet(result)


def big_intersect(family: FinSet) -> FinSet:
    """Elements belonging to every member of a nonempty family."""
    members = _members(family)
    if not members:
        raise EmptyFamilyError("The intersection of an empty family of sets is not defined")
    result = members[0].elements
    for member in members[1:]:
        result &= member.elements
    return FinSet(result)


def is_cover(cells: Iterable[FinSet], s: FinSet) -> bool:
    """Nonempty cells whose union is s."""
    cells = list(cells)
    if any(not c for c in cells):
        return False
    union: frozenset = frozenset()
    for c in cells:
        union |= c.elements
    return union == s.elements


def is_partition(cells: Iterable[FinSet], s: FinSet) -> bool:
    """A cover of s with pairwise disjoint cells."""
    cells = list(set(cells))
    if not is_cover(cells, s):
        return False
    return sum(len(c) for c in cells) == len(s)


def make_partition(cells: Iterable[FinSet], s: FinSet) -> Partition:
    return Partition(frozenset(cells), s)


def finer(p1: Partition, p0: Partition) -> bool:
    """True iff every cell of p1 lies inside some cell of p0."""
    if p1.ground != p0.ground:
        raise PartitionError(f"Partitions of {p1.ground} and {p0.ground} cannot be compared")
    return all(any(c1.issubset(c0) for c0 in p0.cells) for c1 in p1.cells)


def finest_partition(s: FinSet) -> Partition:
    """The partition into singletons."""
    return Partition(frozenset(FinSet.of(x) for x in s), s)


def coarsest_partition(s: FinSet) -> Partition:
    """The single-cell partition {s}; the empty set has the empty partition.

    Written {{S}} in some texts, which is the set holding this partition.
    """
    if not s:
        return Partition(frozenset(), s)
    return Partition(frozenset({s}), s)

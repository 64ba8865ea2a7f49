"""Values: domain-tagged atoms and hereditarily finite sets."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Iterable, Iterator, Union

from relkit.core.errors import PartitionError

Payload = Union[int, str]

# tag used when a caller does not care about domains (set-theory demos)
DEFAULT_DOMAIN = "element"


def _payload_key(payload: Payload) -> tuple:
    if isinstance(payload, int):
        return (0, payload, "")
    return (1, 0, payload)


def value_key(value: "Value") -> tuple:
    """Canonical total order on values.

    Atoms sort before sets; atoms by domain name then payload (integers before
    text); sets by size, then by their elements in canonical order.
    """
    if isinstance(value, Atom):
        return (0, value.domain, *_payload_key(value.payload))
    return value.sort_key()


def pair_key(pair: tuple["Value", "Value"]) -> tuple:
    return (value_key(pair[0]), value_key(pair[1]))


@dataclass(frozen=True)
class Atom:
    """An indivisible value belonging to exactly one named domain."""
    domain: str
    payload: Payload

    def __post_init__(self):
        if isinstance(self.payload, bool) or not isinstance(self.payload, (int, str)):
            raise TypeError(f"Atom payload must be int or str, got {self.payload!r}")

    def __str__(self) -> str:
        return str(self.payload)


@dataclass(frozen=True)
class FinSet:
    """A finite set of values; structural equality, no duplicates."""
    elements: frozenset = frozenset()
    _key: Any = field(default=None, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        elements = self.elements
        if not isinstance(elements, frozenset):
            elements = frozenset(elements)
            object.__setattr__(self, "elements", elements)
        for e in elements:
            if not isinstance(e, (Atom, FinSet)):
                raise TypeError(f"FinSet elements must be values, got {e!r}")

    @classmethod
    def of(cls, *values: "Value") -> "FinSet":
        return cls(frozenset(values))

    @classmethod
    def from_iterable(cls, values: Iterable["Value"]) -> "FinSet":
        return cls(frozenset(values))

    @classmethod
    def atoms(cls, *payloads: Payload, domain: str = DEFAULT_DOMAIN) -> "FinSet":
        """Shorthand for a set of atoms of one domain."""
        return cls(frozenset(Atom(domain, p) for p in payloads))

    def sort_key(self) -> tuple:
        if self._key is None:
            object.__setattr__(
                self, "_key", (1, len(self.elements), tuple(value_key(e) for e in self.sorted())))
        return self._key

    def sorted(self) -> list["Value"]:
        return sorted(self.elements, key=value_key)

    def __iter__(self) -> Iterator["Value"]:
        return iter(self.sorted())

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, value: object) -> bool:
        return value in self.elements

    def __bool__(self) -> bool:
        return bool(self.elements)

    def issubset(self, other: "FinSet") -> bool:
        return self.elements <= other.elements

    def __or__(self, other: "FinSet") -> "FinSet":
        return FinSet(self.elements | other.elements)

    def __and__(self, other: "FinSet") -> "FinSet":
        return FinSet(self.elements & other.elements)

    def __sub__(self, other: "FinSet") -> "FinSet":
        return FinSet(self.elements - other.elements)

    def __str__(self) -> str:
        return "{" + ", ".join(str(e) for e in self.sorted()) + "}"


Value = Union[Atom, FinSet]

EMPTY = FinSet()


@dataclass(frozen=True)
class Partition:
    """A set of nonempty, pairwise disjoint cells whose union is the ground set."""
    cells: frozenset
    ground: FinSet

    def __post_init__(self):
        cells = frozenset(self.cells)
        object.__setattr__(self, "cells", cells)
        covered: set = set()
        for cell in cells:
            if not isinstance(cell, FinSet) or not cell:
                raise PartitionError(f"Partition cells must be nonempty sets, got {cell}")
            if not cell.issubset(self.ground):
                raise PartitionError(f"Cell {cell} is not a subset of {self.ground}")
            if covered & cell.elements:
                raise PartitionError(f"Cell {cell} overlaps another cell")
            covered |= cell.elements
        if covered != set(self.ground.elements):
            raise PartitionError(f"Cells do not cover {self.ground}")

    def sorted_cells(self) -> list[FinSet]:
        return sorted(self.cells, key=value_key)

    def __str__(self) -> str:
        return "{" + ", ".join(str(c) for c in self.sorted_cells()) + "}"

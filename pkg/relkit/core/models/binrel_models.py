"""Binary relations as (source, target, extent) triples."""
from __future__ import annotations

from dataclasses import dataclass

from relkit.core.errors import MismatchError
from relkit.core.models.value_models import FinSet, Value, pair_key


@dataclass(frozen=True)
class BinaryRelation:
    """A binary relation; every pair of the extent lies in source x target."""
    source: FinSet
    target: FinSet
    extent: frozenset = frozenset()

    def __post_init__(self):
        extent = frozenset(self.extent)
        object.__setattr__(self, "extent", extent)
        for pair in extent:
            if not (isinstance(pair, tuple) and len(pair) == 2):
                raise MismatchError(f"Extent elements must be pairs, got {pair!r}")
            x, y = pair
            if x not in self.source or y not in self.target:
                raise MismatchError(
                    f"Pair ({x}, {y}) escapes {self.source} x {self.target}")

    @property
    def is_endo(self) -> bool:
        return self.source == self.target

    def sorted_pairs(self) -> list[tuple[Value, Value]]:
        return sorted(self.extent, key=pair_key)

    def __contains__(self, pair: object) -> bool:
        return pair in self.extent

    def __len__(self) -> int:
        return len(self.extent)

    def __str__(self) -> str:
        pairs = ", ".join(f"({x}, {y})" for x, y in self.sorted_pairs())
        return f"<{self.source}, {self.target}, {{{pairs}}}>"

"""Relations as signature + extent pairs, and filtering patterns."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Iterator

from relkit.core.errors import TypingError
from relkit.core.models.tuple_models import Index, IndexedFamily, Signature, Tuple


@dataclass(frozen=True)
class Relation:
    """A signature together with an extent of tuples typed by it."""
    signature: Signature
    extent: frozenset = frozenset()

    def __post_init__(self):
        extent = frozenset(self.extent)
        object.__setattr__(self, "extent", extent)
        for t in extent:
            if not isinstance(t, Tuple) or not self.signature.types(t):
                raise TypingError(f"Tuple {t} is not typed by signature {self.signature}")

    @property
    def index_set(self) -> frozenset:
        return self.signature.index_set

    def sorted(self) -> list[Tuple]:
        """Extent in canonical tuple order."""
        return sorted(self.extent, key=Tuple.sort_key)

    def __iter__(self) -> Iterator[Tuple]:
        return iter(self.sorted())

    def __len__(self) -> int:
        return len(self.extent)

    def __contains__(self, t: object) -> bool:
        return t in self.extent

    def __str__(self) -> str:
        body = ", ".join(str(t) for t in self.sorted())
        return f"<{self.signature}, {{{body}}}>"


@dataclass(frozen=True)
class Pattern(IndexedFamily):
    """A tuple from indexes to variables (placeholder symbols)."""

    def _check_entry(self, idx: Index, entry: Any) -> Any:
        if not isinstance(entry, str) or not entry:
            raise TypingError(f"Pattern entry {idx} must be a variable name, got {entry!r}")
        return entry

    @property
    def variables(self) -> frozenset:
        """The image p(I)."""
        return frozenset(self.values())

    def ordered_variables(self) -> list[str]:
        """Variables in order of first occurrence along the canonical index order."""
        seen: dict = {}
        for v in self.values():
            seen.setdefault(v, None)
        return list(seen)

    @property
    def is_injective(self) -> bool:
        return len(self.variables) == len(self)

    def __str__(self) -> str:
        if self.is_sequence:
            return "<" + ", ".join(self.values()) + ">"
        return "<" + ", ".join(f"{idx}: {v}" for idx, v in self.items) + ">"

"""Functions as (source, target, map) triples.

The map is either a finite table or an opaque deterministic rule. Law-checking
operations only accept the table form.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import islice
from typing import Any, Callable, Iterable, Mapping, Optional, Union

from relkit.core.errors import FunctionDefinitionError
from relkit.core.models.value_models import FinSet, Value, value_key

# number of source elements evaluated when a rule-form function is built
RULE_SPOT_CHECK_SAMPLE = 16

TableInput = Union[Mapping[Value, Value], Iterable[tuple[Value, Value]]]


@dataclass(frozen=True)
class Function:
    """A total, single-valued map from source into target."""
    source: FinSet
    target: FinSet
    table: Optional[tuple] = None
    rule: Optional[Callable[[Value], Value]] = None
    _lookup: Any = field(default=None, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if (self.table is None) == (self.rule is None):
            raise FunctionDefinitionError("A function needs exactly one of a table or a rule")
        if self.table is not None:
            self._init_table(self.table)
        else:
            self._spot_check_rule()

    def _init_table(self, table: TableInput) -> None:
        pairs = list(table.items()) if isinstance(table, Mapping) else list(table)
        lookup: dict = {}
        for x, y in pairs:
            if x in lookup:
                raise FunctionDefinitionError(f"Duplicate table entry for {x}")
            if x not in self.source:
                raise FunctionDefinitionError(f"Table entry {x} is outside the source {self.source}")
            if y not in self.target:
                raise FunctionDefinitionError(f"Value {y} for {x} is outside the target {self.target}")
            lookup[x] = y
        missing = [x for x in self.source if x not in lookup]
        if missing:
            raise FunctionDefinitionError(
                f"Table has no entry for {', '.join(str(x) for x in missing)}")
        object.__setattr__(
            self, "table", tuple(sorted(lookup.items(), key=lambda kv: value_key(kv[0]))))
        object.__setattr__(self, "_lookup", lookup)

    def _spot_check_rule(self) -> None:
        for x in islice(self.source, RULE_SPOT_CHECK_SAMPLE):
            y = self.rule(x)
            if y not in self.target:
                raise FunctionDefinitionError(
                    f"Rule maps {x} to {y}, which is outside the target {self.target}")

    @property
    def is_table(self) -> bool:
        return self.table is not None

    def __call__(self, x: Value) -> Value:
        if x not in self.source:
            raise FunctionDefinitionError(f"Argument {x} is outside the source {self.source}")
        if self._lookup is not None:
            return self._lookup[x]
        return self.rule(x)

    def items(self) -> list[tuple[Value, Value]]:
        """(x, f(x)) pairs in canonical source order."""
        if self.table is not None:
            return list(self.table)
        return [(x, self.rule(x)) for x in self.source]

    def __str__(self) -> str:
        if self.table is None:
            return f"<rule {getattr(self.rule, '__name__', 'rule')}: {self.source} -> {self.target}>"
        body = ", ".join(f"{x}->{y}" for x, y in self.table)
        return f"<{self.source} -> {self.target}: {body}>"

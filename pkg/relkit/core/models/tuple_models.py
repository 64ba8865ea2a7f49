"""Indexes, domains, tuples and signatures.

A tuple is a function from an index set to atoms; a signature is a tuple of
domains. Both keep their entries in canonical index order.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, Iterator, Literal, Mapping, Optional, Union

from relkit.core.errors import IndexSetError, TypingError
from relkit.core.models.value_models import Atom, FinSet, Payload, value_key

# domain tags used by the tuple-as-function view
INDEX_DOMAIN = "index"
DOMAIN_DOMAIN = "domain"

BuiltinKind = Literal["natural", "text"]


@dataclass(frozen=True)
class Index:
    """A position (natural) or an attribute name; positions sort before names."""
    key: Union[int, str]

    def __post_init__(self):
        if isinstance(self.key, bool) or not isinstance(self.key, (int, str)):
            raise IndexSetError(f"Index must be a natural or a name, got {self.key!r}")
        if isinstance(self.key, int) and self.key < 0:
            raise IndexSetError(f"Positional index must be natural, got {self.key}")
        if isinstance(self.key, str) and not self.key:
            raise IndexSetError("Index name must not be empty")

    @classmethod
    def coerce(cls, key: Union["Index", int, str]) -> "Index":
        return key if isinstance(key, Index) else cls(key)

    @property
    def is_pos(self) -> bool:
        return isinstance(self.key, int)

    def sort_key(self) -> tuple:
        if isinstance(self.key, int):
            return (0, self.key, "")
        return (1, 0, self.key)

    def __lt__(self, other: "Index") -> bool:
        return self.sort_key() < other.sort_key()

    def as_value(self) -> Atom:
        return Atom(INDEX_DOMAIN, self.key)

    def __str__(self) -> str:
        return str(self.key)


IndexLike = Union[Index, int, str]


def index_set(keys: Iterable[IndexLike]) -> frozenset:
    return frozenset(Index.coerce(k) for k in keys)


def sorted_indexes(indexes: Iterable[Index]) -> list[Index]:
    return sorted(indexes, key=Index.sort_key)


@dataclass(frozen=True)
class Domain:
    """A named set of admissible atoms.

    Enumerated domains list their members; builtin domains decide membership
    by kind (natural or text) and an optional extra predicate on the payload.
    """
    name: str
    members: Optional[FinSet] = None
    kind: Optional[BuiltinKind] = None
    predicate: Optional[Callable[[Payload], bool]] = field(default=None, compare=False, hash=False)

    def __post_init__(self):
        if (self.members is None) == (self.kind is None):
            raise TypingError(f"Domain {self.name} needs exactly one of members or a builtin kind")
        if self.members is not None:
            for m in self.members:
                if not isinstance(m, Atom) or m.domain != self.name:
                    raise TypingError(f"Member {m!r} of domain {self.name} is not tagged with it")

    @classmethod
    def enumerated(cls, name: str, payloads: Iterable[Payload]) -> "Domain":
        return cls(name, members=FinSet.from_iterable(Atom(name, p) for p in payloads))

    @classmethod
    def builtin(cls, name: str, kind: BuiltinKind,
                predicate: Optional[Callable[[Payload], bool]] = None) -> "Domain":
        return cls(name, kind=kind, predicate=predicate)

    @property
    def is_enumerated(self) -> bool:
        return self.members is not None

    def contains(self, value: object) -> bool:
        if not isinstance(value, Atom) or value.domain != self.name:
            return False
        if self.members is not None:
            return value in self.members
        payload = value.payload
        if self.kind == "natural":
            ok = isinstance(payload, int) and payload >= 0
        else:
            ok = isinstance(payload, str)
        return ok and (self.predicate is None or bool(self.predicate(payload)))

    def atom(self, payload: Payload) -> Atom:
        """The atom of this domain with the given payload; raises if not a member."""
        value = Atom(self.name, payload)
        if not self.contains(value):
            raise TypingError(f"{payload!r} is not a member of domain {self.name}")
        return value

    def parse(self, text: str) -> Atom:
        """Read an atom of this domain from its textual form."""
        if self.members is not None:
            for m in self.members:
                if str(m.payload) == text:
                    return m
            raise TypingError(f"{text!r} is not a member of domain {self.name}")
        if self.kind == "natural":
            s = text.strip()
            if not (s.isascii() and s.isdigit()):
                raise TypingError(f"{text!r} is not a natural number (domain {self.name})")
            return self.atom(int(s))
        return self.atom(text)

    def as_value(self) -> Atom:
        return Atom(DOMAIN_DOMAIN, self.name)

    def describe(self) -> str:
        if self.members is not None:
            return f"{self.name} = {self.members}"
        return f"{self.name} = builtin {self.kind}"

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class IndexedFamily:
    """Common base of Tuple, Signature and Pattern: a finite map on an index set."""
    items: Any = ()
    _map: Any = field(default=None, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        raw = self.items
        pairs = list(raw.items()) if isinstance(raw, Mapping) else list(raw)
        mapping: dict = {}
        for key, entry in pairs:
            idx = Index.coerce(key)
            if idx in mapping:
                raise IndexSetError(f"Duplicate index {idx}")
            mapping[idx] = self._check_entry(idx, entry)
        object.__setattr__(
            self, "items", tuple(sorted(mapping.items(), key=lambda kv: kv[0].sort_key())))
        object.__setattr__(self, "_map", mapping)

    def _check_entry(self, idx: Index, entry: Any) -> Any:
        return entry

    @property
    def index_set(self) -> frozenset:
        return frozenset(self._map)

    def indexes(self) -> list[Index]:
        return [idx for idx, _ in self.items]

    def values(self) -> list:
        return [entry for _, entry in self.items]

    def __getitem__(self, key: IndexLike) -> Any:
        try:
            return self._map[Index.coerce(key)]
        except KeyError:
            raise IndexSetError(f"Index {key} is not in {{{self.index_label()}}}") from None

    def __contains__(self, key: object) -> bool:
        if not isinstance(key, (Index, int, str)):
            return False
        return Index.coerce(key) in self._map

    def __iter__(self) -> Iterator[Index]:
        return iter(self.indexes())

    def __len__(self) -> int:
        return len(self.items)

    def as_dict(self) -> dict:
        return dict(self._map)

    @property
    def is_sequence(self) -> bool:
        """True iff the index set is exactly {0, ..., n-1}."""
        return all(idx.key == i for i, (idx, _) in enumerate(self.items)) and \
            all(idx.is_pos for idx, _ in self.items)

    def index_label(self) -> str:
        return ", ".join(str(idx) for idx, _ in self.items)

    def restrict(self, keys: Iterable[IndexLike]):
        """Entries on keys intersected with the index set, same class."""
        wanted = index_set(keys)
        return type(self)(tuple((idx, e) for idx, e in self.items if idx in wanted))


@dataclass(frozen=True)
class Tuple(IndexedFamily):
    """A finite map from indexes to atoms."""

    def _check_entry(self, idx: Index, entry: Any) -> Any:
        if not isinstance(entry, Atom):
            raise TypingError(f"Tuple component {idx} must be an atom, got {entry!r}")
        return entry

    def sort_key(self) -> tuple:
        return tuple((idx.sort_key(), value_key(v)) for idx, v in self.items)

    def __str__(self) -> str:
        if self.is_sequence:
            return "<" + ", ".join(str(v) for v in self.values()) + ">"
        return "(" + ", ".join(f"{idx}: {v}" for idx, v in self.items) + ")"


@dataclass(frozen=True)
class Signature(IndexedFamily):
    """A typing tuple: a finite map from indexes to domains."""

    def _check_entry(self, idx: Index, entry: Any) -> Any:
        if not isinstance(entry, Domain):
            raise TypingError(f"Signature entry {idx} must be a domain, got {entry!r}")
        return entry

    def types(self, t: Tuple) -> bool:
        if t.index_set != self.index_set:
            return False
        return all(self._map[idx].contains(v) for idx, v in t.items)

    @property
    def is_enumerable(self) -> bool:
        return all(d.is_enumerated for d in self.values())

    def __str__(self) -> str:
        return "(" + ", ".join(f"{idx}: {d.name}" for idx, d in self.items) + ")"

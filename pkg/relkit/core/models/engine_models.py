"""Database scheme and instance, intensional relations, rules and algebra expressions."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Mapping, Optional, Union

from relkit.core.errors import IndexSetError, RuleError, TypingError
from relkit.core.models.relation_models import Pattern, Relation
from relkit.core.models.tuple_models import Domain, Index, Signature
from relkit.core.models.value_models import Atom

ANONYMOUS = "_"


@dataclass(frozen=True)
class RelationSchema:
    """A named relation schema: its subtype of the scheme, declared column order and key."""
    name: str
    signature: Signature
    order: tuple
    key: Optional[frozenset] = None

    def __post_init__(self):
        order = tuple(Index.coerce(i) for i in self.order)
        object.__setattr__(self, "order", order)
        if set(order) != set(self.signature.index_set) or len(order) != len(self.signature):
            raise IndexSetError(f"Column order of {self.name} does not list its index set exactly")
        if self.key is not None:
            key = frozenset(Index.coerce(i) for i in self.key)
            object.__setattr__(self, "key", key)
            if not key <= self.signature.index_set:
                raise IndexSetError(f"Key of {self.name} is not inside its attributes")

    @property
    def is_positional(self) -> bool:
        return all(idx.is_pos for idx in self.order)


@dataclass(frozen=True, eq=False)
class Scheme:
    """Domains, the global attribute signature A -> domains, and the relation schemas.

    `intensional` maps a builtin relation name to the attributes it is used
    over in this scheme, listed in the builtin's role order.
    """
    domains: Mapping[str, Domain]
    attributes: Signature
    relations: Mapping[str, RelationSchema]
    intensional: Mapping[str, tuple] = field(default_factory=dict)

    def __post_init__(self):
        for name, schema in self.relations.items():
            for idx, domain in schema.signature.items:
                if domain.name not in self.domains:
                    raise TypingError(f"Relation {name} uses unknown domain {domain.name}")
                if idx.is_pos:
                    continue
                if idx not in self.attributes:
                    raise IndexSetError(f"Relation {name} uses undeclared attribute {idx}")
                if self.attributes[idx] != domain:
                    raise TypingError(f"Relation {name} retypes attribute {idx}")
        intensional = {name: tuple(Index.coerce(a) for a in attrs)
                       for name, attrs in self.intensional.items()}
        object.__setattr__(self, "intensional", intensional)
        for name, attrs in intensional.items():
            undeclared = [str(a) for a in attrs if a not in self.attributes]
            if undeclared:
                raise IndexSetError(f"{name} uses undeclared attributes {', '.join(undeclared)}")
            if len(set(attrs)) != len(attrs):
                raise IndexSetError(f"{name} lists an attribute twice")

    def schema(self, name: str) -> RelationSchema:
        return self.relations[name]

    def signature_of(self, name: str) -> Signature:
        return self.relations[name].signature


@dataclass(frozen=True, eq=False)
class Instance:
    """A scheme plus one stored relation per relation schema."""
    scheme: Scheme
    extents: Mapping[str, Relation]

    def __post_init__(self):
        missing = set(self.scheme.relations) - set(self.extents)
        if missing:
            raise IndexSetError(f"No extent for {', '.join(sorted(missing))}")
        for name, relation in self.extents.items():
            if name not in self.scheme.relations:
                raise IndexSetError(f"Extent for unknown relation {name}")
            if relation.signature != self.scheme.signature_of(name):
                raise TypingError(f"Extent of {name} has signature {relation.signature}, "
                                  f"expected {self.scheme.signature_of(name)}")

    def relation(self, name: str) -> Relation:
        return self.extents[name]


@dataclass(frozen=True)
class IntensionalRelation:
    """A relation given by a decidable predicate on the argument atoms, in role order.

    Named arguments bind by role name (or by an attribute signature the scheme
    declares for the relation), never by the order they are written in.
    """
    name: str
    arity: int
    predicate: Callable[[tuple], bool] = field(compare=False)
    accepts: Callable[[Domain], bool] = field(compare=False)
    description: str = ""
    roles: tuple = ()

    def __post_init__(self):
        roles = tuple(Index.coerce(r) for r in self.roles)
        object.__setattr__(self, "roles", roles)
        if roles and (len(roles) != self.arity or len(set(roles)) != len(roles)):
            raise IndexSetError(f"{self.name} needs {self.arity} distinct role names")

    def holds(self, values: tuple[Atom, ...]) -> bool:
        return bool(self.predicate(values))


@dataclass(frozen=True)
class BodyAtom:
    """rel(attr: var, ...) or rel(var, ...); attr is None for positional arguments."""
    relation: str
    args: tuple

    @property
    def is_positional(self) -> bool:
        return all(attr is None for attr, _ in self.args)

    @property
    def variables(self) -> list[str]:
        return [var for _, var in self.args]

    def __str__(self) -> str:
        inner = ", ".join(var if attr is None else f"{attr}: {var}" for attr, var in self.args)
        return f"{self.relation}({inner})"


@dataclass(frozen=True)
class Rule:
    """A single conjunctive rule head(vars) :- atom, ..., atom."""
    name: str
    head: tuple
    body: tuple

    def __post_init__(self):
        if not self.body:
            raise RuleError(f"Rule {self.name} has an empty body")
        if any(v.startswith(ANONYMOUS) for v in self.head):
            raise RuleError("Anonymous variables cannot appear in the head")
        if len(set(self.head)) != len(self.head):
            raise RuleError(f"Head of {self.name} repeats a variable")
        body_vars = {v for atom in self.body for v in atom.variables}
        missing = [v for v in self.head if v not in body_vars]
        if missing:
            raise RuleError(f"Head variables {', '.join(missing)} do not occur in the body")

    def __str__(self) -> str:
        return f"{self.name}({', '.join(self.head)}) :- {', '.join(str(a) for a in self.body)}."


@dataclass(frozen=True)
class FilterExpr:
    """relation:pattern; for intensional relations `order` keeps the argument order."""
    relation: str
    pattern: Pattern
    order: tuple
    intensional: bool = False
    position: int = 0

    @property
    def variables(self) -> frozenset:
        return self.pattern.variables

    def ordered_variables(self) -> list[str]:
        return [self.pattern[idx] for idx in self.order]

    def __str__(self) -> str:
        if all(idx.is_pos for idx in self.order):
            inner = ", ".join(self.pattern[idx] for idx in self.order)
        else:
            inner = ", ".join(f"{idx}: {self.pattern[idx]}" for idx in self.order)
        return f"{self.relation}:⟨{inner}⟩"


@dataclass(frozen=True)
class JoinExpr:
    left: "Expr"
    right: "Expr"

    def __str__(self) -> str:
        return f"{self.left} ⋈ {self.right}"


@dataclass(frozen=True)
class ProjectExpr:
    child: "Expr"
    variables: tuple

    def __str__(self) -> str:
        return f"π_{{{','.join(self.variables)}}}({self.child})"


Expr = Union[FilterExpr, JoinExpr, ProjectExpr]


@dataclass(frozen=True, eq=False)
class CompiledRule:
    """The algebraic form of a rule plus the domain bound to each variable."""
    rule: Rule
    expression: ProjectExpr
    atoms: tuple
    variable_domains: Mapping[str, Domain]

    @property
    def head_signature(self) -> Signature:
        return Signature({Index(v): self.variable_domains[v] for v in self.rule.head})


@dataclass(frozen=True)
class PlanStep:
    """scan: first finite atom; join: join a finite atom in; test: apply an intensional atom."""
    kind: str
    atom: FilterExpr
    estimated_size: int
    bound_after: tuple

    def describe(self) -> str:
        bound = "{" + ", ".join(self.bound_after) + "}"
        if self.kind == "test":
            return f"test   {self.atom}  as a per-tuple predicate, bound {bound}"
        verb = "scan  " if self.kind == "scan" else "join  "
        return f"{verb} {self.atom}  ({self.estimated_size} stored tuples), bound {bound}"


@dataclass(frozen=True, eq=False)
class Plan:
    compiled: CompiledRule
    steps: tuple

    @property
    def head(self) -> tuple:
        return self.compiled.rule.head

    def finite_order(self) -> list[int]:
        return [s.atom.position for s in self.steps if s.kind != "test"]

    def explain(self) -> str:
        lines = [
            f"rule:        {self.compiled.rule}",
            f"expression:  {self.compiled.expression}",
            "plan:",
        ]
        for n, step in enumerate(self.steps, start=1):
            lines.append(f"  {n}. {step.describe()}")
        lines.append(f"  {len(self.steps) + 1}. project on ({', '.join(self.head)})")
        return "\n".join(lines)

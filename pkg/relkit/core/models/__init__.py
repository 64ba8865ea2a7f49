"""Data models."""
from relkit.core.models.binrel_models import BinaryRelation
from relkit.core.models.function_models import Function
from relkit.core.models.kind_models import EndoClass, FunctionClass, OutputFormat, RelationProperty, SetOpKind
from relkit.core.models.relation_models import Pattern, Relation
from relkit.core.models.tuple_models import Domain, Index, Signature, Tuple
from relkit.core.models.value_models import EMPTY, Atom, FinSet, Partition, Value, value_key

__all__ = [
    "Atom",
    "BinaryRelation",
    "Domain",
    "EMPTY",
    "EndoClass",
    "FinSet",
    "Function",
    "FunctionClass",
    "Index",
    "OutputFormat",
    "Partition",
    "Pattern",
    "Relation",
    "RelationProperty",
    "SetOpKind",
    "Signature",
    "Tuple",
    "Value",
    "value_key",
]

"""Enumerations naming operation variants and property labels."""
from enum import Enum


class SetOpKind(str, Enum):
    """The three extensional set operations."""
    UNION = "union"
    INTERSECTION = "intersection"
    DIFFERENCE = "difference"


class RelationProperty(str, Enum):
    """Properties of a binary relation decided by enumeration."""
    TOTAL = "total"
    SINGLE_VALUED = "single_valued"
    SURJECTIVE = "surjective"
    INJECTIVE = "injective"


class EndoClass(str, Enum):
    """Labels of the endo-relation taxonomy."""
    REFLEXIVE = "reflexive"
    SYMMETRIC = "symmetric"
    TRANSITIVE = "transitive"
    ANTISYMMETRIC = "antisymmetric"
    ORDER_TOTAL = "order_total"
    EQUIVALENCE = "equivalence"
    PREORDER = "preorder"
    PARTIAL_ORDER = "partial_order"
    TOTAL_ORDER = "total_order"


class FunctionClass(str, Enum):
    """Classification of a function."""
    INJECTIVE = "injective"
    SURJECTIVE = "surjective"
    BIJECTIVE = "bijective"


class OutputFormat(str, Enum):
    """Result printing formats."""
    TABLE = "table"
    CSV = "csv"
    TSV = "tsv"

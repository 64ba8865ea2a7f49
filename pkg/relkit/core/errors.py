"""Exception hierarchy for relkit.

All errors derive from ValueError so callers that only care about bad input
can keep catching that.
"""
from typing import Optional


class RelkitError(ValueError):
    """Base error for relkit."""


class LimitExceededError(RelkitError):
    """A materialization would exceed a configured limit."""

    def __init__(self, what: str, size: int, limit: int):
        self.what = what
        self.size = size
        self.limit = limit
        super().__init__(f"{what}: size {size} exceeds limit {limit} (see RELKIT_LIMIT)")


class MalformedEncodingError(RelkitError):
    """A set is not a Kuratowski pair or von Neumann numeral."""


class EmptyFamilyError(RelkitError):
    """An operation needs a nonempty family of sets."""


class PartitionError(RelkitError):
    """Invalid partition, or partitions over different ground sets."""


class MismatchError(RelkitError):
    """Sources, targets or signatures do not line up."""


class FunctionDefinitionError(RelkitError):
    """A table or rule does not define a total map into the target."""


class PropertyError(RelkitError):
    """A required property (bijective, equivalence, endo, ...) does not hold."""


class TypingError(RelkitError):
    """A tuple is not typed by a signature, or signatures are not summable."""


class IndexSetError(RelkitError):
    """Duplicate index, index outside an index set, or a non-sequence."""


class IntensionalDomainError(RelkitError):
    """Enumeration was asked of a builtin (intensional) domain."""


class RuleError(RelkitError):
    """Base for rule parsing, compilation and planning failures."""


class RuleSyntaxError(RuleError):
    """Rule text does not parse."""

    def __init__(self, message: str, line: int = 1, column: int = 1):
        self.line = line
        self.column = column
        super().__init__(f"{message} (line {line}, column {column})")


class UnknownNameError(RuleError):
    """A rule refers to a relation or attribute the scheme does not have."""


class UnsafeRuleError(RuleError):
    """A head or intensional variable is never bound by a finite atom."""

    def __init__(self, message: str, variables: tuple[str, ...] = ()):
        self.variables = variables
        super().__init__(message)


class InputError(RelkitError):
    """Base for schema and data loading failures."""


class SchemaFileError(InputError):
    """The schema file is missing, malformed or inconsistent."""


class DataFileError(InputError):
    """A data file row cannot be turned into a typed tuple."""

    def __init__(self, message: str, path: Optional[str] = None, line: Optional[int] = None):
        self.path = path
        self.line = line
        where = ""
        if path is not None:
            where = f"{path}:{line}: " if line is not None else f"{path}: "
        super().__init__(f"{where}{message}")


class ConfigError(InputError):
    """An environment setting cannot be parsed."""

"""Pydantic models for the YAML schema file."""
from typing import Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, model_validator


class EnumeratedDomainModel(BaseModel):
    """A domain listing its members."""
    model_config = ConfigDict(extra="forbid")

    members: list[Union[int, str]] = Field(min_length=1)


class BuiltinDomainModel(BaseModel):
    """A builtin, intensional domain."""
    model_config = ConfigDict(extra="forbid")

    builtin: Literal["natural", "text"]


class RelationModel(BaseModel):
    """Either named attributes (with an optional key) or positional column domains."""
    model_config = ConfigDict(extra="forbid")

    attributes: Optional[list[str]] = None
    domains: Optional[list[str]] = None
    key: Optional[list[Union[str, int]]] = None

    @model_validator(mode="after")
    def one_layout(self):
        if (self.attributes is None) == (self.domains is None):
            raise ValueError("give exactly one of 'attributes' or 'domains'")
        return self


class SchemaFileModel(BaseModel):
    """Top level of a schema file.

    `intensional` lists, per builtin relation, the attributes it ranges over in
    this scheme (in the builtin's role order), e.g. `leq: [rqty, pqty]`.
    """
    model_config = ConfigDict(extra="forbid")

    domains: dict[str, Union[EnumeratedDomainModel, BuiltinDomainModel]]
    attributes: dict[str, str] = {}
    relations: dict[str, RelationModel]
    intensional: dict[str, list[str]] = {}

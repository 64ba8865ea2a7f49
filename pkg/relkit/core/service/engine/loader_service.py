"""Loading a scheme from a YAML file and an instance from one CSV per relation."""
import csv
import io
from pathlib import Path
from typing import Mapping, Optional, Union

import logfire
import yaml
from pydantic import ValidationError

from relkit.core.errors import DataFileError, RelkitError, SchemaFileError
from relkit.core.models.engine_models import Instance, IntensionalRelation, RelationSchema, Scheme
from relkit.core.models.relation_models import Relation
from relkit.core.models.schema_file_models import EnumeratedDomainModel, SchemaFileModel
from relkit.core.models.tuple_models import Domain, Index, Signature, Tuple
from relkit.core.service.engine.builtin_service import builtin_relations
from relkit.core.service.relations.relation_service import key_check

PathLike = Union[str, Path]


def _domain(name: str, decl) -> Domain:
    if isinstance(decl, EnumeratedDomainModel):
        return Domain.enumerated(name, decl.members)
    return Domain.builtin(name, decl.builtin)


def scheme_from_model(model: SchemaFileModel,
                      builtins: Optional[Mapping[str, IntensionalRelation]] = None) -> Scheme:
    """Build a Scheme, checking every domain and attribute reference."""
    builtins = builtin_relations() if builtins is None else builtins
    try:
        domains = {name: _domain(name, decl) for name, decl in model.domains.items()}
    except RelkitError as e:
        raise SchemaFileError(str(e)) from e

    def lookup(domain_name: str, where: str) -> Domain:
        if domain_name not in domains:
            raise SchemaFileError(f"{where} refers to unknown domain {domain_name}")
        return domains[domain_name]

    attributes = {Index(a): lookup(d, f"Attribute {a}") for a, d in model.attributes.items()}
    relations = {}
    for name, rel in model.relations.items():
        if name in builtins:
            raise SchemaFileError(f"Relation {name} clashes with the builtin relation of that name")
        if rel.attributes is not None:
            unknown = [a for a in rel.attributes if Index(a) not in attributes]
            if unknown:
                raise SchemaFileError(f"Relation {name} uses undeclared attributes {', '.join(unknown)}")
            order = tuple(Index(a) for a in rel.attributes)
            signature = {idx: attributes[idx] for idx in order}
        else:
            order = tuple(Index(i) for i in range(len(rel.domains)))
            signature = {Index(i): lookup(d, f"Relation {name}") for i, d in enumerate(rel.domains)}
        try:
            relations[name] = RelationSchema(
                name, Signature(signature), order,
                None if rel.key is None else frozenset(Index.coerce(k) for k in rel.key))
        except RelkitError as e:
            raise SchemaFileError(f"Relation {name}: {e}") from e
    intensional = {}
    for name, attrs in model.intensional.items():
        if name not in builtins:
            raise SchemaFileError(f"intensional.{name}: no builtin relation of that name")
        builtin = builtins[name]
        if len(attrs) != builtin.arity:
            raise SchemaFileError(
                f"intensional.{name}: {builtin.arity} attributes expected, {len(attrs)} given")
        for a in attrs:
            if Index(a) not in attributes:
                raise SchemaFileError(f"intensional.{name} uses undeclared attribute {a}")
            if not builtin.accepts(attributes[Index(a)]):
                raise SchemaFileError(
                    f"intensional.{name}: {name} does not accept attribute {a} "
                    f"of domain {attributes[Index(a)].name}")
        intensional[name] = tuple(Index(a) for a in attrs)
    try:
        return Scheme(domains, Signature(attributes), relations, intensional)
    except RelkitError as e:
        raise SchemaFileError(str(e)) from e


def _bad_byte_line(e: UnicodeDecodeError) -> int:
    return e.object.count(b"\n", 0, e.start) + 1


def load_scheme(path: PathLike) -> Scheme:
    """Read and validate a YAML schema file.

    Raises:
        SchemaFileError: if the file is missing, is not UTF-8 YAML or is inconsistent.
    """
    path = Path(path)
    try:
        raw = yaml.safe_load(path.read_bytes().decode("utf-8"))
    except OSError as e:
        raise SchemaFileError(f"{path}: cannot read schema file ({e.strerror})") from e
    except UnicodeDecodeError as e:
        raise SchemaFileError(f"{path}:{_bad_byte_line(e)}: not valid UTF-8 ({e.reason})") from e
    except yaml.YAMLError as e:
        raise SchemaFileError(f"{path}: not valid YAML: {e}") from e
    try:
        model = SchemaFileModel.model_validate(raw)
    except ValidationError as e:
        first = e.errors()[0]
        where = ".".join(str(p) for p in first["loc"])
        raise SchemaFileError(f"{path}: {where}: {first['msg']}") from e
    scheme = scheme_from_model(model)
    logfire.info(f"Loaded scheme {path} with relations {', '.join(sorted(scheme.relations))}")
    return scheme


def _header_index(text: str) -> Index:
    text = text.strip()
    return Index(int(text)) if text.isascii() and text.isdigit() else Index(text)


def read_extent(schema: RelationSchema, path: PathLike) -> Relation:
    """Read one CSV file into a relation of the given schema.

    Columns bind by the header row (attribute names, or 0..n-1 for positional
    relations), so column order is immaterial.
    Duplicate rows collapse.
    """
    path = Path(path)
    signature = schema.signature
    tuples = set()
    try:
        content = path.read_bytes().decode("utf-8")
    except OSError as e:
        raise DataFileError(f"cannot read data file ({e.strerror})", str(path)) from e
    except UnicodeDecodeError as e:
        raise DataFileError(f"not valid UTF-8 ({e.reason})", str(path), _bad_byte_line(e)) from e
    try:
        with io.StringIO(content, newline="") as f:
            reader = csv.reader(f)
            header = next(reader, None)
            if header is None:
                raise DataFileError("missing header row", str(path), 1)
            try:
                columns = [_header_index(h) for h in header]
            except RelkitError as e:
                raise DataFileError(f"bad header: {e}", str(path), 1) from e
            if len(set(columns)) != len(columns) or set(columns) != signature.index_set:
                raise DataFileError(
                    f"header {', '.join(header)} does not list the attributes "
                    f"{signature.index_label()} of {schema.name} exactly", str(path), 1)
            for row in reader:
                line = reader.line_num
                if not row:
                    continue
                if len(row) != len(columns):
                    raise DataFileError(
                        f"expected {len(columns)} fields, found {len(row)}", str(path), line)
                entries = {}
                for idx, text in zip(columns, row):
                    domain = signature[idx]
                    try:
                        entries[idx] = domain.parse(text)
                    except RelkitError as e:
                        raise DataFileError(f"column {idx}: {e}", str(path), line) from e
                tuples.add(Tuple(entries))
    except csv.Error as e:
        raise DataFileError(f"malformed CSV: {e}", str(path)) from e
    return Relation(signature, frozenset(tuples))


def load_instance(scheme: Scheme, data_dir: PathLike) -> Instance:
    """Read `<data_dir>/<relation>.csv` for every relation and check declared keys.

    Raises:
        DataFileError: on unreadable files, bad rows or key violations.
    """
    data_dir = Path(data_dir)
    extents = {}
    for name, schema in sorted(scheme.relations.items()):
        path = data_dir / f"{name}.csv"
        relation = read_extent(schema, path)
        if schema.key is not None and not key_check(relation, schema.key):
            key = ", ".join(str(k) for k in sorted(schema.key))
            raise DataFileError(f"key ({key}) of {name} is violated", str(path))
        extents[name] = relation
        logfire.debug(f"Loaded {name}: {len(relation)} tuples from {path}")
    instance = Instance(scheme, extents)
    logfire.info(f"Loaded instance from {data_dir}",
                 extra={name: len(r) for name, r in extents.items()})
    return instance

"""Shared fixtures: logfire kept local, and the two example databases built in memory."""
import logfire
import pytest

from relkit.core.models.engine_models import Instance
from relkit.core.models.relation_models import Relation
from relkit.core.models.schema_file_models import SchemaFileModel
from relkit.core.models.tuple_models import Domain, Signature, Tuple
from relkit.core.models.value_models import FinSet
from relkit.core.service.engine.loader_service import scheme_from_model

logfire.configure(send_to_logfire=False, console=False)

CITIES_PARTS_SCHEMA = {
    "domains": {
        "sid": {"members": [321, 322, 323]},
        "pid": {"members": [213, 214, 215]},
        "rid": {"members": [132, 133, 134]},
        "name": {"builtin": "text"},
        "city": {"builtin": "text"},
        "qty": {"builtin": "natural"},
    },
    "attributes": {
        "sid": "sid", "sname": "name", "city": "city", "pid": "pid",
        "pname": "name", "pqty": "qty", "rid": "rid", "rqty": "qty",
    },
    "relations": {
        "suppliers": {"attributes": ["sid", "sname", "city"], "key": ["sid"]},
        "parts": {"attributes": ["pid", "pname", "sid", "pqty"], "key": ["pid"]},
        "projects": {"attributes": ["rid", "pid", "rqty"], "key": ["rid"]},
    },
    "intensional": {"leq": ["rqty", "pqty"]},
}

CITIES_PARTS_ROWS = {
    "suppliers": [
        {"sid": 321, "sname": "lee", "city": "tulsa"},
        {"sid": 322, "sname": "poe", "city": "taos"},
        {"sid": 323, "sname": "ray", "city": "tulsa"},
    ],
    "parts": [
        {"pid": 213, "pname": "hose", "sid": 322, "pqty": 13},
        {"pid": 214, "pname": "tube", "sid": 321, "pqty": 6},
        {"pid": 215, "pname": "shim", "sid": 322, "pqty": 18},
    ],
    "projects": [
        {"rid": 132, "pid": 215, "rqty": 2},
        {"rid": 133, "pid": 214, "rqty": 11},
        {"rid": 134, "pid": 213, "rqty": 18},
    ],
}

PARENT_CHILD_SCHEMA = {
    "domains": {"person": {"builtin": "text"}},
    "relations": {"pc": {"domains": ["person", "person"]}},
}

PARENT_CHILD_ROWS = {
    "pc": [{0: "mary", 1: "john"}, {0: "john", 1: "alan"}, {0: "mary", 1: "joan"}],
}

SHIM_IN_TAOS = (
    "answer(PN, C) :- suppliers(sid: S, sname: _, city: C), "
    "parts(pid: P, pname: PN, sid: S, pqty: Q1), projects(rid: _, pid: P, rqty: Q2), "
    "leq(rqty: Q2, pqty: Q1)."
)
GRANDPARENT = "answer(x, z) :- pc(x, y), pc(y, z)."


def build_instance(schema: dict, rows: dict) -> Instance:
    scheme = scheme_from_model(SchemaFileModel.model_validate(schema))
    extents = {}
    for name, relation_schema in scheme.relations.items():
        signature = relation_schema.signature
        tuples = frozenset(
            Tuple({k: signature[k].atom(v) for k, v in row.items()}) for row in rows.get(name, ()))
        extents[name] = Relation(signature, tuples)
    return Instance(scheme, extents)


@pytest.fixture
def cities_parts() -> Instance:
    return build_instance(CITIES_PARTS_SCHEMA, CITIES_PARTS_ROWS)


@pytest.fixture
def parent_child() -> Instance:
    return build_instance(PARENT_CHILD_SCHEMA, PARENT_CHILD_ROWS)


@pytest.fixture
def ab() -> Domain:
    return Domain.enumerated("ab", ["a", "b"])


@pytest.fixture
def aabb(ab) -> Relation:
    """Three-column relation over {a, b} with extent <a,a,a>, <a,a,b>, <b,a,b>."""
    signature = Signature({0: ab, 1: ab, 2: ab})
    rows = ["aaa", "aab", "bab"]
    return Relation(signature, frozenset(
        Tuple({i: ab.atom(c) for i, c in enumerate(row)}) for row in rows))


@pytest.fixture
def abc() -> FinSet:
    return FinSet.atoms("a", "b", "c")


@pytest.fixture
def shim_in_taos_rule() -> str:
    return SHIM_IN_TAOS


@pytest.fixture
def grandparent_rule() -> str:
    return GRANDPARENT


@pytest.fixture
def instance_builder():
    return build_instance

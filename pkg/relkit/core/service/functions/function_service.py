"""Construction, restriction, sum, composition, classification and inverses of functions."""
from itertools import product
from typing import Callable, Optional

import logfire

from relkit.core.config.general_config import settings
from relkit.core.errors import (
    FunctionDefinitionError,
    LimitExceededError,
    MismatchError,
    PropertyError,
)
from relkit.core.models.binrel_models import BinaryRelation
from relkit.core.models.function_models import Function, TableInput
from relkit.core.models.kind_models import FunctionClass
from relkit.core.models.value_models import DEFAULT_DOMAIN, Atom, FinSet, Value


def fn_make(source: FinSet, target: FinSet, table: TableInput) -> Function:
    """Table-form function; every source element needs exactly one entry in target."""
    return Function(source, target, table=table)


def fn_rule(source: FinSet, target: FinSet, procedure: Callable[[Value], Value]) -> Function:
    """Rule-form function, spot-checked on a sample of the source."""
    return Function(source, target, rule=procedure)


def fn_apply(f: Function, x: Value) -> Value:
    return f(x)


def fn_identity(s: FinSet) -> Function:
    return Function(s, s, table={x: x for x in s})


def fn_to_binrel(f: Function) -> BinaryRelation:
    return BinaryRelation(f.source, f.target, frozenset(f.items()))


def fn_from_binrel(r: BinaryRelation) -> Function:
    """The function whose graph is the functional relation r."""
    table: dict = {}
    for x, y in r.sorted_pairs():
        if x in table:
            raise PropertyError(f"Relation is not single-valued at {x}")
        table[x] = y
    if len(table) != len(r.source):
        missing = [str(x) for x in r.source if x not in table]
        raise PropertyError(f"Relation is not total, nothing related to {', '.join(missing)}")
    return Function(r.source, r.target, table=table)


def fn_restrict(f: Function, subset: FinSet) -> Function:
    """f restricted to source intersected with subset; the target is kept."""
    source = f.source & subset
    if f.is_table:
        return Function(source, f.target, table={x: f(x) for x in source})
    return Function(source, f.target, rule=f.rule)


def insertion_fn(subset: FinSet, s: FinSet) -> Function:
    """The insertion of subset into s: x -> x with target s."""
    if not subset.issubset(s):
        raise MismatchError(f"{subset} is not a subset of {s}")
    return Function(subset, s, table={x: x for x in subset})


def characteristic_fn(subset: FinSet, s: FinSet, domain: str = DEFAULT_DOMAIN) -> Function:
    """The function in s -> {0, 1} mapping x to 1 iff x is in subset."""
    zero, one = Atom(domain, 0), Atom(domain, 1)
    return Function(s, FinSet.of(zero, one), table={x: one if x in subset else zero for x in s})


def fn_summable(f0: Function, f1: Function) -> bool:
    return all(f0(x) == f1(x) for x in f0.source & f1.source)


def fn_sum(f0: Function, f1: Function) -> Function:
    """f0 + f1 in (S0 U S1) -> (T0 U T1)."""
    for x in f0.source & f1.source:
        if f0(x) != f1(x):
            raise MismatchError(f"Functions disagree at {x}: {f0(x)} versus {f1(x)}")
    source = f0.source | f1.source
    target = f0.target | f1.target
    if f0.is_table and f1.is_table:
        table = {x: f0(x) for x in f0.source}
        table.update({x: f1(x) for x in f1.source})
        return Function(source, target, table=table)

    def summed(x: Value) -> Value:
        return f0(x) if x in f0.source else f1(x)

    return Function(source, target, rule=summed)


def fn_compose(g: Function, f: Function) -> Function:
    """g o f, defined when the target of f is the source of g."""
    if f.target != g.source:
        raise MismatchError(f"Cannot compose: target {f.target} is not the source {g.source}")
    if f.is_table and g.is_table:
        return Function(f.source, g.target, table={x: g(y) for x, y in f.items()})

    def composed(x: Value) -> Value:
        return g(f(x))

    return Function(f.source, g.target, rule=composed)


def _require_table(f: Function, operation: str) -> None:
    if not f.is_table:
        raise FunctionDefinitionError(f"{operation} needs a table-form function")


def fn_image(f: Function) -> FinSet:
    return FinSet(frozenset(y for _, y in f.items()))


def fn_classify(f: Function) -> frozenset:
    _require_table(f, "Classification")
    labels = set()
    values = [y for _, y in f.items()]
    if len(values) == len(set(values)):
        labels.add(FunctionClass.INJECTIVE)
    if set(values) == set(f.target.elements):
        labels.add(FunctionClass.SURJECTIVE)
    if {FunctionClass.INJECTIVE, FunctionClass.SURJECTIVE} <= labels:
        labels.add(FunctionClass.BIJECTIVE)
    return frozenset(labels)


def fn_inverse(f: Function) -> Function:
    """The unique g with g o f = id_S and f o g = id_T."""
    if FunctionClass.BIJECTIVE not in fn_classify(f):
        raise PropertyError(f"{f} is not bijective and has no inverse")
    return Function(f.target, f.source, table={y: x for x, y in f.items()})


def fn_left_inverse(f: Function) -> Function:
    """Some g with g o f = id_S; targets outside the image map to the least source element."""
    if FunctionClass.INJECTIVE not in fn_classify(f):
        raise PropertyError(f"{f} is not injective and has no left inverse")
    if not f.source:
        raise PropertyError("A function with empty source has no left inverse here")
    fallback = f.source.sorted()[0]
    back = {y: x for x, y in f.items()}
    return Function(f.target, f.source, table={y: back.get(y, fallback) for y in f.target})


def fn_right_inverse(f: Function) -> Function:
    """Some g with f o g = id_T; each target picks its least preimage."""
    if FunctionClass.SURJECTIVE not in fn_classify(f):
        raise PropertyError(f"{f} is not surjective and has no right inverse")
    if not f.source:
        raise PropertyError("A function with empty source has no right inverse here")
    table: dict = {}
    for x, y in f.items():
        # items() walks the source in canonical order, so the first preimage is the least
        table.setdefault(y, x)
    return Function(f.target, f.source, table=table)


def count_functions(source: FinSet, target: FinSet) -> int:
    """|T|^|S|, counting the single function out of the empty set."""
    return len(target) ** len(source)


def enumerate_functions(source: FinSet, target: FinSet, limit: Optional[int] = None) -> list[Function]:
    """Every function in source -> target, each once, in lexicographic order of values."""
    limit = settings.limits.functions if limit is None else limit
    count = count_functions(source, target)
    if count > limit:
        logfire.warning(f"Refusing to enumerate {count} functions (limit {limit})")
        raise LimitExceededError("function enumeration", count, limit)
    xs = source.sorted()
    ys = target.sorted()
    return [Function(source, target, table=dict(zip(xs, choice))) for choice in product(ys, repeat=len(xs))]

"""Tuples over index sets: sequences, subtuples, typing and Cartesian products."""
from itertools import product
from math import prod
from typing import Iterable, Mapping, Optional, Union

import logfire

from relkit.core.config.general_config import settings
from relkit.core.errors import IndexSetError, IntensionalDomainError, LimitExceededError, TypingError
from relkit.core.models.function_models import Function
from relkit.core.models.tuple_models import (
    INDEX_DOMAIN,
    Index,
    IndexLike,
    Signature,
    Tuple,
)
from relkit.core.models.value_models import Atom, FinSet
from relkit.core.service.functions.function_service import fn_compose

Entries = Union[Mapping[IndexLike, Atom], Iterable[tuple[IndexLike, Atom]]]


def tuple_make(entries: Entries) -> Tuple:
    """Tuple from (index, atom) entries; a repeated index is an error."""
    return Tuple(entries)


def seq_make(*values: Atom) -> Tuple:
    """The sequence <v0, ..., vn-1>, indexed by positions 0..n-1."""
    return Tuple(tuple(enumerate(values)))


def seq_concat(alpha: Tuple, beta: Tuple) -> Tuple:
    """alpha . beta: beta's components follow alpha's."""
    for s in (alpha, beta):
        if not s.is_sequence:
            raise IndexSetError(f"{s} is not a sequence")
    m = len(alpha)
    return Tuple(tuple(alpha.items) + tuple((Index(m + idx.key), v) for idx, v in beta.items))


def subtuple(t: Tuple, keys: Iterable[IndexLike]) -> Tuple:
    """pi_J(t) = t restricted to J intersected with the index set of t."""
    return t.restrict(keys)


def is_typed_by(t: Tuple, signature: Signature) -> bool:
    """Same index set and t(i) in tau(i) for every index."""
    return signature.types(t)


def subtype(signature: Signature, keys: Iterable[IndexLike]) -> Signature:
    return signature.restrict(keys)


def signature_summable(s0: Signature, s1: Signature) -> bool:
    return all(s0[idx] == s1[idx] for idx in s0.index_set & s1.index_set)


def signature_sum(s0: Signature, s1: Signature) -> Signature:
    """tau0 + tau1 over the union of the index sets."""
    if not signature_summable(s0, s1):
        clashes = sorted(
            (idx for idx in s0.index_set & s1.index_set if s0[idx] != s1[idx]), key=Index.sort_key)
        raise TypingError(
            "Signatures are not summable at "
            + ", ".join(f"{idx} ({s0[idx].name} vs {s1[idx].name})" for idx in clashes))
    merged = s0.as_dict()
    merged.update(s1.as_dict())
    return Signature(merged)


def tuple_summable(t0: Tuple, t1: Tuple) -> bool:
    return all(t0[idx] == t1[idx] for idx in t0.index_set & t1.index_set)


def tuple_sum(t0: Tuple, t1: Tuple) -> Tuple:
    if not tuple_summable(t0, t1):
        raise TypingError(f"Tuples {t0} and {t1} disagree on a shared index")
    merged = t0.as_dict()
    merged.update(t1.as_dict())
    return Tuple(merged)


def cart_size(signature: Signature) -> int:
    if not signature.is_enumerable:
        raise IntensionalDomainError(
            f"Signature {signature} has a builtin domain and no finite Cartesian product")
    return prod(len(d.members) for d in signature.values())


def cart_enumerate(signature: Signature, limit: Optional[int] = None) -> frozenset:
    """All tuples typed by the signature.

    Raises:
        IntensionalDomainError: if a domain is builtin.
        LimitExceededError: if the product is larger than the cart limit.
    """
    limit = settings.limits.cart if limit is None else limit
    size = cart_size(signature)
    if size > limit:
        logfire.warning(f"Refusing to enumerate cart({signature}) of size {size} (limit {limit})")
        raise LimitExceededError("Cartesian product", size, limit)
    indexes = signature.indexes()
    choices = [signature[idx].members.sorted() for idx in indexes]
    return frozenset(Tuple(tuple(zip(indexes, combo))) for combo in product(*choices))


def cart_contains(signature: Signature, t: Tuple) -> bool:
    return is_typed_by(t, signature)


def tuple_as_function(t: Tuple, target: Optional[FinSet] = None) -> Function:
    """The tuple viewed as a function from index atoms to its components."""
    target = FinSet.from_iterable(t.values()) if target is None else target
    return Function(
        FinSet.from_iterable(idx.as_value() for idx in t),
        target,
        table={idx.as_value(): v for idx, v in t.items},
    )


def signature_as_function(signature: Signature) -> Function:
    """The signature viewed as a function from index atoms to domain atoms."""
    return Function(
        FinSet.from_iterable(idx.as_value() for idx in signature),
        FinSet.from_iterable(d.as_value() for d in signature.values()),
        table={idx.as_value(): d.as_value() for idx, d in signature.items},
    )


def function_as_tuple(f: Function) -> Tuple:
    """Inverse of tuple_as_function: the source must consist of index atoms."""
    entries = []
    for x, y in f.items():
        if not isinstance(x, Atom) or x.domain != INDEX_DOMAIN:
            raise IndexSetError(f"{x} is not an index")
        entries.append((Index(x.payload), y))
    return Tuple(entries)


def index_sequence(*keys: IndexLike) -> Tuple:
    """A sequence whose components are indexes, e.g. <0, 2, 4>."""
    return seq_make(*(Index.coerce(k).as_value() for k in keys))


def tuple_compose(t: Tuple, selector: Tuple) -> Tuple:
    """t o s for a tuple s whose components are indexes of t."""
    inner_target = FinSet.from_iterable(idx.as_value() for idx in t)
    inner = tuple_as_function(selector, target=inner_target)
    return function_as_tuple(fn_compose(tuple_as_function(t), inner))

"""Relations: construction, set-like operations, projection, cylinders and keys."""
from itertools import combinations
from typing import Iterable, Mapping, Optional, Union

import logfire

from relkit.core.config.general_config import settings
from relkit.core.errors import (
    IndexSetError,
    IntensionalDomainError,
    LimitExceededError,
    MismatchError,
    TypingError,
)
from relkit.core.models.kind_models import SetOpKind
from relkit.core.models.relation_models import Relation
from relkit.core.models.tuple_models import IndexLike, Signature, Tuple, index_set, sorted_indexes
from relkit.core.models.value_models import Value
from relkit.core.service.tuples.tuple_service import (
    cart_enumerate,
    cart_size,
    signature_sum,
    subtuple,
    subtype,
    tuple_sum,
)


def rel_make(signature: Signature, tuples: Iterable[Tuple]) -> Relation:
    """Relation <tau, E>; duplicate tuples collapse."""
    return Relation(signature, frozenset(tuples))


def empty_relation(signature: Signature) -> Relation:
    return Relation(signature, frozenset())


def _check_same_signature(r0: Relation, r1: Relation) -> None:
    if r0.signature != r1.signature:
        raise MismatchError(f"Signatures {r0.signature} and {r1.signature} differ")


def rel_setops(r0: Relation, r1: Relation, kind: Union[SetOpKind, str]) -> Relation:
    """Extent-wise union, intersection or difference of relations with one signature."""
    _check_same_signature(r0, r1)
    kind = SetOpKind(kind)
    if kind is SetOpKind.UNION:
        extent = r0.extent | r1.extent
    elif kind is SetOpKind.INTERSECTION:
        extent = r0.extent & r1.extent
    else:
        extent = r0.extent - r1.extent
    return Relation(r0.signature, extent)


def rel_subset(r0: Relation, r1: Relation) -> bool:
    _check_same_signature(r0, r1)
    return r0.extent <= r1.extent


def _check_keys(r: Relation, keys: Iterable[IndexLike], what: str) -> frozenset:
    wanted = index_set(keys)
    escaped = wanted - r.index_set
    if escaped:
        raise IndexSetError(
            f"{what}: {', '.join(str(i) for i in sorted_indexes(escaped))} "
            f"not in the index set {{{r.signature.index_label()}}}")
    return wanted


def rel_project(r: Relation, keys: Iterable[IndexLike]) -> Relation:
    """pi_J(<tau, E>) = <tau|J, {t|J | t in E}>."""
    wanted = _check_keys(r, keys, "Projection")
    return Relation(subtype(r.signature, wanted), frozenset(subtuple(t, wanted) for t in r.extent))


def _require_enumerable(signature: Signature, what: str) -> None:
    for idx, domain in signature.items:
        if not domain.is_enumerated:
            raise IntensionalDomainError(
                f"{what}: index {idx} has builtin domain {domain.name}, which cannot be enumerated")


def rel_inverse_project(tuples: Iterable[Tuple], keys: Iterable[IndexLike], signature: Signature,
                        limit: Optional[int] = None) -> Relation:
    """pi^-1_J(S): every t in cart(tau) with t|J in S."""
    limit = settings.limits.relation if limit is None else limit
    wanted = index_set(keys)
    if not wanted <= signature.index_set:
        raise IndexSetError(f"Index set {{{', '.join(map(str, sorted_indexes(wanted)))}}} "
                            f"is not inside {{{signature.index_label()}}}")
    base_signature = subtype(signature, wanted)
    base = [t for t in tuples if base_signature.types(t)]
    new_signature = subtype(signature, signature.index_set - wanted)
    _require_enumerable(new_signature, "Inverse projection")
    size = len(base) * cart_size(new_signature)
    if size > limit:
        logfire.warning(f"Refusing inverse projection of {size} tuples (limit {limit})")
        raise LimitExceededError("inverse projection", size, limit)
    fill = cart_enumerate(new_signature, limit=limit)
    return Relation(signature, frozenset(tuple_sum(s, u) for s in base for u in fill))


def rel_cylinder(r: Relation, signature: Signature, limit: Optional[int] = None) -> Relation:
    """The cylinder in I0 U I1 on r: <tau0 + tau1, {t in cart(tau0 + tau1) | t|I0 in E0}>."""
    total = signature_sum(r.signature, signature)
    if total.index_set == r.index_set:
        return r
    logfire.debug(f"Cylinder of {len(r)} tuples into {{{total.index_label()}}}")
    return rel_inverse_project(r.extent, r.index_set, total, limit=limit)


def key_check(r: Relation, keys: Iterable[IndexLike]) -> bool:
    """True iff t|I' identifies t within the extent."""
    wanted = _check_keys(r, keys, "Key")
    return len({subtuple(t, wanted) for t in r.extent}) == len(r.extent)


def candidate_keys(r: Relation, limit: Optional[int] = None) -> list[frozenset]:
    """All minimal index subsets that pass key_check, smallest first."""
    limit = settings.limits.powerset if limit is None else limit
    indexes = r.signature.indexes()
    if len(indexes) > limit:
        raise LimitExceededError("candidate key search", len(indexes), limit)
    keys: list[frozenset] = []
    for size in range(len(indexes) + 1):
        for combo in combinations(indexes, size):
            candidate = frozenset(combo)
            if any(k <= candidate for k in keys):
                continue
            if key_check(r, candidate):
                keys.append(candidate)
    return keys


def names_all_tuples(r: Relation, naming: Mapping[Value, Tuple]) -> bool:
    """Whether a naming function from names into the extent reaches every tuple."""
    image = set()
    for name, t in naming.items():
        if t not in r.extent:
            raise TypingError(f"Name {name} refers to {t}, which is not in the extent")
        image.add(t)
    return image == set(r.extent)

"""Operations on binary relations, their properties and the endo-relation taxonomy.

All predicates are decided by enumeration over the finite source and target.
"""
from typing import Iterable, Optional, Union

import logfire

from relkit.core.config.general_config import settings
from relkit.core.errors import LimitExceededError, MismatchError, PropertyError
from relkit.core.models.binrel_models import BinaryRelation
from relkit.core.models.kind_models import EndoClass, RelationProperty, SetOpKind
from relkit.core.models.value_models import FinSet, Partition, Value


def br_make(source: FinSet, target: FinSet, extent: Iterable[tuple[Value, Value]] = ()) -> BinaryRelation:
    """Validated binary relation; the empty extent is allowed."""
    return BinaryRelation(source, target, frozenset(extent))


def br_universal(source: FinSet, target: FinSet, limit: Optional[int] = None) -> BinaryRelation:
    """The relation with extent source x target."""
    limit = settings.limits.relation if limit is None else limit
    size = len(source) * len(target)
    if size > limit:
        logfire.warning(f"Refusing universal relation of {size} pairs (limit {limit})")
        raise LimitExceededError("universal binary relation", size, limit)
    return BinaryRelation(source, target, frozenset((x, y) for x in source for y in target))


def _check_same_type(r0: BinaryRelation, r1: BinaryRelation) -> None:
    if r0.source != r1.source or r0.target != r1.target:
        raise MismatchError(
            f"Binary relations over {r0.source} x {r0.target} and {r1.source} x {r1.target} differ")


def br_setops(r0: BinaryRelation, r1: BinaryRelation, kind: Union[SetOpKind, str]) -> BinaryRelation:
    _check_same_type(r0, r1)
    kind = SetOpKind(kind)
    if kind is SetOpKind.UNION:
        extent = r0.extent | r1.extent
    elif kind is SetOpKind.INTERSECTION:
        extent = r0.extent & r1.extent
    else:
        extent = r0.extent - r1.extent
    return BinaryRelation(r0.source, r0.target, extent)


def br_subset(r0: BinaryRelation, r1: BinaryRelation) -> bool:
    _check_same_type(r0, r1)
    return r0.extent <= r1.extent


def br_inverse(r: BinaryRelation) -> BinaryRelation:
    return BinaryRelation(r.target, r.source, frozenset((y, x) for x, y in r.extent))


def br_compose(r0: BinaryRelation, r1: BinaryRelation) -> BinaryRelation:
    """r0 ; r1 = {(x, z) | (x, y) in r0 and (y, z) in r1 for some y}."""
    if r0.target != r1.source:
        raise MismatchError(f"Cannot chain a relation into {r0.target} with one from {r1.source}")
    successors: dict = {}
    for y, z in r1.extent:
        successors.setdefault(y, []).append(z)
    extent = frozenset((x, z) for x, y in r0.extent for z in successors.get(y, ()))
    return BinaryRelation(r0.source, r1.target, extent)


def br_identity(s: FinSet) -> BinaryRelation:
    return BinaryRelation(s, s, frozenset((x, x) for x in s))


def br_image(r: BinaryRelation, x: Value) -> FinSet:
    """{y | (x, y) in r}."""
    return FinSet(frozenset(y for (a, y) in r.extent if a == x))


def br_property(r: BinaryRelation, kind: Union[RelationProperty, str]) -> bool:
    """One of total, single_valued, surjective, injective."""
    kind = RelationProperty(kind)
    if kind is RelationProperty.TOTAL:
        return {x for x, _ in r.extent} == set(r.source.elements)
    if kind is RelationProperty.SURJECTIVE:
        return {y for _, y in r.extent} == set(r.target.elements)
    if kind is RelationProperty.SINGLE_VALUED:
        firsts = [x for x, _ in r.extent]
        return len(firsts) == len(set(firsts))
    seconds = [y for _, y in r.extent]
    return len(seconds) == len(set(seconds))


def is_functional(r: BinaryRelation) -> bool:
    return br_property(r, RelationProperty.SINGLE_VALUED) and br_property(r, RelationProperty.TOTAL)


def br_endo_class(r: BinaryRelation) -> frozenset:
    """Labels of r in the endo-relation taxonomy, via the id-based characterizations."""
    if not r.is_endo:
        raise PropertyError(f"Relation from {r.source} to {r.target} is not an endo-relation")
    ident = br_identity(r.source)
    inverse = br_inverse(r)
    labels: set = set()
    if br_subset(ident, r):
        labels.add(EndoClass.REFLEXIVE)
    if r == inverse:
        labels.add(EndoClass.SYMMETRIC)
    if br_subset(br_compose(r, r), r):
        labels.add(EndoClass.TRANSITIVE)
    if br_subset(br_setops(r, inverse, SetOpKind.INTERSECTION), ident):
        labels.add(EndoClass.ANTISYMMETRIC)
    # r U r^-1 = S x S, without materializing the universal relation
    if len(r.extent | inverse.extent) == len(r.source) ** 2:
        labels.add(EndoClass.ORDER_TOTAL)

    preorder = {EndoClass.REFLEXIVE, EndoClass.TRANSITIVE} <= labels
    if preorder:
        labels.add(EndoClass.PREORDER)
        if EndoClass.SYMMETRIC in labels:
            labels.add(EndoClass.EQUIVALENCE)
        if EndoClass.ANTISYMMETRIC in labels:
            labels.add(EndoClass.PARTIAL_ORDER)
            if EndoClass.ORDER_TOTAL in labels:
                labels.add(EndoClass.TOTAL_ORDER)
    return frozenset(labels)


def br_cover(r: BinaryRelation) -> frozenset:
    """{{y | (x, y) in r} | x in S}; a cover of S when r is reflexive."""
    if not r.is_endo:
        raise PropertyError(f"Relation from {r.source} to {r.target} is not an endo-relation")
    return frozenset(br_image(r, x) for x in r.source)


def equivalence_classes(r: BinaryRelation) -> Partition:
    """The partition of S into classes of the equivalence r."""
    if EndoClass.EQUIVALENCE not in br_endo_class(r):
        raise PropertyError(f"{r} is not an equivalence")
    return Partition(br_cover(r), r.source)


def partition_to_equivalence(p: Partition) -> BinaryRelation:
    """The equivalence whose classes are the cells of p."""
    extent = frozenset((x, y) for cell in p.cells for x in cell for y in cell)
    return BinaryRelation(p.ground, p.ground, extent)

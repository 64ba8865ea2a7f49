"""Natural join by bucketing on shared indexes, plus the cylinder-intersection definition."""
from collections import defaultdict
from typing import Optional

import logfire

from relkit.core.models.kind_models import SetOpKind
from relkit.core.models.relation_models import Relation
from relkit.core.models.tuple_models import sorted_indexes
from relkit.core.service.relations.relation_service import rel_cylinder, rel_setops
from relkit.core.service.tuples.tuple_service import signature_sum, subtuple, tuple_sum


def rel_join(r0: Relation, r1: Relation) -> Relation:
    """r0 join r1 with signature tau0 + tau1.

    The smaller extent is bucketed by its projection on the shared indexes and
    the larger one probes the buckets; cylinders are never materialized.
    """
    signature = signature_sum(r0.signature, r1.signature)
    shared = r0.index_set & r1.index_set
    build, probe = (r0, r1) if len(r0) <= len(r1) else (r1, r0)
    logfire.debug(
        f"Joining {len(r0)} x {len(r1)} tuples on "
        f"{{{', '.join(str(i) for i in sorted_indexes(shared))}}}")

    buckets: dict = defaultdict(list)
    for t in build.extent:
        buckets[subtuple(t, shared)].append(t)

    extent = set()
    for t in probe.extent:
        for match in buckets.get(subtuple(t, shared), ()):
            extent.add(tuple_sum(match, t))
    return Relation(signature, frozenset(extent))


def rel_join_by_cylinders(r0: Relation, r1: Relation, limit: Optional[int] = None) -> Relation:
    """The definitional join: intersection of both cylinders over I0 U I1."""
    return rel_setops(
        rel_cylinder(r0, r1.signature, limit=limit),
        rel_cylinder(r1, r0.signature, limit=limit),
        SetOpKind.INTERSECTION,
    )

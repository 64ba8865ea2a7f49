"""Evaluation of plans against an instance."""
from typing import Mapping, Optional

import logfire

from relkit.core.config.general_config import settings
from relkit.core.errors import LimitExceededError
from relkit.core.models.engine_models import Instance, IntensionalRelation, Plan
from relkit.core.models.relation_models import Relation
from relkit.core.models.tuple_models import Index, Signature, Tuple
from relkit.core.service.engine.builtin_service import builtin_relations
from relkit.core.service.relations.filter_service import rel_filter
from relkit.core.service.relations.join_service import rel_join
from relkit.core.service.relations.relation_service import rel_project


def _apply_test(current: Relation, plan_atom, builtin: IntensionalRelation) -> Relation:
    variables = [Index(v) for v in plan_atom.ordered_variables()]
    kept = frozenset(
        t for t in current.extent if builtin.holds(tuple(t[v] for v in variables)))
    return Relation(current.signature, kept)


def evaluate(plan: Plan, instance: Instance,
             builtins: Optional[Mapping[str, IntensionalRelation]] = None,
             limit: Optional[int] = None) -> Relation:
    """The relation denoted by the plan's expression; the plan only affects cost.

    Raises:
        LimitExceededError: if an intermediate join result exceeds `limit`
            (default: the configured Cartesian product limit).
    """
    builtins = builtin_relations() if builtins is None else builtins
    limit = settings.limits.cart if limit is None else limit
    current: Optional[Relation] = None
    for step in plan.steps:
        if step.kind == "test":
            current = _apply_test(current, step.atom, builtins[step.atom.relation])
            continue
        filtered = rel_filter(instance.relation(step.atom.relation), step.atom.pattern)
        current = filtered if current is None else rel_join(current, filtered)
        if len(current) > limit:
            logfire.warning(f"Intermediate result after {step.atom} exceeds limit {limit}")
            raise LimitExceededError(f"join result after {step.atom}", len(current), limit)
        logfire.debug(f"After {step.atom}: {len(current)} tuples")

    if current is None:
        # every atom was intensional and variable-free
        current = Relation(Signature(()), frozenset({Tuple(())}))
    result = rel_project(current, plan.head)
    logfire.info(f"Evaluated {plan.compiled.rule}: {len(result)} tuples")
    return result

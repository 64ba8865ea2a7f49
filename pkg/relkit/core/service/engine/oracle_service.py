"""Brute-force rule evaluation by enumerating variable assignments.

Used to cross-check the planner and evaluator.
"""
from itertools import product
from math import prod
from typing import Mapping, Optional

from relkit.core.config.general_config import settings
from relkit.core.errors import LimitExceededError
from relkit.core.models.engine_models import CompiledRule, Instance, IntensionalRelation
from relkit.core.models.relation_models import Relation
from relkit.core.models.tuple_models import Index, Tuple
from relkit.core.service.engine.builtin_service import builtin_relations
from relkit.core.service.engine.planner_service import check_safety


def brute_force_evaluate(compiled: CompiledRule, instance: Instance,
                         builtins: Optional[Mapping[str, IntensionalRelation]] = None,
                         limit: Optional[int] = None) -> Relation:
    """Try every assignment of body variables to values seen in the stored extents."""
    builtins = builtin_relations() if builtins is None else builtins
    limit = settings.limits.cart if limit is None else limit
    check_safety(compiled)
    candidates: dict = {}
    for atom in compiled.atoms:
        if atom.intensional:
            continue
        for t in instance.relation(atom.relation).extent:
            for idx, var in atom.pattern.items:
                candidates.setdefault(var, set()).add(t[idx])
    for atom in compiled.atoms:
        for var in atom.variables:
            candidates.setdefault(var, set())

    variables = sorted(candidates)
    size = prod(len(candidates[v]) for v in variables)
    if size > limit:
        raise LimitExceededError("assignment enumeration", size, limit)

    answers = set()
    for values in product(*(sorted(candidates[v], key=str) for v in variables)):
        s = dict(zip(variables, values))
        if all(_atom_holds(atom, s, instance, builtins) for atom in compiled.atoms):
            answers.add(Tuple({Index(v): s[v] for v in compiled.rule.head}))
    return Relation(compiled.head_signature, frozenset(answers))


def _atom_holds(atom, s: dict, instance: Instance, builtins) -> bool:
    if atom.intensional:
        return builtins[atom.relation].holds(tuple(s[v] for v in atom.ordered_variables()))
    t = Tuple({idx: s[var] for idx, var in atom.pattern.items})
    return t in instance.relation(atom.relation).extent

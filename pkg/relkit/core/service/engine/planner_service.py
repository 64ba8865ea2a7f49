"""Join ordering and safety checking for compiled rules."""
from typing import Optional, Sequence

import logfire

from relkit.core.errors import RuleError, UnsafeRuleError
from relkit.core.models.engine_models import CompiledRule, FilterExpr, Instance, Plan, PlanStep


def check_safety(compiled: CompiledRule) -> None:
    """Every head variable and every intensional variable must occur in a finite atom."""
    finite_vars = {v for a in compiled.atoms if not a.intensional for v in a.variables}
    needed = set(compiled.rule.head)
    for a in compiled.atoms:
        if a.intensional:
            needed |= a.variables
    unbound = tuple(sorted(needed - finite_vars))
    if unbound:
        logfire.info(f"Unsafe rule {compiled.rule}: unbound {', '.join(unbound)}")
        raise UnsafeRuleError(
            f"Unsafe rule: {', '.join(unbound)} never bound by a stored relation; "
            "intensional relations such as leq have infinite extents and can only test bound values",
            unbound,
        )


def _greedy_order(finite: list[FilterExpr], sizes: dict) -> list[FilterExpr]:
    remaining = list(finite)
    ordered: list[FilterExpr] = []
    bound: set = set()
    while remaining:
        def rank(atom: FilterExpr) -> tuple:
            disconnected = bool(ordered) and not (atom.variables & bound)
            return (disconnected, sizes[atom.position], atom.position)

        best = min(remaining, key=rank)
        remaining.remove(best)
        ordered.append(best)
        bound |= best.variables
    return ordered


def plan(compiled: CompiledRule, instance: Optional[Instance] = None,
         order: Optional[Sequence[int]] = None) -> Plan:
    """Order finite atoms greedily by stored extent size and defer intensional atoms.

    The next atom is the smallest one sharing a variable with the atoms already
    placed; an atom sharing none (a Cartesian product) comes only after every
    connected one. Ties go to body order. Without an instance all sizes are 0.

    `order` forces a join order, given as body positions of the finite atoms.

    Raises:
        UnsafeRuleError: if a head or intensional variable is never bound.
    """
    check_safety(compiled)
    finite = [a for a in compiled.atoms if not a.intensional]
    tests = [a for a in compiled.atoms if a.intensional]
    sizes = {a.position: len(instance.relation(a.relation)) if instance is not None else 0
             for a in finite}

    if order is not None:
        by_position = {a.position: a for a in finite}
        if sorted(order) != sorted(by_position):
            raise RuleError(f"Join order {list(order)} is not a permutation of {sorted(by_position)}")
        ordered = [by_position[p] for p in order]
    else:
        ordered = _greedy_order(finite, sizes)

    steps = []
    bound: set = set()
    pending = list(tests)
    for n, atom in enumerate(ordered):
        bound |= atom.variables
        steps.append(PlanStep("scan" if n == 0 else "join", atom, sizes[atom.position],
                              tuple(sorted(bound))))
        ready = [t for t in pending if t.variables <= bound]
        for t in ready:
            steps.append(PlanStep("test", t, 0, tuple(sorted(bound))))
            pending.remove(t)

    result = Plan(compiled, tuple(steps))
    logfire.debug(f"Planned {compiled.rule}: order {result.finite_order()}")
    return result

"""Compilation of a conjunctive rule to filterings, joins and a final projection."""
import itertools
from typing import Mapping, Optional

import logfire

from relkit.core.errors import RuleError, TypingError, UnknownNameError
from relkit.core.models.engine_models import (
    ANONYMOUS,
    BodyAtom,
    CompiledRule,
    FilterExpr,
    IntensionalRelation,
    JoinExpr,
    ProjectExpr,
    Rule,
    Scheme,
)
from relkit.core.models.relation_models import Pattern
from relkit.core.models.tuple_models import Domain, Index
from relkit.core.service.engine.builtin_service import builtin_relations


def _stored_pattern(atom: BodyAtom, scheme: Scheme, fresh) -> tuple[Pattern, tuple]:
    schema = scheme.schema(atom.relation)
    if atom.is_positional:
        if len(atom.args) != len(schema.order):
            raise RuleError(
                f"{atom.relation} has {len(schema.order)} attributes, {len(atom.args)} given")
        return Pattern(tuple(zip(schema.order, atom.variables))), schema.order
    entries = {}
    for attr, var in atom.args:
        if attr not in schema.signature:
            raise UnknownNameError(f"Relation {atom.relation} has no attribute {attr}")
        entries[attr] = var
    # attributes left out of a named atom are anonymous
    for idx in schema.order:
        entries.setdefault(idx, next(fresh))
    return Pattern(entries), schema.order


def _intensional_pattern(atom: BodyAtom, builtin: IntensionalRelation,
                         scheme: Scheme) -> tuple[Pattern, tuple]:
    if len(atom.args) != builtin.arity:
        raise RuleError(f"{atom.relation} takes {builtin.arity} arguments, {len(atom.args)} given")
    if atom.is_positional:
        order = tuple(Index(i) for i in range(builtin.arity))
        return Pattern(tuple(zip(order, atom.variables))), order
    # named arguments bind by role or by the scheme's declared attributes, in that order
    given = {attr for attr, _ in atom.args}
    accepted = [builtin.roles, scheme.intensional.get(atom.relation, ())]
    order = next((names for names in accepted if names and set(names) == given), None)
    if order is None:
        options = " or ".join(f"({', '.join(str(n) for n in names)})" for names in accepted if names)
        raise UnknownNameError(
            f"{atom.relation} does not take attributes {', '.join(str(a) for a, _ in atom.args)}; "
            f"expected {options or 'positional arguments'}")
    return Pattern(dict(atom.args)), order


def _bind(domains: dict, variable: str, domain: Domain, where: str) -> None:
    bound = domains.setdefault(variable, domain)
    if bound != domain:
        raise TypingError(
            f"Variable {variable} is bound to domains {bound.name} and {domain.name} ({where}); "
            "the signatures are not summable")


def compile_rule(rule: Rule, scheme: Scheme,
                 builtins: Optional[Mapping[str, IntensionalRelation]] = None) -> CompiledRule:
    """pi_head(r0:p0 join r1:p1 join ...), left-folded in body order.

    Raises:
        UnknownNameError: unknown relation or attribute.
        TypingError: a variable bound to two different domains.
    """
    builtins = builtin_relations() if builtins is None else builtins
    fresh = (f"{ANONYMOUS}{ANONYMOUS}{n}" for n in itertools.count(1))
    atoms = []
    domains: dict = {}
    deferred = []
    for position, atom in enumerate(rule.body):
        if atom.relation in scheme.relations:
            pattern, order = _stored_pattern(atom, scheme, fresh)
            signature = scheme.signature_of(atom.relation)
            for idx, var in pattern.items:
                _bind(domains, var, signature[idx], f"{atom.relation}.{idx}")
            atoms.append(FilterExpr(atom.relation, pattern, order, False, position))
        elif atom.relation in builtins:
            builtin = builtins[atom.relation]
            pattern, order = _intensional_pattern(atom, builtin, scheme)
            atoms.append(FilterExpr(atom.relation, pattern, order, True, position))
            deferred.append((atom, pattern, builtin))
        else:
            raise UnknownNameError(f"Unknown relation {atom.relation}")

    # arguments named by the scheme's intensional attributes take those attributes' domains
    for atom, pattern, builtin in deferred:
        declared = scheme.intensional.get(atom.relation, ())
        for idx, var in pattern.items:
            if idx in declared:
                _bind(domains, var, scheme.attributes[idx], f"{atom.relation}.{idx}")
    for atom, pattern, builtin in deferred:
        for var in pattern.values():
            if var in domains and not builtin.accepts(domains[var]):
                raise TypingError(
                    f"{atom.relation} does not accept {var} of domain {domains[var].name}")

    expression = atoms[0]
    for atom in atoms[1:]:
        expression = JoinExpr(expression, atom)
    compiled = CompiledRule(rule, ProjectExpr(expression, rule.head), tuple(atoms), domains)
    logfire.debug(f"Compiled {rule} to {compiled.expression}")
    return compiled

"""Session state shared by the batch commands and the REPL."""
from dataclasses import dataclass, field
from pathlib import Path
from typing import Mapping, Optional, Union

import logfire

from relkit.app.cli.commands.helper import format_relation, format_scheme_relation
from relkit.core.config import Limits, LimitsConfig, settings
from relkit.core.errors import InputError
from relkit.core.models.engine_models import Instance, IntensionalRelation, Plan
from relkit.core.models.kind_models import OutputFormat
from relkit.core.service.engine.builtin_service import builtin_relations
from relkit.core.service.engine.compiler_service import compile_rule
from relkit.core.service.engine.evaluator_service import evaluate
from relkit.core.service.engine.loader_service import load_instance, load_scheme
from relkit.core.service.engine.planner_service import plan
from relkit.core.service.engine.rule_parser import parse_rule


@dataclass
class Session:
    """A loaded instance and the printing preferences; reloads replace the instance."""
    instance: Optional[Instance] = None
    output_format: OutputFormat = OutputFormat(settings.OUTPUT_FORMAT)
    limits: Limits = field(default_factory=lambda: settings.limits)
    builtins: Mapping[str, IntensionalRelation] = field(default_factory=builtin_relations)

    def require_instance(self) -> Instance:
        if self.instance is None:
            raise InputError("No database loaded; use .load SCHEMA DATADIR")
        return self.instance


def load(session: Session, schema_path: Union[str, Path], data_dir: Union[str, Path]) -> Session:
    """Load a scheme and its data into the session, replacing any previous instance."""
    LimitsConfig.validate(session.limits)
    scheme = load_scheme(schema_path)
    session.instance = load_instance(scheme, data_dir)
    return session


def open_session(schema_path, data_dir, output_format: Optional[OutputFormat] = None) -> Session:
    session = Session() if output_format is None else Session(output_format=output_format)
    return load(session, schema_path, data_dir)


def prepare(session: Session, text: str) -> Plan:
    """Parse, compile and plan a rule against the session's instance."""
    instance = session.require_instance()
    rule = parse_rule(text)
    compiled = compile_rule(rule, instance.scheme, session.builtins)
    return plan(compiled, instance)


def run_query(session: Session, text: str) -> str:
    """Evaluate a rule and format the answer."""
    query_plan = prepare(session, text)
    result = evaluate(query_plan, session.require_instance(), session.builtins,
                      session.limits.cart)
    logfire.info(f"Query {query_plan.compiled.rule.name} returned {len(result)} rows")
    return format_relation(result, query_plan.head, session.output_format)


def explain_query(session: Session, text: str) -> str:
    return prepare(session, text).explain()


def describe_relations(session: Session) -> str:
    """Stored relations with their sizes, then the builtin relations."""
    instance = session.require_instance()
    lines = [f"{name} ({len(instance.relation(name))} tuples)" for name in sorted(instance.extents)]
    lines += [f"{name} (builtin: {b.description})" for name, b in sorted(session.builtins.items())]
    return "\n".join(lines)


def describe_schema(session: Session, name: str) -> str:
    instance = session.require_instance()
    if name in session.builtins:
        b = session.builtins[name]
        text = f"{name}/{b.arity} builtin: {b.description}"
        for names in (b.roles, instance.scheme.intensional.get(name)):
            if names:
                text += f"\n  {name}({', '.join(f'{n}: _' for n in names)})"
        return text
    if name not in instance.scheme.relations:
        raise InputError(f"Unknown relation {name}")
    return format_scheme_relation(instance.scheme, name)

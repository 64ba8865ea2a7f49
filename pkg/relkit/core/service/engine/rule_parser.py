"""Parser for conjunctive rules.

    name(var, ...) :- rel(attr: var, ...), rel(var, ...), ... .

`<-` and `←` are accepted for `:-`; the final dot is optional. Every `_` is a
fresh anonymous variable.
"""
import itertools

import logfire
import pyparsing as pp

from relkit.core.errors import RuleError, RuleSyntaxError
from relkit.core.models.engine_models import ANONYMOUS, BodyAtom, Rule
from relkit.core.models.tuple_models import Index

IDENT = pp.Word(pp.alphas + "_", pp.alphanums + "_")
ATTR = IDENT | pp.Word(pp.nums)
LPAR, RPAR, COLON, DOT = map(pp.Suppress, "():.")
ARROW = pp.Suppress(pp.Literal(":-") | pp.Literal("<-") | pp.Literal("←"))

NAMED_ARG = pp.Group(ATTR("attr") + COLON + IDENT("var"))
POSITIONAL_ARG = pp.Group(IDENT("var"))
ARG = NAMED_ARG | POSITIONAL_ARG

ATOM = pp.Group(
    IDENT("relation") + LPAR + pp.Group(pp.Optional(pp.DelimitedList(ARG)))("args") + RPAR
)
HEAD = IDENT("name") + LPAR + pp.Group(pp.Optional(pp.DelimitedList(IDENT)))("head") + RPAR
RULE = HEAD + ARROW + pp.Group(pp.DelimitedList(ATOM))("body") + pp.Optional(DOT)


def _attr_index(text: str) -> Index:
    return Index(int(text)) if text.isascii() and text.isdigit() else Index(text)


def parse_rule(text: str) -> Rule:
    """Parse rule text into a Rule.

    Raises:
        RuleSyntaxError: with line and column of the first problem.
    """
    try:
        parsed = RULE.parse_string(text, parse_all=True)
    except pp.ParseBaseException as e:
        logfire.debug(f"Rule did not parse: {e.msg} at {e.lineno}:{e.col}")
        raise RuleSyntaxError(f"Cannot parse rule: {e.msg}", e.lineno, e.col) from None

    fresh = (f"{ANONYMOUS}{n}" for n in itertools.count(1))
    body = []
    for atom in parsed["body"]:
        args = []
        for arg in atom["args"]:
            var = arg["var"]
            if var == ANONYMOUS:
                var = next(fresh)
            elif var.startswith(ANONYMOUS):
                raise RuleSyntaxError(f"Variable names may not start with '_': {var}")
            attr = _attr_index(arg["attr"]) if "attr" in arg else None
            args.append((attr, var))
        attrs = [a for a, _ in args]
        if any(a is None for a in attrs) and any(a is not None for a in attrs):
            raise RuleSyntaxError(f"Atom {atom['relation']} mixes named and positional arguments")
        named = [a for a in attrs if a is not None]
        if len(set(named)) != len(named):
            raise RuleSyntaxError(f"Atom {atom['relation']} names an attribute twice")
        body.append(BodyAtom(atom["relation"], tuple(args)))

    head = tuple(parsed["head"])
    try:
        return Rule(parsed["name"], head, tuple(body))
    except RuleError as e:
        raise RuleSyntaxError(str(e)) from None

import random
from itertools import permutations

import pytest

from relkit.core.errors import (
    LimitExceededError,
    RuleError,
    RuleSyntaxError,
    TypingError,
    UnknownNameError,
    UnsafeRuleError,
)
from relkit.core.models.engine_models import Instance
from relkit.core.models.tuple_models import Index
from relkit.core.models.value_models import Atom
from relkit.core.service.engine.builtin_service import builtin_relations
from relkit.core.service.engine.compiler_service import compile_rule
from relkit.core.service.engine.evaluator_service import evaluate
from relkit.core.service.engine.oracle_service import brute_force_evaluate
from relkit.core.service.engine.planner_service import plan
from relkit.core.service.engine.rule_parser import parse_rule


def run(text, instance, order=None):
    compiled = compile_rule(parse_rule(text), instance.scheme)
    return evaluate(plan(compiled, instance, order=order), instance)


def rows(relation, *columns):
    return {tuple(t[Index(c)].payload for c in columns) for t in relation.extent}


class TestParser:
    def test_arrows_and_final_dot(self):
        variants = [
            "answer(x, z) :- pc(x, y), pc(y, z).",
            "answer(x,z) <- pc(x,y), pc(y,z)",
            "answer(x, z) ← pc(x, y),\n    pc(y, z).",
        ]
        parsed = [parse_rule(v) for v in variants]
        assert all(p == parsed[0] for p in parsed)
        assert parsed[0].head == ("x", "z")
        assert [a.relation for a in parsed[0].body] == ["pc", "pc"]

    def test_named_arguments(self):
        rule = parse_rule("q(c) :- suppliers(sid: s, city: c).")
        (atom,) = rule.body
        assert atom.args == ((Index("sid"), "s"), (Index("city"), "c"))

    def test_anonymous_variables_are_fresh(self):
        rule = parse_rule("q(x) :- pc(x, _), pc(_, x).")
        first, second = rule.body
        assert first.variables[1] != second.variables[0]
        assert all(v.startswith("_") for v in (first.variables[1], second.variables[0]))

    @pytest.mark.parametrize("text", [
        "answer(x) :- ",
        "answer(x) pc(x, y).",
        "answer(x) :- pc(x y).",
        "answer(x) :- pc(x, y)) .",
    ])
    def test_syntax_errors_have_positions(self, text):
        with pytest.raises(RuleSyntaxError) as info:
            parse_rule(text)
        assert info.value.line >= 1 and info.value.column >= 1

    @pytest.mark.parametrize("text", [
        "answer(_) :- pc(x, y).",
        "answer(w) :- pc(x, y).",
        "answer(x, x) :- pc(x, y).",
        "answer(x) :- pc(a: x, y).",
        "answer(x) :- pc(a: x, a: y).",
        "answer(_x) :- pc(_x, y).",
    ])
    def test_malformed_rules(self, text):
        with pytest.raises(RuleError):
            parse_rule(text)


class TestCompiler:
    def test_grandparent_expression(self, parent_child, grandparent_rule):
        compiled = compile_rule(parse_rule(grandparent_rule), parent_child.scheme)
        assert str(compiled.expression) == "π_{x,z}(pc:⟨x, y⟩ ⋈ pc:⟨y, z⟩)"

    def test_single_atom_expression(self, parent_child):
        compiled = compile_rule(parse_rule("answer(x, y) :- pc(x, y)."), parent_child.scheme)
        assert str(compiled.expression) == "π_{x,y}(pc:⟨x, y⟩)"

    def test_shim_in_taos_expression(self, cities_parts, shim_in_taos_rule):
        compiled = compile_rule(parse_rule(shim_in_taos_rule), cities_parts.scheme)
        text = str(compiled.expression)
        assert text.startswith("π_{PN,C}(suppliers:⟨")
        assert "⋈ leq:⟨rqty: Q2, pqty: Q1⟩)" in text
        assert compiled.variable_domains["Q1"].name == "qty"
        assert compiled.variable_domains["Q2"].name == "qty"

    def test_unknown_names(self, cities_parts):
        with pytest.raises(UnknownNameError):
            compile_rule(parse_rule("q(x) :- nowhere(x)."), cities_parts.scheme)
        with pytest.raises(UnknownNameError):
            compile_rule(parse_rule("q(x) :- parts(colour: x)."), cities_parts.scheme)

    def test_variable_bound_to_two_domains(self, cities_parts):
        with pytest.raises(TypingError):
            compile_rule(parse_rule("q(x) :- parts(pid: x), projects(rid: x)."), cities_parts.scheme)

    def test_builtin_rejects_wrong_kind(self, cities_parts):
        with pytest.raises(TypingError):
            compile_rule(parse_rule("q(n) :- parts(pname: n, pqty: k), leq(n, k)."), cities_parts.scheme)

    def test_positional_arity(self, parent_child):
        with pytest.raises(RuleError):
            compile_rule(parse_rule("q(x) :- pc(x)."), parent_child.scheme)


class TestPlanner:
    def test_grandparent_plan(self, parent_child, grandparent_rule):
        p = plan(compile_rule(parse_rule(grandparent_rule), parent_child.scheme), parent_child)
        assert [s.kind for s in p.steps] == ["scan", "join"]
        text = p.explain()
        assert text.splitlines()[-1].strip() == "3. project on (x, z)"

    def test_shim_in_taos_applies_leq_last(self, cities_parts, shim_in_taos_rule):
        p = plan(compile_rule(parse_rule(shim_in_taos_rule), cities_parts.scheme), cities_parts)
        assert [s.kind for s in p.steps] == ["scan", "join", "join", "test"]
        assert p.steps[-1].atom.relation == "leq"
        assert {"Q1", "Q2"} <= set(p.steps[-1].bound_after)
        assert p.explain() == p.explain()

    def test_greedy_prefers_small_connected_atoms(self, instance_builder):
        schema = {
            "domains": {"n": {"members": list(range(5))}},
            "attributes": {"a": "n", "b": "n", "c": "n"},
            "relations": {
                "big": {"attributes": ["a", "b"]},
                "small": {"attributes": ["b", "c"]},
                "other": {"attributes": ["c"]},
            },
        }
        data = {
            "big": [{"a": i, "b": j} for i in range(5) for j in range(5)],
            "small": [{"b": 1, "c": 2}],
            "other": [{"c": 2}, {"c": 3}],
        }
        instance = instance_builder(schema, data)
        rule = "q(x, z) :- big(a: x, b: y), small(b: y, c: z), other(c: z)."
        p = plan(compile_rule(parse_rule(rule), instance.scheme), instance)
        assert [s.atom.relation for s in p.steps] == ["small", "other", "big"]

    def test_greedy_puts_cartesian_products_last(self, instance_builder):
        schema = {
            "domains": {"n": {"members": list(range(5))}},
            "attributes": {"a": "n", "b": "n"},
            "relations": {
                "one": {"attributes": ["a"]},
                "few": {"attributes": ["b"]},
                "many": {"attributes": ["a", "b"]},
            },
        }
        data = {
            "one": [{"a": 0}],
            "few": [{"b": 1}, {"b": 2}],
            "many": [{"a": i, "b": j} for i in range(2) for j in range(3)],
        }
        instance = instance_builder(schema, data)
        rule = "q(x, y) :- one(a: x), few(b: y), many(a: x, b: y)."
        p = plan(compile_rule(parse_rule(rule), instance.scheme), instance)
        assert [s.atom.relation for s in p.steps] == ["one", "many", "few"]

    def test_unsafe_rules(self, cities_parts):
        with pytest.raises(UnsafeRuleError) as info:
            plan(compile_rule(parse_rule("answer(x) :- leq(rqty: x, pqty: y)."), cities_parts.scheme),
                 cities_parts)
        assert info.value.variables == ("x", "y")
        with pytest.raises(UnsafeRuleError):
            plan(compile_rule(parse_rule("q(n) :- parts(pqty: n), leq(n, m)."), cities_parts.scheme),
                 cities_parts)

    def test_forced_order_must_be_a_permutation(self, parent_child, grandparent_rule):
        compiled = compile_rule(parse_rule(grandparent_rule), parent_child.scheme)
        with pytest.raises(RuleError):
            plan(compiled, parent_child, order=[0, 0])


class TestEvaluation:
    def test_grandparent(self, parent_child, grandparent_rule):
        assert rows(run(grandparent_rule, parent_child), "x", "z") == {("mary", "alan")}

    def test_shim_in_taos(self, cities_parts, shim_in_taos_rule):
        result = run(shim_in_taos_rule, cities_parts)
        assert rows(result, "PN", "C") == {("shim", "taos")}
        assert result.index_set == {Index("PN"), Index("C")}

    def test_named_builtin_arguments_bind_by_name(self, cities_parts, shim_in_taos_rule):
        swapped = shim_in_taos_rule.replace("leq(rqty: Q2, pqty: Q1)", "leq(pqty: Q1, rqty: Q2)")
        by_role = shim_in_taos_rule.replace("leq(rqty: Q2, pqty: Q1)", "leq(hi: Q1, lo: Q2)")
        assert swapped != shim_in_taos_rule
        expected = run(shim_in_taos_rule, cities_parts)
        assert run(swapped, cities_parts) == expected
        assert run(by_role, cities_parts) == expected
        compiled = compile_rule(parse_rule(swapped), cities_parts.scheme)
        assert brute_force_evaluate(compiled, cities_parts) == expected

    def test_named_builtin_rejects_unknown_attributes(self, cities_parts):
        with pytest.raises(UnknownNameError) as info:
            compile_rule(parse_rule("q(n) :- parts(pqty: n), projects(rqty: m), leq(pqty: n, x: m)."),
                         cities_parts.scheme)
        assert "(lo, hi)" in str(info.value) and "(rqty, pqty)" in str(info.value)
        with pytest.raises(UnknownNameError):
            compile_rule(parse_rule("q(n) :- parts(pqty: n), projects(rqty: m), lt(rqty: m, pqty: n)."),
                         cities_parts.scheme)

    def test_empty_stored_relation(self, instance_builder):
        schema = {
            "domains": {"person": {"builtin": "text"}},
            "relations": {"pc": {"domains": ["person", "person"]}},
        }
        instance = instance_builder(schema, {})
        result = run("answer(x, z) :- pc(x, y), pc(y, z).", instance)
        assert len(result) == 0
        assert result.index_set == {Index("x"), Index("z")}

    def test_boolean_head(self, parent_child):
        assert len(run("yes() :- pc(x, y), pc(y, z).", parent_child)) == 1
        assert len(run("yes() :- pc(x, x).", parent_child)) == 0

    def test_intermediate_results_respect_the_limit(self, parent_child, grandparent_rule):
        compiled = compile_rule(parse_rule(grandparent_rule), parent_child.scheme)
        with pytest.raises(LimitExceededError) as info:
            evaluate(plan(compiled, parent_child), parent_child, limit=2)
        assert info.value.size == 3 and info.value.limit == 2
        assert len(evaluate(plan(compiled, parent_child), parent_child, limit=3)) == 1

    def test_builtins_in_rules(self, parent_child, cities_parts):
        assert rows(run("q(x, y) :- pc(x, y), eq(x, y).", parent_child), "x", "y") == set()
        assert len(run("q(x, y) :- pc(x, y), neq(x, y).", parent_child)) == 3
        small = run("q(p) :- parts(pname: p, pqty: n), projects(rqty: m), lt(n, m).", cities_parts)
        assert rows(small, "p") == {("hose",), ("tube",)}

    @pytest.mark.parametrize("order", list(permutations([0, 1, 2])))
    def test_plan_order_does_not_change_result(self, cities_parts, shim_in_taos_rule, order):
        expected = run(shim_in_taos_rule, cities_parts)
        assert run(shim_in_taos_rule, cities_parts, order=list(order)) == expected

    def test_matches_brute_force_oracle(self, cities_parts, parent_child, shim_in_taos_rule, grandparent_rule):
        for text, instance in ((shim_in_taos_rule, cities_parts), (grandparent_rule, parent_child)):
            compiled = compile_rule(parse_rule(text), instance.scheme)
            assert evaluate(plan(compiled, instance), instance) == brute_force_evaluate(compiled, instance)


def random_graph_instance(rng, instance_builder):
    schema = {
        "domains": {"node": {"members": list(range(6))}},
        "attributes": {"src": "node", "dst": "node"},
        "relations": {
            "e": {"domains": ["node", "node"]},
            "f": {"attributes": ["src", "dst"]},
            "g": {"domains": ["node"]},
        },
    }
    nodes = range(6)
    data = {
        "e": [{0: a, 1: b} for a in nodes for b in nodes if rng.random() < 0.3],
        "f": [{"src": a, "dst": b} for a in nodes for b in nodes if rng.random() < 0.3],
        "g": [{0: a} for a in nodes if rng.random() < 0.5],
    }
    return instance_builder(schema, data)


RANDOM_RULES = [
    "q(x, z) :- e(x, y), f(src: y, dst: z).",
    "q(x) :- e(x, y), e(y, x), g(y).",
    "q(x, w) :- e(x, y), e(y, z), f(src: z, dst: w), leq(x, w).",
    "q(x, y) :- e(x, y), f(src: x, dst: y), neq(x, y).",
    "q(y) :- g(x), e(x, y), g(y), lt(x, y).",
    "q(x, y) :- e(x, _), g(y).",
]


@pytest.mark.parametrize("text", RANDOM_RULES)
def test_random_instances_against_oracle_and_orders(text, instance_builder):
    rng = random.Random(sum(map(ord, text)))
    for _ in range(10):
        instance = random_graph_instance(rng, instance_builder)
        compiled = compile_rule(parse_rule(text), instance.scheme)
        expected = brute_force_evaluate(compiled, instance)
        finite = [a.position for a in compiled.atoms if not a.intensional]
        for order in permutations(finite):
            assert evaluate(plan(compiled, instance, order=list(order)), instance) == expected


def test_builtin_examples():
    builtins = builtin_relations()
    qty = lambda n: Atom("qty", n)
    assert builtins["leq"].holds((qty(2), qty(18)))
    assert not builtins["leq"].holds((qty(11), qty(6)))
    assert builtins["eq"].holds((Atom("city", "taos"), Atom("city", "taos")))
    assert not builtins["eq"].holds((Atom("x", 1), Atom("x", "1")))


def test_instance_rejects_wrong_signature(cities_parts):
    extents = dict(cities_parts.extents)
    extents["parts"] = cities_parts.relation("suppliers")
    with pytest.raises(TypingError):
        Instance(cities_parts.scheme, extents)


def test_evaluation_never_mutates_the_instance(cities_parts, shim_in_taos_rule):
    before = dict(cities_parts.extents)
    run(shim_in_taos_rule, cities_parts)
    assert cities_parts.extents == before

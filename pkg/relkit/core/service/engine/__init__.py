"""Conjunctive rules over a loaded instance.

parse_rule -> compile_rule -> plan -> evaluate, with brute_force_evaluate as
the reference semantics and the loader building instances from files.
"""

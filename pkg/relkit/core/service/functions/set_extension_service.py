"""Canonical and inverse set extensions of a function."""
from typing import Callable, Iterable

from relkit.core.models.function_models import Function
from relkit.core.models.value_models import FinSet

SetMap = Callable[[FinSet], FinSet]


def canonical_ext(f: Function, subset: FinSet) -> FinSet:
    """f(S') = {f(x) | x in S' and x in S}."""
    return FinSet(frozenset(f(x) for x in subset & f.source))


def inverse_ext(f: Function, subset: FinSet) -> FinSet:
    """f^-1(T') = {x in S | f(x) in T'}."""
    return FinSet(frozenset(x for x, y in f.items() if y in subset))


def constant_ext(f: Function) -> SetMap:
    """The greatest set extension: every subset maps to the whole target."""
    return lambda _subset: f.target


def extension_leq(g0: SetMap, g1: SetMap, subsets: Iterable[FinSet]) -> bool:
    """Pointwise inclusion g0(X) <= g1(X) over the given subsets."""
    return all(g0(x).issubset(g1(x)) for x in subsets)


def is_set_extension(f: Function, g: SetMap, subsets: Iterable[FinSet]) -> bool:
    """g extends f iff f(X) <= g(X) for every sampled subset X of the source."""
    return extension_leq(lambda x: canonical_ext(f, x), g, subsets)

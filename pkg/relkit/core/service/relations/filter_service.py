"""Filtering a relation through a pattern of variables."""
from typing import Mapping

from relkit.core.errors import IndexSetError, TypingError
from relkit.core.models.relation_models import Pattern, Relation
from relkit.core.models.tuple_models import Index, IndexLike, Signature, Tuple


def filter_signature(r: Relation, p: Pattern) -> Signature:
    """phi on p(I) with phi(p(i)) = tau(i); raises if p is not type-consistent."""
    if p.index_set != r.index_set:
        raise IndexSetError(
            f"Pattern over {{{p.index_label()}}} does not match the index set "
            f"{{{r.signature.index_label()}}}")
    phi: dict = {}
    for idx, variable in p.items:
        domain = r.signature[idx]
        bound = phi.setdefault(variable, domain)
        if bound != domain:
            raise TypingError(
                f"Variable {variable} is used for domains {bound.name} and {domain.name}")
    return Signature({Index(v): d for v, d in phi.items()})


def rel_filter(r: Relation, p: Pattern) -> Relation:
    """<tau, E>:p, all s over p(I) with s o p in E.

    Each tuple yields the substitution s(p(i)) = t(i) when it is consistent
    across repeated variables.
    """
    phi = filter_signature(r, p)
    extent = set()
    for t in r.extent:
        s: dict = {}
        for idx, variable in p.items:
            value = t[idx]
            if s.setdefault(variable, value) != value:
                break
        else:
            extent.add(Tuple({Index(v): value for v, value in s.items()}))
    return Relation(phi, frozenset(extent))


def rel_rename(r: Relation, mapping: Mapping[IndexLike, str]) -> Relation:
    """Reindex r by an injective map from its indexes to new names."""
    p = Pattern(mapping)
    if not p.is_injective:
        raise TypingError(f"Renaming {p} is not injective")
    return rel_filter(r, p)

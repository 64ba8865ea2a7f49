"""Intensional relations available to every rule."""
from relkit.core.models.engine_models import IntensionalRelation
from relkit.core.models.tuple_models import Domain


def _natural(domain: Domain) -> bool:
    if domain.kind is not None:
        return domain.kind == "natural"
    return all(isinstance(m.payload, int) for m in domain.members)


def _text(domain: Domain) -> bool:
    if domain.kind is not None:
        return domain.kind == "text"
    return all(isinstance(m.payload, str) for m in domain.members)


def _any_kind(domain: Domain) -> bool:
    return _natural(domain) or _text(domain)


def _same_kind(values: tuple) -> bool:
    return len({type(v.payload) for v in values}) == 1


def _leq(values: tuple) -> bool:
    left, right = values
    return left.payload <= right.payload


def _lt(values: tuple) -> bool:
    left, right = values
    return left.payload < right.payload


def _eq(values: tuple) -> bool:
    left, right = values
    return _same_kind(values) and left.payload == right.payload


def _neq(values: tuple) -> bool:
    return not _eq(values)


def builtin_relations() -> dict[str, IntensionalRelation]:
    """leq and lt over naturals; eq and neq compare payloads of same-kind atoms."""
    return {
        "leq": IntensionalRelation("leq", 2, _leq, _natural, "lo <= hi, naturals", ("lo", "hi")),
        "lt": IntensionalRelation("lt", 2, _lt, _natural, "lo < hi, naturals", ("lo", "hi")),
        "eq": IntensionalRelation("eq", 2, _eq, _any_kind, "equal payloads, same kind",
                                  ("left", "right")),
        "neq": IntensionalRelation("neq", 2, _neq, _any_kind, "different payloads",
                                   ("left", "right")),
    }

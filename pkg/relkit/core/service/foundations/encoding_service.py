"""Kuratowski pairs and von Neumann numerals as finite sets."""
from typing import Optional

from relkit.core.config.general_config import settings
from relkit.core.errors import LimitExceededError, MalformedEncodingError
from relkit.core.models.value_models import EMPTY, FinSet, Value


def kuratowski_encode(a: Value, b: Value) -> FinSet:
    """<a, b> = {{a}, {a, b}}; collapses to {{a}} when a = b."""
    return FinSet.of(FinSet.of(a), FinSet.of(a, b))


def kuratowski_decode(s: FinSet) -> tuple[Value, Value]:
    members = s.sorted()
    if not members or any(not isinstance(m, FinSet) for m in members):
        raise MalformedEncodingError(f"{s} is not a Kuratowski pair")
    if len(members) == 1:
        only = members[0]
        if len(only) != 1:
            raise MalformedEncodingError(f"{s} is not a Kuratowski pair")
        (a,) = only.sorted()
        return a, a
    if len(members) != 2:
        raise MalformedEncodingError(f"{s} is not a Kuratowski pair")
    small, large = sorted(members, key=len)
    if len(small) != 1 or len(large) != 2 or not small.issubset(large):
        raise MalformedEncodingError(f"{s} is not a Kuratowski pair")
    (a,) = small.sorted()
    (b,) = (large - small).sorted()
    return a, b


def vn_succ(s: FinSet) -> FinSet:
    """The successor s U {s}."""
    return FinSet(s.elements | {s})


def vn_encode(n: int, limit: Optional[int] = None) -> FinSet:
    """The von Neumann numeral for n: 0 is the empty set, n+1 is succ(n)."""
    limit = settings.limits.ordinal if limit is None else limit
    if n < 0:
        raise MalformedEncodingError(f"Only naturals have numerals, got {n}")
    if n > limit:
        raise LimitExceededError("von Neumann numeral", n, limit)
    s = EMPTY
    for _ in range(n):
        s = vn_succ(s)
    return s


def vn_decode(s: FinSet) -> int:
    """The natural whose numeral is s.

    A numeral with n elements must equal vn_encode(n).
    """
    n = len(s)
    expected = EMPTY
    for _ in range(n):
        if expected not in s:
            raise MalformedEncodingError(f"{s} is not a von Neumann numeral")
        expected = vn_succ(expected)
    if expected != s:
        raise MalformedEncodingError(f"{s} is not a von Neumann numeral")
    return n

"""relkit services.

Subpackages:
- foundations
- binrel
- functions
- tuples
- relations
- engine
"""

__all__ = [
    "foundations",
    "binrel",
    "functions",
    "tuples",
    "relations",
    "engine",
]

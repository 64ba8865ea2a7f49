import random

import pytest

from relkit.core.errors import LimitExceededError, MismatchError, PropertyError
from relkit.core.models.kind_models import EndoClass, RelationProperty
from relkit.core.models.value_models import Atom, FinSet
from relkit.core.service.binrel.binrel_service import (
    br_compose,
    br_cover,
    br_endo_class,
    br_identity,
    br_image,
    br_inverse,
    br_make,
    br_property,
    br_setops,
    br_subset,
    br_universal,
    equivalence_classes,
    is_functional,
    partition_to_equivalence,
)
from relkit.core.service.foundations.set_service import is_partition, make_partition


def random_set(rng, size, prefix):
    return FinSet.atoms(*(f"{prefix}{i}" for i in range(size)))


def random_relation(rng, source, target):
    pairs = [(x, y) for x in source for y in target]
    return br_make(source, target, [p for p in pairs if rng.random() < 0.4])


def closure(r):
    """Reflexive, symmetric, transitive closure of an endo-relation."""
    extent = set(r.extent) | {(x, x) for x in r.source} | {(y, x) for x, y in r.extent}
    changed = True
    while changed:
        changed = False
        for x, y in list(extent):
            for y2, z in list(extent):
                if y == y2 and (x, z) not in extent:
                    extent.add((x, z))
                    changed = True
    return br_make(r.source, r.source, extent)


def test_make_rejects_pairs_outside_source_and_target():
    s = FinSet.atoms(1, 2)
    with pytest.raises(MismatchError):
        br_make(s, s, [(Atom("element", 1), Atom("element", 3))])


def test_compose_identity_and_inverse():
    rng = random.Random(7)
    s, t, u = random_set(rng, 3, "s"), random_set(rng, 2, "t"), random_set(rng, 3, "u")
    r = random_relation(rng, s, t)
    q = random_relation(rng, t, u)
    assert br_compose(br_identity(s), r) == r
    assert br_compose(r, br_identity(t)) == r
    assert br_inverse(br_inverse(r)) == r
    assert br_inverse(br_compose(r, q)) == br_compose(br_inverse(q), br_inverse(r))
    with pytest.raises(MismatchError):
        br_compose(r, r)


def test_identity_has_all_four_properties():
    s = FinSet.atoms(1, 2, 3)
    ident = br_identity(s)
    for kind in RelationProperty:
        assert br_property(ident, kind)
    assert is_functional(ident)
    assert EndoClass.EQUIVALENCE in br_endo_class(ident)
    assert EndoClass.PARTIAL_ORDER in br_endo_class(ident)


def test_id_characterizations_agree_with_definitions():
    rng = random.Random(2024)
    for _ in range(500):
        s = random_set(rng, rng.randint(0, 4), "s")
        t = random_set(rng, rng.randint(0, 4), "t")
        r = random_relation(rng, s, t)
        inv = br_inverse(r)
        id_s, id_t = br_identity(s), br_identity(t)
        assert br_property(r, "single_valued") == br_subset(br_compose(inv, r), id_t)
        assert br_property(r, "surjective") == br_subset(id_t, br_compose(inv, r))
        assert br_property(r, "injective") == br_subset(br_compose(r, inv), id_s)
        assert br_property(r, "total") == br_subset(id_s, br_compose(r, inv))


def test_endo_classes_agree_with_definitions():
    rng = random.Random(11)
    for _ in range(500):
        s = random_set(rng, rng.randint(0, 4), "s")
        r = random_relation(rng, s, s)
        labels = br_endo_class(r)
        e = r.extent
        assert (EndoClass.REFLEXIVE in labels) == all((x, x) in e for x in s)
        assert (EndoClass.SYMMETRIC in labels) == all((y, x) in e for x, y in e)
        assert (EndoClass.TRANSITIVE in labels) == all(
            (x, z) in e for x, y in e for y2, z in e if y == y2)
        assert (EndoClass.ANTISYMMETRIC in labels) == all(
            x == y for x, y in e if (y, x) in e)


def test_equivalence_classes_always_partition():
    rng = random.Random(5)
    for _ in range(500):
        s = random_set(rng, rng.randint(0, 4), "s")
        r = closure(random_relation(rng, s, s))
        classes = equivalence_classes(r)
        assert is_partition(classes.cells, s)
        assert partition_to_equivalence(classes) == r


def test_equivalence_classes_examples():
    s = FinSet.atoms(1, 2, 3)
    assert len(equivalence_classes(br_identity(s)).cells) == 3
    assert equivalence_classes(br_universal(s, s)).cells == frozenset({s})
    with pytest.raises(PropertyError):
        equivalence_classes(br_make(s, s))


def test_partition_round_trip():
    s = FinSet.atoms(1, 2, 3, 4)
    p = make_partition([FinSet.atoms(1, 3), FinSet.atoms(2), FinSet.atoms(4)], s)
    assert equivalence_classes(partition_to_equivalence(p)) == p


def test_image_and_cover():
    s = FinSet.atoms(1, 2, 3)
    one, two, three = s.sorted()
    r = br_make(s, s, [(one, one), (one, two), (two, two), (three, three)])
    assert br_image(r, one) == FinSet.of(one, two)
    assert br_cover(r) == frozenset({FinSet.of(one, two), FinSet.of(two), FinSet.of(three)})


def test_total_order_labels():
    s = FinSet.atoms(1, 2, 3)
    leq = br_make(s, s, [(x, y) for x in s for y in s if x.payload <= y.payload])
    labels = br_endo_class(leq)
    assert {EndoClass.PREORDER, EndoClass.PARTIAL_ORDER, EndoClass.TOTAL_ORDER} <= labels
    assert EndoClass.EQUIVALENCE not in labels


def test_setops_require_same_type():
    s, t = FinSet.atoms(1, 2), FinSet.atoms(1)
    with pytest.raises(MismatchError):
        br_setops(br_identity(s), br_identity(t), "union")
    assert br_setops(br_universal(s, s), br_identity(s), "difference") == br_make(
        s, s, [(x, y) for x in s for y in s if x != y])
    assert br_setops(br_identity(s), br_universal(s, s), "difference") == br_make(s, s, [])


def test_universal_limit():
    s = FinSet.atoms(*range(5))
    with pytest.raises(LimitExceededError):
        br_universal(s, s, limit=10)

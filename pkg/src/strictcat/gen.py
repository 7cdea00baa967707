"""Deterministic random generators for categories, groupoids and functors.

Groupoids are assembled from chaotic groupoids fibered with small abelian
(monoid) objects, then combined by products and disjoint unions; mutants
swap a group fiber for a non-group monoid, which keeps every category
axiom intact while breaking invertibility.  Functors come from a pool of
structure maps (identities, constants, inclusions, projections, maps
induced by monoid homomorphisms) closed under composition.

Everything is driven by a caller-supplied seed, so generated suites are
reproducible run to run.
"""

from __future__ import annotations

import itertools
import random

from .core import (
    FinCat,
    StrictFunctor,
    cell_ids,
    constant_functor,
    disjoint_union,
    functor_compose,
    identity_functor,
    join_id,
    product,
    product_projections,
    split_id,
    terminal,
)
from .groups import Group, cyclic, from_cyclic_factors, trivial_group
from .monoidal import (
    MonGpd,
    chaotic,
    chaotic_monoidal,
    deloop2,
    discrete_monoidal,
    fatten,
    fatten_projection,
    group_monoidal,
)
from .monoidal import _wrap_monoid

SAT_TABLE = {
    ("0", "0"): "0", ("0", "1"): "1", ("0", "w"): "w",
    ("1", "0"): "1", ("1", "1"): "w", ("1", "w"): "w",
    ("w", "0"): "w", ("w", "1"): "w", ("w", "w"): "w",
}

NAMES = ("a", "b", "c", "d")


def small_groups() -> list[Group]:
    return [trivial_group(), cyclic(2), cyclic(3), cyclic(4), from_cyclic_factors([2, 2])]


def group_homs(A: Group, B: Group) -> list[dict]:
    """All homomorphisms A -> B, by brute force over unit-fixing maps."""
    others = [a for a in A.elements if a != A.unit]
    out = []
    for images in itertools.product(B.elements, repeat=len(others)):
        mapping = {A.unit: B.unit, **dict(zip(others, images))}
        if all(
            mapping[A.op(x, y)] == B.op(mapping[x], mapping[y])
            for x, y in itertools.product(A.elements, repeat=2)
        ):
            out.append(mapping)
    return out


def _group_mon_pool() -> list[MonGpd]:
    pool = [group_monoidal(H) for H in small_groups()]
    pool.append(discrete_monoidal(("0", "1"), dict(cyclic(2).table), "0"))
    pool.append(chaotic_monoidal(tuple("012"), dict(cyclic(3).table), "0"))
    return pool


def _mutant_mon_pool() -> list[MonGpd]:
    return [
        discrete_monoidal(("0", "1", "w"), SAT_TABLE, "0"),
        discrete_monoidal(
            ("0", "1"), {("0", "0"): "0", ("0", "1"): "1", ("1", "0"): "1", ("1", "1"): "1"}, "0"
        ),
    ]


def random_groupoid(rng: random.Random, level: int) -> FinCat:
    """A small strict n-groupoid (n = 2 or 3)."""
    kind = rng.choice(("chaotic", "deloop", "fatten", "union", "product"))
    if kind == "chaotic":
        k = rng.randint(1, 3)
        return chaotic(NAMES[:k], level)
    mon = rng.choice(_group_mon_pool())
    core = _wrap_monoid(mon) if level == 2 else deloop2(mon)
    if kind == "deloop":
        return core
    if kind == "fatten":
        k = rng.randint(1, 2)
        return product(core, chaotic(("s", "t")[:k], level))
    if kind == "union":
        other = chaotic(("m", "n")[: rng.randint(1, 2)], level)
        return disjoint_union(core, other)
    return product(core, chaotic(NAMES[: rng.randint(1, 2)], level))


def random_mutant(rng: random.Random, level: int) -> FinCat:
    """A valid 2-/3-category that is not a groupoid."""
    mon = rng.choice(_mutant_mon_pool())
    core = _wrap_monoid(mon) if level == 2 else deloop2(mon)
    kind = rng.choice(("plain", "union", "product"))
    if kind == "plain":
        return core
    if kind == "union":
        return disjoint_union(core, chaotic(("m",), level))
    return product(core, chaotic(("s", "t")[: rng.randint(1, 2)], level))


def category_stream(seed: int, count: int):
    """Alternating groupoids and mutants, all validating, levels 2 and 3."""
    rng = random.Random(seed)
    for index in range(count):
        level = rng.choice((2, 3))
        if index % 2 == 0:
            yield random_groupoid(rng, level), True
        else:
            yield random_mutant(rng, level), False


# -- functors ------------------------------------------------------------


def inclusion_into_union(A: FinCat, D: FinCat) -> StrictFunctor:
    """A -> A u B; cells of the summand keep their ids in the union."""
    maps = [{c: c for c in cell_ids(A, i)} for i in range(A.level + 1)]
    return StrictFunctor(A, D, maps)


def deloop2_functor(G1: MonGpd, G2: MonGpd, obj_map: dict, arrow_map: dict) -> StrictFunctor:
    """The functor of deloopings induced by a monoid morphism G1 -> G2.

    obj_map sends objects of the underlying groupoid of G1 to those of G2
    and arrow_map sends flat 1-cells likewise; the caller supplies an
    actual morphism (validate_functor will object otherwise).
    """
    A, B = deloop2(G1), deloop2(G2)
    maps = [
        {"x": "x"},
        {"x|x|u": "x|x|u"},
        {join_id(("x", "x", "u", "u", o)): join_id(("x", "x", "u", "u", obj_map[o]))
         for o in G1.underlying.objects},
    ]
    m3 = {}
    for c in cell_ids(G1.underlying, 1):
        m3[join_id(("x", "x", "u", "u") + split_id(c))] = join_id(
            ("x", "x", "u", "u") + split_id(arrow_map[c])
        )
    maps.append(m3)
    return StrictFunctor(A, B, maps)


def group_deloop_functor(H1: Group, H2: Group, hom: dict) -> StrictFunctor:
    """deloop2([H1]) -> deloop2([H2]) along a group homomorphism."""
    arrow_map = {
        join_id(("0", "0", h)): join_id(("0", "0", hom[h])) for h in H1.elements
    }
    return deloop2_functor(group_monoidal(H1), group_monoidal(H2), {"0": "0"}, arrow_map)


def _level3_pool(rng: random.Random) -> list[StrictFunctor]:
    pool = []
    z2, z4 = cyclic(2), cyclic(4)
    klein = from_cyclic_factors([2, 2])
    d_z2 = deloop2(group_monoidal(z2))
    # identities and collapses
    pool.append(identity_functor(d_z2))
    pool.append(constant_functor(chaotic(("a", "b"), 3), terminal(3), "*"))
    pool.append(constant_functor(d_z2, terminal(3), "*"))  # not an equivalence
    # fattening projections
    pool.append(fatten_projection(d_z2, ("s1", "s2")))
    pool.append(fatten_projection(deloop2(group_monoidal(z4)), ("s1",)))
    # inclusions into unions (never equivalences unless the rest is empty)
    A = chaotic(("a", "b"), 3)
    D = disjoint_union(A, chaotic(("m",), 3))
    pool.append(inclusion_into_union(A, D))
    # induced by group homomorphisms: a sample of each hom set
    for H1, H2 in ((z2, z4), (z4, z2), (klein, z2), (z2, z2)):
        homs = group_homs(H1, H2)
        for hom in rng.sample(homs, min(2, len(homs))):
            pool.append(group_deloop_functor(H1, H2, hom))
    return pool


def _level1_pool(rng: random.Random) -> list[StrictFunctor]:
    pool = []
    E2 = chaotic(("a", "b"), 1)
    E3 = chaotic(("a", "b", "c"), 1)
    two = disjoint_union(chaotic(("a1", "a2"), 1), chaotic(("b1",), 1))
    pool.append(identity_functor(E3))
    pool.append(constant_functor(E2, terminal(1), "*"))
    pool.append(constant_functor(two, terminal(1), "*"))  # pi0 collapse
    pool.append(inclusion_into_union(chaotic(("a1", "a2"), 1), two))
    p1, _ = product_projections(E2, chaotic(("s",), 1))
    pool.append(p1)
    del rng
    return pool


def functor_stream(seed: int, count: int):
    """Functors between small groupoids: pool members and composites."""
    rng = random.Random(seed)
    pools = [_level1_pool(rng), _level3_pool(rng)]
    flat = [F for pool in pools for F in pool]
    produced = 0
    while produced < count:
        F = rng.choice(flat)
        if rng.random() < 0.4:
            composable = [G for G in flat if G.source == F.target]
            if composable:
                F = functor_compose(rng.choice(composable), F)
        yield F
        produced += 1


def chain_stream(seed: int, count: int):
    """Composable pairs (f, g) with f first, for three-for-two checks."""
    rng = random.Random(seed)
    z2, z4 = cyclic(2), cyclic(4)
    d_z2 = deloop2(group_monoidal(z2))
    fat1 = fatten(d_z2, ("s1",))
    fat2 = fatten(fat1, ("t1", "t2"))
    candidates = []
    # equivalence chains: fattening projections compose down to the core
    candidates.append(
        (fatten_projection(fat1, ("t1", "t2")), fatten_projection(d_z2, ("s1",)))
    )
    assert candidates[0][0].source == fat2
    assert candidates[0][0].target == candidates[0][1].source
    # identity padding on both sides
    candidates.append((fatten_projection(d_z2, ("s1",)), identity_functor(d_z2)))
    candidates.append((identity_functor(fat1), fatten_projection(d_z2, ("s1",))))
    # group-hom chains, equivalences and not
    for h1 in group_homs(z2, z4):
        for h2 in group_homs(z4, z2):
            candidates.append(
                (group_deloop_functor(z2, z4, h1), group_deloop_functor(z4, z2, h2))
            )
    # collapse after inclusion at level 1
    A = chaotic(("a1", "a2"), 1)
    two = disjoint_union(A, chaotic(("b1",), 1))
    candidates.append(
        (inclusion_into_union(A, two), constant_functor(two, terminal(1), "*"))
    )
    for _ in range(count):
        yield rng.choice(candidates)


def chain4_stream(seed: int, count: int):
    """Composable triples (f, g, h) for the second sub-lemma."""
    rng = random.Random(seed)
    z2 = cyclic(2)
    d_z2 = deloop2(group_monoidal(z2))
    fat1 = fatten(d_z2, ("s1",))
    fat2 = fatten(fat1, ("t1", "t2"))
    iso = group_homs(z2, z2)[-1]  # the identity map sorts last
    candidates = [
        (
            fatten_projection(fat1, ("t1", "t2")),
            fatten_projection(d_z2, ("s1",)),
            group_deloop_functor(z2, z2, iso),
        ),
        (
            identity_functor(fat2),
            fatten_projection(fat1, ("t1", "t2")),
            fatten_projection(d_z2, ("s1",)),
        ),
    ]
    # nontrivial middle: hg and gf equivalences force g to be one
    for hom_in in group_homs(z2, z2):
        for hom_out in group_homs(z2, z2):
            candidates.append(
                (
                    group_deloop_functor(z2, z2, hom_in),
                    group_deloop_functor(z2, z2, hom_out),
                    group_deloop_functor(z2, z2, iso),
                )
            )
    for _ in range(count):
        f, g, h = rng.choice(candidates)
        yield f, g, h

import itertools

import pytest

from strictcat import (
    StructuralError,
    base_change,
    base_change_monoidal,
    base_change_projection,
    chaotic,
    chaotic_monoidal,
    deloop2,
    deloop_once,
    discrete_monoidal,
    fatten,
    fatten_projection,
    group_monoidal,
    homotopy_group,
    is_equivalence,
    is_groupoid,
    loop2,
    pi0,
    product,
    terminal,
    validate_cat,
    validate_monoidal,
)
from strictcat.core import cell_ids
from strictcat.groups import cyclic, find_isomorphism, from_cyclic_factors
from strictcat.monoidal import SymMonGpd
from strictcat.validate import validate_functor

SAT_TABLE = {
    ("0", "0"): "0", ("0", "1"): "1", ("0", "w"): "w",
    ("1", "0"): "1", ("1", "1"): "w", ("1", "w"): "w",
    ("w", "0"): "w", ("w", "1"): "w", ("w", "w"): "w",
}


def all_mon_fixtures():
    return {
        "z2": group_monoidal(cyclic(2)),
        "z3": group_monoidal(cyclic(3)),
        "klein": group_monoidal(from_cyclic_factors([2, 2])),
        "z2-discrete": discrete_monoidal(("0", "1"), dict(cyclic(2).table), "0"),
        "z3-chaotic": chaotic_monoidal(tuple("012"), dict(cyclic(3).table), "0"),
        "sat-discrete": discrete_monoidal(("0", "1", "w"), SAT_TABLE, "0"),
        "sat-chaotic": chaotic_monoidal(("0", "1", "w"), SAT_TABLE, "0"),
    }


def test_monoidal_laws_full_scan():
    for name, G in all_mon_fixtures().items():
        report = validate_monoidal(G)
        assert report.ok, (name, str(report))


def test_monoidal_mutant_noncommutative_sum():
    G = discrete_monoidal(("0", "1", "w"), SAT_TABLE, "0")
    from strictcat.core import StrictFunctor, pair_id
    from strictcat.monoidal import MonGpd

    maps0 = dict(G.sum.maps[0])
    maps0[pair_id("1", "w")] = "1"  # 1+w and w+1 now disagree
    mutant = MonGpd(G.underlying, StrictFunctor(G.sum.source, G.underlying, [maps0, G.sum.maps[1]]), "0")
    report = validate_monoidal(mutant)
    assert not report.ok
    assert any(v.axiom == "sum-commutativity" for v in report.violations)


def test_deloop2_shape_and_validates():
    for name, G in all_mon_fixtures().items():
        C = deloop2(G)
        assert C.level == 3
        assert len(cell_ids(C, 0)) == 1 and len(cell_ids(C, 1)) == 1
        assert len(cell_ids(C, 2)) == len(G.underlying.objects)
        assert len(cell_ids(C, 3)) == len(cell_ids(G.underlying, 1))
        assert validate_cat(C).ok, name


def test_scholium_round_trip():
    for name, G in all_mon_fixtures().items():
        assert loop2(deloop2(G)) == G, name


def test_loop2_of_terminal():
    G = loop2(terminal(3))
    assert len(G.underlying.objects) == 1
    assert validate_monoidal(G).ok


def test_loop2_rejects_extra_objects():
    with pytest.raises(StructuralError):
        loop2(chaotic(("a", "b"), 3))


def test_deloop2_homotopy_groups():
    # pi_2 collapses the object classes, pi_3 is the fiber at the unit
    C = deloop2(group_monoidal(cyclic(3)))
    assert homotopy_group(C, 2, "x").order == 1
    assert find_isomorphism(homotopy_group(C, 3, "x"), cyclic(3)) is not None

    D = deloop2(discrete_monoidal(("0", "1"), dict(cyclic(2).table), "0"))
    assert find_isomorphism(homotopy_group(D, 2, "x"), cyclic(2)) is not None
    assert homotopy_group(D, 3, "x").order == 1


def test_deloop2_groupoid_iff_pi0_group():
    good = all_mon_fixtures()["z2-discrete"]
    bad = all_mon_fixtures()["sat-discrete"]
    chaotic_sat = all_mon_fixtures()["sat-chaotic"]  # connected, so pi_0 = *
    assert is_groupoid(deloop2(good)).ok
    assert not is_groupoid(deloop2(bad)).ok
    assert is_groupoid(deloop2(chaotic_sat)).ok


def test_deloop_once_of_terminal():
    # terminal(3) up to the forced renaming of the one new object
    B = deloop_once(terminal(2))
    assert B.homs[("b", "b")] == terminal(2)
    for i in range(4):
        assert len(cell_ids(B, i)) == 1
    assert validate_cat(B).ok


def test_deloop_once_hom_is_input():
    C = deloop2(group_monoidal(cyclic(2)))
    B = deloop_once(C)
    assert B.level == 4
    assert B.homs[("b", "b")] == C
    assert validate_cat(B).ok


def test_deloop_once_groupoid_biconditional():
    good = deloop2(discrete_monoidal(("0", "1"), dict(cyclic(2).table), "0"))
    bad = deloop2(discrete_monoidal(("0", "1", "w"), SAT_TABLE, "0"))
    for C, expected in ((good, True), (bad, False)):
        B = deloop_once(C)
        assert validate_cat(B).ok
        for variant in ("v2", "v3"):
            assert is_groupoid(C, variant).ok == expected
            assert is_groupoid(B, variant).ok == expected


def test_deloop_once_pi_shift():
    C = deloop2(group_monoidal(cyclic(2)))
    B = deloop_once(C)
    for i in (1, 2, 3):
        a = homotopy_group(C, i, "x")
        b = homotopy_group(B, i + 1, "b")
        assert find_isomorphism(a, b) is not None
    assert homotopy_group(B, 1, "b").order == 1


def test_chaotic_basics():
    E = chaotic(("a", "b", "c"), 2)
    assert validate_cat(E).ok
    assert pi0(E) == (("a", "b", "c"),)
    assert is_groupoid(E, "v2").ok and is_groupoid(E, "v3").ok
    for i in (1, 2):
        for x in E.objects:
            assert homotopy_group(E, i, x).order == 1
    assert chaotic(("*",), 3) == terminal(3)
    with pytest.raises(StructuralError):
        chaotic((), 1)


def test_base_change_identity_is_same_category():
    U = chaotic(("a", "b"), 1)
    V = base_change({o: o for o in U.objects}, U)
    assert V == U


def test_base_change_fiber_pattern():
    # two points over one object: homs are the endomorphisms of u, by
    # direct table construction
    G = group_monoidal(cyclic(3))
    U = G.underlying
    p = {"s": "0", "t": "0"}
    V = base_change(p, U)
    assert validate_cat(V).ok
    for pair in itertools.product(("s", "t"), repeat=2):
        assert V.homs[pair].objects == cyclic(3).elements
    tab = V.compositions[("s", "t", "s")][0]
    assert tab == dict(cyclic(3).table)


def test_base_change_projection_fully_faithful():
    G = group_monoidal(cyclic(3))
    p = {"s": "0", "t": "0"}
    V = base_change(p, G.underlying)
    proj = base_change_projection(p, G.underlying, V)
    assert validate_functor(proj).ok
    for s, t in itertools.product(V.objects, repeat=2):
        dom = cell_ids(V.homs[(s, t)], 0)
        img = {proj.maps[1][f"{s}|{t}|{m}"] for m in dom}
        assert len(img) == len(dom)
        assert img == {f"0|0|{m}" for m in cell_ids(G.underlying.homs[("0", "0")], 0)}


def test_base_change_monoidal_preserves_laws():
    G = chaotic_monoidal(tuple("012"), dict(cyclic(3).table), "0")
    # pull back along the surjection Z/6 -> Z/3
    z6 = cyclic(6)
    p = {e: str(int(e) % 3) for e in z6.elements}
    V = base_change_monoidal(G, dict(z6.table), "0", p)
    assert validate_monoidal(V).ok


def test_base_change_monoidal_rejects_non_monoid_map():
    G = chaotic_monoidal(tuple("012"), dict(cyclic(3).table), "0")
    z2 = cyclic(2)
    p = {"0": "0", "1": "1"}  # not a homomorphism Z/2 -> Z/3
    with pytest.raises(StructuralError):
        base_change_monoidal(G, dict(z2.table), "0", p)


def test_fatten_counts_and_equivalence():
    C = deloop2(group_monoidal(cyclic(2)))
    F = fatten(C, ("s1", "s2"))
    assert len(F.objects) == len(C.objects) * 2
    assert validate_cat(F).ok
    proj = fatten_projection(C, ("s1", "s2"))
    assert is_equivalence(proj, "a").ok
    for x in F.objects:
        for i in (1, 2, 3):
            assert find_isomorphism(
                homotopy_group(F, i, x), homotopy_group(C, i, "x")
            ) is not None


def test_fatten_singleton_counts():
    C = deloop2(group_monoidal(cyclic(2)))
    F = fatten(C, ("s",))
    for i in range(4):
        assert len(cell_ids(F, i)) == len(cell_ids(C, i))


def test_sym_family_window_groupoid():
    G = SymMonGpd(2, cyclic(2))
    assert G.validate(2).ok
    W = G.window_groupoid(2)
    assert validate_cat(W).ok
    assert is_groupoid(W, "v3").ok
    # pi0 classes are exactly the grade fibers
    classes = pi0(W)
    assert len(classes) == 5
    for cls in classes:
        grades = {c.split(",")[0] for c in cls}
        assert len(grades) == 1
        assert len(cls) == 2  # r = 2 lifts per grade


def test_sym_family_rejects_bad_parameters():
    with pytest.raises(StructuralError):
        SymMonGpd(0, cyclic(2))

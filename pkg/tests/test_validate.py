import itertools

import pytest

from strictcat import (
    FinCat,
    StructuralError,
    eckmann_hilton_check,
    functor_compose,
    identity_functor,
    product,
    terminal,
    validate_cat,
    validate_functor,
)
from strictcat.core import StrictFunctor, cell_ids
from strictcat.groups import cyclic
from strictcat.monoidal import chaotic, deloop2, group_monoidal


def exhaustive_associativity_scan(C):
    """Independent oracle: re-check associativity of every *_0 table
    directly, without going through validate_cat's bookkeeping."""
    bad = []
    for w, x, y, z in itertools.product(C.objects, repeat=4):
        for i in range(C.level):
            t_ab = C.compositions[(w, x, y)][i]
            t_bc = C.compositions[(x, y, z)][i]
            for a in cell_ids(C.homs[(w, x)], i):
                for b in cell_ids(C.homs[(x, y)], i):
                    for c in cell_ids(C.homs[(y, z)], i):
                        lhs = C.compositions[(w, y, z)][i][(t_ab[(a, b)], c)]
                        rhs = C.compositions[(w, x, z)][i][(a, t_bc[(b, c)])]
                        if lhs != rhs:
                            bad.append((a, b, c))
    return bad


def test_terminal_validates():
    for n in range(5):
        assert validate_cat(terminal(n)).ok


def test_deloop_validates_and_matches_exhaustive_oracle():
    C = deloop2(group_monoidal(cyclic(3)))
    assert validate_cat(C).ok
    assert exhaustive_associativity_scan(C) == []


def test_chaotic_and_products_validate():
    A = chaotic(("a", "b"), 2)
    B = deloop2(group_monoidal(cyclic(2)))
    assert validate_cat(A).ok
    P = product(B, chaotic(("s", "t"), 3))
    assert validate_cat(P).ok


def perturbed_monoid_cat():
    """Mutate one entry of the Z/3 table; the exhaustive scan is the
    oracle for which triples the validator must name."""
    G = cyclic(3)
    table = dict(G.table)
    table[("1", "2")] = "1"
    hom = FinCat(0, G.elements)
    return FinCat(
        1,
        ("p",),
        homs={("p", "p"): hom},
        identities={"p": "0"},
        compositions={("p", "p", "p"): (table,)},
    )


def test_perturbed_table_reported_with_triple():
    C = perturbed_monoid_cat()
    bad = exhaustive_associativity_scan(C)
    report = validate_cat(C)
    assert not report.ok
    assoc = [v for v in report.violations if v.axiom == "associativity"]
    assert {v.cells for v in assoc} == set(bad)


def perturbed_interchange_cat():
    """Perturb a single level-1 entry of a deloop's horizontal table:
    sources/targets stay degenerate so only functoriality can break."""
    C = deloop2(group_monoidal(cyclic(2)))
    tables = [dict(t) for t in C.compositions[("x", "x", "x")]]
    # 2-cell horizontal composition: swap one entry of the level-2 table
    t2 = tables[2]
    key = (("u|u|0|0|1", "u|u|0|0|1"))
    k = ("u|u|0|0|1", "u|u|0|0|1")
    assert t2[k] == "u|u|0|0|0"
    t2[k] = "u|u|0|0|1"
    return FinCat(
        3,
        C.objects,
        homs=C.homs,
        identities=C.identities,
        compositions={("x", "x", "x"): tuple(tables)},
    )


def test_perturbed_interchange_detected():
    C = perturbed_interchange_cat()
    report = validate_cat(C)
    assert not report.ok
    axioms = {v.axiom for v in report.violations}
    assert "interchange" in axioms or "associativity" in axioms


def test_structural_error_distinct_from_violation():
    hom = FinCat(0, ("e",))
    dangling = FinCat(
        1,
        ("p",),
        homs={("p", "p"): hom},
        identities={"p": "e"},
        compositions={("p", "p", "p"): ({("e", "e"): "ghost"},)},
    )
    with pytest.raises(StructuralError):
        validate_cat(dangling)


def test_identity_functor_ok():
    C = deloop2(group_monoidal(cyclic(2)))
    assert validate_functor(identity_functor(C)).ok


def test_composite_functor_ok():
    from strictcat.core import constant_functor, product_projections

    A = chaotic(("a", "b"), 1)
    B = chaotic(("s",), 1)
    F = constant_functor(A, A, "a")
    G = constant_functor(A, B, "s")
    assert validate_functor(functor_compose(G, F)).ok


def test_functor_breaking_identities_reported():
    # send the identity of Z/2's object to the nonidentity loop
    C = deloop2(group_monoidal(cyclic(2)))
    F = identity_functor(C)
    maps = [dict(m) for m in F.maps]
    maps[3]["x|x|u|u|0|0|0"] = "x|x|u|u|0|0|1"
    bad = StrictFunctor(C, C, maps)
    report = validate_functor(bad)
    assert not report.ok
    assert any(v.axiom == "functor-identity" for v in report.violations)


def test_eckmann_hilton_on_terminal_vacuous():
    assert eckmann_hilton_check(terminal(3), "*").ok


def test_eckmann_hilton_collapse_is_group_sum():
    # on deloop2([Z/4]) the checked monoid is Z/4 with its addition
    H = cyclic(4)
    C = deloop2(group_monoidal(H))
    assert validate_cat(C).ok
    report = eckmann_hilton_check(C, "x")
    assert report.ok
    # the two compositions of 3-cells both realize the sum: scan directly
    from strictcat import compose_cells

    for a, b in itertools.product(H.elements, repeat=2):
        u = f"x|x|u|u|0|0|{a}"
        v = f"x|x|u|u|0|0|{b}"
        s = f"x|x|u|u|0|0|{H.op(a, b)}"
        assert compose_cells(C, 3, 0, u, v) == s
        assert compose_cells(C, 3, 1, u, v) == s
        assert compose_cells(C, 3, 0, v, u) == s


def test_eckmann_hilton_every_object_of_products():
    P = product(deloop2(group_monoidal(cyclic(2))), chaotic(("s", "t"), 3))
    for o in P.objects:
        assert eckmann_hilton_check(P, o).ok


def test_eckmann_hilton_requires_dimension():
    with pytest.raises(StructuralError):
        eckmann_hilton_check(chaotic(("a",), 1), "a")

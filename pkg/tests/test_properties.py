"""Law-level property tests over randomized instances."""

import itertools

from hypothesis import given, settings
from hypothesis import strategies as st

from strictcat import (
    chaotic,
    compose_cells,
    functor_compose,
    is_equivalence,
    product,
    terminal,
    validate_cat,
    validate_functor,
)
from strictcat.core import StrictFunctor, cell_ids, pair_id
from strictcat.gen import functor_stream
from strictcat.groups import cyclic, from_cyclic_factors
from strictcat.monoidal import SymMonGpd, group_monoidal
from strictcat.splitting import (
    ArrowNF,
    SymDelooped,
    build_gprime,
    build_p,
    choose_generators,
    h_map,
    nf_add,
    nf_compose,
    nf_inverse,
)

GP = build_gprime(
    SymMonGpd(2, from_cyclic_factors([2, 2])),
    build_p(SymMonGpd(2, from_cyclic_factors([2, 2])), (1, 0), (-1, 0)),
)


def arrows(max_coord=6):
    """Strategy for normal-form arrows with small coordinates."""

    @st.composite
    def build(draw):
        m = draw(st.integers(0, max_coord))
        n = draw(st.integers(0, max_coord))
        k = draw(st.integers(-min(m, n), max_coord))
        u = draw(st.sampled_from(GP.fiber.elements))
        return ArrowNF((m, n), k, u)

    return build()


@given(arrows(), arrows())
def test_nf_add_commutative(a1, a2):
    assert nf_add(GP, a1, a2) == nf_add(GP, a2, a1)


@given(arrows(), arrows(), arrows())
def test_nf_add_associative(a1, a2, a3):
    assert nf_add(GP, nf_add(GP, a1, a2), a3) == nf_add(GP, a1, nf_add(GP, a2, a3))


@given(arrows())
def test_nf_inverse_cancels(alpha):
    inv = nf_inverse(GP, alpha)
    assert nf_compose(GP, inv, alpha) == GP.identity(alpha.source)
    assert nf_compose(GP, alpha, inv) == GP.identity(inv.source)


@given(arrows(), st.integers(0, 5), st.sampled_from(GP.fiber.elements))
def test_nf_compose_chain(alpha, k, u):
    beta = ArrowNF(alpha.target, k, u)
    composed = nf_compose(GP, beta, alpha)
    assert composed.source == alpha.source
    assert composed.target == beta.target
    assert h_map(composed) == GP.fiber.op(u, alpha.u)


@given(arrows(), arrows(), st.integers(0, 4), st.integers(0, 4),
       st.sampled_from(GP.fiber.elements), st.sampled_from(GP.fiber.elements))
def test_nf_interchange_random(b1, b2, k1, k2, u1, u2):
    a1 = ArrowNF(b1.target, k1, u1)
    a2 = ArrowNF(b2.target, k2, u2)
    left = nf_add(GP, nf_compose(GP, a1, b1), nf_compose(GP, a2, b2))
    right = nf_compose(GP, nf_add(GP, a1, a2), nf_add(GP, b1, b2))
    assert left == right


# -- product associativity up to canonical relabeling ---------------------


def _triple_bijection_checks(A, B, C):
    left = product(product(A, B), C)
    right = product(A, product(B, C))
    n = A.level
    for i in range(n + 1):
        la, lb, lc = cell_ids(A, i), cell_ids(B, i), cell_ids(C, i)
        assert len(cell_ids(left, i)) == len(la) * len(lb) * len(lc)
        # the canonical relabeling ((a&b)&c) <-> (a&(b&c))
        mapping = {
            pair_id(pair_id(a, b), c): pair_id(a, pair_id(b, c))
            for a, b, c in itertools.product(la, lb, lc)
        }
        assert sorted(mapping) == cell_ids(left, i)
        assert sorted(mapping.values()) == cell_ids(right, i)
        if i >= 1:
            # structure preservation: the relabeling commutes with *_0
            for u, v in zip(cell_ids(left, i), cell_ids(left, i)[::-1]):
                try:
                    w = compose_cells(left, i, 0, u, v)
                except Exception:
                    continue
                assert compose_cells(right, i, 0, mapping[u], mapping[v]) == mapping[w]


def test_product_associative_up_to_relabeling():
    fixtures = [
        (chaotic(("a", "b"), 1), terminal(1), group_monoidal(cyclic(2)).underlying),
        (terminal(2), chaotic(("s", "t"), 2), chaotic(("p",), 2)),
    ]
    for A, B, C in fixtures:
        _triple_bijection_checks(A, B, C)


# -- functor algebra -------------------------------------------------------


def test_composites_of_valid_functors_are_valid():
    pool = list(functor_stream(5, 12))
    count = 0
    for F in pool:
        for G in pool:
            if G.source == F.target:
                count += 1
                assert validate_functor(functor_compose(G, F)).ok
    assert count > 0


def test_chaotic_functors_over_surjections_are_equivalences():
    # any object map between chaotic groupoids extends uniquely to a strict
    # functor; in particular every surjective one gives an equivalence
    # (both sides being contractible, the rest are equivalences as well)
    S, T = ("a", "b", "c"), ("u", "v")
    E, F_ = chaotic(S, 2), chaotic(T, 2)
    surjective_seen = 0
    for images in itertools.product(T, repeat=len(S)):
        obj_map = dict(zip(S, images))
        maps = [dict(zip(S, images))]
        for i in range(1, 3):
            m = {}
            for c in cell_ids(E, i):
                parts = c.split("|")
                m[c] = "|".join([obj_map[parts[0]], obj_map[parts[1]]] + parts[2:])
            maps.append(m)
        fun = StrictFunctor(E, F_, maps)
        assert validate_functor(fun).ok
        surjective_seen += set(images) == set(T)
        assert is_equivalence(fun, "a").ok
    assert surjective_seen > 0


def test_products_of_validated_categories_validate():
    fixtures = [
        chaotic(("a", "b"), 2),
        terminal(2),
        product(terminal(2), chaotic(("s",), 2)),
    ]
    for A, B in itertools.product(fixtures, repeat=2):
        assert validate_cat(product(A, B)).ok

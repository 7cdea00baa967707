"""Abelian monoid objects in groupoids, delooping, and base change.

A one-object, one-1-morphism strict n-category is the same thing as an
abelian monoid object in strict (n-2)-categories; this module implements
that correspondence for monoid objects in 1-groupoids (``deloop2`` /
``loop2``) plus one extra delooping level (``deloop_once``), which covers
every case the splitting pipeline needs.

``SymMonGpd`` is the symbolic input family for the pipeline: objects are
pairs (m, t) with m an integer grade and t in Z/r, there is a fiber's
worth of arrows between objects of equal grade and none otherwise, and
the monoid operation is componentwise.  Universal statements about it are
checked on finite windows |m| <= W of the (honestly tabulated) underlying
groupoid.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .core import (
    FinCat,
    StrictFunctor,
    StructuralError,
    cell_ids,
    iterated_identity,
    join_id,
    pair_id,
    product,
    product_projections,
    split_id,
)
from .groups import Group
from .validate import ValidationReport, validate_cat, validate_functor


class MonGpd:
    """An abelian monoid object in 1-categories, fully tabulated.

    underlying: a level-1 FinCat U; sum: a StrictFunctor U x U -> U;
    unit: the neutral object.  ``validate_monoidal`` checks the laws.
    """

    def __init__(self, underlying: FinCat, sum_functor: StrictFunctor, unit: str):
        if underlying.level != 1:
            raise StructuralError("monoid objects here live in level-1 categories")
        self.underlying = underlying
        self.sum = sum_functor
        self.unit = unit

    def __repr__(self):
        return f"MonGpd(objects={len(self.underlying.objects)})"

    def __eq__(self, other):
        if not isinstance(other, MonGpd):
            return NotImplemented
        return (
            self.underlying == other.underlying
            and self.sum == other.sum
            and self.unit == other.unit
        )

    __hash__ = None

    def add(self, u: str, v: str) -> str:
        """Sum of two cells of the same level (0 or 1)."""
        i = len(split_id(u)) // 2
        return self.sum.maps[i][pair_id(u, v)]


def validate_monoidal(G: MonGpd) -> ValidationReport:
    """Full law scan: functoriality, associativity, commutativity, unit."""
    U = G.underlying
    report = validate_cat(U)
    if not report.ok:
        return report
    P = product(U, U)
    if G.sum.source != P or G.sum.target != U:
        raise StructuralError("sum must be a functor from the square of the underlying category")
    if G.unit not in U.objects:
        raise StructuralError(f"unit {G.unit!r} is not an object")
    report = validate_functor(G.sum)
    for i in range(2):
        ids = cell_ids(U, i)
        for a, b in itertools.product(ids, repeat=2):
            if G.add(a, b) != G.add(b, a):
                report.add("sum-commutativity", i, (a, b))
        for a, b, c in itertools.product(ids, repeat=3):
            if G.add(G.add(a, b), c) != G.add(a, G.add(b, c)):
                report.add("sum-associativity", i, (a, b, c))
        e = iterated_identity(U, G.unit, i)
        for a in ids:
            if G.add(e, a) != a or G.add(a, e) != a:
                report.add("sum-unit", i, (a,))
    return report


# -- delooping ----------------------------------------------------------


def _shift(C: FinCat, obj: str, unit_1cell: str) -> FinCat:
    """One-object category of one level up, with C as hom and C's tables
    as the multiplication.  Requires every composition table of C to be
    commutative (which is what makes the shifted tables functorial)."""
    if len(C.objects) != 1:
        raise StructuralError("can only shift a one-object category")
    x = C.objects[0]
    tables = C.compositions[(x, x, x)]
    for i, tab in enumerate(tables):
        for (u, v), w in tab.items():
            if tab[(v, u)] != w:
                raise StructuralError(
                    f"composition at level {i} is not commutative; cannot deloop"
                )
    shifted = [{(x, x): x}]
    for tab in tables:
        shifted.append(
            {
                (join_id((x, x) + split_id(u)), join_id((x, x) + split_id(v))):
                    join_id((x, x) + split_id(w))
                for (u, v), w in tab.items()
            }
        )
    return FinCat(
        C.level + 1,
        (obj,),
        homs={(obj, obj): C},
        identities={obj: unit_1cell},
        compositions={(obj, obj, obj): tuple(shifted)},
    )


def _wrap_monoid(G: MonGpd) -> FinCat:
    """The one-object level-2 category with hom G and composition the sum."""
    U = G.underlying
    tables = []
    for i in range(2):
        ids = cell_ids(U, i)
        tables.append({(a, b): G.add(a, b) for a, b in itertools.product(ids, repeat=2)})
    return FinCat(
        2,
        ("u",),
        homs={("u", "u"): U},
        identities={"u": G.unit},
        compositions={("u", "u", "u"): tuple(tables)},
    )


def deloop2(G: MonGpd) -> FinCat:
    """The level-3 category with one object, one 1-morphism and data G.

    2-morphisms are the objects of G and 3-morphisms its arrows; both
    horizontal compositions are the sum, the vertical composition of
    3-morphisms is G's own composition.
    """
    return _shift(_wrap_monoid(G), "x", "u")


def loop2(C: FinCat) -> MonGpd:
    """Inverse of ``deloop2``: read the monoid object back off.

    Requires exactly one object and one 1-morphism.  The sum is taken
    from the outer composition tables; the middle composition must agree
    with it (they provably do in a valid category, and this is asserted).
    """
    if len(C.objects) != 1:
        raise StructuralError("loop2 needs exactly one object")
    if C.level != 3:
        raise StructuralError("loop2 expects a level-3 category")
    x = C.objects[0]
    K = C.homs[(x, x)]
    if len(K.objects) != 1:
        raise StructuralError("loop2 needs exactly one 1-morphism")
    e = K.objects[0]
    U = K.homs[(e, e)]
    unit = K.identities[e]
    outer = C.compositions[(x, x, x)]
    inner = K.compositions[(e, e, e)]
    maps = []
    for i in range(2):
        m = {}
        for a, b in itertools.product(cell_ids(U, i), repeat=2):
            qa, qb = join_id((e, e) + split_id(a)), join_id((e, e) + split_id(b))
            w = split_id(outer[i + 1][(qa, qb)])
            if outer[i + 1][(qa, qb)] != join_id((e, e) + split_id(inner[i][(a, b)])):
                raise StructuralError(
                    "the two horizontal compositions disagree; input is not a valid "
                    "one-object one-1-morphism category"
                )
            m[pair_id(a, b)] = join_id(w[2:])
        maps.append(m)
    return MonGpd(U, StrictFunctor(product(U, U), U, maps), unit)


def deloop_once(C: FinCat) -> FinCat:
    """One extra delooping of a one-object, one-1-morphism category.

    The result B has one object b with hom(b, b) = C cell for cell, and B
    is a groupoid exactly when C is.
    """
    if C.level < 1 or C.level > 3:
        raise StructuralError("deloop_once supports levels 1 to 3")
    if len(C.objects) != 1:
        raise StructuralError("deloop_once needs exactly one object")
    x = C.objects[0]
    if len(C.homs[(x, x)].objects) != 1:
        raise StructuralError("deloop_once needs exactly one 1-morphism")
    return _shift(C, "b", x)


# -- chaotic groupoids and base change ----------------------------------


def _terminal_like(n: int) -> FinCat:
    from .core import terminal

    return terminal(n)


def chaotic(S, n: int) -> FinCat:
    """The groupoid E(S) with exactly one morphism between each pair.

    For n > 1 all higher homs are terminal, so all homotopy groups vanish
    and the category is a contractible n-groupoid.
    """
    S = tuple(S)
    if not S:
        raise StructuralError("chaotic groupoid needs a non-empty object set")
    if n < 1:
        raise StructuralError("chaotic(S, n) needs n >= 1")
    H = _terminal_like(n - 1)
    homs = {(s, t): H for s, t in itertools.product(S, repeat=2)}
    identities = {s: "*" for s in S}
    forced = tuple(
        {(join_id(a), join_id(a)): join_id(a) for a in H.cell_addresses(i)}
        for i in range(n)
    )
    compositions = {triple: forced for triple in itertools.product(S, repeat=3)}
    return FinCat(n, S, homs, identities, compositions)


def chaotic_monoidal(elements, add, unit) -> MonGpd:
    """E(S) for a commutative monoid S = (elements, add table, unit)."""
    U = chaotic(elements, 1)
    maps0 = {pair_id(s, t): add[(s, t)] for s, t in itertools.product(U.objects, repeat=2)}
    maps1 = {}
    for c1, c2 in itertools.product(cell_ids(U, 1), repeat=2):
        p1, p2 = split_id(c1), split_id(c2)
        maps1[pair_id(c1, c2)] = join_id(
            (add[(p1[0], p2[0])], add[(p1[1], p2[1])], "*")
        )
    return MonGpd(U, StrictFunctor(product(U, U), U, [maps0, maps1]), unit)


def discrete_monoidal(elements, add, unit) -> MonGpd:
    """The discrete groupoid on a commutative monoid: only identity arrows."""
    elements = tuple(elements)
    point = FinCat(0, ("e",))
    nothing = FinCat(0, ())
    homs = {
        (s, t): (point if s == t else nothing)
        for s, t in itertools.product(elements, repeat=2)
    }
    compositions = {}
    for s, t, u in itertools.product(elements, repeat=3):
        if s == t == u:
            compositions[(s, t, u)] = ({("e", "e"): "e"},)
        else:
            compositions[(s, t, u)] = ({},)
    U = FinCat(1, elements, homs, {s: "e" for s in elements}, compositions)
    maps0 = {pair_id(s, t): add[(s, t)] for s, t in itertools.product(elements, repeat=2)}
    maps1 = {}
    for s, t in itertools.product(elements, repeat=2):
        c1, c2 = join_id((s, s, "e")), join_id((t, t, "e"))
        st = add[(s, t)]
        maps1[pair_id(c1, c2)] = join_id((st, st, "e"))
    return MonGpd(U, StrictFunctor(product(U, U), U, [maps0, maps1]), unit)


def group_monoidal(H: Group) -> MonGpd:
    """[H]: one object 0 with endomorphisms H, an abelian monoid object."""
    if not H.is_abelian():
        raise StructuralError("[H] needs an abelian group")
    hom = FinCat(0, H.elements)
    U = FinCat(
        1,
        ("0",),
        homs={("0", "0"): hom},
        identities={"0": H.unit},
        compositions={("0", "0", "0"): (dict(H.table),)},
    )
    maps0 = {pair_id("0", "0"): "0"}
    maps1 = {}
    for a, b in itertools.product(H.elements, repeat=2):
        maps1[pair_id(join_id(("0", "0", a)), join_id(("0", "0", b)))] = join_id(
            ("0", "0", H.op(a, b))
        )
    return MonGpd(U, StrictFunctor(product(U, U), U, [maps0, maps1]), "0")


def base_change(p: dict, U: FinCat) -> FinCat:
    """Pullback E(S) x_{E(Ob U)} U along a map p: S -> Ob(U).

    Objects are the keys of p; hom(s, t) is the very hom category
    Hom_U(p(s), p(t)), so the second projection is fully faithful by
    construction.
    """
    if U.level != 1:
        raise StructuralError("base_change expects a level-1 category")
    S = tuple(p)
    for s, img in p.items():
        if img not in U.objects:
            raise StructuralError(f"p({s!r}) = {img!r} is not an object of the base")
    homs = {(s, t): U.homs[(p[s], p[t])] for s, t in itertools.product(S, repeat=2)}
    identities = {s: U.identities[p[s]] for s in S}
    compositions = {
        (s, t, u): U.compositions[(p[s], p[t], p[u])]
        for s, t, u in itertools.product(S, repeat=3)
    }
    return FinCat(1, S, homs, identities, compositions)


def base_change_projection(p: dict, U: FinCat, V: FinCat | None = None) -> StrictFunctor:
    """The second projection V -> U (fully faithful)."""
    if V is None:
        V = base_change(p, U)
    maps0 = {s: p[s] for s in V.objects}
    maps1 = {}
    for c in cell_ids(V, 1):
        s, t, rest = split_id(c)[0], split_id(c)[1], split_id(c)[2:]
        maps1[c] = join_id((p[s], p[t]) + rest)
    return StrictFunctor(V, U, [maps0, maps1])


def base_change_monoidal(G: MonGpd, s_add: dict, s_unit: str, p: dict) -> MonGpd:
    """Base change of a monoid object along a monoid map p.

    s_add is the monoid table of the new object set S = keys of p; p must
    be a homomorphism (checked on the full table).
    """
    U = G.underlying
    S = tuple(p)
    for (s, t), st in s_add.items():
        if G.add(p[s], p[t]) != p[st]:
            raise StructuralError(f"p is not a monoid map at ({s!r}, {t!r})")
    if p[s_unit] != G.unit:
        raise StructuralError("p does not preserve the unit")
    V = base_change(p, U)
    maps0 = {pair_id(s, t): s_add[(s, t)] for s, t in itertools.product(S, repeat=2)}
    maps1 = {}
    for c1, c2 in itertools.product(cell_ids(V, 1), repeat=2):
        p1, p2 = split_id(c1), split_id(c2)
        lifted = G.add(
            join_id((p[p1[0]], p[p1[1]]) + p1[2:]),
            join_id((p[p2[0]], p[p2[1]]) + p2[2:]),
        )
        s_src = s_add[(p1[0], p2[0])]
        s_tgt = s_add[(p1[1], p2[1])]
        maps1[pair_id(c1, c2)] = join_id((s_src, s_tgt) + split_id(lifted)[2:])
    return MonGpd(V, StrictFunctor(product(V, V), V, [maps0, maps1]), s_unit)


def fatten(C: FinCat, S) -> FinCat:
    """Product with a contractible chaotic groupoid on S.

    All homotopy groups are unchanged and the projection back to C is an
    equivalence; used to make the restriction step of the splitting
    construction non-trivial.
    """
    return product(C, chaotic(S, C.level))


def fatten_projection(C: FinCat, S) -> StrictFunctor:
    proj, _ = product_projections(C, chaotic(S, C.level))
    return proj


# -- the symbolic input family ------------------------------------------


def _obj_name(m: int, t: int) -> str:
    return f"{m},{t}"


@dataclass(frozen=True)
class SymMonGpd:
    """The symbolic family: objects Z x Z/r, fiber group H on equal grades.

    hom((m,t), (m',t')) = H iff m = m', else empty; composition is the H
    operation; the monoid sum is componentwise on objects and H-addition
    on arrows.  The grade map (m, t) -> m identifies pi_0 with Z.
    """

    width: int
    fiber: Group

    def __post_init__(self):
        if self.width < 1:
            raise StructuralError("width r must be >= 1")
        if not self.fiber.is_abelian():
            raise StructuralError("the fiber group must be abelian")

    @property
    def unit_object(self) -> tuple[int, int]:
        return (0, 0)

    def add_objects(self, o1, o2):
        return (o1[0] + o2[0], (o1[1] + o2[1]) % self.width)

    def hom_nonempty(self, o1, o2) -> bool:
        return o1[0] == o2[0]

    def grade(self, o) -> int:
        return o[0]

    def window_groupoid(self, W: int) -> FinCat:
        """Honest tabulation of the underlying groupoid on |m| <= W."""
        objs = [
            _obj_name(m, t)
            for m in range(-W, W + 1)
            for t in range(self.width)
        ]
        grade = {
            _obj_name(m, t): m
            for m in range(-W, W + 1)
            for t in range(self.width)
        }
        fiber_cat = FinCat(0, self.fiber.elements)
        nothing = FinCat(0, ())
        homs = {
            (s, t): (fiber_cat if grade[s] == grade[t] else nothing)
            for s, t in itertools.product(objs, repeat=2)
        }
        identities = {s: self.fiber.unit for s in objs}
        compositions = {}
        for s, t, u in itertools.product(objs, repeat=3):
            if grade[s] == grade[t] == grade[u]:
                compositions[(s, t, u)] = (dict(self.fiber.table),)
            else:
                compositions[(s, t, u)] = ({},)
        return FinCat(1, tuple(objs), homs, identities, compositions)

    def validate(self, window: int = 2) -> ValidationReport:
        """Rule-level laws plus an honest scan of the windowed groupoid."""
        report = validate_cat(self.window_groupoid(window))
        objs = [
            (m, t) for m in range(-window, window + 1) for t in range(self.width)
        ]
        for o1, o2 in itertools.product(objs, repeat=2):
            if self.add_objects(o1, o2) != self.add_objects(o2, o1):
                report.add("sum-commutativity", 0, (str(o1), str(o2)))
        for o in objs:
            if self.add_objects(self.unit_object, o) != o:
                report.add("sum-unit", 0, (str(o),))
        return report

"""Tabulated strict n-categories in enriched form.

A ``FinCat`` of level n is a finite set of objects together with, for each
ordered pair of objects, a ``FinCat`` of level n-1 and, for each ordered
triple, composition tables realizing a functor

    hom(x, y) x hom(y, z) -> hom(x, z).

Cells
-----
An i-cell of a level-n category is, recursively, an (i-1)-cell of some hom
category.  Its *address* is the tuple

    (x0, y0, x1, y1, ..., x_{i-1}, y_{i-1}, name)

listing, from the outside in, the hom pair entered at each step and finally
a local object name.  The flat id exposed in the API joins the address with
``"|"`` (ids therefore must not contain ``"|"``).  Globularity is automatic:
the j-source of the cell above is ``(x0, y0, ..., x_{j-1}, y_{j-1}, x_j)``
and the j-target substitutes ``y_j``, so source/target bookkeeping can never
drift out of sync with the enrichment.

Composition ``u *_j v`` takes v after u: it is defined when the j-target of
u equals the j-source of v, and for j = 0 is a lookup in the stored table of
the triple (x0_u, y0_u, y0_v); for j >= 1 it recurses into the common hom.
Both arguments must be cells of the same level; compose with a
lower-dimensional cell by padding it with iterated identities first
(``pad_to_level``).

Everything here treats categories as immutable once built; all operations
are pure and deterministic.
"""

from __future__ import annotations

import itertools

SEP = "|"


class StructuralError(ValueError):
    """Malformed data: dangling ids, non-total tables, level mismatches.

    Distinct from axiom violations, which are reported by the validators
    in ``strictcat.validate`` rather than raised.
    """


class NotComposable(ValueError):
    """The two cells do not share the required j-face."""


def join_id(parts) -> str:
    return SEP.join(parts)


def split_id(cid: str) -> tuple[str, ...]:
    return tuple(cid.split(SEP))


def cell_level(cid: str) -> int:
    """Level of a cell from its flat id (2i+1 address components)."""
    parts = split_id(cid)
    if len(parts) % 2 == 0:
        raise StructuralError(f"malformed cell id {cid!r}")
    return len(parts) // 2


def cell_source(cid: str, j: int) -> str:
    """The j-source of a cell, by address arithmetic."""
    parts = split_id(cid)
    i = len(parts) // 2
    if not 0 <= j < i:
        raise StructuralError(f"no {j}-source for a {i}-cell")
    return join_id(parts[: 2 * j] + (parts[2 * j],))


def cell_target(cid: str, j: int) -> str:
    """The j-target of a cell, by address arithmetic."""
    parts = split_id(cid)
    i = len(parts) // 2
    if not 0 <= j < i:
        raise StructuralError(f"no {j}-target for a {i}-cell")
    return join_id(parts[: 2 * j] + (parts[2 * j + 1],))


def pair_id(u: str, v: str) -> str:
    """Flat id of the cell (u, v) of a product category.

    Addresses of equal-level cells have the same length; components pair up
    as ``(cu&cv)``.  This matches how ``product`` names its cells at every
    level, so product ids can be built without ever parsing them.
    """
    pu, pv = split_id(u), split_id(v)
    if len(pu) != len(pv):
        raise StructuralError(f"pairing cells of different levels: {u!r}, {v!r}")
    return join_id(tuple(f"({a}&{b})" for a, b in zip(pu, pv)))


def _check_name(name: str):
    if not isinstance(name, str) or not name:
        raise StructuralError(f"cell name must be a non-empty string, got {name!r}")
    if SEP in name:
        raise StructuralError(f"cell name {name!r} contains reserved separator {SEP!r}")


class FinCat:
    """A fully tabulated strict n-category (enriched presentation).

    Parameters
    ----------
    level : the dimension n >= 0.  Level 0 is a bare finite set.
    objects : ordered object names.
    homs : {(x, y): FinCat of level n-1} for every ordered pair.
    identities : {x: object name of homs[x, x]}.
    compositions : {(x, y, z): tables}, where ``tables`` is a tuple with one
        entry per hom level i in 0..n-1 and ``tables[i][(u, v)]`` is the flat
        id (local to the hom categories) of the composite of the i-cells
        u of homs[x, y] and v of homs[y, z].

    Construction performs no checking; call :meth:`check_structure` for
    structural well-formedness and ``strictcat.validate.validate_cat`` for
    the axioms.  Instances are to be treated as immutable.
    """

    def __init__(self, level, objects, homs=None, identities=None, compositions=None):
        self.level = level
        self.objects = tuple(objects)
        self.homs = dict(homs) if homs else {}
        self.identities = dict(identities) if identities else {}
        self.compositions = (
            {k: tuple(dict(t) for t in v) for k, v in compositions.items()}
            if compositions
            else {}
        )
        self._cache = {}

    def __repr__(self):
        return f"FinCat(level={self.level}, objects={len(self.objects)})"

    def __eq__(self, other):
        if not isinstance(other, FinCat):
            return NotImplemented
        return (
            self.level == other.level
            and self.objects == other.objects
            and self.identities == other.identities
            and self.homs == other.homs
            and self.compositions == other.compositions
        )

    __hash__ = None

    def hom(self, x: str, y: str) -> "FinCat":
        if self.level == 0:
            raise StructuralError("a level-0 category is a bare set and has no homs")
        if x not in self.objects or y not in self.objects:
            raise StructuralError(f"unknown object in hom request: ({x!r}, {y!r})")
        return self.homs[(x, y)]

    def identity(self, x: str) -> str:
        """Flat id of the identity 1-cell of the object x."""
        if self.level == 0:
            raise StructuralError("a level-0 category has no identity cells")
        if x not in self.objects:
            raise StructuralError(f"unknown object {x!r}")
        return join_id((x, x, self.identities[x]))

    def table(self, x: str, y: str, z: str, i: int):
        return self.compositions[(x, y, z)][i]

    # -- enumeration ---------------------------------------------------

    def cell_addresses(self, i: int) -> list[tuple[str, ...]]:
        """All i-cell addresses, lexicographically sorted."""
        if not 0 <= i <= self.level:
            raise StructuralError(f"no {i}-cells in a level-{self.level} category")
        key = ("addr", i)
        if key not in self._cache:
            if i == 0:
                out = sorted((o,) for o in self.objects)
            else:
                out = []
                for x, y in sorted(self.homs):
                    for rest in self.homs[(x, y)].cell_addresses(i - 1):
                        out.append((x, y) + rest)
            self._cache[key] = out
        return self._cache[key]

    def check_structure(self):
        """Raise StructuralError unless the data is well-formed.

        Checks name validity, hom/identity/composition totality and that
        every table value is a cell of the right hom at the right level.
        Does not check any equations.
        """
        if self.level < 0:
            raise StructuralError(f"negative level {self.level}")
        seen = set()
        for o in self.objects:
            _check_name(o)
            if o in seen:
                raise StructuralError(f"duplicate object {o!r}")
            seen.add(o)
        if self.level == 0:
            if self.homs or self.identities or self.compositions:
                raise StructuralError("level-0 category carries hom data")
            return
        pairs = set(itertools.product(self.objects, repeat=2))
        if set(self.homs) != pairs:
            raise StructuralError("homs must be keyed by every ordered object pair")
        for (x, y), H in self.homs.items():
            if not isinstance(H, FinCat) or H.level != self.level - 1:
                raise StructuralError(f"hom({x!r},{y!r}) must be a FinCat of level {self.level - 1}")
            H.check_structure()
        if set(self.identities) != set(self.objects):
            raise StructuralError("identities must be given for every object")
        for x, e in self.identities.items():
            if e not in self.homs[(x, x)].objects:
                raise StructuralError(f"identity of {x!r} is not an object of hom({x!r},{x!r})")
        triples = set(itertools.product(self.objects, repeat=3))
        if set(self.compositions) != triples:
            raise StructuralError("compositions must be keyed by every ordered object triple")
        for (x, y, z), tables in self.compositions.items():
            if len(tables) != self.level:
                raise StructuralError(
                    f"composition ({x!r},{y!r},{z!r}) needs {self.level} level tables"
                )
            left, right, result = self.homs[(x, y)], self.homs[(y, z)], self.homs[(x, z)]
            for i, tab in enumerate(tables):
                lcells = {join_id(a) for a in left.cell_addresses(i)}
                rcells = {join_id(a) for a in right.cell_addresses(i)}
                ocells = {join_id(a) for a in result.cell_addresses(i)}
                expected = {(u, v) for u in lcells for v in rcells}
                if set(tab) != expected:
                    raise StructuralError(
                        f"composition table ({x!r},{y!r},{z!r}) level {i} is not total"
                    )
                for pair, w in tab.items():
                    if w not in ocells:
                        raise StructuralError(
                            f"composition ({x!r},{y!r},{z!r}) level {i} maps {pair} "
                            f"to unknown cell {w!r}"
                        )


# -- cell-level operations ---------------------------------------------


def cells(C: FinCat, i: int) -> list[tuple[str, str | None, str | None]]:
    """All i-cells of C as (id, (i-1)-source, (i-1)-target) triples.

    Deterministic order: lexicographic on the recursive address.  0-cells
    carry no faces, so their source and target are None.
    """
    out = []
    for addr in C.cell_addresses(i):
        cid = join_id(addr)
        if i == 0:
            out.append((cid, None, None))
        else:
            out.append((cid, cell_source(cid, i - 1), cell_target(cid, i - 1)))
    return out


def cell_ids(C: FinCat, i: int) -> list[str]:
    return [join_id(a) for a in C.cell_addresses(i)]


def has_cell(C: FinCat, cid: str, i: int) -> bool:
    parts = split_id(cid)
    if len(parts) != 2 * i + 1:
        return False
    if i == 0:
        return parts[0] in C.objects
    x, y = parts[0], parts[1]
    if (x, y) not in C.homs:
        return False
    return has_cell(C.homs[(x, y)], join_id(parts[2:]), i - 1)


def hom_cat(C: FinCat, x: str, y: str) -> FinCat:
    """The stored morphism category hom(x, y), one level down."""
    return C.hom(x, y)


def compose_cells(C: FinCat, i: int, j: int, u: str, v: str) -> str:
    """The composite u *_j v (u first, then v) of two i-cells.

    Defined when the j-target of u equals the j-source of v; otherwise
    raises NotComposable.
    """
    if C.level == 0:
        raise StructuralError("level-0 categories have no composition")
    if not 0 <= j < i <= C.level:
        raise StructuralError(f"*_{j} undefined for {i}-cells of a level-{C.level} category")
    pu, pv = split_id(u), split_id(v)
    if len(pu) != 2 * i + 1 or len(pv) != 2 * i + 1:
        raise StructuralError(f"expected {i}-cells, got {u!r}, {v!r}")
    if j == 0:
        x, y = pu[0], pu[1]
        y2, z = pv[0], pv[1]
        if y != y2:
            raise NotComposable(f"0-target of {u!r} is {y!r}, 0-source of {v!r} is {y2!r}")
        tab = C.compositions[(x, y, z)][i - 1]
        key = (join_id(pu[2:]), join_id(pv[2:]))
        if key not in tab:
            raise StructuralError(f"composition table ({x},{y},{z}) missing entry {key}")
        return join_id((x, z) + split_id(tab[key]))
    if pu[:2] != pv[:2]:
        raise NotComposable(
            f"cells {u!r} and {v!r} lie in different homs, cannot compose along level {j}"
        )
    inner = compose_cells(C.homs[(pu[0], pu[1])], i - 1, j - 1, join_id(pu[2:]), join_id(pv[2:]))
    return join_id(pu[:2] + split_id(inner))


def identity_of(C: FinCat, cid: str) -> str:
    """The identity (m+1)-cell on an m-cell."""
    parts = split_id(cid)
    if len(parts) == 1:
        return C.identity(parts[0])
    inner = identity_of(C.homs[(parts[0], parts[1])], join_id(parts[2:]))
    return join_id(parts[:2] + split_id(inner))


def pad_to_level(C: FinCat, cid: str, i: int) -> str:
    """Iterated identity lifting an m-cell to an i-cell (m <= i).

    This is the identity-padding used to whisker: to compose an i-cell with
    a lower j-cell along *_j, pad the j-cell to level i first.
    """
    m = cell_level(cid)
    if m > i:
        raise StructuralError(f"cannot pad a {m}-cell down to level {i}")
    for _ in range(i - m):
        cid = identity_of(C, cid)
    return cid


def iterated_identity(C: FinCat, x: str, i: int) -> str:
    """The i-fold identity cell on an object x (an i-cell)."""
    return pad_to_level(C, x, i)


# -- constructions -----------------------------------------------------


def terminal(n: int) -> FinCat:
    """The final strict n-category: one object, one cell in every dimension."""
    if n < 0:
        raise StructuralError("terminal(n) needs n >= 0")
    if n == 0:
        return FinCat(0, ("*",))
    H = terminal(n - 1)
    tables = tuple(
        {(join_id(a), join_id(a)): join_id(a) for a in H.cell_addresses(i)}
        for i in range(n)
    )
    return FinCat(
        n,
        ("*",),
        homs={("*", "*"): H},
        identities={"*": "*"},
        compositions={("*", "*", "*"): tables},
    )


def product(A: FinCat, B: FinCat) -> FinCat:
    """Direct product: objects are pairs, homs are products of homs.

    Cells at every level are named ``(a&b)`` componentwise, which keeps the
    pairing computable from the factor ids (see ``pair_id``).
    """
    if A.level != B.level:
        raise StructuralError(f"product of levels {A.level} and {B.level}")
    n = A.level
    objects = [f"({a}&{b})" for a in A.objects for b in B.objects]
    if len(set(objects)) != len(objects):
        raise StructuralError("object name collision while forming a product")
    if n == 0:
        return FinCat(0, objects)
    obj_pairs = [(a, b) for a in A.objects for b in B.objects]
    homs = {}
    for (a, b), (a2, b2) in itertools.product(obj_pairs, repeat=2):
        homs[(f"({a}&{b})", f"({a2}&{b2})")] = product(A.homs[(a, a2)], B.homs[(b, b2)])
    identities = {
        f"({a}&{b})": f"({A.identities[a]}&{B.identities[b]})" for a, b in obj_pairs
    }
    compositions = {}
    for (a, b), (a2, b2), (a3, b3) in itertools.product(obj_pairs, repeat=3):
        tables = []
        for i in range(n):
            ta = A.compositions[(a, a2, a3)][i]
            tb = B.compositions[(b, b2, b3)][i]
            tab = {}
            for (u1, u2), w1 in ta.items():
                for (v1, v2), w2 in tb.items():
                    tab[(pair_id(u1, v1), pair_id(u2, v2))] = pair_id(w1, w2)
            tables.append(tab)
        compositions[(f"({a}&{b})", f"({a2}&{b2})", f"({a3}&{b3})")] = tuple(tables)
    return FinCat(n, objects, homs, identities, compositions)


def disjoint_union(A: FinCat, B: FinCat) -> FinCat:
    """Coproduct of two categories with disjoint object names.

    Cross homs are empty categories; all tables touching them are vacuous.
    """
    if A.level != B.level:
        raise StructuralError(f"disjoint union of levels {A.level} and {B.level}")
    n = A.level
    if set(A.objects) & set(B.objects):
        raise StructuralError("disjoint_union requires disjoint object names")
    objects = A.objects + B.objects
    if n == 0:
        return FinCat(0, objects)
    empty = _empty_cat(n - 1)
    side = {**{o: "A" for o in A.objects}, **{o: "B" for o in B.objects}}
    homs = {}
    for x, y in itertools.product(objects, repeat=2):
        if side[x] == side[y] == "A":
            homs[(x, y)] = A.homs[(x, y)]
        elif side[x] == side[y] == "B":
            homs[(x, y)] = B.homs[(x, y)]
        else:
            homs[(x, y)] = empty
    identities = {**A.identities, **B.identities}
    compositions = {}
    for x, y, z in itertools.product(objects, repeat=3):
        if side[x] == side[y] == side[z] == "A":
            compositions[(x, y, z)] = A.compositions[(x, y, z)]
        elif side[x] == side[y] == side[z] == "B":
            compositions[(x, y, z)] = B.compositions[(x, y, z)]
        else:
            compositions[(x, y, z)] = tuple({} for _ in range(n))
    return FinCat(n, objects, homs, identities, compositions)


def _empty_cat(n: int) -> FinCat:
    return FinCat(n, ())


# -- strict functors ---------------------------------------------------


class StrictFunctor:
    """A level-wise cell map strictly preserving all structure.

    ``maps[i]`` sends flat i-cell ids of the source to flat i-cell ids of
    the target, for i in 0..n.  Construction does not check preservation;
    use ``strictcat.validate.validate_functor``.
    """

    def __init__(self, source: FinCat, target: FinCat, maps):
        if source.level != target.level:
            raise StructuralError(
                f"functor between levels {source.level} and {target.level}"
            )
        self.source = source
        self.target = target
        self.maps = tuple(dict(m) for m in maps)
        if len(self.maps) != source.level + 1:
            raise StructuralError(
                f"functor needs {source.level + 1} level maps, got {len(self.maps)}"
            )

    def __repr__(self):
        return f"StrictFunctor(level={self.source.level})"

    def __eq__(self, other):
        if not isinstance(other, StrictFunctor):
            return NotImplemented
        return (
            self.source == other.source
            and self.target == other.target
            and self.maps == other.maps
        )

    __hash__ = None

    def apply(self, cid: str) -> str:
        i = cell_level(cid)
        if i > self.source.level:
            raise StructuralError(f"no level-{i} cells at level {self.source.level}")
        if cid not in self.maps[i]:
            raise StructuralError(f"functor undefined on {cid!r}")
        return self.maps[i][cid]


def identity_functor(C: FinCat) -> StrictFunctor:
    return StrictFunctor(C, C, [{c: c for c in cell_ids(C, i)} for i in range(C.level + 1)])


def functor_compose(g: StrictFunctor, f: StrictFunctor) -> StrictFunctor:
    """The composite g after f."""
    if f.target is not g.source and f.target != g.source:
        raise StructuralError("functors not composable: target of f differs from source of g")
    maps = [{c: g.maps[i][fc] for c, fc in f.maps[i].items()} for i in range(len(f.maps))]
    return StrictFunctor(f.source, g.target, maps)


def product_projections(A: FinCat, B: FinCat) -> tuple[StrictFunctor, StrictFunctor]:
    """The two projections out of product(A, B)."""
    P = product(A, B)
    n = A.level
    maps1, maps2 = [], []
    for i in range(n + 1):
        m1, m2 = {}, {}
        for u in cell_ids(A, i):
            for v in cell_ids(B, i):
                m1[pair_id(u, v)] = u
                m2[pair_id(u, v)] = v
        maps1.append(m1)
        maps2.append(m2)
    return StrictFunctor(P, A, maps1), StrictFunctor(P, B, maps2)


def constant_functor(C: FinCat, T: FinCat, obj: str) -> StrictFunctor:
    """Collapse everything in C onto the iterated identities of obj in T."""
    if obj not in T.objects:
        raise StructuralError(f"unknown object {obj!r} in target")
    maps = []
    for i in range(C.level + 1):
        img = iterated_identity(T, obj, i)
        maps.append({c: img for c in cell_ids(C, i)})
    return StrictFunctor(C, T, maps)

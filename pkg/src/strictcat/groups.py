"""Finite groups as explicit multiplication tables.

Everything is desk scale (order <= 64 in the bundled corpus), so
isomorphism testing is an exhaustive backtracking search with early
pruning rather than anything clever.

>>> G = cyclic(4)
>>> G.op("1", "3")
'0'
>>> abelian_invariants(direct_product(cyclic(2), cyclic(3)))
[6]
"""

from __future__ import annotations

import itertools


class Group:
    """A finite group given by its full table.

    elements: ordered names; table maps (a, b) -> a*b; unit is an element.
    Inverses are derived.  ``validate`` checks the laws over the whole
    table and raises ValueError on failure.
    """

    def __init__(self, elements, table, unit):
        self.elements = tuple(elements)
        self.table = dict(table)
        self.unit = unit

    def __repr__(self):
        return f"Group(order={len(self.elements)})"

    def __eq__(self, other):
        if not isinstance(other, Group):
            return NotImplemented
        return (
            self.elements == other.elements
            and self.table == other.table
            and self.unit == other.unit
        )

    __hash__ = None

    @property
    def order(self) -> int:
        return len(self.elements)

    def op(self, a: str, b: str) -> str:
        return self.table[(a, b)]

    def inverse(self, a: str) -> str:
        for b in self.elements:
            if self.table[(a, b)] == self.unit:
                return b
        raise ValueError(f"{a!r} has no inverse")

    def validate(self):
        elems = set(self.elements)
        if len(elems) != len(self.elements):
            raise ValueError("duplicate group elements")
        if self.unit not in elems:
            raise ValueError("unit is not an element")
        if set(self.table) != set(itertools.product(self.elements, repeat=2)):
            raise ValueError("group table is not total")
        for v in self.table.values():
            if v not in elems:
                raise ValueError(f"table value {v!r} is not an element")
        for a in self.elements:
            if self.table[(self.unit, a)] != a or self.table[(a, self.unit)] != a:
                raise ValueError(f"unit law fails at {a!r}")
        for a, b, c in itertools.product(self.elements, repeat=3):
            if self.table[(self.table[(a, b)], c)] != self.table[(a, self.table[(b, c)])]:
                raise ValueError(f"associativity fails at ({a!r},{b!r},{c!r})")
        for a in self.elements:
            self.inverse(a)

    def is_abelian(self) -> bool:
        return all(
            self.table[(a, b)] == self.table[(b, a)]
            for a, b in itertools.combinations(self.elements, 2)
        )

    def element_order(self, a: str) -> int:
        k, x = 1, a
        while x != self.unit:
            x = self.table[(x, a)]
            k += 1
        return k

    def power(self, a: str, k: int) -> str:
        if k < 0:
            return self.power(self.inverse(a), -k)
        x = self.unit
        for _ in range(k):
            x = self.table[(x, a)]
        return x


def trivial_group() -> Group:
    return Group(("0",), {("0", "0"): "0"}, "0")


def cyclic(n: int) -> Group:
    """Z/n with elements named "0".."n-1"."""
    if n < 1:
        raise ValueError("cyclic(n) needs n >= 1")
    names = [str(i) for i in range(n)]
    table = {(str(a), str(b)): str((a + b) % n) for a in range(n) for b in range(n)}
    return Group(names, table, "0")


def direct_product(A: Group, B: Group) -> Group:
    names = {}
    for a in A.elements:
        for b in B.elements:
            names[(a, b)] = f"({a},{b})"
    table = {}
    for (a, b), (a2, b2) in itertools.product(names, repeat=2):
        table[(names[(a, b)], names[(a2, b2)])] = names[(A.op(a, a2), B.op(b, b2))]
    return Group(tuple(names.values()), table, names[(A.unit, B.unit)])


def from_cyclic_factors(factors) -> Group:
    """Direct product of cyclic groups, e.g. [2, 2] for the Klein group."""
    factors = list(factors)
    if not factors:
        return trivial_group()
    G = cyclic(factors[0])
    for n in factors[1:]:
        G = direct_product(G, cyclic(n))
    return G


def find_isomorphism(A: Group, B: Group) -> dict | None:
    """An isomorphism A -> B as a dict, or None.

    Backtracking over elements ordered by decreasing order, pruning with
    element orders and partial-table consistency.
    """
    if A.order != B.order:
        return None
    ordA = {a: A.element_order(a) for a in A.elements}
    ordB = {b: B.element_order(b) for b in B.elements}
    if sorted(ordA.values()) != sorted(ordB.values()):
        return None
    by_order = {}
    for b, o in ordB.items():
        by_order.setdefault(o, []).append(b)
    elems = sorted(A.elements, key=lambda a: -ordA[a])

    def extend(mapping, used):
        if len(mapping) == A.order:
            return dict(mapping)
        # first unmapped element, preferring ones with mapped products
        a = next(x for x in elems if x not in mapping)
        for b in by_order[ordA[a]]:
            if b in used:
                continue
            mapping[a] = b
            used.add(b)
            # close under multiplication with everything already mapped
            new = []
            consistent = True
            items = list(mapping.items())
            for (x, fx) in items:
                for (y, fy) in items:
                    z = A.op(x, y)
                    fz = B.op(fx, fy)
                    if z in mapping:
                        if mapping[z] != fz:
                            consistent = False
                            break
                    elif fz in used:
                        consistent = False
                        break
                    else:
                        mapping[z] = fz
                        used.add(fz)
                        new.append(z)
                        items.append((z, fz))
                if not consistent:
                    break
            if consistent:
                result = extend(mapping, used)
                if result is not None:
                    return result
            for z in new:
                used.discard(mapping[z])
                del mapping[z]
            used.discard(b)
            del mapping[a]
        return None

    return extend({A.unit: B.unit}, {B.unit})


def is_homomorphism(A: Group, B: Group, mapping) -> bool:
    return all(
        mapping[A.op(a, b)] == B.op(mapping[a], mapping[b])
        for a, b in itertools.product(A.elements, repeat=2)
    )


def is_isomorphism(A: Group, B: Group, mapping) -> bool:
    if set(mapping) != set(A.elements):
        return False
    if sorted(mapping.values()) != sorted(B.elements):
        return False
    return is_homomorphism(A, B, mapping)


def abelian_invariants(G: Group) -> list[int]:
    """Invariant factors d1 | d2 | ... of a finite abelian group.

    Computed by repeatedly splitting off a maximal-order cyclic factor
    via isomorphism search against candidate decompositions; fine for
    desk-scale orders.

    >>> abelian_invariants(from_cyclic_factors([2, 4]))
    [2, 4]
    """
    if not G.is_abelian():
        raise ValueError("abelian_invariants needs an abelian group")
    n = G.order
    if n == 1:
        return []
    for factors in _invariant_factor_candidates(n):
        if find_isomorphism(G, from_cyclic_factors(factors)) is not None:
            return factors
    raise AssertionError("no abelian decomposition matched; group table is corrupt")


def _invariant_factor_candidates(n: int):
    """All chains d1 | d2 | ... | dk with product n, largest dk first."""
    out = []

    def rec(remaining, max_last, chain):
        if remaining == 1:
            out.append(list(reversed(chain)))
            return
        d = max_last
        while d >= 2:
            if remaining % d == 0 and (not chain or chain[-1] % d == 0):
                chain.append(d)
                rec(remaining // d, d, chain)
                chain.pop()
            d -= 1

    rec(n, n, [])
    out.sort(key=len)
    return out

#!/usr/bin/env python3
"""Build some small strict n-categories and run the axiom validator.

A category here is a fully tabulated enriched structure: objects, a hom
category for every ordered pair, and composition tables for every ordered
triple.  The validator scans every axiom instance: source/target
coherence, associativity, the unit laws for iterated identities, and the
interchange law (functoriality of composition), which is the load-bearing
axiom for everything downstream.
"""

from strictcat import (
    FinCat,
    cells,
    chaotic,
    compose_cells,
    eckmann_hilton_check,
    product,
    terminal,
    validate_cat,
)
from strictcat.groups import cyclic

# the terminal n-category: one cell in every dimension
T3 = terminal(3)
print("terminal(3) cells per level:", [len(cells(T3, i)) for i in range(4)])
print("terminal(3) validates:", validate_cat(T3).ok)

# the chaotic groupoid E(S): exactly one morphism between each pair
E = chaotic(("a", "b", "c"), 2)
print("chaotic({a,b,c}, 2) validates:", validate_cat(E).ok)

# a one-object category carrying the monoid Z/4 on its morphisms
Z4 = cyclic(4)
C = FinCat(
    1,
    ("p",),
    homs={("p", "p"): FinCat(0, Z4.elements)},
    identities={"p": "0"},
    compositions={("p", "p", "p"): (dict(Z4.table),)},
)
print("Z/4 as a one-object category validates:", validate_cat(C).ok)
print("1 *_0 3 =", compose_cells(C, 1, 0, "p|p|1", "p|p|3"))

# products are computed componentwise at every level
P = product(E, C if False else chaotic(("s",), 2))
print("product validates:", validate_cat(P).ok)

# perturb one table entry: the validator names every broken instance
bad_table = dict(Z4.table)
bad_table[("1", "2")] = "1"
broken = FinCat(
    1,
    ("p",),
    homs={("p", "p"): FinCat(0, Z4.elements)},
    identities={"p": "0"},
    compositions={("p", "p", "p"): (bad_table,)},
)
report = validate_cat(broken)
print(f"perturbed table: ok={report.ok}, first violations:")
for violation in report.violations[:3]:
    print("   ", violation)

# on endomorphisms of an iterated identity the two compositions collapse
# into one commutative operation; the checker verifies this cell by cell
from strictcat import deloop2, group_monoidal

D = deloop2(group_monoidal(Z4))
print("unit-endomorphism collapse on deloop2([Z/4]):", eckmann_hilton_check(D, "x").ok)

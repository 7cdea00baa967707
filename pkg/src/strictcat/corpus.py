"""The bundled fixture corpus.

Everything acceptance-level testing runs against: a spread of small
categories (levels 0 to 4, groupoids and non-groupoids, products, unions,
truncations, windows of the symbolic family) and of abelian monoid
objects.  All construction is deterministic; ``write_corpus`` dumps the
serializable fixtures as document files.
"""

from __future__ import annotations

import itertools
from pathlib import Path

from .core import FinCat, disjoint_union, identity_functor, product, terminal
from .groups import cyclic, from_cyclic_factors, trivial_group
from .monoidal import (
    MonGpd,
    SymMonGpd,
    base_change,
    base_change_monoidal,
    chaotic,
    chaotic_monoidal,
    deloop2,
    deloop_once,
    discrete_monoidal,
    fatten,
    group_monoidal,
)

SAT_TABLE = {
    ("0", "0"): "0", ("0", "1"): "1", ("0", "w"): "w",
    ("1", "0"): "1", ("1", "1"): "w", ("1", "w"): "w",
    ("w", "0"): "w", ("w", "1"): "w", ("w", "w"): "w",
}
SAT_ELEMENTS = ("0", "1", "w")


def monoid_cat(elements, table, unit) -> FinCat:
    hom = FinCat(0, elements)
    return FinCat(
        1,
        ("p",),
        homs={("p", "p"): hom},
        identities={"p": unit},
        compositions={("p", "p", "p"): (dict(table),)},
    )


def mon_gpds() -> dict[str, MonGpd]:
    """The monoid-object corpus (>= 10, covering the scholium fibers)."""
    z6 = cyclic(6)
    z3_chaotic = chaotic_monoidal(tuple("012"), dict(cyclic(3).table), "0")
    out = {
        "group-z2": group_monoidal(cyclic(2)),
        "group-z3": group_monoidal(cyclic(3)),
        "group-z4": group_monoidal(cyclic(4)),
        "group-z5": group_monoidal(cyclic(5)),
        "group-klein": group_monoidal(from_cyclic_factors([2, 2])),
        "group-trivial": group_monoidal(trivial_group()),
        "discrete-z2": discrete_monoidal(("0", "1"), dict(cyclic(2).table), "0"),
        "discrete-z3": discrete_monoidal(tuple("012"), dict(cyclic(3).table), "0"),
        "discrete-sat": discrete_monoidal(SAT_ELEMENTS, SAT_TABLE, "0"),
        "chaotic-z3": z3_chaotic,
        "chaotic-sat": chaotic_monoidal(SAT_ELEMENTS, SAT_TABLE, "0"),
        "pullback-z6-over-z3": base_change_monoidal(
            z3_chaotic, dict(z6.table), "0", {e: str(int(e) % 3) for e in z6.elements}
        ),
    }
    return out


def categories() -> dict[str, FinCat]:
    """The category corpus (>= 20): every fixture validates."""
    mons = mon_gpds()
    sym = SymMonGpd(2, cyclic(2))
    deloop_z2 = deloop2(mons["group-z2"])
    out = {
        "terminal-0": terminal(0),
        "terminal-1": terminal(1),
        "terminal-2": terminal(2),
        "terminal-3": terminal(3),
        "terminal-4": terminal(4),
        "chaotic-ab-1": chaotic(("a", "b"), 1),
        "chaotic-abc-2": chaotic(("a", "b", "c"), 2),
        "chaotic-ab-3": chaotic(("a", "b"), 3),
        "deloop-z2": deloop_z2,
        "deloop-z3": deloop2(mons["group-z3"]),
        "deloop-klein": deloop2(mons["group-klein"]),
        "deloop-discrete-z2": deloop2(mons["discrete-z2"]),
        "deloop-chaotic-z3": deloop2(mons["chaotic-z3"]),
        "deloop-chaotic-sat": deloop2(mons["chaotic-sat"]),
        "deloop-discrete-sat": deloop2(mons["discrete-sat"]),
        "sat-monoid-cat": monoid_cat(SAT_ELEMENTS, SAT_TABLE, "0"),
        "group-cat-z4": mons["group-z4"].underlying,
        "two-components": disjoint_union(
            chaotic(("a1", "a2"), 1), chaotic(("b1",), 1)
        ),
        "two-components-2": disjoint_union(
            chaotic(("a1", "a2"), 2), chaotic(("b1", "b2"), 2)
        ),
        "product-chaotic-z2": product(
            chaotic(("a", "b"), 1), mons["group-z2"].underlying
        ),
        "fattened-deloop-z2": fatten(deloop_z2, ("s1", "s2")),
        "base-change-two-points": base_change(
            {"s": "0", "t": "0"}, mons["group-z3"].underlying
        ),
        "sym-window-2": sym.window_groupoid(2),
        "deloop4-z2": deloop_once(deloop_z2),
    }
    return out


def truncation_corpus() -> dict[str, FinCat]:
    """Derived fixtures exercising truncation (kept out of the documents)."""
    from .groupoid import truncate

    cats = categories()
    return {
        "trunc-2-deloop-z2": truncate(cats["deloop-z2"], 2),
        "trunc-1-fattened": truncate(cats["fattened-deloop-z2"], 1),
    }


def basepoint(C: FinCat) -> str:
    return C.objects[0]


def document_fixtures():
    """(name, kind, object) triples for the shipped document corpus."""
    from .core import constant_functor

    cats = categories()
    mons = mon_gpds()
    docs = [
        ("terminal_2.cat", "category", cats["terminal-2"]),
        ("deloop_z2.cat", "category", cats["deloop-z2"]),
        ("deloop_z3.cat", "category", cats["deloop-z3"]),
        ("deloop_discrete_z2.cat", "category", cats["deloop-discrete-z2"]),
        ("chaotic_ab_2.cat", "category", cats["chaotic-abc-2"]),
        ("sat_monoid.cat", "category", cats["sat-monoid-cat"]),
        ("two_components.cat", "category", cats["two-components"]),
        ("fattened_deloop_z2.cat", "category", cats["fattened-deloop-z2"]),
        ("sym_window_2.cat", "category", cats["sym-window-2"]),
        ("id_deloop_z2.fun", "functor", identity_functor(cats["deloop-z2"])),
        (
            "collapse_chaotic.fun",
            "functor",
            constant_functor(cats["chaotic-ab-1"], terminal(1), "*"),
        ),
        (
            "collapse_two_components.fun",
            "functor",
            constant_functor(cats["two-components"], terminal(1), "*"),
        ),
        ("z2.mon", "monoidal", mons["group-z2"]),
        ("discrete_sat.mon", "monoidal", mons["discrete-sat"]),
    ]
    return docs


def write_corpus(directory) -> list[str]:
    """Write the document corpus; returns the file names written."""
    from .serialize import dumps, serialize_category, serialize_functor, serialize_monoidal

    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    written = []
    for name, kind, obj in document_fixtures():
        if kind == "category":
            doc = serialize_category(obj)
        elif kind == "functor":
            doc = serialize_functor(obj)
        else:
            doc = serialize_monoidal(obj)
        (directory / name).write_text(dumps(doc))
        written.append(name)
    return written


def data_dir() -> Path:
    return Path(__file__).parent / "data"

"""JSON document formats for categories, functors and monoid objects.

The category schema mirrors the enriched representation directly:

    {"level": n,
     "objects": [...],
     "homs": {"x|y": <category document>},        # level >= 1
     "identities": {"x": "e"},
     "compositions": {"x|y|z": [[[left, right, result], ...], ...]}}

where the per-triple value lists one table per hom level, each a list of
flat-id triples.  Serialization is canonical (sorted keys and rows), so
parse followed by serialize is the identity on every document this module
produces.  Parse errors carry the path to the offending node.
"""

from __future__ import annotations

import json

from .core import FinCat, StrictFunctor, StructuralError, cell_ids
from .groups import Group
from .monoidal import MonGpd
from .validate import ValidationReport


class SchemaError(ValueError):
    """A document does not match the schema; the message carries a path."""


def _expect(doc, key, kind, path):
    if not isinstance(doc, dict):
        raise SchemaError(f"{path}: expected an object, got {type(doc).__name__}")
    if key not in doc:
        raise SchemaError(f"{path}.{key}: missing")
    value = doc[key]
    if not isinstance(value, kind):
        raise SchemaError(f"{path}.{key}: expected {kind.__name__}")
    return value


def serialize_category(C: FinCat) -> dict:
    doc = {"level": C.level, "objects": list(C.objects)}
    if C.level == 0:
        return doc
    doc["homs"] = {
        f"{x}|{y}": serialize_category(H) for (x, y), H in sorted(C.homs.items())
    }
    doc["identities"] = {x: e for x, e in sorted(C.identities.items())}
    comps = {}
    for (x, y, z), tables in sorted(C.compositions.items()):
        comps[f"{x}|{y}|{z}"] = [
            [[u, v, w] for (u, v), w in sorted(tab.items())] for tab in tables
        ]
    doc["compositions"] = comps
    return doc


def parse_category(doc, path: str = "category") -> FinCat:
    """Parse and structurally check a category document.

    Axioms are not checked here; run ``validate_cat`` for that.
    """
    level = _expect(doc, "level", int, path)
    objects = _expect(doc, "objects", list, path)
    if level == 0:
        C = FinCat(0, objects)
    else:
        homs_doc = _expect(doc, "homs", dict, path)
        homs = {}
        for key, sub in homs_doc.items():
            parts = key.split("|")
            if len(parts) != 2:
                raise SchemaError(f'{path}.homs["{key}"]: key must be "x|y"')
            homs[(parts[0], parts[1])] = parse_category(sub, f'{path}.homs["{key}"]')
        identities = _expect(doc, "identities", dict, path)
        comps_doc = _expect(doc, "compositions", dict, path)
        compositions = {}
        for key, tables in comps_doc.items():
            parts = key.split("|")
            if len(parts) != 3:
                raise SchemaError(f'{path}.compositions["{key}"]: key must be "x|y|z"')
            if not isinstance(tables, list) or len(tables) != level:
                raise SchemaError(
                    f'{path}.compositions["{key}"]: expected {level} level tables'
                )
            parsed = []
            for i, rows in enumerate(tables):
                tab = {}
                for row in rows:
                    if not (isinstance(row, list) and len(row) == 3):
                        raise SchemaError(
                            f'{path}.compositions["{key}"][{i}]: rows are '
                            f"[left, right, result] triples"
                        )
                    u, v, w = row
                    if (u, v) in tab:
                        raise SchemaError(
                            f'{path}.compositions["{key}"][{i}]: duplicate pair '
                            f"({u!r}, {v!r})"
                        )
                    tab[(u, v)] = w
                parsed.append(tab)
            compositions[(parts[0], parts[1], parts[2])] = tuple(parsed)
        C = FinCat(level, objects, homs, identities, compositions)
    try:
        C.check_structure()
    except StructuralError as exc:
        raise SchemaError(f"{path}: {exc}") from exc
    return C


def serialize_functor(F: StrictFunctor) -> dict:
    return {
        "source": serialize_category(F.source),
        "target": serialize_category(F.target),
        "maps": [{k: v for k, v in sorted(m.items())} for m in F.maps],
    }


def parse_functor(doc, path: str = "functor") -> StrictFunctor:
    source = parse_category(_expect(doc, "source", dict, path), f"{path}.source")
    target = parse_category(_expect(doc, "target", dict, path), f"{path}.target")
    maps = _expect(doc, "maps", list, path)
    if len(maps) != source.level + 1:
        raise SchemaError(f"{path}.maps: expected {source.level + 1} level maps")
    F = StrictFunctor(source, target, [dict(m) for m in maps])
    for i in range(source.level + 1):
        cells = set(cell_ids(source, i))
        if set(F.maps[i]) != cells:
            raise SchemaError(f"{path}.maps[{i}]: not a total map on the {i}-cells")
        codomain = set(cell_ids(target, i))
        for c, img in F.maps[i].items():
            if img not in codomain:
                raise SchemaError(f"{path}.maps[{i}][{c!r}]: unknown target cell {img!r}")
    return F


def serialize_monoidal(G: MonGpd) -> dict:
    return {
        "underlying": serialize_category(G.underlying),
        "sum": [{k: v for k, v in sorted(m.items())} for m in G.sum.maps],
        "unit": G.unit,
    }


def parse_monoidal(doc, path: str = "monoidal") -> MonGpd:
    from .core import product

    underlying = parse_category(
        _expect(doc, "underlying", dict, path), f"{path}.underlying"
    )
    if underlying.level != 1:
        raise SchemaError(f"{path}.underlying: monoid objects live at level 1")
    sums = _expect(doc, "sum", list, path)
    unit = _expect(doc, "unit", str, path)
    P = product(underlying, underlying)
    F = StrictFunctor(P, underlying, [dict(m) for m in sums])
    for i in range(2):
        if set(F.maps[i]) != set(cell_ids(P, i)):
            raise SchemaError(f"{path}.sum[{i}]: not a total map on the square")
    if unit not in underlying.objects:
        raise SchemaError(f"{path}.unit: {unit!r} is not an object")
    return MonGpd(underlying, F, unit)


def serialize_group(G: Group) -> dict:
    from .groups import abelian_invariants

    doc = {
        "elements": list(G.elements),
        "unit": G.unit,
        "table": {f"{a}|{b}": c for (a, b), c in sorted(G.table.items())},
        "order": G.order,
        "abelian": G.is_abelian(),
    }
    if doc["abelian"]:
        doc["invariants"] = abelian_invariants(G)
    return doc


def serialize_report(report: ValidationReport) -> list:
    return [
        {
            "axiom": v.axiom,
            "level": v.level,
            "cells": list(v.cells),
            "detail": v.detail,
        }
        for v in report.violations
    ]


def dumps(doc) -> str:
    """Canonical JSON: sorted keys, stable indentation, trailing newline."""
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"

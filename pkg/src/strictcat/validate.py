"""Axiom validation for tabulated categories and strict functors.

The checks are exhaustive over all tabulated cells: instances are desk
scale by design, so no sampling is used.  Structural problems (dangling
ids, partial tables) raise ``StructuralError``; violated equations are
*reported*, never raised.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .core import (
    FinCat,
    StrictFunctor,
    StructuralError,
    cell_ids,
    cell_level,
    cell_source,
    cell_target,
    compose_cells,
    identity_of,
    iterated_identity,
    join_id,
    split_id,
)


@dataclass(frozen=True)
class Violation:
    axiom: str
    level: int
    cells: tuple[str, ...]
    detail: str = ""

    def __str__(self):
        tail = f": {self.detail}" if self.detail else ""
        return f"[{self.axiom} @ level {self.level}] {', '.join(self.cells)}{tail}"


@dataclass
class ValidationReport:
    violations: list[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, axiom, level, cells, detail=""):
        self.violations.append(Violation(axiom, level, tuple(cells), detail))

    def __str__(self):
        if self.ok:
            return "ok"
        lines = [f"{len(self.violations)} violation(s):"]
        lines += [f"  {v}" for v in self.violations]
        return "\n".join(lines)


def _composable_pairs(C: FinCat, i: int, j: int):
    """All pairs of i-cells of C composable along *_j, grouped by j-face."""
    by_source = {}
    for c in cell_ids(C, i):
        by_source.setdefault(cell_source(c, j), []).append(c)
    for u in cell_ids(C, i):
        for v in by_source.get(cell_target(u, j), ()):
            yield u, v


def validate_cat(C: FinCat) -> ValidationReport:
    """Check every strict n-category axiom on every tabulated instance.

    Reports source/target coherence of the composition tables, identity
    preservation by composition (table functoriality on identities),
    associativity, the unit laws for iterated identities, and the
    interchange law (functoriality of composition on higher cells).
    """
    C.check_structure()
    report = ValidationReport()
    _validate_into(C, report)
    return report


def _validate_into(C: FinCat, report: ValidationReport):
    if C.level == 0:
        return
    for H in C.homs.values():
        _validate_into(H, report)

    n = C.level
    # Tables as functors hom(x,y) x hom(y,z) -> hom(x,z).
    for (x, y, z), tables in sorted(C.compositions.items()):
        left, right, out = C.homs[(x, y)], C.homs[(y, z)], C.homs[(x, z)]
        for i, tab in enumerate(tables):
            for (u, v), w in sorted(tab.items()):
                if i == 0:
                    continue
                # faces: F(s u, s v) = s F(u, v), and likewise for targets
                su, sv = cell_source(u, i - 1), cell_source(v, i - 1)
                tu, tv = cell_target(u, i - 1), cell_target(v, i - 1)
                if tables[i - 1][(su, sv)] != cell_source(w, i - 1):
                    report.add(
                        "source-coherence", i, (u, v, w),
                        f"composition at ({x},{y},{z}) breaks sources",
                    )
                if tables[i - 1][(tu, tv)] != cell_target(w, i - 1):
                    report.add(
                        "target-coherence", i, (u, v, w),
                        f"composition at ({x},{y},{z}) breaks targets",
                    )
        # identity cells: F(1_u, 1_v) = 1_{F(u, v)}
        for i in range(n - 1):
            tab, tab_up = tables[i], tables[i + 1]
            for (u, v), w in sorted(tab.items()):
                lu, lv = identity_of(left, u), identity_of(right, v)
                if tab_up[(lu, lv)] != identity_of(out, w):
                    report.add(
                        "identity-functoriality", i + 1, (lu, lv),
                        f"composition at ({x},{y},{z}) does not preserve identity cells",
                    )
        # interchange: F(u *_j u', v *_j v') = F(u, v) *_j F(u', v')
        for i in range(1, n):
            tab = tables[i]
            for j in range(i):
                for u, u2 in _composable_pairs(left, i, j):
                    for v, v2 in _composable_pairs(right, i, j):
                        lhs = tab[
                            (
                                compose_cells(left, i, j, u, u2),
                                compose_cells(right, i, j, v, v2),
                            )
                        ]
                        rhs = compose_cells(out, i, j, tab[(u, v)], tab[(u2, v2)])
                        if lhs != rhs:
                            report.add(
                                "interchange", i, (u, u2, v, v2),
                                f"at ({x},{y},{z}) along *_{j + 1}",
                            )

    # associativity of each *_0 (lower *_j are associative by recursion)
    for w_, x in itertools.product(C.objects, repeat=2):
        for y, z in itertools.product(C.objects, repeat=2):
            t_ab = C.compositions[(w_, x, y)]
            t_bc = C.compositions[(x, y, z)]
            t_a_bc = C.compositions[(w_, x, z)]
            t_ab_c = C.compositions[(w_, y, z)]
            for i in range(n):
                for a in cell_ids(C.homs[(w_, x)], i):
                    for b in cell_ids(C.homs[(x, y)], i):
                        ab = t_ab[i][(a, b)]
                        for c in cell_ids(C.homs[(y, z)], i):
                            if t_ab_c[i][(ab, c)] != t_a_bc[i][(a, t_bc[i][(b, c)])]:
                                report.add(
                                    "associativity", i + 1, (a, b, c),
                                    f"objects ({w_},{x},{y},{z})",
                                )

    # unit laws: iterated identities are strict two-sided units for *_0
    for x, y in itertools.product(C.objects, repeat=2):
        ex, ey = C.identities[x], C.identities[y]
        t_l = C.compositions[(x, x, y)]
        t_r = C.compositions[(x, y, y)]
        for i in range(n):
            pad_x = iterated_identity(C.homs[(x, x)], ex, i)
            pad_y = iterated_identity(C.homs[(y, y)], ey, i)
            for a in cell_ids(C.homs[(x, y)], i):
                if t_l[i][(pad_x, a)] != a:
                    report.add("left-unit", i + 1, (pad_x, a), f"1_{x} is not a left unit")
                if t_r[i][(a, pad_y)] != a:
                    report.add("right-unit", i + 1, (a, pad_y), f"1_{y} is not a right unit")


def validate_functor(F: StrictFunctor) -> ValidationReport:
    """Check that F preserves faces, identities and every composition."""
    report = ValidationReport()
    A, B = F.source, F.target
    n = A.level
    # totality and codomain membership
    for i in range(n + 1):
        dom = cell_ids(A, i)
        cod = set(cell_ids(B, i))
        missing = [c for c in dom if c not in F.maps[i]]
        if missing:
            raise StructuralError(f"functor map is not total at level {i}: missing {missing[0]!r}")
        for c in dom:
            if F.maps[i][c] not in cod:
                raise StructuralError(
                    f"functor maps {c!r} to {F.maps[i][c]!r}, not a {i}-cell of the target"
                )
    for i in range(1, n + 1):
        for c in cell_ids(A, i):
            fc = F.maps[i][c]
            if F.maps[i - 1][cell_source(c, i - 1)] != cell_source(fc, i - 1):
                report.add("functor-source", i, (c,), "image has wrong source")
            if F.maps[i - 1][cell_target(c, i - 1)] != cell_target(fc, i - 1):
                report.add("functor-target", i, (c,), "image has wrong target")
    for i in range(n):
        for c in cell_ids(A, i):
            if F.maps[i + 1][identity_of(A, c)] != identity_of(B, F.maps[i][c]):
                report.add("functor-identity", i + 1, (c,), "identity cell not preserved")
    for i in range(1, n + 1):
        for j in range(i):
            for u, v in _composable_pairs(A, i, j):
                lhs = F.maps[i][compose_cells(A, i, j, u, v)]
                rhs = compose_cells(B, i, j, F.maps[i][u], F.maps[i][v])
                if lhs != rhs:
                    report.add("functor-composition", i, (u, v), f"*_{j} not preserved")
    return report


def eckmann_hilton_check(C: FinCat, x: str) -> ValidationReport:
    """Verify the collapse of compositions on endomorphisms of 1_x.

    On the doubly-iterated hom at an object x, the two outer composition
    laws are checked to coincide and to be commutative, at every level of
    that hom.  This must hold for every validated category; a violation
    here means the validator itself is inconsistent, and the report says
    so in the violation detail.
    """
    if C.level < 2:
        raise StructuralError("need a category of level >= 2")
    if x not in C.objects:
        raise StructuralError(f"unknown object {x!r}")
    report = ValidationReport()
    K = C.homs[(x, x)]
    e = C.identities[x]
    L = K.homs[(e, e)]
    for i in range(L.level + 1):
        ids = cell_ids(L, i)
        star1 = K.compositions[(e, e, e)][i]
        star0 = C.compositions[(x, x, x)][i + 1]
        for u, v in itertools.product(ids, repeat=2):
            qu, qv = join_id((e, e) + split_id(u)), join_id((e, e) + split_id(v))
            h0 = split_id(star0[(qu, qv)])[2:]
            a = star1[(u, v)]
            b = join_id(h0)
            c = star1[(v, u)]
            if not a == b == c:
                report.add(
                    "eckmann-hilton", i, (u, v),
                    "compositions fail to collapse on unit endomorphisms; "
                    "if validate_cat passed, the validator is inconsistent",
                )
    return report

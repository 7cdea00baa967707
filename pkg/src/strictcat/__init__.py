"""strictcat: a symbolic kernel for finite strict n-categories (n <= 4).

Validation of the category axioms including interchange, truncation and
homotopy groups of strict groupoids, the equivalent groupoid and
equivalence conditions, abelian monoid objects and delooping, and the
Postnikov-splitting construction with machine-checkable certificates.
"""

from .core import (
    FinCat,
    NotComposable,
    StrictFunctor,
    StructuralError,
    cells,
    compose_cells,
    disjoint_union,
    functor_compose,
    hom_cat,
    identity_functor,
    identity_of,
    pad_to_level,
    product,
    product_projections,
    terminal,
)
from .groups import Group, abelian_invariants, cyclic, from_cyclic_factors, trivial_group
from .groupoid import (
    NotAGroupoid,
    TruncationError,
    Verdict,
    homotopy_group,
    is_equivalence,
    is_groupoid,
    pi0,
    truncate,
    weak_identity_candidates,
)
from .monoidal import (
    MonGpd,
    SymMonGpd,
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
    loop2,
    validate_monoidal,
)
from .validate import ValidationReport, eckmann_hilton_check, validate_cat, validate_functor

__version__ = "0.1.0"

__all__ = [
    "FinCat",
    "Group",
    "MonGpd",
    "NotAGroupoid",
    "NotComposable",
    "StrictFunctor",
    "StructuralError",
    "SymMonGpd",
    "TruncationError",
    "ValidationReport",
    "Verdict",
    "abelian_invariants",
    "base_change",
    "base_change_monoidal",
    "base_change_projection",
    "cells",
    "chaotic",
    "chaotic_monoidal",
    "compose_cells",
    "cyclic",
    "deloop2",
    "deloop_once",
    "discrete_monoidal",
    "disjoint_union",
    "eckmann_hilton_check",
    "fatten",
    "fatten_projection",
    "from_cyclic_factors",
    "functor_compose",
    "group_monoidal",
    "hom_cat",
    "homotopy_group",
    "identity_functor",
    "identity_of",
    "is_equivalence",
    "is_groupoid",
    "loop2",
    "pad_to_level",
    "pi0",
    "product",
    "product_projections",
    "terminal",
    "trivial_group",
    "truncate",
    "validate_cat",
    "validate_functor",
    "validate_monoidal",
    "weak_identity_candidates",
]

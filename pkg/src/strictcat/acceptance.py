"""The acceptance suite: nine criteria, each a self-contained check.

Each criterion returns a CriterionResult with a pass flag, a human
summary and its runtime; stated time budgets are part of the result so
callers (pytest and the selftest command) can enforce them.  Random
suites are seeded and therefore reproducible.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass

from . import corpus, gen
from .core import functor_compose
from .groupoid import (
    homotopy_group,
    is_equivalence,
    is_groupoid,
    loop_formula_group,
    truncate,
)
from .groups import from_cyclic_factors, is_isomorphism
from .monoidal import SymMonGpd, deloop2, deloop_once, loop2
from .splitting import SymDelooped, split
from .validate import eckmann_hilton_check, validate_cat


@dataclass
class CriterionResult:
    name: str
    ok: bool
    detail: str
    seconds: float
    budget: float | None = None

    @property
    def within_budget(self) -> bool:
        return self.budget is None or self.seconds < self.budget

    def line(self) -> str:
        status = "PASS" if (self.ok and self.within_budget) else "FAIL"
        budget = f" (budget {self.budget:.0f}s)" if self.budget else ""
        return f"[{status}] {self.name}: {self.detail} [{self.seconds:.2f}s{budget}]"


def _result(name, budget, started, ok, detail):
    return CriterionResult(name, ok, detail, time.perf_counter() - started, budget)


def axiom_and_interchange_suite() -> CriterionResult:
    """Criterion 1: every corpus category validates; the collapse of
    compositions holds at every object of every category of level >= 2."""
    started = time.perf_counter()
    cats = {**corpus.categories(), **corpus.truncation_corpus()}
    if len(cats) < 20:
        return _result("axiom-interchange", 10.0, started, False, "corpus too small")
    bad = []
    checked_eh = 0
    for name, C in sorted(cats.items()):
        if not validate_cat(C).ok:
            bad.append(name)
            continue
        if C.level >= 2:
            for x in C.objects:
                checked_eh += 1
                if not eckmann_hilton_check(C, x).ok:
                    bad.append(f"{name}@{x}")
    detail = f"{len(cats)} categories, {checked_eh} unit-collapse scans"
    if bad:
        detail += f"; failures: {bad[:3]}"
    return _result("axiom-interchange", 10.0, started, not bad, detail)


def scholium_round_trip() -> CriterionResult:
    """Criterion 2: loop2 after deloop2 is the identity, table for table."""
    started = time.perf_counter()
    mons = corpus.mon_gpds()
    required = {"group-z2", "group-z3", "group-klein"}
    missing = required - set(mons)
    bad = [name for name, G in sorted(mons.items()) if loop2(deloop2(G)) != G]
    ok = not bad and not missing and len(mons) >= 10
    detail = f"{len(mons)} monoid objects round-tripped exactly"
    if bad:
        detail += f"; failed: {bad}"
    return _result("scholium-round-trip", None, started, ok, detail)


def groupoid_condition_agreement(count: int = 200, seed: int = 1030) -> CriterionResult:
    """Criterion 3: the two groupoid conditions agree on every instance."""
    started = time.perf_counter()
    disagreements = []
    mismatch = []
    n = 0
    for C, expected in gen.category_stream(seed, count):
        n += 1
        assert validate_cat(C).ok
        v2 = is_groupoid(C, "v2").ok
        v3 = is_groupoid(C, "v3").ok
        if v2 != v3:
            disagreements.append(n)
        if v3 != expected:
            mismatch.append(n)
    ok = not disagreements and not mismatch
    detail = f"{n} generated 2-/3-categories, 0 disagreements" if ok else (
        f"disagreements at {disagreements[:3]}, generator mismatches {mismatch[:3]}"
    )
    return _result("groupoid-condition-agreement", 60.0, started, ok, detail)


def equivalence_definition_agreement(count: int = 200, seed: int = 1040) -> CriterionResult:
    """Criterion 4: variants a, b, c agree on every generated functor."""
    started = time.perf_counter()
    disagreements = []
    verdicts = {True: 0, False: 0}
    n = 0
    for F in gen.functor_stream(seed, count):
        n += 1
        a = is_equivalence(F, "a", check_inputs=False).ok
        b = is_equivalence(F, "b", check_inputs=False).ok
        c = is_equivalence(F, "c", check_inputs=False).ok
        if not (a == b == c):
            disagreements.append((n, a, b, c))
        verdicts[a] += 1
    ok = not disagreements and verdicts[True] > 0 and verdicts[False] > 0
    detail = (
        f"{n} functors ({verdicts[True]} equivalences, {verdicts[False]} not), "
        f"0 disagreements"
        if ok
        else f"disagreements: {disagreements[:3]} split {verdicts}"
    )
    return _result("equivalence-definition-agreement", 60.0, started, ok, detail)


def sub_lemmas(count: int = 100, seed: int = 1050) -> CriterionResult:
    """Criterion 5: three-for-two and the second sub-lemma on chains."""
    started = time.perf_counter()
    bad = []
    informative = 0
    n = 0
    for f, g in gen.chain_stream(seed, count):
        n += 1
        ef = is_equivalence(f, "a", check_inputs=False).ok
        eg = is_equivalence(g, "a", check_inputs=False).ok
        egf = is_equivalence(functor_compose(g, f), "a", check_inputs=False).ok
        if [ef, eg, egf].count(True) == 2:
            bad.append(("three-for-two", n, ef, eg, egf))
        if ef and eg:
            informative += 1
    m = 0
    for f, g, h in gen.chain4_stream(seed + 1, count):
        m += 1
        egf = is_equivalence(functor_compose(g, f), "a", check_inputs=False).ok
        ehg = is_equivalence(functor_compose(h, g), "a", check_inputs=False).ok
        if egf and ehg:
            informative += 1
            if not is_equivalence(g, "a", check_inputs=False).ok:
                bad.append(("second-sub-lemma", m))
    ok = not bad and informative > 0
    detail = f"{n} pairs + {m} triples, {informative} with live hypotheses, 0 counterexamples"
    if bad:
        detail = f"counterexamples: {bad[:3]}"
    return _result("sub-lemmas", None, started, ok, detail)


def homotopy_group_consistency() -> CriterionResult:
    """Criterion 6: truncation definition vs loop formula (the identity
    map is an isomorphism), commutativity at i >= 2, truncation
    invariance of pi_i for i <= k."""
    started = time.perf_counter()
    bad = []
    checked = 0
    for name, C in sorted(corpus.categories().items()):
        if C.level == 0 or not is_groupoid(C, "v3").ok:
            continue
        for x in C.objects:
            for i in range(1, C.level + 1):
                checked += 1
                via_truncation = homotopy_group(C, i, x)
                via_loop = loop_formula_group(C, i, x)
                identity = {e: e for e in via_truncation.elements}
                if via_truncation != via_loop or not is_isomorphism(
                    via_truncation, via_loop, identity
                ):
                    bad.append((name, x, i, "loop-formula"))
                if i >= 2 and not via_truncation.is_abelian():
                    bad.append((name, x, i, "not-abelian"))
                for k in range(i, C.level + 1):
                    if homotopy_group(truncate(C, k), i, x) != via_truncation:
                        bad.append((name, x, i, k, "truncation-shift"))
    ok = not bad and checked > 0
    detail = f"{checked} homotopy groups cross-checked" if ok else f"failures: {bad[:3]}"
    return _result("homotopy-consistency", None, started, ok, detail)


def delooping_biconditional() -> CriterionResult:
    """Criterion 7: one extra delooping preserves and reflects the
    groupoid property, on a group fixture and a non-group fixture."""
    started = time.perf_counter()
    mons = corpus.mon_gpds()
    fixtures = {"discrete-z2": True, "discrete-sat": False}
    bad = []
    for name, expected in fixtures.items():
        C = deloop2(mons[name])
        B = deloop_once(C)
        if not validate_cat(B).ok:
            bad.append((name, "deloop invalid"))
            continue
        for variant in ("v2", "v3"):
            if is_groupoid(C, variant).ok != expected:
                bad.append((name, variant, "input"))
            if is_groupoid(B, variant).ok != expected:
                bad.append((name, variant, "delooped"))
    detail = "groupoid property preserved and reflected on both fixtures"
    if bad:
        detail = f"failures: {bad}"
    return _result("delooping-biconditional", None, started, not bad, detail)


def splitting_certificates() -> CriterionResult:
    """Criterion 8: the full pipeline passes its certificate for
    H = Z/2 (r=2, fattened by 2) and H = Z/3 (r=1, fattened by 1)."""
    started = time.perf_counter()
    runs = [
        ([2], 2, ("s1", "s2")),
        ([3], 1, ("s1",)),
    ]
    required = {
        "g-finite-analogue-equivalence", "f-equivalence-a", "pi0-D-point",
        "pi1-D-trivial", "pi2-D-zero", "pi3-D-fiber", "pi3-h-iso",
        "nf-unique", "nf-compose-oracle", "nf-add-oracle", "nf-interchange",
    }
    bad = []
    for factors, width, fat in runs:
        run_started = time.perf_counter()
        C = SymDelooped(SymMonGpd(width, from_cyclic_factors(factors)), fat)
        try:
            diagram = split(C, window=4)
        except Exception as exc:  # a failing claim raises
            bad.append((factors, str(exc)))
            continue
        names = {c.name for c in diagram.claims}
        if not required <= names:
            bad.append((factors, f"missing claims {required - names}"))
        if not diagram.ok:
            bad.append((factors, "certificate has failing claims"))
        if time.perf_counter() - run_started >= 30.0:
            bad.append((factors, "over 30s"))
    detail = "both certificates pass with all required claims"
    if bad:
        detail = f"failures: {bad}"
    return _result("splitting-certificate", 60.0, started, not bad, detail)


def truncation_algebra() -> CriterionResult:
    """Criterion 9: tau_k tau_k' = tau_k cell for cell; truncations of
    groupoids are groupoids under both conditions."""
    started = time.perf_counter()
    bad = []
    checked = 0
    for name, C in sorted(corpus.categories().items()):
        for k2 in range(C.level + 1):
            T2 = truncate(C, k2)
            for k in range(k2 + 1):
                checked += 1
                if truncate(T2, k) != truncate(C, k):
                    bad.append((name, k, k2))
        if C.level >= 1 and is_groupoid(C, "v3").ok:
            for k in range(C.level + 1):
                T = truncate(C, k)
                for variant in ("v2", "v3"):
                    if not is_groupoid(T, variant).ok:
                        bad.append((name, k, variant, "truncation not groupoid"))
    ok = not bad and checked > 0
    detail = f"{checked} truncation pairs compared exactly" if ok else f"failures: {bad[:3]}"
    return _result("truncation-algebra", None, started, ok, detail)


CRITERIA = (
    axiom_and_interchange_suite,
    scholium_round_trip,
    groupoid_condition_agreement,
    equivalence_definition_agreement,
    sub_lemmas,
    homotopy_group_consistency,
    delooping_biconditional,
    splitting_certificates,
    truncation_algebra,
)


def run_all(echo=None) -> list[CriterionResult]:
    """Run every criterion; optionally echo one line per result."""
    results = []
    for criterion in CRITERIA:
        result = criterion()
        results.append(result)
        if echo is not None:
            echo(result.line())
    return results

"""The consistency suite: independent computations that must agree."""

import logging
from typing import Callable, Dict, List, Optional, Tuple

from app.barnatan.bn import bn_homology, default_window, filtered_homology, stable_iso_check
from app.barnatan.lee import all_lee_generators, harmonic_dims, lee_class_rank, theorem31_dims
from app.complexes.cube import (
    BigradedComplex,
    build_khovanov,
    build_reduced,
    verify_complex,
)
from app.complexes.filtered import filtered_from_complex
from app.diagram.link import LinkDiagram, mirror
from app.exceptions import ComplexConstructionError, ConsistencyError
from app.homology.core import CoreInvariants, core_invariants, homology_table, khovanov_homology
from app.homology.exactness import exactness_report
from app.service.models import CheckResult
from app.settings import get_settings
from app.spectral.pages import compute_pages
from app.spectral.verify import shift_check, verify_flavor
from app.tables import DimTable, format_key

Outcome = Tuple[bool, Optional[str], Dict]


def _run(name: str, fn: Callable[[], Outcome], informational: bool = False) -> CheckResult:
    try:
        passed, detail, witness = fn()
    except ConsistencyError as exc:
        passed, detail, witness = False, exc.detail, exc.witness
    if not passed and not informational:
        logging.warning("Check %s failed: %s", name, detail)
    return CheckResult(
        name=name,
        passed=passed,
        informational=informational,
        detail=detail,
        witness=witness,
    )


def _table_diff(left: DimTable, right: DimTable) -> Dict[str, List[int]]:
    keys = sorted(set(left.entries) | set(right.entries))
    return {format_key(k): [left[k], right[k]] for k in keys if left[k] != right[k]}


def check_identities(c: BigradedComplex) -> CheckResult:
    def fn() -> Outcome:
        try:
            verify_complex(c)
        except ComplexConstructionError as exc:
            return False, exc.detail, {}
        return True, "∂² = 0, β² = 0 and ∂β = β∂ on every block", {}

    return _run("complex identities", fn)


def check_theorem31(d: LinkDiagram, c: BigradedComplex) -> CheckResult:
    def fn() -> Outcome:
        direct = filtered_from_complex(c).homology_dims()
        formula = theorem31_dims(d)
        witness = {"direct": direct, "formula": formula}
        if direct != formula:
            return False, "filtered homology differs from the linking-number count", witness
        return True, f"total dimension {sum(direct.values())} = 2^{d.k}", witness

    return _run("linking-number dimension formula", fn)


def check_stable_iso(d: LinkDiagram, c: BigradedComplex, workers: Optional[int] = None) -> CheckResult:
    def fn() -> Outcome:
        bn = bn_homology(d, workers=workers, complex_=c)
        report = stable_iso_check(d, bn=bn, complex_=c)
        detail = "; ".join(report.mismatches) or f"stable below j = {report.stable_threshold}"
        return report.passed, detail, report.model_dump(mode="json")

    return _run("stable isomorphism", fn)


def check_spectral(core: CoreInvariants) -> List[CheckResult]:
    """Filtered flavor plus every graded column of the default BN window."""
    out = []
    names = [("filtered", None)]
    lo, hi = default_window(core.complex)
    names += [("graded", j) for j in range(lo, hi + 1) if (j - core.complex.parity) % 2 == 0]
    for flavor, j in names:
        label = f"E1/E2 {flavor}" + (f" j={j}" if j is not None else "")

        def fn(flavor=flavor, j=j) -> Outcome:
            report = verify_flavor(core, flavor, j)
            detail = "; ".join(report.mismatches) or f"collapses at E_{report.collapse_page}"
            return report.passed, detail, report.model_dump(mode="json")

        out.append(_run(label, fn))

    j_s = core.complex.bounds()[2]
    for j in (j_s, j_s - 2):

        def shift(j=j) -> Outcome:
            report = shift_check(core.complex, j)
            return report.passed, "; ".join(report.mismatches) or f"level shift {report.shift}", {}

        out.append(_run(f"graded/filtered shift j={j}", shift))
    return out


def check_exactness(core: CoreInvariants) -> CheckResult:
    def fn() -> Outcome:
        fc = filtered_from_complex(core.complex)
        seq = compute_pages(fc)
        collapse = seq.collapse_page
        report = exactness_report(
            core.homology, core.beta, fc.homology_dims(), collapsed=collapse is not None and collapse <= 2
        )
        detail = f"deviations at degrees {report.unexpected}" if report.unexpected else "deviations only where filtered homology lives"
        return report.consistent, detail, report.model_dump(mode="json")

    return _run("diagonal exactness", fn)


def check_lee(d: LinkDiagram, c: BigradedComplex) -> CheckResult:
    def fn() -> Outcome:
        generators = all_lee_generators(d, complex_=c)
        ranks = lee_class_rank(d, generators)
        expected = theorem31_dims(d)
        witness = {"class_rank": ranks, "expected": expected}
        if ranks != expected:
            return False, "orientation generators are not independent in homology", witness
        return True, f"{len(generators)} generators, independent in homology", witness

    return _run("orientation generators", fn)


def check_harmonic(d: LinkDiagram, c: BigradedComplex) -> CheckResult:
    def fn() -> Outcome:
        harmonic = harmonic_dims(d, complex_=c)
        filtered = filtered_from_complex(c).homology_dims()
        monomial = harmonic_dims(d, complex_=c, basis="monomial")
        witness = {"harmonic": harmonic, "monomial": monomial, "filtered": filtered}
        if harmonic != filtered:
            return False, "ker d ∩ ker d* is larger than the homology", witness
        return True, "harmonic chains match the homology", witness

    return _run("harmonic representatives", fn, informational=True)


def check_mirror(d: LinkDiagram, kh: DimTable) -> CheckResult:
    def fn() -> Outcome:
        m = mirror(d)
        mirrored = homology_table(khovanov_homology(build_khovanov(m)))
        diff = _table_diff(mirrored, kh.negated())
        if diff:
            return False, "Kh of the mirror is not Kh^{-i,-j}", {"diff": diff}
        return True, "Kh(mirror) = Kh^{-i,-j}", {}

    return _run("mirror duality", fn)


def check_reduced(d: LinkDiagram, kh: DimTable) -> List[CheckResult]:
    """Kh = K̃h ⊗ A in dimensions, and basepoint independence (knots only)."""
    if not d.is_knot or not d.crossings:
        return []
    reduced = {arc: homology_table(khovanov_homology(build_reduced(d, arc))) for arc in d.arcs}
    first = reduced[d.arcs[0]]

    def relation() -> Outcome:
        keys = {(i, j + s) for i, j in first.entries for s in (-1, 1)} | set(kh.entries)
        bad = {
            format_key(k): [kh[k], first[(k[0], k[1] - 1)] + first[(k[0], k[1] + 1)]]
            for k in sorted(keys)
            if kh[k] != first[(k[0], k[1] - 1)] + first[(k[0], k[1] + 1)]
        }
        if bad:
            return False, "dim Kh^{i,j} != dim K̃h^{i,j-1} + dim K̃h^{i,j+1}", {"diff": bad}
        return True, "Kh^{i,j} = K̃h^{i,j-1} ⊕ K̃h^{i,j+1}", {}

    def basepoints() -> Outcome:
        for arc, table in reduced.items():
            diff = _table_diff(first, table)
            if diff:
                return False, f"basepoint {arc} changes the reduced table", {"arc": arc, "diff": diff}
        return True, f"{len(reduced)} basepoints agree", {}

    return [_run("reduced doubling", relation), _run("basepoint independence", basepoints)]


def run_checks(d: LinkDiagram, workers: Optional[int] = None) -> List[CheckResult]:
    c = build_khovanov(d)
    core = core_invariants(c)
    logging.info("Running consistency suite on %r", d)
    results = [check_identities(c)]
    results.append(check_theorem31(d, c))
    results.append(check_stable_iso(d, c, workers))
    results.extend(check_spectral(core))
    results.append(check_exactness(core))
    results.append(check_lee(d, c))
    results.append(check_harmonic(d, c))
    results.append(check_mirror(d, core.kh))
    results.extend(check_reduced(d, core.kh))
    return results


def pair_tables(d: LinkDiagram, window: Tuple[int, int], workers: Optional[int] = None) -> Dict[str, object]:
    core = core_invariants(build_khovanov(d))
    bn = bn_homology(d, j_window=window, workers=workers, complex_=core.complex)
    tables: Dict[str, object] = {
        "kh": core.kh,
        "kk": core.kk,
        "bn": bn.table,
        "bn_stable": bn.stable_column,
        "filtered": filtered_homology(d),
    }
    if d.is_knot:
        reduced = core_invariants(build_reduced(d))
        tables["reduced_kh"] = reduced.kh
        tables["reduced_kk"] = reduced.kk
        tables["reduced_filtered"] = filtered_homology(d, reduced=True)
    return tables


def check_pair(left: LinkDiagram, right: LinkDiagram, workers: Optional[int] = None) -> List[CheckResult]:
    """Every invariant table must agree on two diagrams of the same link."""
    columns = get_settings().stable_columns
    bounds = [build_khovanov(x).bounds() for x in (left, right)]
    window = (min(b[2] for b in bounds) - 2 * columns, max(b[3] for b in bounds))
    a = pair_tables(left, window, workers)
    b = pair_tables(right, window, workers)

    results = []
    for name in sorted(set(a) | set(b)):

        def fn(name=name) -> Outcome:
            x, y = a.get(name), b.get(name)
            if isinstance(x, DimTable) and isinstance(y, DimTable):
                diff = _table_diff(x, y)
                return not diff, "tables agree" if not diff else "tables differ", {"diff": diff}
            if x != y:
                return False, "dimensions differ", {"left": x, "right": y}
            return True, "dimensions agree", {}

        results.append(_run(f"invariance {name}", fn))
    return results

import logging
import time
from typing import Dict, Optional, Type

from app.barnatan.bn import bn_homology, filtered_homology
from app.barnatan.lee import harmonic_dims, theorem31_dims
from app.complexes.cube import BigradedComplex, build_khovanov, build_reduced, euler_characteristic
from app.complexes.filtered import filtered_from_complex
from app.corpus.corpus import resolve_diagram_text
from app.diagram.link import LinkDiagram, normalized_pd, parse_pd
from app.exceptions import NotThinError, TheoryConfigError
from app.homology.core import beta_ranks, core_invariants, kernel_table
from app.homology.exactness import exactness_report
from app.homology.thin import infer_thin_s, reconstruct_thin, thin_decompose
from app.service.base import BaseTheory
from app.service.checks import check_pair, run_checks
from app.service.models import CheckResult, InvariantReport, TheoryRequest
from app.spectral.pages import compute_pages
from app.spectral.verify import run_flavor, verify_e1_e2


def _complex(d: LinkDiagram, request: TheoryRequest, report: InvariantReport) -> BigradedComplex:
    if request.reduced:
        c = build_reduced(d, request.basepoint)
        report.basepoint = c.basepoint
        return c
    return build_khovanov(d)


class KhovanovTheory(BaseTheory):
    name = "kh"

    def compute(self, d, request, report):
        core = core_invariants(_complex(d, request, report))
        report.tables["kh"] = core.kh
        report.polynomials["kh"] = core.kh_poly.to_text()
        report.polynomials["euler"] = euler_characteristic(core.complex).to_text()


class BetaTheory(BaseTheory):
    name = "beta"

    def compute(self, d, request, report):
        core = core_invariants(_complex(d, request, report))
        report.tables["kh"] = core.kh
        report.tables["beta_rank"] = beta_ranks(core.beta)


class SecondaryTheory(BaseTheory):
    name = "secondary"

    def compute(self, d, request, report):
        core = core_invariants(_complex(d, request, report))
        report.tables["kk"] = core.kk
        report.polynomials["P"] = core.secondary_poly.to_text()

        fc = filtered_from_complex(core.complex)
        collapse = compute_pages(fc).collapse_page
        exactness = exactness_report(
            core.homology,
            core.beta,
            fc.homology_dims(),
            collapsed=collapse is not None and collapse <= 2,
        )
        report.details["exactness"] = exactness.model_dump(mode="json")


class BarNatanTheory(BaseTheory):
    name = "bn"

    def compute(self, d, request, report):
        c = build_khovanov(d)
        window = None
        if request.jmin is not None or request.jmax is not None:
            _, _, j_min, j_max = c.bounds()
            window = (
                request.jmin if request.jmin is not None else j_min,
                request.jmax if request.jmax is not None else j_max,
            )
            if window[0] > window[1]:
                raise TheoryConfigError(f"Empty q-window [{window[0]}, {window[1]}]")
        bn = bn_homology(d, j_window=window, workers=request.workers, complex_=c)
        report.tables["bn"] = bn.table
        report.degrees["stable_column"] = bn.stable_column
        report.details["stable_threshold"] = bn.stable_threshold
        report.details["j_window"] = list(bn.j_window)


class FilteredTheory(BaseTheory):
    name = "filtered"

    def compute(self, d, request, report):
        dims = filtered_homology(d, reduced=request.reduced, basepoint=request.basepoint)
        report.degrees["filtered"] = dims
        if request.reduced:
            return
        formula = theorem31_dims(d)
        report.degrees["linking_formula"] = formula
        report.degrees["harmonic"] = harmonic_dims(d)
        report.checks.append(
            CheckResult(
                name="linking-number dimension formula",
                passed=dims == formula,
                detail=f"total dimension {sum(dims.values())}, 2^k = {2 ** d.k}",
                witness={"direct": dims, "formula": formula},
            )
        )


class ReducedTheory(BaseTheory):
    name = "reduced"

    def compute(self, d, request, report):
        c = build_reduced(d, request.basepoint)
        core = core_invariants(c)
        report.reduced = True
        report.basepoint = c.basepoint
        report.tables["reduced_kh"] = core.kh
        report.tables["reduced_kk"] = core.kk
        report.polynomials["reduced_kh"] = core.kh_poly.to_text()
        report.degrees["reduced_filtered"] = filtered_from_complex(c).homology_dims()


class SpectralTheory(BaseTheory):
    name = "ss"

    def compute(self, d, request, report):
        core = core_invariants(_complex(d, request, report))
        flavor, seq = run_flavor(core.complex, request.flavor, request.j, request.rmax)
        for page in seq.pages:
            report.tables[f"E_{page.r}"] = page.dims()
        check = verify_e1_e2(
            seq,
            flavor,
            kh=core.kh,
            kk=core.kk,
            ranks=beta_ranks(core.beta),
            kernel=kernel_table(core.homology, core.beta),
        )
        report.details["flavor"] = flavor.name
        report.details["j"] = flavor.j
        report.details["stable_page"] = seq.stable_page
        report.details["collapse_page"] = seq.collapse_page
        if seq.stabilized:
            report.degrees["abutment"] = check.abutment
        report.checks.append(
            CheckResult(
                name=f"E1/E2 {flavor.name}",
                passed=check.passed,
                detail="; ".join(check.mismatches) or None,
                witness=check.model_dump(mode="json"),
            )
        )


class ThinTheory(BaseTheory):
    name = "thin"

    def compute(self, d, request, report):
        core = core_invariants(build_khovanov(d))
        kh_poly = core.kh_poly
        if request.s is not None:
            s = request.s
        else:
            candidates = infer_thin_s(kh_poly)
            if not candidates:
                raise NotThinError(
                    "Kh is not supported on two adjacent diagonals; pass --s",
                    residual=kh_poly.to_text(),
                )
            s = candidates[0]
        kprime = thin_decompose(kh_poly, s)
        report.details["s"] = s
        report.polynomials["kh"] = kh_poly.to_text()
        report.polynomials["kprime"] = kprime.to_text()
        report.polynomials["reconstructed"] = reconstruct_thin(kprime, s).to_text()


class CheckTheory(BaseTheory):
    name = "check"

    def __init__(self, second: Optional[LinkDiagram] = None):
        self.second = second

    def compute(self, d, request, report):
        report.checks.extend(run_checks(d, request.workers))
        if self.second is not None:
            report.checks.extend(check_pair(d, self.second, request.workers))
        report.details["failed"] = [c.name for c in report.checks if not c.passed and not c.informational]


THEORIES: Dict[str, Type[BaseTheory]] = {
    cls.name: cls
    for cls in (
        KhovanovTheory,
        BetaTheory,
        SecondaryTheory,
        BarNatanTheory,
        FilteredTheory,
        ReducedTheory,
        SpectralTheory,
        ThinTheory,
        CheckTheory,
    )
}


def make_theory(name: str, second: Optional[LinkDiagram] = None) -> BaseTheory:
    """Factory function to create the theory behind a subcommand or route"""
    if name == "check":
        return CheckTheory(second)
    if name in THEORIES:
        return THEORIES[name]()
    raise TheoryConfigError(f"Unknown theory: {name}. Use one of {sorted(THEORIES)}")


def load_diagram(text: str) -> LinkDiagram:
    return parse_pd(resolve_diagram_text(text))


class TheoryService:
    """Runs one theory on a request and wraps the result in an InvariantReport."""

    def __init__(self, name: str):
        self.name = name

    def run(self, request: TheoryRequest) -> InvariantReport:
        start = time.perf_counter()
        d = load_diagram(request.pd)
        second = load_diagram(request.pd2) if request.pd2 else None
        if second is not None and self.name != "check":
            raise TheoryConfigError("A second diagram is only accepted by 'check'")
        impl = make_theory(self.name, second)

        report = InvariantReport(
            theory=self.name,
            diagram=normalized_pd(d),
            diagram2=normalized_pd(second) if second is not None else None,
            components=d.k,
            crossings=d.n_crossings,
            writhe=d.writhe,
            reduced=request.reduced,
            basepoint=request.basepoint,
        )
        impl.compute(d, request, report)
        elapsed = (time.perf_counter() - start) * 1000
        if request.timing:
            report.timing_ms = round(elapsed, 3)
        logging.info("Computed %s for %s in %.1f ms", self.name, report.diagram, elapsed)
        return report

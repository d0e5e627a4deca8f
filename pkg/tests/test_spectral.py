import numpy as np
import pytest

from app.barnatan import bn_homology
from app.complexes import build_khovanov, build_reduced, filtered_from_complex
from app.exceptions import NotStabilizedError, SpectralSequenceError, TheoryConfigError
from app.homology import core_invariants
from app.linalg import GF2Matrix
from app.spectral import FilteredComplex, compute_pages, page_homology, reconstruct_abutment
from app.spectral.verify import make_flavor, page_coherence, run_flavor, shift_check, verify_flavor


def two_term(levels_from, levels_to, entries) -> FilteredComplex:
    return FilteredComplex(
        levels={0: np.asarray(levels_from), 1: np.asarray(levels_to)},
        differentials={0: GF2Matrix.from_triplets(len(levels_to), len(levels_from), entries)},
    )


def test_zero_differential_is_e0():
    fc = two_term([0, 1], [0], [])
    seq = compute_pages(fc)
    assert seq.stabilized
    assert seq.collapse_page == 0
    assert seq[0].groups == {(0, 0): 1, (1, -1): 1, (0, 1): 1}
    assert reconstruct_abutment(seq.pages) == {0: 2, 1: 1}


def test_cancellation_on_first_page():
    fc = two_term([0], [1], [(0, 0)])
    seq = compute_pages(fc)
    assert seq[0].groups == {(0, 0): 1, (1, 0): 1}
    assert seq[0].is_zero_differential
    assert seq[1].differential_rank(0, 0) == 1
    assert seq[2].groups == {}
    assert seq.collapse_page == 2
    assert page_homology(seq[1]) == {}


def test_longer_differential_waits():
    fc = two_term([0], [2], [(0, 0)])
    seq = compute_pages(fc)
    assert seq[1].groups == seq[0].groups
    assert seq[2].differential_rank(0, 0) == 1
    assert seq[3].groups == {}


def test_invalid_filtered_complexes():
    with pytest.raises(SpectralSequenceError):
        compute_pages(two_term([1], [0], [(0, 0)]))
    with pytest.raises(SpectralSequenceError):
        compute_pages(two_term([0], [0], [(0, 0)]), r_max=-1)


def test_not_stabilized(trefoil):
    seq = compute_pages(filtered_from_complex(build_khovanov(trefoil)), r_max=0)
    with pytest.raises(NotStabilizedError):
        reconstruct_abutment(seq.pages)


def test_trefoil_filtered_sequence(trefoil):
    inv = core_invariants(build_khovanov(trefoil))
    report = verify_flavor(inv, "filtered")
    assert report.passed, report.mismatches
    assert report.abutment == {0: 2}
    assert report.collapse_page == 2


def test_trefoil_graded_column(trefoil):
    inv = core_invariants(build_khovanov(trefoil))
    report = verify_flavor(inv, "graded", j=-5)
    assert report.passed, report.mismatches
    assert report.abutment == {-2: 1, 0: 2}

    _, seq = run_flavor(inv.complex, "graded", j=-5)
    assert all(k >= 0 for k, _ in seq[1].groups)


def test_graded_columns_converge_to_bn(any_diagram):
    c = build_khovanov(any_diagram)
    inv = core_invariants(c)
    bn = bn_homology(any_diagram, complex_=c)
    for j in range(bn.j_window[0], bn.j_window[1] + 1):
        if (j - c.parity) % 2:
            continue
        report = verify_flavor(inv, "graded", j=j)
        assert report.passed, report.mismatches
        assert report.abutment == bn.column(j)


def test_filtered_sequences(any_diagram):
    report = verify_flavor(core_invariants(build_khovanov(any_diagram)), "filtered")
    assert report.passed, report.mismatches


def test_reduced_filtered_sequence(trefoil):
    report = verify_flavor(core_invariants(build_reduced(trefoil)), "filtered")
    assert report.passed, report.mismatches
    assert report.abutment == {0: 1}


def test_page_coherence(figure_eight):
    _, seq = run_flavor(build_khovanov(figure_eight), "filtered")
    assert page_coherence(seq) == []


def test_shift_below_support(trefoil):
    c = build_khovanov(trefoil)
    for j in (-9, -11):
        report = shift_check(c, j)
        assert report.passed, report.mismatches
    assert shift_check(c, -9).shift == -5
    with pytest.raises(TheoryConfigError):
        shift_check(c, -7)
    with pytest.raises(TheoryConfigError):
        shift_check(c, -10)


def test_flavor_configuration(trefoil):
    c = build_khovanov(trefoil)
    with pytest.raises(TheoryConfigError):
        make_flavor(c, "graded")
    with pytest.raises(TheoryConfigError):
        make_flavor(c, "spiral")
    assert make_flavor(c, "filtered").base == 1

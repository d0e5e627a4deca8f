import pytest

from app.barnatan import (
    all_lee_generators,
    bn_homology,
    column_homology,
    default_window,
    filtered_homology,
    harmonic_dims,
    lee_class_rank,
    lee_generators,
    orientation_classes,
    stable_iso_check,
    theorem31_dims,
    u_action,
)
from app.complexes import build_khovanov, filtered_from_complex
from app.diagram import parse_pd
from app.exceptions import DiagramError, TheoryConfigError
from app.linalg import rank
from tests.conftest import KINK

TREFOIL_BN = {
    (0, -1): 1,
    (0, -3): 2,
    (-2, -5): 1,
    (0, -5): 2,
    (-2, -7): 1,
    (0, -7): 2,
    (0, -9): 2,
    (0, -11): 2,
    (0, -13): 2,
}


def test_trefoil_bn_table(trefoil):
    bn = bn_homology(trefoil)
    assert bn.j_window == (-13, -1)
    assert bn.table.entries == TREFOIL_BN
    assert bn.stable_threshold == -9
    assert bn.stable_column == {0: 2}
    assert bn.column(-21) == {0: 2}
    assert bn.column(-5) == {-2: 1, 0: 2}


def test_bn_window_and_workers(trefoil):
    c = build_khovanov(trefoil)
    assert default_window(c, stable_columns=1) == (-11, -1)
    serial = bn_homology(trefoil, j_window=(-9, -1), workers=1)
    threaded = bn_homology(trefoil, j_window=(-9, -1), workers=3)
    assert serial.table == threaded.table
    assert column_homology(c, 0) == {}


def test_unknot_bn(unknot):
    bn = bn_homology(unknot)
    assert bn.stable_threshold == -1
    assert bn.table[(0, 1)] == 1
    assert bn.stable_column == {0: 2}


@pytest.mark.parametrize(
    "fixture, expected",
    [
        ("trefoil", {0: 2}),
        ("figure_eight", {0: 2}),
        ("hopf_positive", {0: 2, 2: 2}),
        ("hopf_negative", {-2: 2, 0: 2}),
        ("unlink2", {0: 4}),
    ],
)
def test_filtered_dims_follow_linking(request, fixture, expected):
    d = request.getfixturevalue(fixture)
    assert filtered_homology(d) == expected
    assert theorem31_dims(d) == expected


def test_reduced_filtered(trefoil):
    assert filtered_homology(trefoil, reduced=True) == {0: 1}


def test_orientation_degrees(hopf_positive):
    degrees = [c.degree for c in orientation_classes(hopf_positive)]
    assert degrees == [0, 2, 2, 0]


def test_stable_iso(any_diagram):
    report = stable_iso_check(any_diagram)
    assert report.passed, report.mismatches
    assert report.u_checked


def test_u_is_invertible_below_threshold(trefoil):
    c = build_khovanov(trefoil)
    maps = u_action(c, -9)
    assert set(maps) == {0}
    assert maps[0].shape == (2, 2)
    assert rank(maps[0]) == 2


def test_u_is_not_onto_above_threshold(trefoil):
    # BN^{0,-1} is one-dimensional, BN^{0,-3} two-dimensional
    maps = u_action(build_khovanov(trefoil), -1)
    assert maps[0].shape == (2, 1)


def test_unknot_generator(unknot):
    g = lee_generators(unknot)
    assert g.degree == 0
    assert g.state == (0, 0)
    assert g.terms == 2


def test_hopf_generator_degree(hopf_positive):
    assert lee_generators(hopf_positive, subset=[0]).degree == 2
    with pytest.raises(DiagramError):
        lee_generators(hopf_positive, subset=[2])


def test_generators_span(any_diagram):
    generators = all_lee_generators(any_diagram)
    assert len(generators) == 2**any_diagram.k
    assert lee_class_rank(any_diagram, generators) == theorem31_dims(any_diagram)


def test_harmonic_bounds_filtered(any_diagram):
    harmonic = harmonic_dims(any_diagram)
    for n, dim in theorem31_dims(any_diagram).items():
        assert harmonic.get(n, 0) >= dim


def test_harmonic_equality_on_simple_diagrams(unknot):
    assert harmonic_dims(unknot) == {0: 2}
    kink = parse_pd(KINK)
    assert harmonic_dims(kink) == filtered_homology(kink) == {0: 2}


def test_harmonic_dims_per_basis(figure_eight):
    assert filtered_homology(figure_eight) == {0: 2}
    assert harmonic_dims(figure_eight) == {-1: 4, 0: 6, 1: 4}
    assert harmonic_dims(figure_eight, basis="monomial") == {-1: 4, 0: 5, 1: 4}


def test_trefoil_generator_transpose_depends_on_basis(trefoil):
    generator = lee_generators(trefoil)
    fc = filtered_from_complex(build_khovanov(trefoil))
    assert generator.degree == 0
    assert (generator.chain @ fc.differential(0).transpose()).is_zero()
    assert not (generator.chain @ fc.differential(-1)).is_zero()


def test_harmonic_unknown_basis(unknot):
    with pytest.raises(TheoryConfigError):
        harmonic_dims(unknot, basis="spectral")

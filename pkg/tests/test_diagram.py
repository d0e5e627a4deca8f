import numpy as np
import pytest

from app.diagram import (
    circle_placements,
    cube_edges,
    linking_matrix,
    mirror,
    normalized_pd,
    orientation_resolution,
    oriented_signs,
    parse_pd,
    read_pd,
    resolve,
    trace_faces,
)
from app.exceptions import (
    ArcMultiplicityError,
    DiagramError,
    DiagramTooLargeError,
    InconsistentOrientationError,
    PDSyntaxError,
    VertexLengthError,
)
from app.settings import reset_settings
from tests.conftest import KINK, TREFOIL


@pytest.mark.parametrize(
    "text",
    ["", "PD[]", "Unknot[2]", "Unlink[0]", "X(1,2,3,4)", "PD[X(0,1,2,3)]", "PD[X(1,2,3)]", "PD[X(1,2,3,4);X(1,2,3,4)]"],
)
def test_malformed_pd(text):
    with pytest.raises(PDSyntaxError):
        read_pd(text)


def test_pd_accepts_whitespace_and_brackets():
    spaced = parse_pd(" PD[ X[1,4,2,5], X(3,6,4,1),\n X(5,2,6,3) ] ")
    assert normalized_pd(spaced) == TREFOIL


def test_arc_multiplicity():
    with pytest.raises(ArcMultiplicityError):
        parse_pd("PD[X(1,2,3,4)]")


def test_inconsistent_orientation_labels():
    # a valid trefoil whose arc labels do not increase along the strand
    with pytest.raises(InconsistentOrientationError):
        parse_pd("PD[X(1,4,3,5),X(2,6,4,1),X(5,3,6,2)]")


def test_crossing_limit(monkeypatch):
    monkeypatch.setenv("KNOTREADER_MAX_CROSSINGS", "2")
    reset_settings()
    with pytest.raises(DiagramTooLargeError):
        parse_pd(TREFOIL).resolutions


def test_trefoil_counts(trefoil, right_trefoil):
    assert trefoil.k == 1 and trefoil.gamma == 1
    assert trefoil.signs == (-1, -1, -1)
    assert (trefoil.n_plus, trefoil.n_minus, trefoil.writhe) == (0, 3, -3)
    assert right_trefoil.signs == (1, 1, 1)
    assert trefoil.components == ((1, 2, 3, 4, 5, 6),)


def test_figure_eight_writhe(figure_eight):
    assert figure_eight.n_plus == 2
    assert figure_eight.n_minus == 2


def test_crossingless_links(unknot, unlink2):
    assert unknot.k == 1 and unknot.n_crossings == 0
    assert unlink2.k == 2 and unlink2.gamma == 0
    assert np.array_equal(linking_matrix(unlink2), np.zeros((2, 2)))
    assert resolve(unlink2, ()).n_circles == 2


def test_hopf_linking(hopf_positive, hopf_negative):
    assert hopf_positive.signs == (1, 1)
    assert hopf_negative.signs == (-1, -1)
    assert linking_matrix(hopf_positive).tolist() == [[0, 1], [1, 0]]
    assert linking_matrix(hopf_negative).tolist() == [[0, -1], [-1, 0]]


def test_reversing_one_component_flips_mixed_crossings(hopf_positive):
    assert oriented_signs(hopf_positive, (1, 0)) == (-1, -1)
    assert oriented_signs(hopf_positive, (1, 1)) == (1, 1)
    with pytest.raises(DiagramError):
        oriented_signs(hopf_positive, (1,))


def test_resolutions_of_trefoil(trefoil):
    assert resolve(trefoil, (0, 0, 0)).n_circles == 3
    assert resolve(trefoil, (1, 1, 1)).n_circles == 2
    assert orientation_resolution(trefoil, (0,)).vertex == (1, 1, 1)
    assert len(trefoil.resolutions) == 8
    for res in trefoil.resolutions.values():
        arcs = sorted(a for circle in res.circles for a in circle)
        assert arcs == list(trefoil.arcs)


def test_cube_edges_change_one_circle(trefoil):
    edges = cube_edges(trefoil)
    assert len(edges) == 3 * 4
    for e in edges:
        tail, head = trefoil.resolutions[e.tail], trefoil.resolutions[e.head]
        assert abs(tail.n_circles - head.n_circles) == 1
        assert e.kind == ("merge" if head.n_circles < tail.n_circles else "split")


def test_vertex_length(trefoil):
    with pytest.raises(VertexLengthError):
        resolve(trefoil, (0, 1))
    with pytest.raises(VertexLengthError):
        resolve(trefoil, (0, 1, 2))


def test_faces_of_connected_diagram(trefoil, figure_eight):
    assert len(trace_faces(trefoil)) == trefoil.n_crossings + 2
    assert len(trace_faces(figure_eight)) == figure_eight.n_crossings + 2


def test_mirror(trefoil, right_trefoil):
    m = mirror(trefoil)
    assert m.signs == right_trefoil.signs
    assert m.k == 1
    assert mirror(m).signs == trefoil.signs


def test_kink_parses():
    kink = parse_pd(KINK)
    assert kink.signs == (1,)
    assert kink.k == 1


def test_unknot_placement(unknot):
    res = resolve(unknot, ())
    (place,) = circle_placements(unknot, res, (0,))
    assert place.depth == 0 and not place.clockwise
    assert place.group_a

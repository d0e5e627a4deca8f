import pytest

from app.complexes import build_khovanov, build_reduced
from app.diagram import mirror
from app.exceptions import NotFactorizableError, NotThinError
from app.homology import (
    beta_ranks,
    core_invariants,
    exactness_report,
    infer_thin_s,
    kernel_table,
    reconstruct_thin,
    thin_decompose,
)
from app.tables import DimTable, LaurentPoly2

TREFOIL_KH = {(0, -1): 1, (0, -3): 1, (-2, -5): 1, (-2, -7): 1, (-3, -7): 1, (-3, -9): 1}
FIGURE_EIGHT_KH = {
    (-2, -5): 1,
    (-2, -3): 1,
    (-1, -3): 1,
    (-1, -1): 1,
    (0, -1): 1,
    (0, 1): 1,
    (1, 1): 1,
    (1, 3): 1,
    (2, 3): 1,
    (2, 5): 1,
}


def core(d):
    return core_invariants(build_khovanov(d))


def test_unknot(unknot):
    inv = core(unknot)
    assert inv.kh.entries == {(0, -1): 1, (0, 1): 1}
    assert inv.kk == inv.kh
    assert beta_ranks(inv.beta).is_zero


def test_trefoil_tables(trefoil):
    inv = core(trefoil)
    assert inv.kh.entries == TREFOIL_KH
    assert beta_ranks(inv.beta).entries == {(-3, -9): 1, (-3, -7): 1}
    assert inv.kk.entries == {(0, -1): 1, (0, -3): 1}
    assert inv.secondary_poly.to_text() == "q^-1 + q^-3"
    assert inv.kh_poly.to_text() == "q^-1 + q^-3 + t^-2 q^-5 + t^-2 q^-7 + t^-3 q^-7 + t^-3 q^-9"


def test_kernel_table(trefoil):
    inv = core(trefoil)
    kernel = kernel_table(inv.homology, inv.beta)
    assert kernel[(-3, -9)] == 0
    assert kernel[(-2, -5)] == 1
    assert kernel[(0, -1)] == 1


def test_figure_eight(figure_eight):
    inv = core(figure_eight)
    assert inv.kh.entries == FIGURE_EIGHT_KH
    assert inv.kk.entries == {(0, -1): 1, (0, 1): 1}


def test_positive_hopf(hopf_positive):
    assert core(hopf_positive).kh.entries == {(0, 0): 1, (0, 2): 1, (2, 4): 1, (2, 6): 1}


def test_mirror_negates_gradings(trefoil, right_trefoil):
    left = core(trefoil).kh
    assert core(right_trefoil).kh == left.negated()
    assert core(mirror(trefoil)).kh == left.negated()


def test_reduced_trefoil(trefoil):
    inv = core_invariants(build_reduced(trefoil))
    assert inv.kh.entries == {(0, -2): 1, (-2, -6): 1, (-3, -8): 1}


@pytest.mark.parametrize(
    "name, expected",
    [
        ("unknot", {-1: {0: 1}, 1: {0: 1}}),
        ("trefoil", {-3: {0: 1}, -1: {0: 1}}),
        ("figure_eight", {-1: {0: 1}, 1: {0: 1}}),
    ],
)
def test_exactness_pattern(request, name, expected):
    inv = core(request.getfixturevalue(name))
    report = exactness_report(inv.homology, inv.beta, {0: 2}, collapsed=True)
    assert report.unexpected == []
    assert report.consistent
    deviations = {row.diagonal: row.deviations for row in report.diagonals if row.deviations}
    assert deviations == expected


def test_exactness_keeps_exact_diagonals(figure_eight):
    inv = core(figure_eight)
    report = exactness_report(inv.homology, inv.beta, {0: 2})
    rows = {row.diagonal: row.deviations for row in report.diagonals}
    assert rows == {-5: {}, -3: {}, -1: {0: 1}, 1: {0: 1}, 3: {}, 5: {}}


def test_thin_trefoil(trefoil):
    poly = core(trefoil).kh_poly
    assert infer_thin_s(poly) == [-2]
    kprime = thin_decompose(poly, -2)
    assert kprime.entries == {(-3, -6): 1}
    assert reconstruct_thin(kprime, -2) == poly


def test_thin_figure_eight(figure_eight):
    poly = core(figure_eight).kh_poly
    kprime = thin_decompose(poly, 0)
    assert kprime.entries == {(-2, -4): 1, (1, 2): 1}
    assert reconstruct_thin(kprime, 0) == poly


def test_thin_unknot(unknot):
    poly = core(unknot).kh_poly
    assert infer_thin_s(poly) == [0]
    assert thin_decompose(poly, 0).is_zero


def test_not_thin(trefoil):
    with pytest.raises(NotThinError) as exc:
        thin_decompose(core(trefoil).kh_poly, 0)
    assert exc.value.residual


def test_not_factorizable():
    poly = LaurentPoly2(entries={(0, -1): 1, (0, 1): 1, (1, 1): 1})
    with pytest.raises(NotFactorizableError):
        thin_decompose(poly, 0)


def test_table_keys_round_trip():
    table = DimTable(entries={"(0,-1)": 2, "(1, 3)": 1, "(2,5)": 0})
    assert table.entries == {(0, -1): 2, (1, 3): 1}
    assert table.model_dump()["entries"] == {"(1,3)": 1, "(0,-1)": 2}

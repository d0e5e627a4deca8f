import pytest

from app.complexes import (
    barnatan_column,
    build_diagonal,
    build_khovanov,
    build_reduced,
    change_of_basis,
    euler_characteristic,
    filtered_from_complex,
    verify_complex,
)
from app.exceptions import BasepointError, NotAKnotError
from app.homology import core_invariants
from app.linalg import GF2Matrix
from app.tables import SignedPoly


def test_chain_groups_cover_every_state(any_diagram):
    c = build_khovanov(any_diagram)
    verify_complex(c)
    assert c.basis.size == sum(2**n for n in c.basis.n_circles)
    assert all((j - any_diagram.gamma) % 2 == 0 for _, j in c.keys)


def test_gradings_of_trefoil(trefoil):
    c = build_khovanov(trefoil)
    i_min, i_max, j_min, j_max = c.bounds()
    assert (i_min, i_max) == (-3, 0)
    assert (j_min, j_max) == (-9, -1)
    assert c.meta["n_minus"] == 3


def test_euler_characteristic_is_jones(trefoil, unknot):
    assert euler_characteristic(build_khovanov(unknot)) == SignedPoly(coefficients={1: 1, -1: 1})
    chi = euler_characteristic(build_khovanov(trefoil))
    assert chi == SignedPoly(coefficients={-1: 1, -3: 1, -5: 1, -9: -1})
    assert chi == core_invariants(build_khovanov(trefoil)).kh.euler_characteristic()


def test_reduced_complex(trefoil):
    c = build_reduced(trefoil)
    verify_complex(c)
    assert c.reduced and c.basepoint == 1
    assert c.parity == 0
    full = build_khovanov(trefoil)
    assert c.basis.size * 2 == full.basis.size
    assert all(j % 2 == 0 for _, j in c.keys)


def test_reduced_needs_knot_and_arc(hopf_positive, trefoil):
    with pytest.raises(NotAKnotError):
        build_reduced(hopf_positive)
    with pytest.raises(BasepointError):
        build_reduced(trefoil, basepoint=99)


def test_change_of_basis_supersets():
    assert sorted(change_of_basis(0b01, 2)) == [0b01, 0b11]
    assert sorted(change_of_basis(0, 1)) == [0, 1]
    assert list(change_of_basis(0b11, 2)) == [0b11]


def test_diagonal_basis_conjugates_the_filtered_differential(any_diagram):
    c = build_khovanov(any_diagram)
    fc = filtered_from_complex(c)
    dc = build_diagonal(c)
    for n in fc.degrees:
        assert dc.states[n] == fc.labels[n]
        t = dc.to_monomial(n)
        assert t @ t == GF2Matrix.identity(dc.dim(n))
        if fc.dim(n + 1):
            conjugated = dc.to_monomial(n + 1) @ dc.differential(n) @ t
            assert conjugated == fc.differential(n)


def test_filtered_levels(trefoil):
    fc = filtered_from_complex(build_khovanov(trefoil))
    assert fc.level_range == (-5, -1)
    assert fc.homology_dims() == {0: 2}


def test_barnatan_column_parity(trefoil):
    c = build_khovanov(trefoil)
    assert barnatan_column(c, 0).degrees == []
    column = barnatan_column(c, -3)
    assert column.level_range == (0, 1)
    assert column.homology_dims() == {0: 2}

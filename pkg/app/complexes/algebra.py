"""Edge maps of the cube as data.

Labels are bits: for the monomial algebras 0 is ``1`` and 1 is ``x``; for the
diagonal algebra 0 is ``a = x + 1`` and 1 is ``b = x``.
"""

from dataclasses import dataclass
from typing import Iterator, Mapping, Optional, Tuple

from app.diagram.link import CubeEdge


@dataclass(frozen=True)
class EdgeAlgebra:
    name: str
    multiply: Mapping[Tuple[int, int], Tuple[int, ...]]
    comultiply: Mapping[int, Tuple[Tuple[int, int], ...]]
    bidegree: Optional[Tuple[int, int]] = None  # (di, dj) on monomial states

    def images(self, edge: CubeEdge, label: int) -> Iterator[int]:
        """Head-vertex labels of the edge map applied to one tail state."""
        base = 0
        for t, h in edge.passive:
            if label >> t & 1:
                base |= 1 << h
        if edge.kind == "merge":
            t1, t2 = edge.tail_active
            (h,) = edge.head_active
            for out in self.multiply.get((label >> t1 & 1, label >> t2 & 1), ()):
                yield base | out << h
        else:
            (t,) = edge.tail_active
            h1, h2 = edge.head_active
            for o1, o2 in self.comultiply.get(label >> t & 1, ()):
                yield base | o1 << h1 | o2 << h2


KHOVANOV = EdgeAlgebra(
    name="khovanov",
    multiply={(0, 0): (0,), (0, 1): (1,), (1, 0): (1,), (1, 1): ()},
    comultiply={0: ((0, 1), (1, 0)), 1: ((1, 1),)},
    bidegree=(1, 0),
)

# no unit or counit; only m(x, x) and Delta(1) survive
BETA = EdgeAlgebra(
    name="beta",
    multiply={(1, 1): (1,)},
    comultiply={0: ((0, 0),)},
    bidegree=(1, 2),
)

# u = 1 in the basis a = x + 1, b = x: a*a = a, b*b = b, a*b = 0
DIAGONAL = EdgeAlgebra(
    name="diagonal",
    multiply={(0, 0): (0,), (1, 1): (1,)},
    comultiply={0: ((0, 0),), 1: ((1, 1),)},
)

ALGEBRAS = {a.name: a for a in (KHOVANOV, BETA, DIAGONAL)}


def change_of_basis(label: int, n_circles: int) -> Iterator[int]:
    """Expand a state through a -> 1 + x, b -> x on every circle.

    Yields every label containing the bits of ``label``. The same rule maps a
    monomial state to its a/b expansion, since the per-circle change of basis
    is its own inverse over F2.
    """
    free = ((1 << n_circles) - 1) & ~label
    sub = free
    while True:
        yield label | sub
        if sub == 0:
            return
        sub = (sub - 1) & free

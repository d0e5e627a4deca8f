import re
from dataclasses import dataclass
from typing import Tuple

from app.exceptions import PDSyntaxError

Crossing = Tuple[int, int, int, int]

_OUTER = re.compile(r"(PD|Unknot|Unlink)\[(.*)\]", re.DOTALL)
_CROSSING = re.compile(r"X[\(\[](\d+),(\d+),(\d+),(\d+)[\)\]]")


@dataclass(frozen=True)
class PDCode:
    """Crossings read counterclockwise from the incoming under-strand.

    ``free_loops`` counts crossingless components; it is only nonzero for the
    ``Unknot[1]`` / ``Unlink[k]`` tokens.
    """

    crossings: Tuple[Crossing, ...]
    free_loops: int = 0

    @property
    def arcs(self) -> Tuple[int, ...]:
        if not self.crossings:
            return tuple(range(1, self.free_loops + 1))
        return tuple(sorted({a for x in self.crossings for a in x}))

    def to_text(self) -> str:
        if not self.crossings:
            return "Unknot[1]" if self.free_loops == 1 else f"Unlink[{self.free_loops}]"
        body = ",".join("X({},{},{},{})".format(*x) for x in self.crossings)
        return f"PD[{body}]"


def read_pd(text: str) -> PDCode:
    """Parse PD text without any topological validation."""
    compact = re.sub(r"\s+", "", text or "")
    outer = _OUTER.fullmatch(compact)
    if not outer:
        raise PDSyntaxError(f"Malformed PD code: expected PD[...], Unknot[1] or Unlink[k], got {text!r}")
    head, body = outer.groups()

    if head in ("Unknot", "Unlink"):
        if not body.isdigit() or int(body) < 1:
            raise PDSyntaxError(f"Malformed PD code: {head}[...] needs a positive integer")
        count = int(body)
        if head == "Unknot" and count != 1:
            raise PDSyntaxError("Malformed PD code: only Unknot[1] is accepted; use Unlink[k]")
        return PDCode(crossings=(), free_loops=count)

    if not body:
        raise PDSyntaxError("Malformed PD code: no crossings; use Unknot[1] or Unlink[k]")
    matches = list(_CROSSING.finditer(body))
    if ",".join(m.group(0) for m in matches) != body:
        raise PDSyntaxError(f"Malformed PD code: cannot read crossings in {body!r}")
    crossings = tuple(tuple(int(g) for g in m.groups()) for m in matches)
    if any(a <= 0 for x in crossings for a in x):
        raise PDSyntaxError("Malformed PD code: arc labels must be positive integers")
    return PDCode(crossings=crossings)

# app/tables.py
import re
from collections import defaultdict
from typing import Dict, Iterable, Mapping, Tuple

from pydantic import BaseModel, Field, field_serializer, field_validator

Bigrading = Tuple[int, int]

_KEY = re.compile(r"\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)")


def format_key(key: Bigrading) -> str:
    return f"({key[0]},{key[1]})"


def parse_key(key) -> Bigrading:
    if isinstance(key, str):
        match = _KEY.fullmatch(key.strip())
        if not match:
            raise ValueError(f"bad bigrading key {key!r}")
        return int(match.group(1)), int(match.group(2))
    i, j = key
    return int(i), int(j)


def _clean(raw) -> Dict[Bigrading, int]:
    out: Dict[Bigrading, int] = {}
    for key, value in dict(raw or {}).items():
        value = int(value)
        if value < 0:
            raise ValueError(f"negative entry at {key}")
        if value:
            out[parse_key(key)] = value
    return dict(sorted(out.items()))


class _Bigraded(BaseModel):
    entries: Dict[Bigrading, int] = Field(
        default_factory=dict, description='Nonzero entries keyed by "(i,j)"'
    )

    @field_validator("entries", mode="before")
    @classmethod
    def _parse_entries(cls, value):
        return _clean(value)

    @field_serializer("entries")
    def _dump_entries(self, entries: Dict[Bigrading, int]) -> Dict[str, int]:
        return {format_key(k): v for k, v in sorted(entries.items(), key=lambda kv: (-kv[0][1], kv[0][0]))}

    def __getitem__(self, key: Bigrading) -> int:
        return self.entries.get(tuple(key), 0)

    def items(self):
        return self.entries.items()

    @property
    def total(self) -> int:
        return sum(self.entries.values())

    @property
    def is_zero(self) -> bool:
        return not self.entries

    def bounds(self) -> Tuple[int, int, int, int]:
        """``(i_min, i_max, j_min, j_max)``; zeros for an empty table."""
        if not self.entries:
            return 0, 0, 0, 0
        i_values = [i for i, _ in self.entries]
        j_values = [j for _, j in self.entries]
        return min(i_values), max(i_values), min(j_values), max(j_values)


class DimTable(_Bigraded):
    """Dimensions of a bigraded F2 vector space, keyed by (i, j)."""

    @classmethod
    def from_pairs(cls, pairs: Iterable[Tuple[Bigrading, int]]) -> "DimTable":
        acc: Dict[Bigrading, int] = defaultdict(int)
        for key, value in pairs:
            acc[key] += value
        return cls(entries=acc)

    def by_degree(self) -> Dict[int, int]:
        acc: Dict[int, int] = defaultdict(int)
        for (i, _), v in self.entries.items():
            acc[i] += v
        return dict(sorted(acc.items()))

    def column(self, j: int) -> Dict[int, int]:
        return {i: v for (i, jj), v in sorted(self.entries.items()) if jj == j}

    def shifted(self, di: int = 0, dj: int = 0) -> "DimTable":
        return DimTable(entries={(i + di, j + dj): v for (i, j), v in self.entries.items()})

    def negated(self) -> "DimTable":
        return DimTable(entries={(-i, -j): v for (i, j), v in self.entries.items()})

    def to_poly(self) -> "LaurentPoly2":
        return LaurentPoly2(entries=self.entries)

    def euler_characteristic(self) -> "SignedPoly":
        return self.to_poly().at_t_minus_one()


def _power(var: str, e: int) -> str:
    if e == 0:
        return ""
    return var if e == 1 else f"{var}^{e}"


class LaurentPoly2(_Bigraded):
    """Laurent polynomial in t, q with nonnegative integer coefficients.

    ``entries[(i, j)]`` is the coefficient of ``t^i q^j``.
    """

    @classmethod
    def monomial(cls, i: int, j: int, coefficient: int = 1) -> "LaurentPoly2":
        return cls(entries={(i, j): coefficient})

    def __add__(self, other: "LaurentPoly2") -> "LaurentPoly2":
        acc = dict(self.entries)
        for key, v in other.entries.items():
            acc[key] = acc.get(key, 0) + v
        return LaurentPoly2(entries=acc)

    def __mul__(self, other: "LaurentPoly2") -> "LaurentPoly2":
        acc: Dict[Bigrading, int] = defaultdict(int)
        for (i1, j1), a in self.entries.items():
            for (i2, j2), b in other.entries.items():
                acc[(i1 + i2, j1 + j2)] += a * b
        return LaurentPoly2(entries=acc)

    def shifted(self, di: int = 0, dj: int = 0) -> "LaurentPoly2":
        return LaurentPoly2(entries={(i + di, j + dj): v for (i, j), v in self.entries.items()})

    def at_t_minus_one(self) -> "SignedPoly":
        acc: Dict[int, int] = defaultdict(int)
        for (i, j), v in self.entries.items():
            acc[j] += -v if i % 2 else v
        return SignedPoly(coefficients=acc)

    def to_text(self) -> str:
        if not self.entries:
            return "0"
        terms = []
        for (i, j), c in sorted(self.entries.items(), key=lambda kv: (-kv[0][0], -kv[0][1])):
            body = " ".join(p for p in (_power("t", i), _power("q", j)) if p)
            if not body:
                terms.append(str(c))
            else:
                terms.append(body if c == 1 else f"{c} {body}")
        return " + ".join(terms)

    def __str__(self) -> str:
        return self.to_text()


class SignedPoly(BaseModel):
    """Integer Laurent polynomial in q (coefficients may be negative)."""

    coefficients: Dict[int, int] = Field(default_factory=dict)

    @field_validator("coefficients", mode="before")
    @classmethod
    def _drop_zeros(cls, value: Mapping) -> Dict[int, int]:
        return {int(k): int(v) for k, v in sorted(dict(value or {}).items(), key=lambda kv: int(kv[0])) if int(v)}

    def to_text(self) -> str:
        if not self.coefficients:
            return "0"
        parts = []
        for e, c in sorted(self.coefficients.items(), reverse=True):
            mono = _power("q", e)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append(f"-{mono}")
            else:
                parts.append(f"{c} {mono}")
        return " + ".join(parts).replace("+ -", "- ")

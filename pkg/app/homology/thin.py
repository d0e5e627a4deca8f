"""Factorisation of thin Khovanov polynomials.

A knot whose F2 homology sits on the diagonals j - 2i = s - 1 and s + 1 has

    Kh = q^(s-1) (1 + q^2) (1 + (1 + t q^2) Kh')

with Kh' a Laurent polynomial in w = t q^2.
"""

from collections import defaultdict
from typing import Dict, List

from app.exceptions import NotFactorizableError, NotThinError
from app.tables import LaurentPoly2

Poly1 = Dict[int, int]  # exponent of w -> coefficient


def _text(p: Poly1) -> str:
    if not p:
        return "0"
    terms = []
    for e, c in sorted(p.items(), reverse=True):
        mono = "1" if e == 0 else ("w" if e == 1 else f"w^{e}")
        terms.append(mono if c == 1 else f"{c}*{mono}")
    return " + ".join(terms).replace("+ -", "- ")


def _divide_by_one_plus_w(p: Poly1) -> Poly1:
    """Exact division by 1 + w; raises with the remainder when it fails."""
    p = {e: c for e, c in p.items() if c}
    if not p:
        return {}
    low, high = min(p), max(p)
    quotient: Poly1 = {}
    for e in range(low, high):
        quotient[e] = p.get(e, 0) - quotient.get(e - 1, 0)
    remainder = p[high] - quotient.get(high - 1, 0)
    if remainder:
        raise NotFactorizableError(
            "no exact factorization: 1 + tq^2 does not divide the reduced polynomial",
            residual=f"remainder {remainder}*w^{high}",
        )
    return {e: c for e, c in quotient.items() if c}


def thin_decompose(kh_poly: LaurentPoly2, s: int) -> LaurentPoly2:
    """Kh' for the given s, written in t and q (each w^e becomes t^e q^(2e))."""
    lower: Poly1 = defaultdict(int)
    upper: Poly1 = defaultdict(int)
    stray = []
    for (i, j), c in kh_poly.items():
        diagonal = j - 2 * i
        if diagonal == s - 1:
            lower[i] += c
        elif diagonal == s + 1:
            upper[i] += c
        else:
            stray.append((i, j, c))
    if stray:
        residual = " + ".join(f"{c} t^{i} q^{j}" for i, j, c in sorted(stray))
        raise NotThinError(f"not thin for this s (s = {s})", residual=residual)

    if dict(lower) != dict(upper):
        diff = {e: lower.get(e, 0) - upper.get(e, 0) for e in set(lower) | set(upper)}
        raise NotFactorizableError(
            "no exact factorization: the two diagonals differ",
            residual=_text({e: c for e, c in diff.items() if c}),
        )

    body = dict(lower)
    body[0] = body.get(0, 0) - 1
    kprime = _divide_by_one_plus_w(body)
    if any(c < 0 for c in kprime.values()):
        raise NotFactorizableError(
            "no exact factorization: Kh' has negative coefficients", residual=_text(kprime)
        )
    return LaurentPoly2(entries={(e, 2 * e): c for e, c in kprime.items()})


def reconstruct_thin(kprime: LaurentPoly2, s: int) -> LaurentPoly2:
    """q^(s-1) (1 + q^2) (1 + (1 + t q^2) Kh')."""
    one = LaurentPoly2.monomial(0, 0)
    inner = one + (one + LaurentPoly2.monomial(1, 2)) * kprime
    return (one + LaurentPoly2.monomial(0, 2)) * inner.shifted(0, s - 1)


def infer_thin_s(kh_poly: LaurentPoly2) -> List[int]:
    """Values of s whose two diagonals cover the support of ``kh_poly``."""
    diagonals = sorted({j - 2 * i for i, j in kh_poly.entries})
    if len(diagonals) == 1:
        return [diagonals[0] - 1, diagonals[0] + 1]
    if len(diagonals) == 2 and diagonals[1] - diagonals[0] == 2:
        return [diagonals[0] + 1]
    return []

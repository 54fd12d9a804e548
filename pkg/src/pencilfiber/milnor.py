"""Monodromy invariants of the Milnor fiber of a line arrangement.

For r lines with only double and triple points, the superabundance s is the
failure of the triple points to impose independent conditions on curves of
degree 2r/3 - 3: s = |S| - rank of the evaluation matrix of all such
monomials at the triple points, computed exactly over Q(w).  When r is not
divisible by 3 the cube-root eigenvalues cannot occur and s is reported
as 0.

Two bookkeeping conventions coexist for the eigenvalue-1 part and both are
reported: the characteristic polynomial is printed with exponent r - 2,
while the first Betti number of the fiber uses multiplicity r - 1, which is
what independent Euler-characteristic counts give on small cases (e.g. the
6-line braid arrangement has b1 = 7 = 5 + 2).  See MilnorReport.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arrangement import Arrangement, IncidencePoint, require_multiplicities_ok
from .eisenstein import EisensteinNumber
from .forms import Exponent
from .linalg import rank


def monomial_exponents(degree: int) -> list[Exponent]:
    """All exponent triples of the given total degree; empty when negative."""
    if degree < 0:
        return []
    out = []
    for i in range(degree, -1, -1):
        for j in range(degree - i, -1, -1):
            out.append((i, j, degree - i - j))
    return out


def _evaluation_matrix(points: list[IncidencePoint], degree: int) -> list[list[EisensteinNumber]]:
    monomials = monomial_exponents(degree)
    rows = []
    for pt in points:
        x, y, z = pt.point
        rows.append([x**i * y**j * z**k for (i, j, k) in monomials])
    return rows


def superabundance(arr: Arrangement) -> int:
    """s = |triple points| - rank of the degree-(2r/3 - 3) evaluation matrix."""
    points = require_multiplicities_ok(arr)
    r = arr.r
    if r % 3 != 0:
        return 0
    triple = [pt for pt in points if pt.multiplicity == 3]
    degree = 2 * r // 3 - 3
    if degree < 0 or not triple:
        return len(triple) if degree < 0 else 0
    return len(triple) - rank(_evaluation_matrix(triple, degree))


def char_poly_exponents(arr: Arrangement) -> tuple[int, int]:
    """Exponents (of t-1, of t^2+t+1) in the monodromy characteristic polynomial."""
    s = superabundance(arr)
    return arr.r - 2, s


def char_poly_string(exp_t1: int, exp_cyc: int) -> str:
    parts = []
    if exp_t1:
        parts.append(f"(t-1)^{exp_t1}")
    if exp_cyc:
        parts.append(f"(t^2+t+1)^{exp_cyc}")
    return "*".join(parts) if parts else "1"


def monodromy_char_poly(arr: Arrangement) -> str:
    return char_poly_string(*char_poly_exponents(arr))


@dataclass(frozen=True)
class MilnorReport:
    """Summary of the monodromy action on first cohomology.

    ``char_t1_exponent`` repeats the classical Alexander-polynomial
    normalization r - 2; ``b1_milnor_fiber`` uses eigenvalue-1 multiplicity
    r - 1 (the two conventions differ by one and both are surfaced).
    """

    r: int
    s: int
    char_t1_exponent: int
    char_cyclotomic_exponent: int
    b1_milnor_fiber: int
    eigenspace_dim_1: int
    eigenspace_dim_w: int
    eigenspace_dim_w2: int
    mw_rank: int

    @property
    def char_poly(self) -> str:
        return char_poly_string(self.char_t1_exponent, self.char_cyclotomic_exponent)

    def to_json(self) -> dict:
        return {
            "r": self.r,
            "s": self.s,
            "char_poly": self.char_poly,
            "char_poly_exponents": {
                "t-1": self.char_t1_exponent,
                "t^2+t+1": self.char_cyclotomic_exponent,
            },
            "b1_milnor_fiber": self.b1_milnor_fiber,
            "eigenspace_dims": {
                "1": self.eigenspace_dim_1,
                "w": self.eigenspace_dim_w,
                "w2": self.eigenspace_dim_w2,
            },
            "mw_rank": self.mw_rank,
        }


def milnor_report(arr: Arrangement) -> MilnorReport:
    s = superabundance(arr)
    r = arr.r
    eigen_w = s if r % 3 == 0 else 0
    return MilnorReport(
        r=r,
        s=s,
        char_t1_exponent=r - 2,
        char_cyclotomic_exponent=s,
        b1_milnor_fiber=(r - 1) + 2 * s,
        eigenspace_dim_1=r - 1,
        eigenspace_dim_w=eigen_w,
        eigenspace_dim_w2=eigen_w,
        mw_rank=2 * s,
    )

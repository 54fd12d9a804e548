"""Detection of arrangements composed of a reduced pencil.

An arrangement of r = 3k lines is composed of a reduced pencil when its
lines split into three disjoint classes of k lines each whose products
F1, F2, F3 satisfy a dependence l1*F1 + l2*F2 + l3*F3 = 0 with all l_i
nonzero.  Equal class sizes are forced (a linear dependence needs equal
degrees) and the products are automatically reduced because the lines are
pairwise distinct.

The search enumerates every unordered partition into three k-classes --
r! / ((k!)^3 * 3!) of them -- and keeps those whose coefficient matrix has
rank exactly 2 with a nowhere-zero dependence; each accepted dependence is
re-verified by polynomial multiplication before being returned.  The
enumeration is capped at 15 lines.

Pencil JSON: {"classes": [[i, ...], [i, ...], [i, ...]],
              "lambdas": ["<eis>", ...],
              "products": [<HomForm JSON>, ...]}   # 0-based line indices
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .arrangement import Arrangement, require_multiplicities_ok
from .eisenstein import ZERO, EisensteinNumber
from .forms import HomForm
from .milnor import monomial_exponents

MAX_LINES = 15


@dataclass(frozen=True)
class PencilDecomposition:
    """Unordered 3-partition of the line indices with its dependence.

    ``lambdas`` is normalized so the first class carries coefficient 1, and
    lambdas[0]*products[0] + lambdas[1]*products[1] + lambdas[2]*products[2]
    vanishes identically.
    """

    classes: tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]
    lambdas: tuple[EisensteinNumber, EisensteinNumber, EisensteinNumber]
    products: tuple[HomForm, HomForm, HomForm]

    def scaled_products(self) -> tuple[HomForm, HomForm, HomForm]:
        """The three members l_i * F_i, which sum to zero exactly."""
        return tuple(f.scale(l) for l, f in zip(self.lambdas, self.products))

    def to_json(self) -> dict:
        return {
            "classes": [list(c) for c in self.classes],
            "lambdas": [str(l) for l in self.lambdas],
            "products": [f.to_json() for f in self.products],
        }

    @classmethod
    def from_json(cls, data: dict) -> "PencilDecomposition":
        classes = tuple(tuple(int(i) for i in c) for c in data["classes"])
        lambdas = tuple(EisensteinNumber.of(l) for l in data["lambdas"])
        products = tuple(HomForm.from_json(f) for f in data["products"])
        if len(classes) != 3 or len(lambdas) != 3 or len(products) != 3:
            raise ValueError("a pencil has three classes, lambdas and products")
        return cls(classes, lambdas, products)


def find_pencils(arr: Arrangement) -> list[PencilDecomposition]:
    """All pencil decompositions, in canonical class order."""
    require_multiplicities_ok(arr)
    r = arr.r
    if r % 3 != 0:
        return []
    if r > MAX_LINES:
        raise ValueError(f"pencil search is capped at {MAX_LINES} lines (got {r})")
    k = r // 3
    monomials = monomial_exponents(k)
    forms = [line.form for line in arr.lines]

    products: dict[tuple[int, ...], HomForm] = {(): HomForm.constant(1)}

    def subset_product(idxs: tuple[int, ...]) -> HomForm:
        cached = products.get(idxs)
        if cached is None:
            cached = subset_product(idxs[:-1]) * forms[idxs[-1]]
            products[idxs] = cached
        return cached

    def coeff_row(f: HomForm) -> list[EisensteinNumber]:
        return [f.coeffs.get(e, ZERO) for e in monomials]

    found: list[PencilDecomposition] = []
    indices = tuple(range(r))
    first = indices[0]
    rest = indices[1:]
    for extra_a in combinations(rest, k - 1):
        class_a = (first,) + extra_a
        remaining = tuple(i for i in rest if i not in extra_a)
        anchor_b = remaining[0]
        for extra_b in combinations(remaining[1:], k - 1):
            class_b = (anchor_b,) + extra_b
            class_c = tuple(i for i in remaining[1:] if i not in extra_b)
            triple = (class_a, class_b, class_c)
            prods = tuple(subset_product(c) for c in triple)
            lam = _dependence([coeff_row(f) for f in prods])
            if lam is None or not all(lam):
                continue  # rank 3, a proportional pair, or a vanishing coefficient
            inv = lam[0].inverse()
            lam = tuple(l * inv for l in lam)
            combo = prods[0].scale(lam[0]) + prods[1].scale(lam[1]) + prods[2].scale(lam[2])
            if not combo.is_zero:
                raise AssertionError("dependence failed exact re-verification")
            found.append(PencilDecomposition(triple, lam, prods))
    found.sort(key=lambda p: p.classes)
    return found


def _dependence(rows: list[list[EisensteinNumber]]) -> list[EisensteinNumber] | None:
    """The dependence vector of exactly-rank-2 coefficient rows, else None.

    Each monomial position gives one linear equation on (l1, l2, l3); the
    equations are absorbed into an echelon basis with an early exit once the
    rank reaches 3, which is the overwhelmingly common case in the search.
    """
    basis: list[list[EisensteinNumber]] = []
    pivots: list[int] = []
    for m in range(len(rows[0])):
        vec = [rows[0][m], rows[1][m], rows[2][m]]
        for bv, p in zip(basis, pivots):
            factor = vec[p]
            if factor:
                vec = [a - factor * b for a, b in zip(vec, bv)]
        piv = next((i for i in range(3) if vec[i]), None)
        if piv is None:
            continue
        inv = vec[piv].inverse()
        basis.append([v * inv for v in vec])
        pivots.append(piv)
        if len(basis) == 3:
            return None  # rank 3: the three products are independent
    if len(basis) != 2:
        return None  # rank <= 1: two products proportional
    # finish the reduction of the two equations and read off the kernel vector
    factor = basis[0][pivots[1]]
    if factor:
        basis[0] = [a - factor * b for a, b in zip(basis[0], basis[1])]
    free = next(i for i in range(3) if i not in pivots)
    lam: list[EisensteinNumber] = [ZERO, ZERO, ZERO]
    lam[free] = EisensteinNumber(1)
    for bv, p in zip(basis, pivots):
        lam[p] = -bv[free]
    return lam


def is_composed_of_reduced_pencil(arr: Arrangement) -> bool:
    return bool(find_pencils(arr))


def pencil_count(arr: Arrangement) -> int:
    return len(find_pencils(arr))

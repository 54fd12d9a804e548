"""Polynomial algebra over Q(w): homogeneous forms in x, y, z and univariate
polynomials in t.

A HomForm stores ``{(i, j, k): coefficient}`` with i + j + k equal to the
declared degree and no zero coefficients kept; the zero form keeps its
declared degree with an empty table.  A UniPoly stores coefficients lowest
degree first with a nonzero leading coefficient, ``[]`` being zero.

Restriction of a form to a line uses one fixed affine chart per line (solve
for z when possible, else y, else x), so restrictions are reproducible;
every predicate taken downstream (divisibility, multiplicities, vanishing)
does not depend on that choice.

JSON wire formats:

    HomForm  {"degree": d, "terms": [{"exp": [i, j, k], "c": "<eis>"}, ...]}
    UniPoly  {"coeffs": ["<eis>", ...]}        # lowest degree first
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .eisenstein import ONE, ZERO, EisensteinNumber

Exponent = tuple[int, int, int]


class HomForm:
    """Homogeneous form in x, y, z over Q(w)."""

    __slots__ = ("degree", "coeffs")

    def __init__(self, degree: int, coeffs: dict[Exponent, EisensteinNumber] | None = None) -> None:
        if degree < 0:
            raise ValueError("degree must be nonnegative")
        table: dict[Exponent, EisensteinNumber] = {}
        for exp, c in (coeffs or {}).items():
            exp = (int(exp[0]), int(exp[1]), int(exp[2]))
            if min(exp) < 0 or sum(exp) != degree:
                raise ValueError(f"exponent {exp} does not have degree {degree}")
            value = EisensteinNumber.of(c)
            if value:
                table[exp] = value
        self.degree = degree
        self.coeffs = table

    @classmethod
    def zero(cls, degree: int = 0) -> "HomForm":
        return cls(degree, {})

    @classmethod
    def constant(cls, value: EisensteinNumber | int | str) -> "HomForm":
        return cls(0, {(0, 0, 0): EisensteinNumber.of(value)})

    @classmethod
    def monomial(cls, exp: Exponent, coeff: EisensteinNumber | int | str = 1) -> "HomForm":
        return cls(sum(exp), {tuple(exp): EisensteinNumber.of(coeff)})

    @classmethod
    def linear(
        cls,
        a: EisensteinNumber | int | str,
        b: EisensteinNumber | int | str,
        c: EisensteinNumber | int | str,
    ) -> "HomForm":
        return cls(1, {(1, 0, 0): EisensteinNumber.of(a), (0, 1, 0): EisensteinNumber.of(b), (0, 0, 1): EisensteinNumber.of(c)})

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HomForm):
            return NotImplemented
        if self.is_zero and other.is_zero:
            return True
        return self.degree == other.degree and self.coeffs == other.coeffs

    def __neg__(self) -> "HomForm":
        return HomForm(self.degree, {e: -c for e, c in self.coeffs.items()})

    def __add__(self, other: "HomForm") -> "HomForm":
        if not isinstance(other, HomForm):
            return NotImplemented
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        if self.degree != other.degree:
            raise ValueError(f"degree mismatch: {self.degree} != {other.degree}")
        table = dict(self.coeffs)
        for e, c in other.coeffs.items():
            s = table.get(e, ZERO) + c
            if s:
                table[e] = s
            else:
                table.pop(e, None)
        return HomForm(self.degree, table)

    def __sub__(self, other: "HomForm") -> "HomForm":
        return self + (-other)

    def __mul__(self, other: object) -> "HomForm":
        if isinstance(other, HomForm):
            table: dict[Exponent, EisensteinNumber] = {}
            for e1, c1 in self.coeffs.items():
                for e2, c2 in other.coeffs.items():
                    e = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2])
                    s = table.get(e, ZERO) + c1 * c2
                    if s:
                        table[e] = s
                    else:
                        table.pop(e, None)
            return HomForm(self.degree + other.degree, table)
        scalar = EisensteinNumber._coerce(other)
        if scalar is None:
            return NotImplemented
        return self.scale(scalar)

    def __rmul__(self, other: object) -> "HomForm":
        return self.__mul__(other)

    def __pow__(self, exponent: int) -> "HomForm":
        if exponent < 0:
            raise ValueError("negative power of a form")
        result = HomForm.constant(1)
        for _ in range(exponent):
            result = result * self
        return result

    def scale(self, scalar: EisensteinNumber | int | str) -> "HomForm":
        s = EisensteinNumber.of(scalar)
        if not s:
            return HomForm.zero(self.degree)
        return HomForm(self.degree, {e: c * s for e, c in self.coeffs.items()})

    def eval_at(self, point: tuple[EisensteinNumber, EisensteinNumber, EisensteinNumber]) -> EisensteinNumber:
        x, y, z = (EisensteinNumber.of(v) for v in point)
        total = ZERO
        for (i, j, k), c in self.coeffs.items():
            total = total + c * x**i * y**j * z**k
        return total

    def terms_sorted(self) -> list[tuple[Exponent, EisensteinNumber]]:
        return sorted(self.coeffs.items(), key=lambda item: item[0], reverse=True)

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        chunks = []
        for (i, j, k), c in self.terms_sorted():
            mono = "*".join(filter(None, [
                f"x^{i}" if i else "",
                f"y^{j}" if j else "",
                f"z^{k}" if k else "",
            ]))
            coeff = str(c)
            if mono:
                chunks.append(f"({coeff})*{mono}")
            else:
                chunks.append(f"({coeff})")
        return " + ".join(chunks)

    def __repr__(self) -> str:
        return f"HomForm(degree={self.degree}, {str(self)!r})"

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "terms": [{"exp": list(e), "c": str(c)} for e, c in self.terms_sorted()],
        }

    @classmethod
    def from_json(cls, data: dict) -> "HomForm":
        return cls(int(data["degree"]), {tuple(t["exp"]): EisensteinNumber.of(t["c"]) for t in data["terms"]})


X = HomForm.monomial((1, 0, 0))
Y = HomForm.monomial((0, 1, 0))
Z = HomForm.monomial((0, 0, 1))


class UniPoly:
    """Univariate polynomial in t over Q(w), coefficients lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[EisensteinNumber | int | str] = ()) -> None:
        values = [EisensteinNumber.of(c) for c in coeffs]
        while values and not values[-1]:
            values.pop()
        self.coeffs = tuple(values)

    @classmethod
    def zero(cls) -> "UniPoly":
        return cls()

    @classmethod
    def one(cls) -> "UniPoly":
        return cls((ONE,))

    @classmethod
    def constant(cls, value: EisensteinNumber | int | str) -> "UniPoly":
        return cls((EisensteinNumber.of(value),))

    @classmethod
    def t(cls) -> "UniPoly":
        return cls((ZERO, ONE))

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def constant_value(self) -> EisensteinNumber:
        if not self.is_constant:
            raise ValueError("polynomial is not constant")
        return self.coeffs[0] if self.coeffs else ZERO

    def leading(self) -> EisensteinNumber:
        if self.is_zero:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def monic(self) -> "UniPoly":
        if self.is_zero:
            raise ValueError("cannot normalize the zero polynomial")
        lc = self.leading()
        return UniPoly(c / lc for c in self.coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __neg__(self) -> "UniPoly":
        return UniPoly(-c for c in self.coeffs)

    def __add__(self, other: "UniPoly") -> "UniPoly":
        if not isinstance(other, UniPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return UniPoly(out)

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        return self + (-other)

    def __mul__(self, other: object) -> "UniPoly":
        if isinstance(other, UniPoly):
            if self.is_zero or other.is_zero:
                return UniPoly.zero()
            out = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                for j, b in enumerate(other.coeffs):
                    out[i + j] = out[i + j] + a * b
            return UniPoly(out)
        scalar = EisensteinNumber._coerce(other)
        if scalar is None:
            return NotImplemented
        return UniPoly(c * scalar for c in self.coeffs)

    def __rmul__(self, other: object) -> "UniPoly":
        return self.__mul__(other)

    def __pow__(self, exponent: int) -> "UniPoly":
        if exponent < 0:
            raise ValueError("negative power of a polynomial")
        result = UniPoly.one()
        for _ in range(exponent):
            result = result * self
        return result

    def __divmod__(self, other: "UniPoly") -> tuple["UniPoly", "UniPoly"]:
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        quotient = [ZERO] * max(len(self.coeffs) - len(other.coeffs) + 1, 0)
        rem = list(self.coeffs)
        dlc = other.leading()
        dd = other.degree
        while len(rem) - 1 >= dd and rem:
            factor = rem[-1] / dlc
            shift = len(rem) - 1 - dd
            quotient[shift] = factor
            for i, c in enumerate(other.coeffs):
                rem[shift + i] = rem[shift + i] - factor * c
            while rem and not rem[-1]:
                rem.pop()
        return UniPoly(quotient), UniPoly(rem)

    def __floordiv__(self, other: "UniPoly") -> "UniPoly":
        return divmod(self, other)[0]

    def __mod__(self, other: "UniPoly") -> "UniPoly":
        return divmod(self, other)[1]

    def derivative(self) -> "UniPoly":
        return UniPoly(c * i for i, c in enumerate(self.coeffs) if i)

    def eval_at(self, value: EisensteinNumber | int | str) -> EisensteinNumber:
        v = EisensteinNumber.of(value)
        total = ZERO
        for c in reversed(self.coeffs):
            total = total * v + c
        return total

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        chunks = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
            if mono:
                chunks.append(f"({c})*{mono}")
            else:
                chunks.append(f"({c})")
        return " + ".join(chunks)

    def __repr__(self) -> str:
        return f"UniPoly({str(self)!r})"

    def to_json(self) -> dict:
        return {"coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: dict) -> "UniPoly":
        return cls(data["coeffs"])


def product_of_linear_forms(lines: Iterable[HomForm]) -> HomForm:
    """Exact product of degree-1 forms; the empty product is the constant 1."""
    result = HomForm.constant(1)
    for line in lines:
        if line.degree != 1 or line.is_zero:
            raise ValueError("all factors must be nonzero linear forms")
        result = result * line
    return result


@dataclass(frozen=True)
class LineChart:
    """Fixed affine parametrization of a projective line.

    ``coords`` sends the affine parameter t to a point of the line;
    ``infinity`` is the one point of the line missed by the chart.
    """

    coords: tuple[UniPoly, UniPoly, UniPoly]
    infinity: tuple[EisensteinNumber, EisensteinNumber, EisensteinNumber]


def line_parametrization(line: HomForm) -> LineChart:
    """Chart of the line a*x + b*y + c*z = 0, solving for z, then y, then x."""
    if line.degree != 1 or line.is_zero:
        raise ValueError("expected a nonzero linear form")
    a = line.coeffs.get((1, 0, 0), ZERO)
    b = line.coeffs.get((0, 1, 0), ZERO)
    c = line.coeffs.get((0, 0, 1), ZERO)
    t = UniPoly.t()
    one = UniPoly.one()
    if c:
        coords = (t, one, UniPoly((-b / c, -a / c)))
        infinity = (ONE, ZERO, -a / c)
    elif b:
        coords = (t, UniPoly((ZERO, -a / b)), one)
        infinity = (ONE, -a / b, ZERO)
    else:
        coords = (UniPoly.zero(), t, one)
        infinity = (ZERO, ONE, ZERO)
    return LineChart(coords, infinity)


def restrict_to_line(p: HomForm, line: HomForm) -> UniPoly:
    """Substitute the line's fixed chart into p, giving a polynomial in t."""
    chart = line_parametrization(line)
    px, py, pz = chart.coords
    total = UniPoly.zero()
    for (i, j, k), coeff in p.coeffs.items():
        total = total + coeff * (px**i * py**j * pz**k)
    return total


def uni_gcd(p: UniPoly, q: UniPoly) -> UniPoly:
    """Monic gcd by the Euclidean algorithm; gcd(p, 0) is monic(p)."""
    if p.is_zero and q.is_zero:
        raise ValueError("gcd(0, 0) is undefined")
    a, b = p, q
    while not b.is_zero:
        a, b = b, a % b
    return a.monic()


def squarefree_decomposition(p: UniPoly) -> list[tuple[UniPoly, int]]:
    """Yun's algorithm: monic p splits as prod f_i^i with f_i squarefree,
    pairwise coprime and monic.  Returns the (f_i, i) with deg f_i > 0."""
    if p.is_zero:
        raise ValueError("zero polynomial has no squarefree decomposition")
    w = p.monic()
    if w.degree == 0:
        return []
    g = uni_gcd(w, w.derivative())
    b = w // g
    c = w.derivative() // g
    factors: list[tuple[UniPoly, int]] = []
    i = 1
    while b.degree > 0:
        d = c - b.derivative()
        a = uni_gcd(b, d)
        if a.degree > 0:
            factors.append((a, i))
        b = b // a
        c = d // a
        i += 1
    return factors


def squarefree_cube_split(p: UniPoly) -> tuple[UniPoly, UniPoly]:
    """Split p = v^3 * A with v monic and A free of cube factors.

    Constants, signs and sub-cube multiplicities all live in A.
    """
    if p.is_zero:
        raise ValueError("cannot split the zero polynomial")
    v = UniPoly.one()
    for factor, mult in squarefree_decomposition(p):
        v = v * factor ** (mult // 3)
    remainder = p // v**3
    return v, remainder


def root_multiplicity(p: UniPoly, factor: UniPoly) -> tuple[UniPoly, int]:
    """Divide out ``factor`` as often as it exactly divides p."""
    if factor.is_constant:
        raise ValueError("factor must be nonconstant")
    count = 0
    current = p
    while not current.is_zero:
        q, r = divmod(current, factor)
        if not r.is_zero:
            break
        current = q
        count += 1
    return current, count

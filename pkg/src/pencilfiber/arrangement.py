"""Line arrangements in the complex projective plane over Q(w).

Lines are coefficient triples (a, b, c) of a*x + b*y + c*z, normalized so
the first nonzero coefficient is 1; an arrangement is an ordered list of
pairwise distinct lines.  Intersection data is grouped by exact projective
coordinates, so two points are equal iff their normalized triples agree
field-by-field.

Combinatorial equivalence is incidence-structure isomorphism of the
multiple points (multiplicity >= 3); double points are determined by r and
those.  Canonical forms are computed exactly by branch-and-bound label
minimization while at most ten lines carry multiple points, and fall back
to an explicitly flagged weaker certificate beyond that.

Arrangement JSON: {"label": "...", "lines": [["<eis>", "<eis>", "<eis>"], ...]}
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .eisenstein import ZERO, EisensteinNumber
from .forms import HomForm
from .linalg import Matrix, mat_inverse

Point = tuple[EisensteinNumber, EisensteinNumber, EisensteinNumber]


class MultiplicityError(ValueError):
    """An intersection point has more than three lines through it."""

    def __init__(self, point: "IncidencePoint") -> None:
        super().__init__(
            f"point {point.point_str()} lies on {point.multiplicity} lines "
            f"(indices {list(point.lines)}); only multiplicities <= 3 are supported"
        )
        self.point = point


class Line:
    """A projective line, normalized so the first nonzero coefficient is 1."""

    __slots__ = ("coeffs",)

    def __init__(
        self,
        a: EisensteinNumber | int | str,
        b: EisensteinNumber | int | str,
        c: EisensteinNumber | int | str,
    ) -> None:
        coeffs = (EisensteinNumber.of(a), EisensteinNumber.of(b), EisensteinNumber.of(c))
        lead = next((v for v in coeffs if v), None)
        if lead is None:
            raise ValueError("a line needs a nonzero coefficient")
        inv = lead.inverse()
        self.coeffs = tuple(v * inv for v in coeffs)

    @property
    def form(self) -> HomForm:
        return HomForm.linear(*self.coeffs)

    def eval_at(self, point: Point) -> EisensteinNumber:
        a, b, c = self.coeffs
        return a * point[0] + b * point[1] + c * point[2]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Line):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Line({', '.join(str(c) for c in self.coeffs)})"

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence[str]) -> "Line":
        if len(data) != 3:
            raise ValueError("a line is a triple of coefficients")
        return cls(*data)


class Arrangement:
    """Ordered list of pairwise distinct lines with a label."""

    __slots__ = ("lines", "label")

    def __init__(self, lines: Iterable[Line], label: str = "") -> None:
        self.lines = tuple(lines)
        self.label = label
        seen: dict[Line, int] = {}
        for idx, line in enumerate(self.lines):
            if not isinstance(line, Line):
                raise TypeError("expected Line instances")
            if line in seen:
                raise ValueError(f"lines {seen[line]} and {idx} are proportional")
            seen[line] = idx

    @property
    def r(self) -> int:
        return len(self.lines)

    def __len__(self) -> int:
        return len(self.lines)

    def reordered(self, order: Sequence[int], label: str | None = None) -> "Arrangement":
        return Arrangement([self.lines[i] for i in order], self.label if label is None else label)

    def to_json(self) -> dict:
        return {"label": self.label, "lines": [line.to_json() for line in self.lines]}

    @classmethod
    def from_json(cls, data: dict) -> "Arrangement":
        return cls([Line.from_json(entry) for entry in data["lines"]], str(data.get("label", "")))

    def __repr__(self) -> str:
        return f"Arrangement({self.label!r}, r={self.r})"


def normalize_point(p: Point) -> Point:
    lead = next((v for v in p if v), None)
    if lead is None:
        raise ValueError("cannot normalize the zero triple")
    inv = lead.inverse()
    return tuple(v * inv for v in p)


def line_intersection(l1: Line, l2: Line) -> Point:
    """Cross product of coefficient triples, normalized."""
    a1, b1, c1 = l1.coeffs
    a2, b2, c2 = l2.coeffs
    p = (b1 * c2 - c1 * b2, c1 * a2 - a1 * c2, a1 * b2 - b1 * a2)
    return normalize_point(p)


@dataclass(frozen=True)
class IncidencePoint:
    point: Point
    lines: tuple[int, ...]

    @property
    def multiplicity(self) -> int:
        return len(self.lines)

    def point_str(self) -> str:
        return "[" + ":".join(str(c) for c in self.point) + "]"

    def to_json(self) -> dict:
        return {
            "point": [str(c) for c in self.point],
            "lines": list(self.lines),
            "multiplicity": self.multiplicity,
        }


def intersection_points(arr: Arrangement) -> list[IncidencePoint]:
    """All pairwise intersections, grouped exactly into incidence points."""
    groups: dict[Point, set[int]] = {}
    n = arr.r
    for i in range(n):
        for j in range(i + 1, n):
            p = line_intersection(arr.lines[i], arr.lines[j])
            groups.setdefault(p, set()).update((i, j))
    points = [IncidencePoint(p, tuple(sorted(idx))) for p, idx in groups.items()]
    points.sort(key=lambda ip: (-ip.multiplicity, tuple(str(c) for c in ip.point)))
    return points


def point_census(points: Iterable[IncidencePoint]) -> dict[int, int]:
    census: dict[int, int] = {}
    for pt in points:
        census[pt.multiplicity] = census.get(pt.multiplicity, 0) + 1
    return census


def validate_multiplicities(arr: Arrangement) -> IncidencePoint | None:
    """None when every point has multiplicity <= 3, else a violating point."""
    for pt in intersection_points(arr):
        if pt.multiplicity > 3:
            return pt
    return None


def require_multiplicities_ok(arr: Arrangement) -> list[IncidencePoint]:
    points = intersection_points(arr)
    for pt in points:
        if pt.multiplicity > 3:
            raise MultiplicityError(pt)
    return points


EXACT_CANONICAL_LIMIT = 10


@dataclass(frozen=True)
class CombinatorialType:
    """Canonical certificate of the rank-2 incidence structure.

    ``canonical`` is the exact label-minimized encoding of the multiple
    points when available; otherwise ``weak_profile`` holds a non-canonical
    invariant and equality is only a necessary condition.
    """

    r: int
    census: tuple[tuple[int, int], ...]
    canonical: tuple | None
    weak_profile: tuple | None

    @property
    def exact(self) -> bool:
        return self.canonical is not None


def _canonical_encoding(sets: list[frozenset[int]]) -> tuple:
    """Lexicographically minimal relabeled encoding of a set system.

    A set's key is its new labels sorted descending, so a set completes when
    its largest label is placed and keys arrive in final sorted order as the
    labeling grows; that makes prefix comparison against the best complete
    encoding a sound branch-and-bound prune.
    """
    if not sets:
        return ()
    vertices = sorted(set().union(*sets))
    index = {v: i for i, v in enumerate(vertices)}
    sets_idx = [tuple(sorted(index[v] for v in s)) for s in sets]
    m = len(vertices)
    sets_of_vertex: list[list[int]] = [[] for _ in range(m)]
    for si, s in enumerate(sets_idx):
        for v in s:
            sets_of_vertex[v].append(si)
    remaining = [len(s) for s in sets_idx]
    new_label: list[int | None] = [None] * m
    used = [False] * m
    cur: list[tuple] = []
    best: list[tuple] | None = None

    def dfs(depth: int) -> None:
        nonlocal best
        if depth == m:
            if best is None or cur < best:
                best = list(cur)
            return
        candidates = [v for v in range(m) if not used[v]]
        # try vertices that finish more sets first: they produce small keys early
        candidates.sort(key=lambda v: -sum(1 for si in sets_of_vertex[v] if remaining[si] == 1))
        for v in candidates:
            used[v] = True
            new_label[v] = depth
            completed = []
            for si in sets_of_vertex[v]:
                remaining[si] -= 1
                if remaining[si] == 0:
                    completed.append(tuple(sorted((new_label[u] for u in sets_idx[si]), reverse=True)))
            completed.sort()
            cur.extend(completed)
            if best is None or cur <= best[: len(cur)]:
                dfs(depth + 1)
            del cur[len(cur) - len(completed):]
            for si in sets_of_vertex[v]:
                remaining[si] += 1
            new_label[v] = None
            used[v] = False

    dfs(0)
    assert best is not None
    return tuple(best)


def combinatorial_type(arr: Arrangement) -> CombinatorialType:
    points = intersection_points(arr)
    census = tuple(sorted(point_census(points).items()))
    multiple = [frozenset(pt.lines) for pt in points if pt.multiplicity >= 3]
    covered: set[int] = set().union(*multiple) if multiple else set()
    if len(covered) <= EXACT_CANONICAL_LIMIT:
        return CombinatorialType(arr.r, census, _canonical_encoding(multiple), None)
    profile: dict[int, list[int]] = {i: [] for i in range(arr.r)}
    for pt in points:
        for i in pt.lines:
            profile[i].append(pt.multiplicity)
    weak = tuple(sorted(tuple(sorted(mults)) for mults in profile.values()))
    return CombinatorialType(arr.r, census, None, weak)


def proj_transform(arr: Arrangement, matrix: Matrix) -> Arrangement:
    """Compose every line with the inverse matrix action on forms."""
    m = [[EisensteinNumber.of(v) for v in row] for row in matrix]
    inv = mat_inverse(m)  # raises ValueError when singular
    new_lines = []
    for line in arr.lines:
        a = line.coeffs
        coeffs = [sum((a[i] * inv[i][j] for i in range(3)), ZERO) for j in range(3)]
        new_lines.append(Line(*coeffs))
    return Arrangement(new_lines, arr.label)

"""Exact projective linear algebra over the rationals.

Points, configurations, subspaces and transforms are immutable values
stored in a canonical integer form, so equality is syntactic and every
operation is a pure function. All arithmetic is exact: scalars are
``fractions.Fraction`` and matrix routines never round.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence, Union

from .errors import FrameDegenerateError, SchemaError

Scalar = Fraction

ScalarLike = Union[int, str, Fraction]

_RATIONAL_RE = re.compile(r"[+-]?\d+(?:/[1-9]\d*)?")


def parse_scalar(value: ScalarLike) -> Fraction:
    """Parse a rational given as an int, a Fraction, or a "p/q" / "p" string."""
    if isinstance(value, bool):
        raise SchemaError(f"not a rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, Fraction):
        return value
    if isinstance(value, str):
        text = value.strip()
        if not _RATIONAL_RE.fullmatch(text):
            raise SchemaError(f"not a rational literal: {value!r}")
        return Fraction(text)
    raise SchemaError(f"not a rational: {value!r}")


def format_scalar(value: ScalarLike) -> str:
    """Render a rational as "p" or "p/q" with positive denominator."""
    q = Fraction(value)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def _canonical_int_vector(coords: Iterable[ScalarLike]) -> tuple[int, ...]:
    """Scale a nonzero rational vector to coprime integers, leading entry positive."""
    fracs = [parse_scalar(c) for c in coords]
    if not fracs:
        raise ValueError("empty coordinate vector")
    if all(c == 0 for c in fracs):
        raise ValueError("zero vector does not define a projective point")
    scale = math.lcm(*(c.denominator for c in fracs))
    ints = [int(c * scale) for c in fracs]
    g = math.gcd(*ints)
    ints = [v // g for v in ints]
    lead = next(v for v in ints if v != 0)
    if lead < 0:
        ints = [-v for v in ints]
    return tuple(ints)


@dataclass(frozen=True, init=False)
class ProjectivePoint:
    """A point of projective space, stored as a primitive integer vector.

    Canonical form: coprime integer coordinates whose first nonzero entry
    is positive; two equal points therefore compare equal syntactically.
    """

    coords: tuple[int, ...]

    def __init__(self, coords: Iterable[ScalarLike]):
        object.__setattr__(self, "coords", _canonical_int_vector(coords))

    def __len__(self) -> int:
        return len(self.coords)

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coords]


@dataclass(frozen=True, init=False)
class PointConfiguration:
    """An ordered tuple of projective points in a common ambient space.

    ``ambient_rank`` is the vector-space dimension r, so points live in
    P^(r-1). Repeats are meaningful and order is kept.
    """

    ambient_rank: int
    points: tuple[ProjectivePoint, ...]

    def __init__(self, ambient_rank: int, points: Iterable[ProjectivePoint]):
        pts = tuple(points)
        if ambient_rank < 1:
            raise ValueError("ambient rank must be at least 1")
        if not pts:
            raise ValueError("a configuration needs at least one point")
        for p in pts:
            if not isinstance(p, ProjectivePoint):
                raise TypeError("points must be ProjectivePoint instances")
            if len(p) != ambient_rank:
                raise ValueError(
                    f"point has {len(p)} coordinates, ambient rank is {ambient_rank}"
                )
        object.__setattr__(self, "ambient_rank", ambient_rank)
        object.__setattr__(self, "points", pts)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[ScalarLike]]) -> "PointConfiguration":
        if not rows:
            raise ValueError("no rows given")
        return cls(len(rows[0]), [ProjectivePoint(row) for row in rows])

    @classmethod
    def from_json_dict(cls, data: object) -> "PointConfiguration":
        """Parse the shared JSON shape {"ambient_rank": r, "points": [[...], ...]}."""
        if not isinstance(data, dict):
            raise SchemaError("configuration must be a JSON object")
        extra = set(data) - {"ambient_rank", "points"}
        if extra:
            raise SchemaError(f"unknown configuration keys: {sorted(extra)}")
        rank = data.get("ambient_rank")
        if not isinstance(rank, int) or isinstance(rank, bool) or rank < 1:
            raise SchemaError("ambient_rank must be a positive integer")
        points = data.get("points")
        if not isinstance(points, list) or not points:
            raise SchemaError("points must be a nonempty list")
        parsed = []
        for row in points:
            if not isinstance(row, list) or len(row) != rank:
                raise SchemaError(f"each point needs exactly {rank} coordinates")
            try:
                parsed.append(ProjectivePoint(row))
            except (SchemaError, ValueError) as exc:
                raise SchemaError(f"bad point {row!r}: {exc}") from exc
        return cls(rank, parsed)

    def to_json_dict(self) -> dict:
        return {
            "ambient_rank": self.ambient_rank,
            "points": [p.to_json() for p in self.points],
        }

    def rows(self) -> list[tuple[int, ...]]:
        return [p.coords for p in self.points]

    def __len__(self) -> int:
        return len(self.points)

    def apply(self, transform: "ProjectiveTransform") -> "PointConfiguration":
        return PointConfiguration(
            self.ambient_rank, [transform.apply(p) for p in self.points]
        )


def _clear_row_to_ints(row: Sequence[ScalarLike]) -> list[int]:
    fracs = [parse_scalar(x) for x in row]
    scale = math.lcm(*(c.denominator for c in fracs)) if fracs else 1
    return [int(c * scale) for c in fracs]


def rank(matrix: Sequence[Sequence[ScalarLike]]) -> int:
    """Exact rank of a rational matrix via fraction-free (Bareiss) elimination."""
    m: list[list[int]] = []
    width = None
    for row in matrix:
        r = list(row)
        if width is None:
            width = len(r)
        elif len(r) != width:
            raise ValueError("ragged matrix")
        if not all(isinstance(x, int) and not isinstance(x, bool) for x in r):
            r = _clear_row_to_ints(r)
        m.append(r)
    if not m or not width:
        raise ValueError("matrix must be nonempty")
    nrows = len(m)
    rk = 0
    prev = 1
    for col in range(width):
        piv = None
        for i in range(rk, nrows):
            if m[i][col]:
                piv = i
                break
        if piv is None:
            continue
        if piv != rk:
            m[rk], m[piv] = m[piv], m[rk]
        pivval = m[rk][col]
        pivrow = m[rk]
        for i in range(rk + 1, nrows):
            row_i = m[i]
            v = row_i[col]
            for j in range(col + 1, width):
                row_i[j] = (pivval * row_i[j] - v * pivrow[j]) // prev
            row_i[col] = 0
        prev = pivval
        rk += 1
        if rk == nrows:
            break
    return rk


def _fraction_rows(matrix: Sequence[Sequence[ScalarLike]]) -> list[list[Fraction]]:
    rows = [[parse_scalar(x) for x in row] for row in matrix]
    if not rows or not rows[0]:
        raise ValueError("matrix must be nonempty")
    width = len(rows[0])
    if any(len(r) != width for r in rows):
        raise ValueError("ragged matrix")
    return rows


def reduced_row_echelon(
    matrix: Sequence[Sequence[ScalarLike]],
) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over Q; returns (rows, pivot column indices)."""
    rows = _fraction_rows(matrix)
    nrows, width = len(rows), len(rows[0])
    pivots: list[int] = []
    rk = 0
    for col in range(width):
        piv = None
        for i in range(rk, nrows):
            if rows[i][col]:
                piv = i
                break
        if piv is None:
            continue
        rows[rk], rows[piv] = rows[piv], rows[rk]
        inv = 1 / rows[rk][col]
        rows[rk] = [x * inv for x in rows[rk]]
        for i in range(nrows):
            if i != rk and rows[i][col]:
                factor = rows[i][col]
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[rk])]
        pivots.append(col)
        rk += 1
        if rk == nrows:
            break
    return rows[:rk], pivots


def echelon_basis(matrix: Sequence[Sequence[ScalarLike]]) -> tuple[tuple[int, ...], ...]:
    """Canonical primitive-integer basis of the row space (RREF, then cleared)."""
    rows, _ = reduced_row_echelon(matrix)
    return tuple(_canonical_int_vector(row) for row in rows)


def kernel_basis(matrix: Sequence[Sequence[ScalarLike]]) -> list[tuple[int, ...]]:
    """Canonical primitive-integer basis of the right kernel, one vector per free column."""
    rows, pivots = reduced_row_echelon(matrix)
    width = len(matrix[0])
    free = [c for c in range(width) if c not in pivots]
    basis = []
    for f in free:
        vec = [Fraction(0)] * width
        vec[f] = Fraction(1)
        for i, p in enumerate(pivots):
            vec[p] = -rows[i][f]
        basis.append(_canonical_int_vector(vec))
    return basis


def in_span(basis: Sequence[Sequence[ScalarLike]], vector: Sequence[ScalarLike]) -> bool:
    """Whether vector lies in the row space of an echelon basis."""
    if all(type(x) is int for x in vector) and all(
        type(x) is int for row in basis for x in row
    ):
        # cross-multiplied elimination: scaling by the nonzero pivot keeps
        # the zero test exact without leaving the integers
        vi = list(vector)
        for row in basis:
            lead = next((j for j, x in enumerate(row) if x), None)
            if lead is None or not vi[lead]:
                continue
            p, f = row[lead], vi[lead]
            vi = [a * p - f * b for a, b in zip(vi, row)]
        return not any(vi)
    v = [parse_scalar(x) for x in vector]
    for row in basis:
        lead = next((j for j, x in enumerate(row) if x), None)
        if lead is None:
            continue
        if v[lead]:
            factor = v[lead] / parse_scalar(row[lead])
            v = [a - factor * parse_scalar(b) for a, b in zip(v, row)]
    return not any(v)


def invert(matrix: Sequence[Sequence[ScalarLike]]) -> list[list[Fraction]]:
    """Exact inverse of a square rational matrix; ValueError if singular."""
    rows = _fraction_rows(matrix)
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("matrix is not square")
    aug = [row + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(rows)]
    for col in range(n):
        piv = next((i for i in range(col, n) if aug[i][col]), None)
        if piv is None:
            raise ValueError("matrix is singular")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for i in range(n):
            if i != col and aug[i][col]:
                factor = aug[i][col]
                aug[i] = [a - factor * b for a, b in zip(aug[i], aug[col])]
    return [row[n:] for row in aug]


def mat_mul(
    a: Sequence[Sequence[ScalarLike]], b: Sequence[Sequence[ScalarLike]]
) -> list[list[Fraction]]:
    bf = [[parse_scalar(x) for x in row] for row in b]
    out = []
    for row in a:
        rf = [parse_scalar(x) for x in row]
        out.append(
            [sum(rf[k] * bf[k][j] for k in range(len(bf))) for j in range(len(bf[0]))]
        )
    return out


def mat_vec(matrix: Sequence[Sequence[ScalarLike]], vec: Sequence[ScalarLike]) -> list[Fraction]:
    vf = [parse_scalar(x) for x in vec]
    return [sum(parse_scalar(a) * v for a, v in zip(row, vf)) for row in matrix]


@dataclass(frozen=True, init=False)
class ProjectiveTransform:
    """An invertible linear map acting on projective points, up to scale."""

    matrix: tuple[tuple[Fraction, ...], ...]

    def __init__(self, matrix: Sequence[Sequence[ScalarLike]]):
        rows = tuple(tuple(parse_scalar(x) for x in row) for row in matrix)
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise ValueError("transform matrix must be square")
        if rank(rows) != n:
            raise ValueError("transform matrix must be invertible")
        object.__setattr__(self, "matrix", rows)

    @property
    def ambient_rank(self) -> int:
        return len(self.matrix)

    def apply(self, point: ProjectivePoint) -> ProjectivePoint:
        return ProjectivePoint(mat_vec(self.matrix, point.coords))

    def inverse(self) -> "ProjectiveTransform":
        return ProjectiveTransform(invert(self.matrix))

    def compose(self, other: "ProjectiveTransform") -> "ProjectiveTransform":
        """The map applying ``other`` first, then this transform."""
        return ProjectiveTransform(mat_mul(self.matrix, other.matrix))

    def proportional_to(self, other: "ProjectiveTransform") -> bool:
        flat_a = [x for row in self.matrix for x in row]
        flat_b = [x for row in other.matrix for x in row]
        if len(flat_a) != len(flat_b):
            return False
        ratio = None
        for a, b in zip(flat_a, flat_b):
            if (a == 0) != (b == 0):
                return False
            if a and b:
                if ratio is None:
                    ratio = a / b
                elif a / b != ratio:
                    return False
        return True


@dataclass(frozen=True, init=False)
class LinearSubspace:
    """A linear subspace stored by its canonical echelon basis."""

    basis: tuple[tuple[int, ...], ...]

    def __init__(self, basis: Sequence[Sequence[ScalarLike]]):
        given = [tuple(row) for row in basis]
        rows = echelon_basis(given)
        if len(rows) != len(given):
            raise ValueError("basis vectors must be linearly independent")
        object.__setattr__(self, "basis", rows)

    @classmethod
    def spanned_by(cls, vectors: Sequence[Sequence[ScalarLike]]) -> "LinearSubspace":
        return cls(echelon_basis(vectors))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, vector: Sequence[ScalarLike]) -> bool:
        return in_span(self.basis, vector)


def span_dim(config: PointConfiguration, subset: Iterable[int]) -> int:
    """Linear dimension of the span of the selected points; 0 for the empty set."""
    indices = sorted(set(subset))
    if not indices:
        return 0
    n = len(config)
    for i in indices:
        if not 0 <= i < n:
            raise IndexError(f"point index {i} out of range")
    return rank([config.points[i].coords for i in indices])


@dataclass(frozen=True)
class SpannedSubspace:
    """A proper subspace spanned by configuration points, with its closure."""

    basis: tuple[tuple[int, ...], ...]
    members: tuple[int, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)


@lru_cache(maxsize=4096)
def _point_spanned_subspaces(config: PointConfiguration) -> tuple[SpannedSubspace, ...]:
    r = config.ambient_rank
    rows = config.rows()
    n = len(rows)
    seen: set[tuple[tuple[int, ...], ...]] = set()
    out: list[SpannedSubspace] = []
    for size in range(1, min(r - 1, n) + 1):
        for combo in combinations(range(n), size):
            basis = echelon_basis([rows[i] for i in combo])
            if basis in seen:
                continue
            seen.add(basis)
            members = tuple(i for i in range(n) if in_span(basis, rows[i]))
            out.append(SpannedSubspace(basis=basis, members=members))
    return tuple(out)


def point_spanned_subspaces(config: PointConfiguration) -> list[SpannedSubspace]:
    """All proper subspaces spanned by nonempty subsets of the points.

    Every such subspace is spanned by at most ambient_rank - 1 of the
    points, so enumerating subsets up to that size is exhaustive.
    ``members`` lists every point index lying in the subspace. Results
    are memoized per configuration; both values are immutable.
    """
    return list(_point_spanned_subspaces(config))


def _check_frame_general_position(config: PointConfiguration) -> None:
    r = config.ambient_rank
    frame_rows = config.rows()[: r + 2]
    for combo in combinations(range(len(frame_rows)), r):
        if rank([frame_rows[i] for i in combo]) != r:
            raise FrameDegenerateError(
                f"frame points {combo} are linearly dependent"
            )


def _frame_transform(config: PointConfiguration) -> list[list[Fraction]]:
    """Matrix sending the first r+1 points to e_1, ..., e_r, (1, ..., 1)."""
    r = config.ambient_rank
    pts = config.points
    m = [[Fraction(pts[j].coords[i]) for j in range(r)] for i in range(r)]
    minv = invert(m)
    c = mat_vec(minv, pts[r].coords)
    if any(x == 0 for x in c):
        raise FrameDegenerateError("frame unit point lies on a coordinate hyperplane")
    return [[row[j] / c[i] for j in range(r)] for i, row in enumerate(minv)]


def projectively_equivalent(
    c1: PointConfiguration, c2: PointConfiguration
) -> ProjectiveTransform | None:
    """The transform carrying c1 onto c2 pointwise in order, or None.

    Both configurations must have the same ambient rank r and n >= r + 2
    points, with their first r + 2 points in general position; the frame
    normalization is then unique up to scale and equality is decided by
    comparing canonical forms.
    """
    if c1.ambient_rank != c2.ambient_rank:
        raise ValueError("configurations have different ambient ranks")
    if len(c1) != len(c2):
        raise ValueError("configurations have different sizes")
    r = c1.ambient_rank
    if len(c1) < r + 2:
        raise ValueError(f"need at least {r + 2} points for a frame comparison")
    _check_frame_general_position(c1)
    _check_frame_general_position(c2)
    t1 = _frame_transform(c1)
    t2 = _frame_transform(c2)
    norm1 = [ProjectivePoint(mat_vec(t1, p.coords)) for p in c1.points]
    norm2 = [ProjectivePoint(mat_vec(t2, p.coords)) for p in c2.points]
    if norm1 != norm2:
        return None
    return ProjectiveTransform(mat_mul(invert(t2), t1))

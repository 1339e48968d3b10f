"""The symmetric cubic and quartic threefolds in the sum-zero hyperplane.

Both hypersurfaces live in P^4 realized as the hyperplane sum(x) = 0
inside P^5 with six permutable coordinates. A point of the hyperplane
section is singular when the full gradient is a scalar multiple of
(1, ..., 1), the hyperplane's normal. All evaluation is exact.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .errors import PencilSearchError, SingularPointError
from .exactgeom import ScalarLike, parse_scalar, rank

NVARS = 6

Exponents = tuple[int, ...]


class Polynomial:
    """Sparse polynomial in six variables with exact rational coefficients."""

    __slots__ = ("terms", "_partials")

    def __init__(self, terms: dict[Exponents, ScalarLike] | None = None):
        clean: dict[Exponents, Fraction] = {}
        for exps, coeff in (terms or {}).items():
            key = tuple(exps)
            if len(key) != NVARS or any(e < 0 for e in key):
                raise ValueError(f"bad exponent tuple {exps!r}")
            c = Fraction(coeff)
            if c:
                clean[key] = c
        self.terms = clean
        self._partials: tuple["Polynomial", ...] | None = None

    @classmethod
    def power_sum(cls, k: int) -> "Polynomial":
        """sum(x_i^k) over the six coordinates."""
        terms: dict[Exponents, Fraction] = {}
        for i in range(NVARS):
            exps = [0] * NVARS
            exps[i] = k
            terms[tuple(exps)] = Fraction(1)
        return cls(terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, Polynomial) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "Polynomial") -> "Polynomial":
        out = dict(self.terms)
        for exps, coeff in other.terms.items():
            out[exps] = out.get(exps, Fraction(0)) + coeff
        return Polynomial(out)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-1) * other

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            out: dict[Exponents, Fraction] = {}
            for e1, c1 in self.terms.items():
                for e2, c2 in other.terms.items():
                    key = tuple(a + b for a, b in zip(e1, e2))
                    out[key] = out.get(key, Fraction(0)) + c1 * c2
            return Polynomial(out)
        scale = Fraction(other)
        return Polynomial({e: c * scale for e, c in self.terms.items()})

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise ValueError("negative power")
        out = Polynomial({(0,) * NVARS: Fraction(1)})
        for _ in range(n):
            out = out * self
        return out

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def is_homogeneous(self) -> bool:
        degrees = {sum(e) for e in self.terms}
        return len(degrees) <= 1

    def evaluate(self, coords: Sequence[ScalarLike]):
        if len(coords) != NVARS:
            raise ValueError(f"need {NVARS} coordinates")
        vals = [c if isinstance(c, int) else parse_scalar(c) for c in coords]
        total = 0
        for exps, coeff in self.terms.items():
            term = coeff
            for v, e in zip(vals, exps):
                if e:
                    term *= v**e
            total += term
        return total

    def partial(self, i: int) -> "Polynomial":
        out: dict[Exponents, Fraction] = {}
        for exps, coeff in self.terms.items():
            e = exps[i]
            if e:
                key = exps[:i] + (e - 1,) + exps[i + 1 :]
                out[key] = out.get(key, Fraction(0)) + coeff * e
        return Polynomial(out)

    def partials(self) -> tuple["Polynomial", ...]:
        if self._partials is None:
            self._partials = tuple(self.partial(i) for i in range(NVARS))
        return self._partials

    def gradient(self, coords: Sequence[ScalarLike]) -> tuple:
        return tuple(p.evaluate(coords) for p in self.partials())

    def permuted(self, perm: Sequence[int]) -> "Polynomial":
        """Image under x_i -> x_perm[i]."""
        out: dict[Exponents, Fraction] = {}
        for exps, coeff in self.terms.items():
            key = [0] * NVARS
            for i, e in enumerate(exps):
                key[perm[i]] = e
            out[tuple(key)] = out.get(tuple(key), Fraction(0)) + coeff
        return Polynomial(out)

    def __repr__(self) -> str:
        return f"Polynomial({self.terms!r})"


_SYMMETRY_GENERATORS = ((1, 0, 2, 3, 4, 5), (1, 2, 3, 4, 5, 0))


@dataclass(frozen=True, init=False)
class SymmetricHypersurfaceModel:
    """A symmetric hypersurface of the sum-zero hyperplane in six coordinates."""

    name: str
    degree: int
    polynomial: Polynomial

    def __init__(self, name: str, degree: int, polynomial: Polynomial):
        if polynomial.is_zero() or not polynomial.is_homogeneous():
            raise ValueError("polynomial must be nonzero homogeneous")
        if polynomial.degree() != degree:
            raise ValueError("polynomial degree does not match the declared degree")
        for perm in _SYMMETRY_GENERATORS:
            if polynomial.permuted(perm) != polynomial:
                raise ValueError("polynomial is not symmetric")
        object.__setattr__(self, "name", name)
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "polynomial", polynomial)

    def evaluate(self, point: "AmbientPoint | Sequence[ScalarLike]"):
        coords = point.coords if isinstance(point, AmbientPoint) else point
        return self.polynomial.evaluate(coords)

    def gradient(self, point: "AmbientPoint | Sequence[ScalarLike]") -> tuple:
        coords = point.coords if isinstance(point, AmbientPoint) else point
        return self.polynomial.gradient(coords)


@dataclass(frozen=True, init=False)
class AmbientPoint:
    """A canonical projective point of the hyperplane sum(x) = 0 in six coordinates."""

    coords: tuple[int, ...]

    def __init__(self, coords: Iterable[ScalarLike]):
        fracs = [parse_scalar(c) for c in coords]
        if len(fracs) != NVARS:
            raise ValueError(f"need {NVARS} coordinates")
        if all(c == 0 for c in fracs):
            raise ValueError("zero vector")
        if sum(fracs) != 0:
            raise ValueError("coordinates must sum to zero")
        scale = math.lcm(*(c.denominator for c in fracs))
        ints = [int(c * scale) for c in fracs]
        g = math.gcd(*ints)
        ints = [v // g for v in ints]
        if next(v for v in ints if v) < 0:
            ints = [-v for v in ints]
        object.__setattr__(self, "coords", tuple(ints))

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coords]


def segre_cubic() -> SymmetricHypersurfaceModel:
    """The cubic sum(x_i^3) = 0 on the hyperplane sum(x_i) = 0."""
    return SymmetricHypersurfaceModel("segre", 3, Polynomial.power_sum(3))


# Distinct parameter ratios (t : u); five of them decide any identity of
# degree at most four along a parametrized line.
_LINE_PARAMS = ((1, 0), (0, 1), (1, 1), (1, -1), (2, 1))


def perfect_matchings() -> list[tuple[tuple[int, int], ...]]:
    """The 15 perfect matchings of {0, ..., 5}, pairs and lists sorted."""

    def pair_up(elems: tuple[int, ...]) -> list[tuple[tuple[int, int], ...]]:
        if not elems:
            return [()]
        first, rest = elems[0], elems[1:]
        out = []
        for i, partner in enumerate(rest):
            remaining = rest[:i] + rest[i + 1 :]
            for tail in pair_up(remaining):
                out.append(((first, partner),) + tail)
        return out

    return pair_up(tuple(range(NVARS)))


@dataclass(frozen=True)
class MatchingLine:
    """The line of points constant on each pair of a perfect matching."""

    matching: tuple[tuple[int, int], ...]

    def coords_at(self, t: ScalarLike, u: ScalarLike) -> tuple[Fraction, ...]:
        tv, uv = Fraction(t), Fraction(u)
        values = (tv, uv, -tv - uv)
        coords = [Fraction(0)] * NVARS
        for value, pair in zip(values, self.matching):
            for i in pair:
                coords[i] = value
        return tuple(coords)

    def point_at(self, t: ScalarLike, u: ScalarLike) -> AmbientPoint:
        return AmbientPoint(self.coords_at(t, u))

    def contains(self, point: AmbientPoint) -> bool:
        return all(
            point.coords[a] == point.coords[b] for a, b in self.matching
        )


def _line_singular_identity(model: SymmetricHypersurfaceModel, line: MatchingLine) -> bool:
    """Whether every point of the line is a singular point of the model.

    Both the value and the gradient-difference conditions are polynomials
    of degree at most model.degree in (t, u); checking five distinct
    parameter ratios therefore proves the identity exactly.
    """
    for t, u in _LINE_PARAMS:
        coords = line.coords_at(t, u)
        if all(c == 0 for c in coords):
            return False
        if model.evaluate(coords) != 0:
            return False
        grad = model.gradient(coords)
        if any(g != grad[0] for g in grad[1:]):
            return False
    return True


def _matching_lines(model: SymmetricHypersurfaceModel) -> list[MatchingLine] | None:
    lines = [MatchingLine(m) for m in perfect_matchings()]
    for line in lines:
        if not _line_singular_identity(model, line):
            return None
    return lines


def _pencil_member() -> Polynomial:
    """The member a*(sum x^2)^2 + b*sum(x^4) singular along all matching lines.

    Solves the linear conditions imposed by the line points on (a, b);
    a one-dimensional solution space pins the member down up to scale.
    """
    q1 = Polynomial.power_sum(2) ** 2
    q2 = Polynomial.power_sum(4)
    constraints = []
    for matching in perfect_matchings():
        line = MatchingLine(matching)
        for t, u in _LINE_PARAMS:
            coords = line.coords_at(t, u)
            if all(c == 0 for c in coords):
                continue
            constraints.append([q1.evaluate(coords), q2.evaluate(coords)])
            g1 = q1.gradient(coords)
            g2 = q2.gradient(coords)
            for i in range(1, NVARS):
                constraints.append([g1[i] - g1[0], g2[i] - g2[0]])
    if rank(constraints) != 1:
        raise PencilSearchError(
            "no unique pencil member is singular along the matching lines"
        )
    from .exactgeom import kernel_basis

    (coeffs,) = kernel_basis(constraints)
    a, b = coeffs
    candidate = a * q1 + b * q2
    model = SymmetricHypersurfaceModel("igusa", 4, candidate)
    if _matching_lines(model) is None:
        raise PencilSearchError("pencil solution fails the singular-lines check")
    return candidate


def igusa_quartic() -> SymmetricHypersurfaceModel:
    """The quartic (sum x^2)^2 - 4*sum(x^4) = 0 on the hyperplane sum(x) = 0.

    The candidate is validated at construction by the matching-lines
    singularity identity; if that ever failed, the unique valid member of
    the pencil a*(sum x^2)^2 + b*sum(x^4) would be used instead.
    """
    candidate = Polynomial.power_sum(2) ** 2 + (-4) * Polynomial.power_sum(4)
    model = SymmetricHypersurfaceModel("igusa", 4, candidate)
    if _matching_lines(model) is not None:
        return model
    return SymmetricHypersurfaceModel("igusa", 4, _pencil_member())


def verify_singular_point(model: SymmetricHypersurfaceModel, point: AmbientPoint) -> bool:
    """Singularity of the hyperplane section: F(p) = 0 and grad F proportional to (1,...,1)."""
    if model.evaluate(point) != 0:
        return False
    grad = model.gradient(point)
    return all(g == grad[0] for g in grad[1:])


Split = tuple[tuple[int, int, int], tuple[int, int, int]]


def three_three_splits() -> list[Split]:
    """The 10 unordered partitions of {0,...,5} into two triples, 0 always first."""
    out = []
    for pair in combinations(range(1, NVARS), 2):
        part = (0,) + pair
        rest = tuple(i for i in range(NVARS) if i not in part)
        out.append((part, rest))
    return out


@dataclass(frozen=True)
class SegreNode:
    point: AmbientPoint
    split: Split


def _node_point(split: Split) -> AmbientPoint:
    coords = [0] * NVARS
    for i in split[0]:
        coords[i] = 1
    for i in split[1]:
        coords[i] = -1
    return AmbientPoint(coords)


def restricted_hessian_rank(model: SymmetricHypersurfaceModel, point: AmbientPoint) -> int:
    """Rank of the Hessian quadratic form restricted to the hyperplane sum(w) = 0."""
    hess = [
        [model.polynomial.partial(i).partial(j).evaluate(point.coords) for j in range(NVARS)]
        for i in range(NVARS)
    ]
    # basis e_i - e_{i+1} of the hyperplane's tangent directions
    basis = []
    for i in range(NVARS - 1):
        v = [0] * NVARS
        v[i], v[i + 1] = 1, -1
        basis.append(v)
    restricted = [
        [
            sum(a[i] * hess[i][j] * b[j] for i in range(NVARS) for j in range(NVARS))
            for b in basis
        ]
        for a in basis
    ]
    return rank(restricted)


def segre_nodes() -> list[SegreNode]:
    """The ten nodes of the cubic, one per 3+3 split of the coordinates."""
    model = segre_cubic()
    nodes = []
    for split in three_three_splits():
        point = _node_point(split)
        if not verify_singular_point(model, point):
            raise RuntimeError(f"node {point.coords} fails the singularity check")
        if restricted_hessian_rank(model, point) != 4:
            raise RuntimeError(f"node {point.coords} is not an ordinary double point")
        nodes.append(SegreNode(point=point, split=split))
    return nodes


def igusa_lines() -> list[MatchingLine]:
    """The 15 singular lines of the quartic, one per perfect matching."""
    model = igusa_quartic()
    lines = _matching_lines(model)
    if lines is None:
        raise RuntimeError("matching lines fail the singularity identity")
    return lines


@dataclass(frozen=True)
class IgusaPoint:
    point: AmbientPoint
    pair: tuple[int, int]


def igusa_points() -> list[IgusaPoint]:
    """The 15 distinguished singular points, one per coordinate pair carrying -2."""
    model = igusa_quartic()
    out = []
    for pair in combinations(range(NVARS), 2):
        coords = [1] * NVARS
        for i in pair:
            coords[i] = -2
        point = AmbientPoint(coords)
        if not verify_singular_point(model, point):
            raise RuntimeError(f"distinguished point {point.coords} is not singular")
        out.append(IgusaPoint(point=point, pair=pair))
    return out


@dataclass(frozen=True)
class IncidenceStructure:
    """An abstract point-line incidence with its flag set."""

    points: tuple[tuple[int, int], ...]
    lines: tuple[tuple[tuple[int, int], ...], ...]
    flags: frozenset[tuple[tuple[int, int], tuple[tuple[int, int], ...]]]

    def lines_through(self, point: tuple[int, int]) -> list:
        return [l for l in self.lines if (point, l) in self.flags]

    def points_on(self, line) -> list[tuple[int, int]]:
        return [p for p in self.points if (p, line) in self.flags]


def incidence_15_3() -> IncidenceStructure:
    """The 15_3 incidence: edges of K6 against perfect matchings, by membership.

    Checked to coincide with the geometric incidence of the 15
    distinguished points on the 15 singular lines.
    """
    pairs = tuple(combinations(range(NVARS), 2))
    matchings = tuple(perfect_matchings())
    flags = frozenset(
        (pair, matching)
        for pair in pairs
        for matching in matchings
        if pair in matching
    )
    structure = IncidenceStructure(points=pairs, lines=matchings, flags=flags)
    for pair in pairs:
        if len(structure.lines_through(pair)) != 3:
            raise RuntimeError(f"pair {pair} does not lie on exactly 3 matchings")
    for matching in matchings:
        if len(structure.points_on(matching)) != 3:
            raise RuntimeError(f"matching {matching} does not contain exactly 3 pairs")
    geometric = frozenset(
        (ip.pair, line.matching)
        for ip in igusa_points()
        for line in igusa_lines()
        if line.contains(ip.point)
    )
    if geometric != flags:
        raise RuntimeError("geometric incidence differs from matching membership")
    return structure


def polar_map(model: SymmetricHypersurfaceModel, point: AmbientPoint) -> AmbientPoint:
    """Gradient image in the dual hyperplane, centered to sum zero.

    Defined at nonsingular points of the model's hyperplane section; the
    gradient is translated by its coordinate mean so the image lands back
    in the sum-zero chart.
    """
    if model.evaluate(point) != 0:
        raise ValueError("point does not lie on the hypersurface")
    grad = [Fraction(gi) for gi in model.gradient(point)]
    mean = sum(grad) / NVARS
    centered = [gi - mean for gi in grad]
    if all(c == 0 for c in centered):
        raise SingularPointError(
            "gradient is normal to the hyperplane: the point is singular"
        )
    return AmbientPoint(centered)


def _random_direction(rng: random.Random) -> list[int] | None:
    w = [rng.randint(-9, 9) for _ in range(NVARS - 1)]
    w.append(-sum(w))
    if not any(w):
        return None
    return w


def _sign_paired(coords: Sequence[ScalarLike]) -> bool:
    """Whether the coordinates pair up to sign along some perfect matching.

    Lines through a node invariant under a coordinate transposition force
    their residual point onto such a locus (the 15 planes of the cubic
    among them); small integer directions hit this often, so the sampler
    treats it as a degenerate draw.
    """
    for matching in perfect_matchings():
        if all(coords[a] ** 2 == coords[b] ** 2 for a, b in matching):
            return True
    return False


def sample_segre_points(count: int, seed: int = 0) -> list[AmbientPoint]:
    """Rational nonsingular points of the cubic, via lines through its nodes.

    A line through a node nu in direction w (sum w = 0) meets the cubic in
    lambda^2 * (a2 + a3*lambda) = 0, so the residual point nu - (a2/a3)*w
    is rational. Draws with a3 = 0, a2 = 0, a singular residual, or a
    sign-paired residual are skipped and retried a bounded number of times.
    """
    if count < 0:
        raise ValueError("count must be nonnegative")
    model = segre_cubic()
    nodes = [n.point for n in segre_nodes()]
    out = []
    for index in range(count):
        rng = random.Random(seed * 1_000_003 + index)
        for _ in range(200):
            nu = nodes[rng.randrange(len(nodes))].coords
            w = _random_direction(rng)
            if w is None:
                continue
            a2 = 3 * sum(n * wi * wi for n, wi in zip(nu, w))
            a3 = sum(wi**3 for wi in w)
            if a3 == 0 or a2 == 0:
                continue
            lam = Fraction(-a2, a3)
            coords = [n + lam * wi for n, wi in zip(nu, w)]
            point = AmbientPoint(coords)
            if model.evaluate(point) != 0:
                raise RuntimeError("residual intersection left the cubic")
            if verify_singular_point(model, point) or _sign_paired(point.coords):
                continue
            out.append(point)
            break
        else:
            raise RuntimeError("sampling failed to find a usable direction")
    return out


@dataclass(frozen=True)
class DualityReport:
    """Exact polar-duality statistics for sampled points."""

    samples: int
    forward_ok: int
    reverse_ok: int
    reverse_skipped: int
    counterexamples: tuple[tuple[str, tuple[int, ...]], ...]

    @property
    def passed(self) -> bool:
        return (
            not self.counterexamples
            and self.forward_ok == self.samples
            and self.reverse_ok == self.samples - self.reverse_skipped
        )

    def to_json(self) -> dict:
        return {
            "samples": self.samples,
            "forward_ok": self.forward_ok,
            "reverse_ok": self.reverse_ok,
            "reverse_skipped": self.reverse_skipped,
            "counterexamples": [
                {"direction": d, "point": list(c)} for d, c in self.counterexamples
            ],
            "passed": self.passed,
        }


def duality_check(samples: int, seed: int = 0) -> DualityReport:
    """Verify both polar directions on sampled cubic points, exactly.

    Forward: the polar image of each sampled cubic point satisfies the
    quartic. Reverse: the polar image of each such quartic point (when
    nonsingular there) satisfies the cubic. Failures are reported, not
    raised.
    """
    segre = segre_cubic()
    igusa = igusa_quartic()
    points = sample_segre_points(samples, seed)
    forward_ok = 0
    reverse_ok = 0
    skipped = 0
    bad: list[tuple[str, tuple[int, ...]]] = []
    for x in points:
        y = polar_map(segre, x)
        if igusa.evaluate(y) == 0:
            forward_ok += 1
        else:
            bad.append(("forward", x.coords))
            continue
        if verify_singular_point(igusa, y):
            skipped += 1
            continue
        z = polar_map(igusa, y)
        if segre.evaluate(z) == 0:
            reverse_ok += 1
        else:
            bad.append(("reverse", y.coords))
    return DualityReport(
        samples=len(points),
        forward_ok=forward_ok,
        reverse_ok=reverse_ok,
        reverse_skipped=skipped,
        counterexamples=tuple(bad),
    )

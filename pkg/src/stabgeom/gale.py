"""The Gale transform of point configurations and self-association.

For gamma points spanning P^r with gamma = r + s + 2, the transform
produces gamma points in P^s whose coordinate matrix G' satisfies
G^T D G' = 0 for a nonsingular diagonal D. The kernel of G^T is computed
exactly; target rows are stored in canonical primitive form and D absorbs
the per-row scaling, so the stored matrices satisfy the identity as is.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import DegenerateConfigurationError, RowEliminationError
from .exactgeom import (
    PointConfiguration,
    ProjectivePoint,
    ProjectiveTransform,
    kernel_basis,
    projectively_equivalent,
    rank,
)

_REPAIR_ATTEMPTS = 20


@dataclass(frozen=True, init=False)
class GaleData:
    """Source and target configurations with the diagonal witness.

    Invariants checked at construction: gamma = r + s + 2 in projective
    dimensions, every diag entry nonzero, and G^T D G' = 0 exactly for
    the stored coordinate matrices.
    """

    source: PointConfiguration
    target: PointConfiguration
    diag: tuple[Fraction, ...]

    def __init__(
        self,
        source: PointConfiguration,
        target: PointConfiguration,
        diag: tuple[Fraction, ...],
    ):
        gamma = len(source)
        if len(target) != gamma or len(diag) != gamma:
            raise ValueError("source, target and diag must have equal length")
        if source.ambient_rank + target.ambient_rank != gamma:
            raise ValueError(
                "gamma must equal r + s + 2 for projective dimensions r, s"
            )
        d = tuple(Fraction(x) for x in diag)
        if any(x == 0 for x in d):
            raise ValueError("diag entries must be nonzero")
        g_rows = source.rows()
        gp_rows = target.rows()
        for col in range(source.ambient_rank):
            for colp in range(target.ambient_rank):
                total = sum(
                    g_rows[i][col] * d[i] * gp_rows[i][colp] for i in range(gamma)
                )
                if total != 0:
                    raise ValueError("G^T D G' = 0 fails for the given data")
        object.__setattr__(self, "source", source)
        object.__setattr__(self, "target", target)
        object.__setattr__(self, "diag", d)

    def to_json(self) -> dict:
        from .exactgeom import format_scalar

        return {
            "source": self.source.to_json_dict(),
            "target": self.target.to_json_dict(),
            "diag": [format_scalar(x) for x in self.diag],
        }


def _random_invertible(rng: random.Random, n: int) -> list[list[int]]:
    while True:
        m = [[rng.randint(-5, 5) for _ in range(n)] for _ in range(n)]
        if rank(m) == n:
            return m


def gale_transform(config: PointConfiguration, seed: int = 0) -> GaleData:
    """Gale transform of a spanning configuration with gamma >= r + 3 points.

    The target coordinate matrix is a kernel basis of G^T arranged as
    columns. A zero row would mean the remaining points lie on a
    hyperplane; random basis recombination is attempted a bounded number
    of times, after which the transform is reported undefined.
    """
    gamma = len(config)
    big_r = config.ambient_rank
    if gamma < big_r + 2:
        raise ValueError(
            f"need at least r + 3 = {big_r + 2} points, got {gamma}"
        )
    g_rows = config.rows()
    if rank(g_rows) < big_r:
        raise DegenerateConfigurationError(
            "configuration does not span its ambient space"
        )
    transpose = [[row[i] for row in g_rows] for i in range(big_r)]
    kernel = kernel_basis(transpose)
    width = len(kernel)
    gp_rows: list[list[int]] = [
        [kernel[j][i] for j in range(width)] for i in range(gamma)
    ]
    if any(not any(row) for row in gp_rows):
        # A zero row is invariant under any change of kernel basis, so the
        # recombination loop is a bounded formality before reporting failure.
        rng = random.Random(seed)
        for _ in range(_REPAIR_ATTEMPTS):
            mix = _random_invertible(rng, width)
            cand = [
                [sum(row[k] * mix[k][j] for k in range(width)) for j in range(width)]
                for row in gp_rows
            ]
            if all(any(r) for r in cand):
                gp_rows = cand
                break
        else:
            raise RowEliminationError(
                "no kernel basis with all rows nonzero: some gamma - 1 points "
                "lie on a hyperplane"
            )
    points = []
    diag = []
    for row in gp_rows:
        g = gcd(*row)
        lead = next(v for v in row if v)
        sign = 1 if lead > 0 else -1
        # canonical row = (sign/g) * raw row, so D_i = g * sign restores G^T D G' = 0
        points.append(ProjectivePoint([sign * (v // g) for v in row]))
        diag.append(Fraction(sign * g))
    target = PointConfiguration(gamma - big_r, points)
    return GaleData(source=config, target=target, diag=tuple(diag))


def is_self_associated(config: PointConfiguration, seed: int = 0) -> bool:
    """Whether the configuration is projectively equivalent to its Gale transform."""
    data = gale_transform(config, seed=seed)
    # unless n = 2r the transform lives in a different ambient space
    if data.target.ambient_rank != config.ambient_rank:
        return False
    return projectively_equivalent(config, data.target) is not None


def self_association_transform(
    config: PointConfiguration, seed: int = 0
) -> ProjectiveTransform | None:
    """The transform realizing self-association, when one exists."""
    data = gale_transform(config, seed=seed)
    if data.target.ambient_rank != config.ambient_rank:
        return None
    return projectively_equivalent(config, data.target)


_CONIC_MONOMIALS = ((2, 0, 0), (0, 2, 0), (0, 0, 2), (1, 1, 0), (1, 0, 1), (0, 1, 1))


def on_smooth_conic(config: PointConfiguration) -> bool:
    """Whether six points of P^2 lie on a single smooth conic.

    The 6x6 matrix of conic monomials has a one-dimensional kernel exactly
    when the conic through the points is unique; smoothness is the
    invertibility of its symmetric matrix. A kernel of dimension two or
    more forces every conic through the points to share a line, so no
    smooth one exists.
    """
    if config.ambient_rank != 3:
        raise ValueError("conic test requires ambient rank 3")
    if len(config) != 6:
        raise ValueError("conic test requires exactly six points")
    rows = []
    for p in config.points:
        x, y, z = p.coords
        rows.append([x * x, y * y, z * z, x * y, x * z, y * z])
    if rank(rows) != 5:
        return False
    (coeffs,) = kernel_basis(rows)
    a, b, c, d, e, f = coeffs
    # doubled symmetric matrix of the conic keeps everything integral
    m = [[2 * a, d, e], [d, 2 * b, f], [e, f, 2 * c]]
    return rank(m) == 3


def conic_parameter_points(params: list) -> PointConfiguration:
    """Points [t : t^2 : 1] on the smooth conic y*z = x^2, one per parameter."""
    values = [Fraction(t) for t in params]
    if len(set(values)) != len(values):
        raise ValueError("parameters must be pairwise distinct")
    return PointConfiguration(3, [ProjectivePoint([t, t * t, 1]) for t in values])

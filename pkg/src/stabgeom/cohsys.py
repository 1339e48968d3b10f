"""Slope arithmetic for coherent systems and the span-criterion dictionary.

A system type (r, d, k) has alpha-slope d/r + alpha*k/r. Walls are the
positive alpha where a numerically possible subsystem type has equal
slope; past g*(r-1) no wall from a subtype with fewer sections per rank
remains, which is why the alpha-side test below is alpha-independent for
the subsystem types a point configuration produces.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import SizeMismatchError
from .exactgeom import (
    PointConfiguration,
    ProjectivePoint,
    ScalarLike,
    point_spanned_subspaces,
)
from .gitstab import StabilityVerdict, classify


@dataclass(frozen=True)
class SystemType:
    """Numerical type (rank, degree, number of sections) of a coherent system."""

    r: int
    d: int
    k: int

    def __post_init__(self):
        if self.r < 1:
            raise ValueError("rank must be at least 1")
        if self.d < 0 or self.k < 0:
            raise ValueError("degree and section count must be nonnegative")


@dataclass(frozen=True)
class CriticalValueSet:
    """Sorted distinct positive walls for a type, with the type that generated them."""

    values: tuple[Fraction, ...]
    generating_type: SystemType

    def __contains__(self, alpha: ScalarLike) -> bool:
        return Fraction(alpha) in self.values


def alpha_slope(t: SystemType, alpha: ScalarLike) -> Fraction:
    """mu_alpha = d/r + alpha * k/r."""
    a = Fraction(alpha)
    return Fraction(t.d, t.r) + a * Fraction(t.k, t.r)


def critical_values(
    t: SystemType,
    *,
    degree_bound: int | None = None,
    section_bound: int | None = None,
) -> CriticalValueSet:
    """Positive alpha where some subsystem type (s, d', k') matches the slope of t.

    Enumerates 1 <= s <= r-1, 0 <= d' <= degree_bound (default d),
    0 <= k' <= section_bound (default k), skipping k'/s == k/r where no
    finite wall exists.
    """
    d_max = t.d if degree_bound is None else degree_bound
    k_max = t.k if section_bound is None else section_bound
    if d_max < 0 or k_max < 0:
        raise ValueError("bounds must be nonnegative")
    full_ratio = Fraction(t.k, t.r)
    full_slope0 = Fraction(t.d, t.r)
    found: set[Fraction] = set()
    for s in range(1, t.r):
        for kp in range(0, k_max + 1):
            ratio = Fraction(kp, s)
            if ratio == full_ratio:
                continue
            denom = ratio - full_ratio
            for dp in range(0, d_max + 1):
                alpha = (full_slope0 - Fraction(dp, s)) / denom
                if alpha > 0:
                    found.add(alpha)
    return CriticalValueSet(values=tuple(sorted(found)), generating_type=t)


def stabilization_threshold(r: int, g: int) -> int:
    """g*(r-1): above this alpha no new wall from section-deficient subtypes opens."""
    if r < 1 or g < 1:
        raise ValueError("rank and weight must be positive")
    return g * (r - 1)


def subsystem_types_from_config(config: PointConfiguration) -> list[SystemType]:
    """Maximal span-derived subsystem types (s, d_max(s), s) for s = 1..r-1.

    d_max(s) is the largest number of configuration points lying in a
    common subspace of linear dimension at most s.
    """
    r = config.ambient_rank
    subs = point_spanned_subspaces(config)
    out = []
    for s in range(1, r):
        d_max = max((len(w.members) for w in subs if w.dim <= s), default=0)
        out.append(SystemType(s, d_max, s))
    return out


def _check_size(config: PointConfiguration, g: ScalarLike) -> Fraction:
    weight = Fraction(g)
    if weight <= 0 or weight.denominator != 1:
        raise ValueError("g must be a positive integer")
    if len(config) != config.ambient_rank * weight:
        raise SizeMismatchError(
            f"expected r*g = {config.ambient_rank}*{weight} points, got {len(config)}"
        )
    return weight


def _check_alpha(alpha: ScalarLike) -> Fraction:
    a = Fraction(alpha)
    if a <= 0:
        raise ValueError("alpha must be positive")
    return a


def alpha_semistable_config(
    config: PointConfiguration, g: ScalarLike, alpha: ScalarLike
) -> bool:
    """Whether every span-derived subsystem type satisfies d/s + alpha <= g + alpha."""
    weight = _check_size(config, g)
    a = _check_alpha(alpha)
    return all(
        alpha_slope(t, a) <= weight + a for t in subsystem_types_from_config(config)
    )


def alpha_stable_config(
    config: PointConfiguration, g: ScalarLike, alpha: ScalarLike
) -> bool:
    """Strict-inequality variant of alpha_semistable_config."""
    weight = _check_size(config, g)
    a = _check_alpha(alpha)
    return all(
        alpha_slope(t, a) < weight + a for t in subsystem_types_from_config(config)
    )


@dataclass(frozen=True)
class EquivalenceReport:
    """Side-by-side span-criterion and alpha-slope verdicts for one configuration."""

    git: StabilityVerdict
    alpha: Fraction
    alpha_semistable: bool
    alpha_stable: bool

    @property
    def agree(self) -> bool:
        return (
            self.git.is_semistable == self.alpha_semistable
            and self.git.is_stable == self.alpha_stable
        )

    def to_json(self) -> dict:
        from .exactgeom import format_scalar

        return {
            "git_class": self.git.classification.value,
            "alpha": format_scalar(self.alpha),
            "alpha_semistable": self.alpha_semistable,
            "alpha_stable": self.alpha_stable,
            "agree": self.agree,
        }


def equivalence_check(config: PointConfiguration, g: ScalarLike) -> EquivalenceReport:
    """Compare the span-criterion verdict with the alpha test past the threshold.

    Uses alpha = g*(r-1) + 1, strictly above every wall the span-derived
    types can produce, so the comparison is wall-free.
    """
    weight = _check_size(config, g)
    alpha = Fraction(stabilization_threshold(config.ambient_rank, int(weight)) + 1)
    return EquivalenceReport(
        git=classify(config, weight),
        alpha=alpha,
        alpha_semistable=alpha_semistable_config(config, weight, alpha),
        alpha_stable=alpha_stable_config(config, weight, alpha),
    )


def subsystem_violates(full: SystemType, sub: SystemType, alpha: ScalarLike) -> bool:
    """Whether the subsystem type has strictly larger alpha-slope than the full type."""
    if full == sub:
        raise ValueError("subsystem type must differ from the full type")
    a = _check_alpha(alpha)
    return alpha_slope(sub, a) > alpha_slope(full, a)


def destabilizing_example_config(
    genus: int, lambdas: list[ScalarLike] | None = None
) -> PointConfiguration:
    """The classical weight-g configuration on the line that stays stable.

    genus - 1 coincident points at [1:0] plus genus + 1 pairwise distinct
    points [lambda_i : 1] with nonzero lambda_i; 2*genus points in total.
    """
    if genus < 2:
        raise ValueError("genus must be at least 2")
    if lambdas is None:
        values = [Fraction(i) for i in range(1, genus + 2)]
    else:
        values = [Fraction(l) for l in lambdas]
    if len(values) != genus + 1:
        raise ValueError(f"need exactly {genus + 1} lambda values")
    if any(v == 0 for v in values):
        raise ValueError("lambda values must be nonzero")
    if len(set(values)) != len(values):
        raise ValueError("lambda values must be pairwise distinct")
    points = [ProjectivePoint([1, 0]) for _ in range(genus - 1)]
    points += [ProjectivePoint([v, 1]) for v in values]
    return PointConfiguration(2, points)
